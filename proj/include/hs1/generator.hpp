#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hs1 {

// Generator families of the one supercommutative coefficient ring everything
// computes in.  a,b,c,d are the coordinate generators of F(G^s_2); the primed
// copies stand for a second group element in composition oracles; X..W are the
// Lie generators of g^s_1 (their monomials are PBW words, multiplied by the
// enveloping-algebra product, never the supercommutative one); the remaining
// families are fresh symbols for the jet oracles.
enum class Family : std::uint8_t {
    a, b, c, d,             // F(G^s_2): a,d even, b,c odd
    ap, bp, cp, dp,         // primed copy (second jet in compositions)
    X, Y, Z, U, V, W,       // g^s_1, in the fixed PBW order
    A1, B1, C1, D1,         // generic jet coefficients, instance 1
    A2, B2, C2, D2,         // instance 2
    A3, B3, C3, D3,         // instance 3
    sa, sb, se, sc, sd, sf, // generic affine symbols: (sa*x+sb*th+se, sc*x+sd*th+sf)
    t, tau,                 // deformation parameters: t even with t^2=0, tau odd
};

inline constexpr int kFamilyCount = 34;

// How degenerate indices collapse to constants (membership in G^s_2).
enum class IndexProfile : std::uint8_t {
    free_index, // every index >= 0 is a live generator
    a_like,     // idx 0 -> 0, idx 1 -> 1
    b_like,     // idx 0 -> 0
    c_like,     // idx 0 -> 0, idx 1 -> 0
    d_like,     // idx 0 -> 1
    no_index,   // Lie generators; index is always 0
};

struct FamilyInfo {
    const char* name;
    bool odd;
    IndexProfile profile;
    // weight(fam_n) = n + weight_offset (Y-eigenvalue); 0 offset elsewhere
    int weight_offset;
    int bc_charge;   // Z-eigenvalue contribution per factor
    bool invertible; // negative exponents permitted (Laurent localization)
    int nilpotent;   // smallest k with x^k = 0, or 0 if none
};

inline const FamilyInfo& family_info(Family f) {
    static const std::array<FamilyInfo, kFamilyCount> table = {{
        {"a", false, IndexProfile::a_like, -1, 0, false, 0},
        {"b", true, IndexProfile::b_like, -1, +1, false, 0},
        {"c", true, IndexProfile::c_like, 0, -1, false, 0},
        {"d", false, IndexProfile::d_like, 0, 0, false, 0},
        {"a'", false, IndexProfile::a_like, -1, 0, false, 0},
        {"b'", true, IndexProfile::b_like, -1, +1, false, 0},
        {"c'", true, IndexProfile::c_like, 0, -1, false, 0},
        {"d'", false, IndexProfile::d_like, 0, 0, false, 0},
        {"X", false, IndexProfile::no_index, 0, 0, false, 0},
        {"Y", false, IndexProfile::no_index, 0, 0, false, 0},
        {"Z", false, IndexProfile::no_index, 0, 0, false, 0},
        {"U", true, IndexProfile::no_index, 0, 0, false, 0},
        {"V", true, IndexProfile::no_index, 0, 0, false, 0},
        {"W", true, IndexProfile::no_index, 0, 0, false, 0},
        {"A", false, IndexProfile::free_index, 0, 0, true, 0},
        {"B", true, IndexProfile::free_index, 0, 0, false, 0},
        {"C", true, IndexProfile::free_index, 0, 0, false, 0},
        {"D", false, IndexProfile::free_index, 0, 0, true, 0},
        {"P", false, IndexProfile::free_index, 0, 0, true, 0},
        {"Q", true, IndexProfile::free_index, 0, 0, false, 0},
        {"R", true, IndexProfile::free_index, 0, 0, false, 0},
        {"S", false, IndexProfile::free_index, 0, 0, true, 0},
        {"K", false, IndexProfile::free_index, 0, 0, true, 0},
        {"L", true, IndexProfile::free_index, 0, 0, false, 0},
        {"M", true, IndexProfile::free_index, 0, 0, false, 0},
        {"N", false, IndexProfile::free_index, 0, 0, true, 0},
        {"sA", false, IndexProfile::free_index, 0, 0, true, 0},
        {"sB", true, IndexProfile::free_index, 0, 0, false, 0},
        {"sE", false, IndexProfile::free_index, 0, 0, false, 2},
        {"sC", true, IndexProfile::free_index, 0, 0, false, 0},
        {"sD", false, IndexProfile::free_index, 0, 0, true, 0},
        {"sF", true, IndexProfile::free_index, 0, 0, false, 0},
        {"t", false, IndexProfile::free_index, 0, 0, false, 2},
        {"tau", true, IndexProfile::free_index, 0, 0, false, 0},
    }};
    return table[static_cast<std::size_t>(f)];
}

inline bool is_odd(Family f) { return family_info(f).odd; }
inline bool is_lie(Family f) { return f >= Family::X && f <= Family::W; }
inline bool is_primary_f(Family f) { return f <= Family::d; }
inline bool is_primed_f(Family f) { return f >= Family::ap && f <= Family::dp; }

struct GeneratorId {
    Family fam;
    int idx = 0;

    auto operator<=>(const GeneratorId&) const = default;

    bool odd() const { return is_odd(fam); }
    int weight() const {
        const auto& fi = family_info(fam);
        if (fi.profile == IndexProfile::no_index) return 0;
        if (fi.profile == IndexProfile::free_index) return 0;
        return idx + fi.weight_offset;
    }
    int bc_charge() const { return family_info(fam).bc_charge; }

    std::string str() const {
        const auto& fi = family_info(fam);
        if (fi.profile == IndexProfile::no_index) return fi.name;
        return std::string(fi.name) + std::to_string(idx);
    }
};

// Constant a degenerate index collapses to, or -1 if the generator is live.
inline int degenerate_value(Family f, int idx) {
    switch (family_info(f).profile) {
    case IndexProfile::a_like:
        if (idx == 0) return 0;
        if (idx == 1) return 1;
        return -1;
    case IndexProfile::b_like: return idx == 0 ? 0 : -1;
    case IndexProfile::c_like: return idx <= 1 ? 0 : -1;
    case IndexProfile::d_like: return idx == 0 ? 1 : -1;
    default: return -1;
    }
}

inline GeneratorId lie_gen(Family f) {
    if (!is_lie(f)) throw std::invalid_argument("not a Lie generator family");
    return GeneratorId{f, 0};
}

} // namespace hs1
