#pragma once

#include "hs1/generator.hpp"
#include "hs1/rational.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace hs1 {

// Canonical supercommutative monomial: even factors as (generator, exponent)
// sorted by generator, odd factors as a strictly ascending sequence (a repeated
// odd factor kills the monomial).  The odd order is family-major, so b_1 < b_2
// < ... < c_2 < c_3 < ..., with auxiliary odd families after the primary ones.
struct SuperMonomial {
    std::vector<std::pair<GeneratorId, int>> even;
    std::vector<GeneratorId> odd;

    bool operator==(const SuperMonomial&) const = default;

    bool is_one() const { return even.empty() && odd.empty(); }
    bool parity() const { return odd.size() % 2 != 0; }

    int weight() const {
        int w = 0;
        for (const auto& [g, e] : even) w += e * g.weight();
        for (const auto& g : odd) w += g.weight();
        return w;
    }

    int bc_charge() const {
        int q = 0;
        for (const auto& [g, e] : even) q += e * g.bc_charge();
        for (const auto& g : odd) q += g.bc_charge();
        return q;
    }

    // degree used by the deterministic term order
    int index_degree() const {
        auto deg1 = [](const GeneratorId& g) {
            return family_info(g.fam).profile == IndexProfile::no_index ? 1 : g.idx;
        };
        int d = 0;
        for (const auto& [g, e] : even) d += std::abs(e) * deg1(g);
        for (const auto& g : odd) d += deg1(g);
        return d;
    }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        auto app = [&s](const std::string& f) {
            if (!s.empty()) s += "*";
            s += f;
        };
        for (const auto& [g, e] : even) {
            if (e == 1) app(g.str());
            else app(g.str() + "^" + std::to_string(e));
        }
        for (const auto& g : odd) app(g.str());
        return s;
    }
};

// Deterministic term order: index degree (descending, so leading terms print
// first), then weight, then lexicographic factor comparison.
struct MonoLess {
    bool operator()(const SuperMonomial& x, const SuperMonomial& y) const {
        int dx = x.index_degree(), dy = y.index_degree();
        if (dx != dy) return dx > dy;
        int wx = x.weight(), wy = y.weight();
        if (wx != wy) return wx < wy;
        if (x.even != y.even) return x.even < y.even;
        return x.odd < y.odd;
    }
};

inline SuperMonomial one_monomial() { return {}; }

inline SuperMonomial gen_monomial(GeneratorId g, int exp = 1) {
    SuperMonomial m;
    if (g.odd()) {
        if (exp != 1) throw std::invalid_argument("odd generator exponent must be 1");
        m.odd.push_back(g);
    } else {
        if (exp == 0) return m;
        if (exp < 0 && !family_info(g.fam).invertible)
            throw std::invalid_argument("negative exponent on non-invertible generator " + g.str());
        m.even.push_back({g, exp});
    }
    return m;
}

// Product of two canonical monomials: merges factor lists, counts odd
// transpositions for the Koszul sign, applies nilpotency bounds.  Returns
// nullopt when the product is zero (odd square or nilpotent overflow).
inline std::optional<std::pair<int, SuperMonomial>> mono_mul(const SuperMonomial& x,
                                                             const SuperMonomial& y) {
    SuperMonomial r;
    r.even.reserve(x.even.size() + y.even.size());
    std::size_t i = 0, j = 0;
    while (i < x.even.size() || j < y.even.size()) {
        bool take_x = j >= y.even.size() ||
                      (i < x.even.size() && x.even[i].first < y.even[j].first);
        bool take_y = i >= x.even.size() ||
                      (j < y.even.size() && y.even[j].first < x.even[i].first);
        if (take_x) {
            r.even.push_back(x.even[i++]);
        } else if (take_y) {
            r.even.push_back(y.even[j++]);
        } else {
            auto g = x.even[i].first;
            int e = x.even[i].second + y.even[j].second;
            ++i, ++j;
            if (e == 0) continue;
            if (e < 0 && !family_info(g.fam).invertible)
                throw std::invalid_argument("negative exponent on non-invertible generator " + g.str());
            r.even.push_back({g, e});
        }
    }
    for (const auto& [g, e] : r.even) {
        int nil = family_info(g.fam).nilpotent;
        if (nil > 0 && e >= nil) return std::nullopt;
    }
    // merge odd parts counting crossings
    long crossings = 0;
    r.odd.reserve(x.odd.size() + y.odd.size());
    std::size_t p = 0, q = 0;
    while (p < x.odd.size() || q < y.odd.size()) {
        if (q >= y.odd.size() || (p < x.odd.size() && x.odd[p] < y.odd[q])) {
            r.odd.push_back(x.odd[p++]);
        } else if (p >= x.odd.size() || y.odd[q] < x.odd[p]) {
            // y.odd[q] jumps over the remaining factors of x.odd
            crossings += static_cast<long>(x.odd.size() - p);
            r.odd.push_back(y.odd[q++]);
        } else {
            return std::nullopt; // repeated odd generator
        }
    }
    return std::make_pair(crossings % 2 == 0 ? 1 : -1, std::move(r));
}

// Canonicalize an arbitrary factor sequence (generators with exponents).
// Returns (sign, monomial); sign 0 encoded as nullopt.
inline std::optional<std::pair<int, SuperMonomial>>
normalize_monomial(const std::vector<std::pair<GeneratorId, int>>& factors) {
    int sign = 1;
    SuperMonomial acc;
    for (const auto& [g, e] : factors) {
        if (e == 0) continue;
        auto step = mono_mul(acc, gen_monomial(g, e));
        if (!step) return std::nullopt;
        sign *= step->first;
        acc = std::move(step->second);
    }
    return std::make_pair(sign, std::move(acc));
}

// Formal inverse of an invertible monomial (all families invertible, no odds).
inline std::optional<SuperMonomial> mono_inverse(const SuperMonomial& m) {
    if (!m.odd.empty()) return std::nullopt;
    SuperMonomial r;
    r.even.reserve(m.even.size());
    for (const auto& [g, e] : m.even) {
        if (!family_info(g.fam).invertible) return std::nullopt;
        r.even.push_back({g, -e});
    }
    return r;
}

} // namespace hs1
