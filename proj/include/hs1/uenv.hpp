#pragma once

#include "hs1/report.hpp"
#include "hs1/tensor.hpp"

#include <vector>

namespace hs1 {

// Word in the Lie generators X,Y,Z,U,V,W (not necessarily normal ordered).
using LieWord = std::vector<Family>;

// Super bracket [g,h] as a linear combination of generators, per the fixed
// relation table; pairs beyond the stored triangle follow from
// [g,h] = -(-1)^{|g||h|} [h,g].
std::vector<std::pair<Rational, Family>> bracket_terms(Family g, Family h);

// Element of U(g^s_1) in PBW normal form X^i Y^j Z^k U^e V^z W^h.
// Storage reuses SuperMonomial/SuperPoly; multiplication is the
// enveloping-algebra product, never the supercommutative one.
struct UEnvElement {
    SuperPoly p;

    UEnvElement() = default;
    explicit UEnvElement(SuperPoly q) : p(std::move(q)) {}

    static UEnvElement zero() { return UEnvElement(); }
    static UEnvElement unit() { return UEnvElement(SuperPoly::one()); }
    static UEnvElement gen(Family f) { return UEnvElement(SuperPoly::gen(lie_gen(f))); }
    static UEnvElement scalar(const Rational& c) { return UEnvElement(SuperPoly(c)); }

    bool is_zero() const { return p.is_zero(); }
    bool operator==(const UEnvElement&) const = default;

    UEnvElement& operator+=(const UEnvElement& o) { p += o.p; return *this; }
    UEnvElement& operator-=(const UEnvElement& o) { p -= o.p; return *this; }
    friend UEnvElement operator+(UEnvElement x, const UEnvElement& y) { return x += y; }
    friend UEnvElement operator-(UEnvElement x, const UEnvElement& y) { return x -= y; }
    friend UEnvElement operator-(const UEnvElement& x) { return UEnvElement(-x.p); }
    friend UEnvElement operator*(const Rational& c, const UEnvElement& x) {
        return UEnvElement(c * x.p);
    }

    std::string str() const { return p.str(); }
};

UEnvElement bracket_element(Family g, Family h);

enum class PbwStrategy { leftmost, rightmost };

// Rewrites gh -> (-1)^{|g||h|} hg + [g,h] on adjacent out-of-order pairs (and
// kills adjacent equal odd letters) until normal ordered.  The two strategies
// pick different rewrite positions; confluence is a verified property.
UEnvElement pbw_normalize(const LieWord& word,
                          PbwStrategy strategy = PbwStrategy::leftmost);

LieWord word_of_monomial(const SuperMonomial& m);

UEnvElement u_mul(const UEnvElement& x, const UEnvElement& y);

// PBW monomial product as a flat term list (used by tensor legs).
std::vector<std::pair<Rational, SuperMonomial>> pbw_mul_mono(const SuperMonomial& x,
                                                             const SuperMonomial& y);

// Primitive coproduct on generators, extended as a superalgebra morphism.
GradedTensor u_coproduct(const UEnvElement& x);
GradedTensor u_coproduct_mono(const SuperMonomial& m);

Rational u_counit(const UEnvElement& x);

// S(g) = -g on generators, extended anti-multiplicatively with the super sign.
UEnvElement u_antipode(const UEnvElement& x);

// Super-antisymmetry and Jacobi over all generator triples, PBW confluence on
// seeded random words, coassociativity and the antipode axiom on low degrees.
std::vector<Check> u_checks(int sample_count, std::uint64_t seed);
Report verify_u(int sample_count, std::uint64_t seed, Exec exec = Exec::parallel);

} // namespace hs1
