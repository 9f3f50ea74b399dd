#include "hs1/ffun.hpp"
#include "hs1/sampling.hpp"
#include "hs1/tensor.hpp"

#include <doctest.h>

using namespace hs1;

namespace {
GeneratorId ga(int n) { return {Family::a, n}; }
GeneratorId gb(int n) { return {Family::b, n}; }
GeneratorId gc(int n) { return {Family::c, n}; }
GeneratorId gd(int n) { return {Family::d, n}; }
} // namespace

TEST_CASE("rational helpers") {
    CHECK(rat_str(Rational(3, 2)) == "3/2");
    CHECK(rat_str(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(factorial(6) == 720);
}

TEST_CASE("normalize_monomial spec examples") {
    // b_2 b_1 -> (-1, b_1 b_2)
    auto r = normalize_monomial({{gb(2), 1}, {gb(1), 1}});
    REQUIRE(r.has_value());
    CHECK(r->first == -1);
    CHECK(r->second.str() == "b1*b2");

    // b_1 b_1 -> 0
    CHECK(!normalize_monomial({{gb(1), 1}, {gb(1), 1}}).has_value());

    // a_2 b_1 a_2 -> (+1, a_2^2 b_1)
    auto s = normalize_monomial({{ga(2), 1}, {gb(1), 1}, {ga(2), 1}});
    REQUIRE(s.has_value());
    CHECK(s->first == 1);
    CHECK(s->second.str() == "a2^2*b1");

    // normalizing a normal form is the identity
    auto t = normalize_monomial({{gb(1), 1}, {gc(3), 1}, {ga(2), 2}});
    REQUIRE(t.has_value());
    std::vector<std::pair<GeneratorId, int>> again;
    for (auto& [g, e] : t->second.even) again.push_back({g, e});
    for (auto& g : t->second.odd) again.push_back({g, 1});
    auto t2 = normalize_monomial(again);
    REQUIRE(t2.has_value());
    CHECK(t2->first == 1);
    CHECK(t2->second == t->second);
}

TEST_CASE("mul spec examples") {
    FElement b1 = SuperPoly::gen(gb(1)), c2 = SuperPoly::gen(gc(2));
    CHECK((b1 * c2).str() == "b1*c2");
    CHECK((c2 * b1).str() == "-b1*c2");

    FElement a2 = SuperPoly::gen(ga(2));
    FElement one = SuperPoly::one();
    CHECK((one + a2) * (one - a2) == one - a2 * a2);

    FElement s = b1 + c2;
    CHECK((s * s).is_zero());
}

TEST_CASE("grading spec examples") {
    CHECK(GeneratorId{Family::a, 3}.weight() == 2);
    CHECK(GeneratorId{Family::d, 2}.weight() == 2);
    SuperPoly x = SuperPoly::gen(gb(1)) * SuperPoly::gen(gc(2));
    auto g = grading(x);
    REQUIRE(g.size() == 1);
    CHECK(!g[0].odd);          // parity even
    CHECK(g[0].bc_charge == 0);
    CHECK(g[0].weight == 2);
}

TEST_CASE("tensor_mul spec examples") {
    const std::vector<LegKind> FF = {LegKind::F, LegKind::F};
    FElement one = SuperPoly::one();
    FElement a2 = SuperPoly::gen(ga(2)), b1 = SuperPoly::gen(gb(1)),
             c2 = SuperPoly::gen(gc(2));

    // (1 (x) b1)(c2 (x) 1) = -c2 (x) b1
    GradedTensor lhs = tensor_mul(tensor_of({one, b1}, FF), tensor_of({c2, one}, FF));
    CHECK(lhs == Rational(-1) * tensor_of({c2, b1}, FF));

    // (a2 (x) 1)(1 (x) a2) = a2 (x) a2
    CHECK(tensor_mul(tensor_of({a2, one}, FF), tensor_of({one, a2}, FF)) ==
          tensor_of({a2, a2}, FF));

    // (b1 (x) b1)(b1 (x) 1) = 0
    CHECK(tensor_mul(tensor_of({b1, b1}, FF), tensor_of({b1, one}, FF)).is_zero());

    GradedTensor bad({LegKind::F});
    CHECK_THROWS_AS(tensor_mul(tensor_of({one}, {LegKind::F}), tensor_of({one, one}, FF)),
                    std::invalid_argument);
}

TEST_CASE("supercommutativity and associativity on seeded random elements") {
    Sampler s(42);
    for (int i = 0; i < 40; ++i) {
        FElement x = s.f_element(), y = s.f_element(), z = s.f_element();
        bool px = x.parity(), py = y.parity();
        Rational sign = (px && py) ? -1 : 1;
        CHECK(x * y == sign * (y * x));
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("grading is multiplicative") {
    Sampler s(7);
    for (int i = 0; i < 25; ++i) {
        SuperMonomial m = s.f_monomial(2, false), n = s.f_monomial(3, true);
        auto p = mono_mul(m, n);
        if (!p) continue;
        CHECK(p->second.weight() == m.weight() + n.weight());
        CHECK(p->second.bc_charge() == m.bc_charge() + n.bc_charge());
        CHECK(p->second.parity() == (m.parity() ^ n.parity()));
    }
}

TEST_CASE("invert_even") {
    // (1 + b1 c2) is a unit: inverse 1 - b1 c2
    FElement u = SuperPoly::one() + SuperPoly::gen(gb(1)) * SuperPoly::gen(gc(2));
    FElement inv = invert_even(u);
    CHECK(u * inv == SuperPoly::one());

    // Laurent unit times nilpotent correction
    SuperPoly sA = SuperPoly::gen(GeneratorId{Family::sa, 0});
    SuperPoly v = sA + SuperPoly::gen(gb(1)) * SuperPoly::gen(gb(2));
    CHECK(v * invert_even(v) == SuperPoly::one());

    // a free non-nilpotent rest is not invertible
    CHECK_THROWS_AS(invert_even(SuperPoly::one() + SuperPoly::gen(ga(2))), std::domain_error);
    CHECK_THROWS_AS(invert_even(SuperPoly::zero()), std::domain_error);
}

TEST_CASE("derivative_at_zero conventions") {
    GeneratorId t{Family::t, 0}, tau{Family::tau, 0};
    SuperPoly pt = SuperPoly::gen(t), ptau = SuperPoly::gen(tau);
    SuperPoly a2 = SuperPoly::gen(ga(2)), b1 = SuperPoly::gen(gb(1));

    CHECK(derivative_at_zero(SuperPoly::one() + pt * a2, t) == a2);
    CHECK(pt * pt == SuperPoly::zero()); // t^2 = 0

    // tau on the left: d/dtau (tau b1) = b1, d/dtau (b1 tau) = -b1
    CHECK(derivative_at_zero(ptau * b1, tau) == b1);
    CHECK(derivative_at_zero(b1 * ptau, tau) == Rational(-1) * b1);
}

TEST_CASE("deterministic term order") {
    FElement x = SuperPoly::gen(gd(1)) + SuperPoly::gen(ga(3)) +
                 SuperPoly::gen(ga(2)) * SuperPoly::gen(ga(2));
    CHECK(x.str() == "a2^2 + a3 + d1"); // degree-descending, then weight, then lex
    CHECK(x.str() == (SuperPoly::gen(ga(2)) * SuperPoly::gen(ga(2)) + SuperPoly::gen(ga(3)) +
                      SuperPoly::gen(gd(1)))
                         .str());
}
