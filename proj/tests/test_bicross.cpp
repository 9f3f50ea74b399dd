#include "hs1/bicross.hpp"
#include "hs1/jets.hpp"

#include <doctest.h>

using namespace hs1;

namespace {
FElement g(Family f, int n) { return fgen(f, n); }
HElement Hf(const FElement& a) { return HElement::from_f(a); }
HElement Hu(Family f) { return HElement::from_u(UEnvElement::gen(f)); }
}

TEST_CASE("h_mul spec examples") {
    // (a2 # 1)(a3 # 1) = a2 a3 # 1
    CHECK(h_mul(Hf(g(Family::a, 2)), Hf(g(Family::a, 3))) ==
          Hf(g(Family::a, 2) * g(Family::a, 3)));

    // [1#Y, a2#1] = (Y |> a2) # 1 = a2 # 1
    CHECK(h_commutator(Hu(Family::Y), Hf(g(Family::a, 2))) == Hf(g(Family::a, 2)));

    // (1#U)(b1#1) = (-2a2 + d1) # 1 - b1 # U
    HElement expect = Hf(Rational(-2) * g(Family::a, 2) + g(Family::d, 1)) -
                      HElement::of(g(Family::b, 1), UEnvElement::gen(Family::U));
    CHECK(h_mul(Hu(Family::U), Hf(g(Family::b, 1))) == expect);
}

TEST_CASE("h_coproduct spec examples") {
    const std::vector<LegKind> FUFU = {LegKind::F, LegKind::U, LegKind::F, LegKind::U};
    auto one = one_monomial();
    auto a2 = gen_monomial(GeneratorId{Family::a, 2});

    GradedTensor d_a2(FUFU);
    d_a2.add_term({a2, one, one, one}, 1);
    d_a2.add_term({one, one, a2, one}, 1);
    CHECK(h_coproduct(Hf(g(Family::a, 2))) == d_a2);

    auto Y = gen_monomial(lie_gen(Family::Y));
    GradedTensor d_y(FUFU);
    d_y.add_term({one, Y, one, one}, 1);
    d_y.add_term({one, one, one, Y}, 1);
    CHECK(h_coproduct(Hu(Family::Y)) == d_y);
}

TEST_CASE("h_antipode spec examples") {
    CHECK(h_antipode(Hf(g(Family::a, 2))) == Rational(-1) * Hf(g(Family::a, 2)));
    CHECK(h_antipode(Hu(Family::Z)) == Rational(-1) * Hu(Family::Z));

    // m(S (x) id) Delta(1 # X) = eps(1 # X) = 0
    HElement acc;
    for (const auto& [legs, c] : h_coproduct(Hu(Family::X)).terms()) {
        HElement left;
        left.t.add_term({legs[0], legs[1]}, 1);
        HElement right;
        right.t.add_term({legs[2], legs[3]}, 1);
        acc += c * h_mul(h_antipode(left), right);
    }
    CHECK(acc.is_zero());
}

TEST_CASE("counit") {
    CHECK(h_counit(HElement::unit()) == 1);
    CHECK(h_counit(Hu(Family::X)) == 0);
    CHECK(h_counit(Hf(g(Family::a, 2)) + Rational(5) * HElement::unit()) == 5);
}

TEST_CASE("compat conditions on the paper's worked pairs") {
    Report r = verify_compatibility(3, 10, 42, Exec::serial);
    for (const auto& c : r.results) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("lambda antipode enumeration") {
    CHECK(lambda_antipode(2) == -g(Family::a, 2));
    FElement a2 = g(Family::a, 2);
    CHECK(lambda_antipode(3) == -g(Family::a, 3) + Rational(2) * a2 * a2);
    CHECK(lambda_antipode(4) ==
          -g(Family::a, 4) + Rational(5) * a2 * g(Family::a, 3) - Rational(5) * a2 * a2 * a2);
    CHECK_THROWS_AS(lambda_antipode(1), std::invalid_argument);
}

TEST_CASE("classical quotient map") {
    FElement x = g(Family::a, 3) + g(Family::b, 1) * g(Family::c, 2) +
                 g(Family::d, 1) * g(Family::a, 2);
    CHECK(classical_quotient_f(x) == g(Family::a, 3));
    CHECK(in_classical_kernel(gen_monomial(lie_gen(Family::U))));
    CHECK(!in_classical_kernel(gen_monomial(lie_gen(Family::X))));
}

TEST_CASE("classical suite") {
    Report r = classical_check(4, Exec::serial);
    for (const auto& c : r.results) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
