#include "hs1/ffun.hpp"

#include <doctest.h>

using namespace hs1;

namespace {
const std::vector<LegKind> FF = {LegKind::F, LegKind::F};
FElement g(Family f, int n) { return fgen(f, n); }
}

TEST_CASE("degenerate generators") {
    CHECK(fgen(Family::a, 0).is_zero());
    CHECK(fgen(Family::a, 1) == SuperPoly::one());
    CHECK(fgen(Family::d, 0) == SuperPoly::one());
    CHECK(fgen(Family::b, 0).is_zero());
    CHECK(fgen(Family::c, 0).is_zero());
    CHECK(fgen(Family::c, 1).is_zero());
    CHECK_THROWS_AS(fgen(Family::a, kMaxGeneratorIndex + 1), std::out_of_range);
}

TEST_CASE("composition sums") {
    // P(3,2) = a1 a2 + a2 a1 = 2 a2
    CHECK(composition_sum(3, 2) == Rational(2) * g(Family::a, 2));
    CHECK(composition_sum(4, 4) == SuperPoly::one()); // a1^4
    CHECK(composition_sum(2, 3).is_zero());
}

TEST_CASE("coproduct_generator displays") {
    FElement one = SuperPoly::one();
    // Delta(d_1) = 1 (x) d1 + d1 (x) 1
    CHECK(coproduct_generator(Family::d, 1) ==
          tensor_of({one, g(Family::d, 1)}, FF) + tensor_of({g(Family::d, 1), one}, FF));

    // Delta(a_3) display
    GradedTensor a3 = tensor_of({one, g(Family::a, 3)}, FF) +
                      tensor_of({g(Family::a, 3), one}, FF) +
                      Rational(2) * tensor_of({g(Family::a, 2), g(Family::a, 2)}, FF) +
                      tensor_of({g(Family::b, 1), g(Family::c, 2)}, FF);
    CHECK(coproduct_generator(Family::a, 3) == a3);

    // Delta(b_2) display
    GradedTensor b2 = tensor_of({one, g(Family::b, 2)}, FF) +
                      tensor_of({g(Family::b, 2), one}, FF) +
                      Rational(2) * tensor_of({g(Family::a, 2), g(Family::b, 1)}, FF) +
                      tensor_of({g(Family::b, 1), g(Family::d, 1)}, FF) +
                      tensor_of({g(Family::b, 1), g(Family::a, 2)}, FF);
    CHECK(coproduct_generator(Family::b, 2) == b2);

    CHECK_THROWS_AS(coproduct_generator(Family::a, kMaxGeneratorIndex + 5), std::out_of_range);
}

TEST_CASE("coproduct of products") {
    FElement one = SuperPoly::one();
    CHECK(f_coproduct(one) == GradedTensor::unit(FF));

    // Delta(a2^2) = 1 (x) a2^2 + 2 a2 (x) a2 + a2^2 (x) 1
    FElement a2 = g(Family::a, 2);
    GradedTensor expect = tensor_of({one, a2 * a2}, FF) +
                          Rational(2) * tensor_of({a2, a2}, FF) +
                          tensor_of({a2 * a2, one}, FF);
    CHECK(f_coproduct(a2 * a2) == expect);

    // Delta(b1 c2) = b1c2 (x) 1 + b1 (x) c2 - c2 (x) b1 + 1 (x) b1c2
    FElement b1 = g(Family::b, 1), c2 = g(Family::c, 2);
    GradedTensor e2 = tensor_of({b1 * c2, one}, FF) + tensor_of({b1, c2}, FF) -
                      tensor_of({c2, b1}, FF) + tensor_of({one, b1 * c2}, FF);
    CHECK(f_coproduct(b1 * c2) == e2);
}

TEST_CASE("counit") {
    CHECK(f_counit(SuperPoly::one()) == 1);
    CHECK(f_counit(g(Family::a, 3)) == 0);
    FElement x = FElement(Rational(3, 2)) + g(Family::a, 2) * g(Family::b, 1);
    CHECK(f_counit(x) == Rational(3, 2));
}

TEST_CASE("antipode values") {
    CHECK(f_antipode(g(Family::a, 2)) == -g(Family::a, 2));
    CHECK(f_antipode(g(Family::b, 1)) == -g(Family::b, 1));
    CHECK(f_antipode(g(Family::c, 2)) == -g(Family::c, 2));
    CHECK(f_antipode(g(Family::d, 1)) == -g(Family::d, 1));

    // S(a_3) = -a_3 + 2 a_2^2 + b_1 c_2
    FElement expect = -g(Family::a, 3) + Rational(2) * g(Family::a, 2) * g(Family::a, 2) +
                      g(Family::b, 1) * g(Family::c, 2);
    CHECK(f_antipode(g(Family::a, 3)) == expect);

    // m(id (x) S) Delta(d_3) = 0
    FElement d3 = g(Family::d, 3);
    FElement acc;
    for (const auto& [legs, c] : f_coproduct(d3).terms())
        acc += c * (SuperPoly(Rational(1), legs[0]) * f_antipode(SuperPoly(Rational(1), legs[1])));
    CHECK(acc.is_zero());
}

TEST_CASE("weight split of Delta(b_4)") {
    for (const auto& [legs, c] : coproduct_generator(Family::b, 4).terms())
        CHECK(legs[0].weight() + legs[1].weight() == 3);
}

TEST_CASE("verify_f_hopf suite") {
    Report r = verify_f_hopf(5, 15, 42, Exec::serial);
    for (const auto& c : r.results) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
