#include "hs1/action.hpp"

#include <doctest.h>

using namespace hs1;

namespace {
FElement g(Family f, int n) { return fgen(f, n); }
}

TEST_CASE("action table spec examples") {
    // Y |> a_5 = 4 a_5
    CHECK(act_lie(Family::Y, g(Family::a, 5)) == Rational(4) * g(Family::a, 5));

    // X |> a_2 = 3 a_3 - 2 a_2 a_2 - b_1 c_2
    FElement expect = Rational(3) * g(Family::a, 3) -
                      Rational(2) * g(Family::a, 2) * g(Family::a, 2) -
                      g(Family::b, 1) * g(Family::c, 2);
    CHECK(act_lie(Family::X, g(Family::a, 2)) == expect);

    // U |> b_2 = -3 a_3 + d_2
    CHECK(act_lie(Family::U, g(Family::b, 2)) ==
          Rational(-3) * g(Family::a, 3) + g(Family::d, 2));

    // W |> (a_2 a_2) = 2(-b_1 a_2^2 + a_2 b_2)
    FElement lhs = act_lie(Family::W, g(Family::a, 2) * g(Family::a, 2));
    FElement rhs = Rational(2) * (-g(Family::b, 1) * g(Family::a, 2) * g(Family::a, 2) +
                                  g(Family::a, 2) * g(Family::b, 2));
    CHECK(lhs == rhs);

    // boundary: V |> a_2 = b_1, V |> d_1 = b_1, V |> c_2 = a_2 - d_1
    CHECK(act_lie(Family::V, g(Family::a, 2)) == g(Family::b, 1));
    CHECK(act_lie(Family::V, g(Family::c, 2)) == g(Family::a, 2) - g(Family::d, 1));
}

TEST_CASE("paper's worked bracket cases") {
    // [Y,X] |> a_4 = X |> a_4
    FElement a4 = g(Family::a, 4);
    FElement lhs = act_lie(Family::Y, act_lie(Family::X, a4)) -
                   act_lie(Family::X, act_lie(Family::Y, a4));
    CHECK(lhs == act_lie(Family::X, a4));

    // [U,W] |> d_3 = (UW + WU) |> d_3 = (-X) |> d_3
    FElement d3 = g(Family::d, 3);
    FElement anti = act_lie(Family::U, act_lie(Family::W, d3)) +
                    act_lie(Family::W, act_lie(Family::U, d3));
    CHECK(anti == -act_lie(Family::X, d3));

    // [V,W] = 0: (VW + WV) |> c_n = 0 for n <= 6
    for (int n = 2; n <= 6; ++n) {
        FElement cn = g(Family::c, n);
        FElement z = act_lie(Family::V, act_lie(Family::W, cn)) +
                     act_lie(Family::W, act_lie(Family::V, cn));
        CHECK(z.is_zero());
    }
}

TEST_CASE("word action matches letterwise composition") {
    UEnvElement yx = u_mul(UEnvElement::gen(Family::Y), UEnvElement::gen(Family::X));
    FElement a3 = g(Family::a, 3);
    CHECK(act(yx, a3) == act_lie(Family::Y, act_lie(Family::X, a3)));
    CHECK(act(UEnvElement::unit(), a3) == a3);
    CHECK(act(UEnvElement::gen(Family::W), SuperPoly::one()).is_zero());
}

TEST_CASE("verify_module_algebra suite") {
    Report r = verify_module_algebra(5, 25, 42, Exec::serial);
    for (const auto& c : r.results) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
