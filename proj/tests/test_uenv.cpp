#include "hs1/sampling.hpp"
#include "hs1/uenv.hpp"

#include <doctest.h>

using namespace hs1;

namespace {
UEnvElement gen(Family f) { return UEnvElement::gen(f); }
}

TEST_CASE("pbw_normalize spec examples") {
    // [Y,X] = X, so Y*X normalizes to XY + X in the basis X^i Y^j ...
    CHECK(pbw_normalize({Family::Y, Family::X}) ==
          pbw_normalize({Family::X, Family::Y}) + gen(Family::X));

    // V*U = -UV - Y - Z
    CHECK(pbw_normalize({Family::V, Family::U}) ==
          Rational(-1) * pbw_normalize({Family::U, Family::V}) - gen(Family::Y) -
              gen(Family::Z));

    // V*V = 0
    CHECK(pbw_normalize({Family::V, Family::V}).is_zero());
}

TEST_CASE("u_mul spec examples") {
    UEnvElement yx = u_mul(gen(Family::Y), gen(Family::X));
    CHECK(u_mul(yx, UEnvElement::unit()) == yx);

    // W*U = -UW - X  (from [U,W] = -X, UW + WU = -X)
    CHECK(u_mul(gen(Family::W), gen(Family::U)) ==
          Rational(-1) * u_mul(gen(Family::U), gen(Family::W)) - gen(Family::X));

    UEnvElement u = gen(Family::U), v = gen(Family::V), w = gen(Family::W);
    CHECK(u_mul(u, u_mul(v, w)) == u_mul(u_mul(u, v), w));
}

TEST_CASE("u_coproduct spec examples") {
    const std::vector<LegKind> UU = {LegKind::U, LegKind::U};
    SuperPoly one = SuperPoly::one();
    SuperPoly X = SuperPoly::gen(lie_gen(Family::X)), Y = SuperPoly::gen(lie_gen(Family::Y));
    SuperPoly U = SuperPoly::gen(lie_gen(Family::U)), V = SuperPoly::gen(lie_gen(Family::V));

    CHECK(u_coproduct(gen(Family::X)) == tensor_of({X, one}, UU) + tensor_of({one, X}, UU));

    UEnvElement xy = u_mul(gen(Family::X), gen(Family::Y));
    GradedTensor expect = tensor_of({X * Y, one}, UU) + tensor_of({X, Y}, UU) +
                          tensor_of({Y, X}, UU) + tensor_of({one, X * Y}, UU);
    CHECK(u_coproduct(xy) == expect);

    UEnvElement uv = u_mul(gen(Family::U), gen(Family::V));
    GradedTensor expect_uv = tensor_of({U * V, one}, UU) + tensor_of({U, V}, UU) -
                             tensor_of({V, U}, UU) + tensor_of({one, U * V}, UU);
    CHECK(u_coproduct(uv) == expect_uv);
}

TEST_CASE("counit and antipode spec examples") {
    CHECK(u_counit(UEnvElement::unit()) == 1);
    UEnvElement xzw = pbw_normalize({Family::X, Family::Z, Family::W});
    CHECK(u_counit(xzw) == 0);

    CHECK(u_antipode(gen(Family::Y)) == Rational(-1) * gen(Family::Y));

    // S(XY) = S(Y)S(X) = YX = XY + X
    UEnvElement xy = u_mul(gen(Family::X), gen(Family::Y));
    CHECK(u_antipode(xy) == xy + gen(Family::X));
}

TEST_CASE("bracket table sanity") {
    CHECK(bracket_element(Family::U, Family::V) ==
          Rational(-1) * (gen(Family::Y) + gen(Family::Z)));
    CHECK(bracket_element(Family::U, Family::W) == Rational(-1) * gen(Family::X));
    CHECK(bracket_element(Family::V, Family::W).is_zero());
    CHECK(bracket_element(Family::Y, Family::X) == gen(Family::X));
    CHECK_THROWS_AS(bracket_terms(Family::a, Family::X), std::invalid_argument);
}

TEST_CASE("verify_u suite") {
    Report r = verify_u(60, 42, Exec::serial);
    for (const auto& c : r.results) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
