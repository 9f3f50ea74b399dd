#include "hs1/coaction.hpp"

#include <doctest.h>

using namespace hs1;

namespace {
const std::vector<LegKind> UF = {LegKind::U, LegKind::F};

GradedTensor uf(const UEnvElement& u, const FElement& f) {
    GradedTensor t(UF);
    for (const auto& [mu, cu] : u.p.terms())
        for (const auto& [mf, cf] : f.terms()) t.add_term({mu, mf}, cu * cf);
    return t;
}
} // namespace

TEST_CASE("coaction table") {
    CHECK(coact(UEnvElement::gen(Family::Y)) ==
          uf(UEnvElement::gen(Family::Y), SuperPoly::one()));
    CHECK(coact(UEnvElement::gen(Family::U)) ==
          uf(UEnvElement::gen(Family::U), SuperPoly::one()));

    GradedTensor w = uf(UEnvElement::gen(Family::Y), fgen(Family::b, 1)) +
                     uf(UEnvElement::gen(Family::V), fgen(Family::d, 1)) +
                     uf(UEnvElement::gen(Family::W), SuperPoly::one());
    CHECK(coact(UEnvElement::gen(Family::W)) == w);
}

TEST_CASE("nabla(VW) spec example") {
    UEnvElement vw = u_mul(UEnvElement::gen(Family::V), UEnvElement::gen(Family::W));
    // VW (x) 1 + VY (x) b1 - V (x) b1, with VY and V^2 in PBW form
    GradedTensor expect = uf(vw, SuperPoly::one()) +
                          uf(pbw_normalize({Family::V, Family::Y}), fgen(Family::b, 1)) -
                          uf(UEnvElement::gen(Family::V), fgen(Family::b, 1));
    CHECK(coact(vw) == expect);

    // nabla(VW + WV) = nabla([V,W]) = 0
    UEnvElement wv = u_mul(UEnvElement::gen(Family::W), UEnvElement::gen(Family::V));
    CHECK(coact(vw + wv).is_zero());
}

TEST_CASE("counit law picks out the element") {
    UEnvElement uw = u_mul(UEnvElement::gen(Family::U), UEnvElement::gen(Family::W));
    UEnvElement back;
    for (const auto& [legs, c] : coact(uw).terms())
        if (legs[1].is_one()) back.p.add_term(legs[0], c);
    CHECK(back == uw);
}

TEST_CASE("split independence on a sample word") {
    LieWord w = {Family::U, Family::Y, Family::W};
    GradedTensor direct = coact(pbw_normalize(w));
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(coact_split(w, k) == direct);
}

TEST_CASE("verify_comodule suite") {
    Report r = verify_comodule(3, 20, 42, Exec::serial);
    for (const auto& c : r.results) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}
