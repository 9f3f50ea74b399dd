#include "hs1/coaction.hpp"

#include "hs1/sampling.hpp"

#include <mutex>

namespace hs1 {

namespace {

const std::vector<LegKind> UF = {LegKind::U, LegKind::F};
const std::vector<LegKind> FF2 = {LegKind::F, LegKind::F};
const std::vector<LegKind> UU2 = {LegKind::U, LegKind::U};

constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                            Family::U, Family::V, Family::W};

GradedTensor uf_term(const Rational& c, const UEnvElement& u, const FElement& f) {
    GradedTensor t(UF);
    for (const auto& [mu, cu] : u.p.terms())
        for (const auto& [mf, cf] : f.terms()) t.add_term({mu, mf}, c * cu * cf);
    return t;
}

} // namespace

GradedTensor coact_gen(Family lie) {
    using F = Family;
    auto U1 = [](Family f) { return UEnvElement::gen(f); };
    GradedTensor t(UF);
    switch (lie) {
    case F::X:
        t += uf_term(2, U1(F::Y), fgen(F::a, 2));
        t += uf_term(1, U1(F::X), SuperPoly::one());
        t += uf_term(1, U1(F::Z), fgen(F::d, 1));
        t += uf_term(1, U1(F::U), fgen(F::b, 1));
        t += uf_term(2, U1(F::V), fgen(F::c, 2));
        return t;
    case F::W:
        t += uf_term(1, U1(F::Y), fgen(F::b, 1));
        t += uf_term(1, U1(F::V), fgen(F::d, 1));
        t += uf_term(1, U1(F::W), SuperPoly::one());
        return t;
    case F::Y:
    case F::Z:
    case F::U:
    case F::V:
        t += uf_term(1, U1(lie), SuperPoly::one());
        return t;
    default:
        throw std::invalid_argument("coact_gen: not a Lie generator");
    }
}

GradedTensor coact_mono(const SuperMonomial& m) {
    static std::map<SuperMonomial, GradedTensor, MonoLess> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::function<const GradedTensor&(const SuperMonomial&)> rec =
        [&](const SuperMonomial& mono) -> const GradedTensor& {
        auto it = memo.find(mono);
        if (it != memo.end()) return it->second;
        GradedTensor out(UF);
        if (mono.is_one()) {
            out = GradedTensor::unit(UF);
        } else {
            LieWord w = word_of_monomial(mono);
            Family g = w[0];
            LieWord restw(w.begin() + 1, w.end());
            SuperMonomial rest;
            {
                std::vector<std::pair<GeneratorId, int>> fs;
                for (Family f : restw) fs.push_back({lie_gen(f), 1});
                rest = normalize_monomial(fs)->second; // suffix of a normal word
            }
            const GradedTensor& nab_rest = rec(rest);
            const GradedTensor nab_g = coact_gen(g);
            // nabla(g h) = (-1)^{|h1||g2|} g1 h1 (x) g2 h2
            //            + (-1)^{|h1||g|}  h1 (x) (g |> h2)
            for (const auto& [legs_h, ch] : nab_rest.terms()) {
                const SuperMonomial& h1 = legs_h[0];
                const SuperMonomial& h2 = legs_h[1];
                for (const auto& [legs_g, cg] : nab_g.terms()) {
                    int sign = (h1.parity() && legs_g[1].parity()) ? -1 : 1;
                    for (const auto& [cu, mu] : pbw_mul_mono(legs_g[0], h1)) {
                        auto pf = mono_mul(legs_g[1], h2);
                        if (!pf) continue;
                        out.add_term({mu, pf->second},
                                     ch * cg * cu * pf->first * sign);
                    }
                }
                int sign = (h1.parity() && is_odd(g)) ? -1 : 1;
                FElement acted = act_lie(g, SuperPoly(Rational(1), h2));
                for (const auto& [mf, cf] : acted.terms())
                    out.add_term({h1, mf}, ch * cf * sign);
            }
        }
        return memo.emplace(mono, std::move(out)).first->second;
    };
    return rec(m);
}

GradedTensor coact(const UEnvElement& h) {
    GradedTensor r(UF);
    for (const auto& [m, c] : h.p.terms()) r += c * coact_mono(m);
    return r;
}

GradedTensor coact_pair(const UEnvElement& g, const UEnvElement& h) {
    // (-1)^{|h^(1)|(|g_(1)^(2)|+|g_(2)|)} g_(1)^(1) h^(1) (x) g_(1)^(2) (g_(2) |> h^(2))
    GradedTensor out(UF);
    GradedTensor nab_h = coact(h);
    for (const auto& [dg, cdg] : u_coproduct(g).terms()) {
        const SuperMonomial& g1 = dg[0];
        const SuperMonomial& g2 = dg[1];
        for (const auto& [ng1, cng1] : coact_mono(g1).terms()) {
            const SuperMonomial& g11 = ng1[0];
            const SuperMonomial& g12 = ng1[1];
            bool rho = g12.parity() ^ g2.parity();
            for (const auto& [nh, cnh] : nab_h.terms()) {
                const SuperMonomial& h1 = nh[0];
                const SuperMonomial& h2 = nh[1];
                int sign = (h1.parity() && rho) ? -1 : 1;
                FElement acted = act(UEnvElement(SuperPoly(Rational(1), g2)),
                                     SuperPoly(Rational(1), h2));
                FElement fleg = SuperPoly(Rational(1), g12) * acted;
                for (const auto& [cu, mu] : pbw_mul_mono(g11, h1))
                    for (const auto& [mf, cf] : fleg.terms())
                        out.add_term({mu, mf}, cdg * cng1 * cnh * cu * cf * sign);
            }
        }
    }
    return out;
}

GradedTensor coact_split(const LieWord& word, std::size_t split) {
    if (split == 0 || split > word.size())
        throw std::invalid_argument("coact_split: bad split position");
    LieWord pre(word.begin(), word.begin() + static_cast<long>(split));
    LieWord suf(word.begin() + static_cast<long>(split), word.end());
    return coact_pair(pbw_normalize(pre), pbw_normalize(suf));
}

// --- verification ------------------------------------------------------------

namespace {

std::vector<SuperMonomial> pbw_monomials_up_to(int max_degree) {
    std::vector<SuperMonomial> out;
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j)
            for (int k = 0; i + j + k <= max_degree; ++k)
                for (int e = 0; e <= 1 && i + j + k + e <= max_degree; ++e)
                    for (int z = 0; z <= 1 && i + j + k + e + z <= max_degree; ++z)
                        for (int h = 0; h <= 1 && i + j + k + e + z + h <= max_degree; ++h) {
                            std::vector<std::pair<GeneratorId, int>> fs;
                            if (i) fs.push_back({lie_gen(Family::X), i});
                            if (j) fs.push_back({lie_gen(Family::Y), j});
                            if (k) fs.push_back({lie_gen(Family::Z), k});
                            if (e) fs.push_back({lie_gen(Family::U), 1});
                            if (z) fs.push_back({lie_gen(Family::V), 1});
                            if (h) fs.push_back({lie_gen(Family::W), 1});
                            out.push_back(normalize_monomial(fs)->second);
                        }
    return out;
}

std::optional<std::string> check_comodule_coassoc(const SuperMonomial& m) {
    GradedTensor nab = coact_mono(m);
    GradedTensor lhs = apply_leg(nab, 1, f_coproduct_mono, FF2); // U,F,F
    GradedTensor rhs = apply_leg(nab, 0, coact_mono, UF);        // U,F,F
    return expect_equal(lhs, rhs, "coassociativity at " + m.str());
}

std::optional<std::string> check_counit_law(const SuperMonomial& m) {
    UEnvElement back;
    for (const auto& [legs, c] : coact_mono(m).terms())
        if (legs[1].is_one()) back.p.add_term(legs[0], c);
    return expect_equal(back, UEnvElement(SuperPoly(Rational(1), m)),
                        "(id x eps) nabla at " + m.str());
}

// h^(1)_(1) (x) h^(1)_(2) (x) h^(2)
//   = (-1)^{|h_(2)^(1)||h_(1)^(2)|} h_(1)^(1) (x) h_(2)^(1) (x) h_(1)^(2) h_(2)^(2)
std::optional<std::string> check_comodule_coalgebra(const SuperMonomial& m) {
    GradedTensor lhs = apply_leg(coact_mono(m), 0, u_coproduct_mono, UU2); // U,U,F
    GradedTensor rhs({LegKind::U, LegKind::U, LegKind::F});
    for (const auto& [dm, cd] : u_coproduct_mono(m).terms()) {
        for (const auto& [n1, c1] : coact_mono(dm[0]).terms())
            for (const auto& [n2, c2] : coact_mono(dm[1]).terms()) {
                int sign = (n2[0].parity() && n1[1].parity()) ? -1 : 1;
                auto pf = mono_mul(n1[1], n2[1]);
                if (!pf) continue;
                rhs.add_term({n1[0], n2[0], pf->second}, cd * c1 * c2 * pf->first * sign);
            }
    }
    return expect_equal(lhs, rhs, "comodule-coalgebra at " + m.str());
}

} // namespace

std::vector<Check> coaction_checks(int max_degree, int samples, std::uint64_t seed) {
    std::vector<Check> checks;

    checks.push_back({"table[X]", []() {
                          GradedTensor expect(UF);
                          expect += uf_term(2, UEnvElement::gen(Family::Y), fgen(Family::a, 2));
                          expect += uf_term(1, UEnvElement::gen(Family::X), SuperPoly::one());
                          expect += uf_term(1, UEnvElement::gen(Family::Z), fgen(Family::d, 1));
                          expect += uf_term(1, UEnvElement::gen(Family::U), fgen(Family::b, 1));
                          expect += uf_term(2, UEnvElement::gen(Family::V), fgen(Family::c, 2));
                          return expect_equal(coact(UEnvElement::gen(Family::X)), expect);
                      }});

    checks.push_back({"golden[VW]", []() {
                          // nabla(VW) = VY (x) b_1 + V^2 (x) d_1 + VW (x) 1 - V (x) b_1,
                          // stated in PBW form (VY = YV + V, V^2 = 0)
                          UEnvElement vy = pbw_normalize({Family::V, Family::Y});
                          UEnvElement vw = pbw_normalize({Family::V, Family::W});
                          GradedTensor expect(UF);
                          expect += uf_term(1, vy, fgen(Family::b, 1));
                          expect += uf_term(1, vw, SuperPoly::one());
                          expect += uf_term(-1, UEnvElement::gen(Family::V), fgen(Family::b, 1));
                          return expect_equal(coact(u_mul(UEnvElement::gen(Family::V),
                                                          UEnvElement::gen(Family::W))),
                                              expect);
                      }});

    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            Family g = kLie[i], h = kLie[j];
            checks.push_back(
                {"bracket[" + std::string(family_info(g).name) + "," + family_info(h).name +
                     "]",
                 [g, h]() {
                     int sign = (is_odd(g) && is_odd(h)) ? -1 : 1;
                     GradedTensor lhs =
                         coact_split({g, h}, 1) - Rational(sign) * coact_split({h, g}, 1);
                     return expect_equal(lhs, coact(bracket_element(g, h)),
                                         "nabla[" + std::string(family_info(g).name) + "," +
                                             family_info(h).name + "]");
                 }});
        }

    for (const auto& m : pbw_monomials_up_to(max_degree)) {
        checks.push_back({"coassoc[" + m.str() + "]", [m]() { return check_comodule_coassoc(m); }});
        checks.push_back({"counit[" + m.str() + "]", [m]() { return check_counit_law(m); }});
        checks.push_back(
            {"comod-coalg[" + m.str() + "]", [m]() { return check_comodule_coalgebra(m); }});
    }

    checks.push_back({"split-independence", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed + 3);
                          for (int i = 0; i < samples; ++i) {
                              LieWord w = s.lie_word(2 + s.uniform(3));
                              GradedTensor direct = coact(pbw_normalize(w));
                              for (std::size_t k = 1; k < w.size(); ++k)
                                  if (auto bad = expect_equal(coact_split(w, k), direct,
                                                              "split " + std::to_string(k)))
                                      return bad;
                          }
                          return std::nullopt;
                      }});

    return checks;
}

Report verify_comodule(int max_degree, int samples, std::uint64_t seed, Exec exec) {
    return run_checks("coaction", coaction_checks(max_degree, samples, seed), exec);
}

} // namespace hs1
