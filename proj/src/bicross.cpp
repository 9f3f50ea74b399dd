#include "hs1/bicross.hpp"

#include "hs1/jets.hpp"
#include "hs1/sampling.hpp"

namespace hs1 {

namespace {

const std::vector<LegKind> FU = {LegKind::F, LegKind::U};
const std::vector<LegKind> FUFU = {LegKind::F, LegKind::U, LegKind::F, LegKind::U};

constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                            Family::U, Family::V, Family::W};
constexpr Family kFFams[4] = {Family::a, Family::b, Family::c, Family::d};

FElement mono_poly(const SuperMonomial& m) { return SuperPoly(Rational(1), m); }
UEnvElement u_mono(const SuperMonomial& m) { return UEnvElement(mono_poly(m)); }

HElement h_single(const SuperMonomial& fm, const SuperMonomial& um, const Rational& c) {
    HElement r;
    r.t.add_term({fm, um}, c);
    return r;
}

bool h_term_parity(const Legs& legs) { return legs[0].parity() ^ legs[1].parity(); }

} // namespace

HElement HElement::unit() { return h_single(one_monomial(), one_monomial(), 1); }

HElement HElement::from_f(const FElement& a) {
    HElement r;
    for (const auto& [m, c] : a.terms()) r.t.add_term({m, one_monomial()}, c);
    return r;
}

HElement HElement::from_u(const UEnvElement& h) {
    HElement r;
    for (const auto& [m, c] : h.p.terms()) r.t.add_term({one_monomial(), m}, c);
    return r;
}

HElement HElement::of(const FElement& a, const UEnvElement& h) {
    return h_mul(from_f(a), from_u(h));
}

std::string HElement::str() const {
    if (t.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [legs, c] : t.terms()) {
        Rational x = c;
        if (first) {
            if (x < 0) { s += "-"; x = -x; }
        } else {
            s += (x < 0) ? " - " : " + ";
            if (x < 0) x = -x;
        }
        first = false;
        if (x != 1) s += rat_str(x) + "*";
        s += legs[0].str() + " # " + legs[1].str();
    }
    return s;
}

HElement h_mul(const HElement& p, const HElement& q) {
    HElement out;
    for (const auto& [pl, cp] : p.t.terms()) {
        const SuperMonomial& a = pl[0];
        const SuperMonomial& h = pl[1];
        GradedTensor dh = u_coproduct_mono(h);
        for (const auto& [ql, cq] : q.t.terms()) {
            const SuperMonomial& b = ql[0];
            const SuperMonomial& g = ql[1];
            for (const auto& [hh, ch] : dh.terms()) {
                const SuperMonomial& h1 = hh[0];
                const SuperMonomial& h2 = hh[1];
                int sign = (h2.parity() && b.parity()) ? -1 : 1;
                FElement fpart = mono_poly(a) * act(u_mono(h1), mono_poly(b));
                if (fpart.is_zero()) continue;
                for (const auto& [cu, um] : pbw_mul_mono(h2, g))
                    for (const auto& [fm, cf] : fpart.terms())
                        out.t.add_term({fm, um}, cp * cq * ch * cu * cf * sign);
            }
        }
    }
    return out;
}

GradedTensor h_coproduct(const HElement& p) {
    GradedTensor out(FUFU);
    for (const auto& [pl, cp] : p.t.terms()) {
        const SuperMonomial& a = pl[0];
        const SuperMonomial& h = pl[1];
        GradedTensor da = f_coproduct_mono(a);
        GradedTensor dh = u_coproduct_mono(h);
        for (const auto& [al, ca] : da.terms()) {
            for (const auto& [hl, ch] : dh.terms()) {
                const SuperMonomial& h1 = hl[0];
                const SuperMonomial& h2 = hl[1];
                for (const auto& [nl, cn] : coact_mono(h1).terms()) {
                    const SuperMonomial& h11 = nl[0];
                    const SuperMonomial& h12 = nl[1];
                    int sign = (h11.parity() && al[1].parity()) ? -1 : 1;
                    auto fm = mono_mul(al[1], h12);
                    if (!fm) continue;
                    out.add_term({al[0], h11, fm->second, h2},
                                 cp * ca * ch * cn * fm->first * sign);
                }
            }
        }
    }
    return out;
}

Rational h_counit(const HElement& p) {
    Rational r = 0;
    for (const auto& [legs, c] : p.t.terms())
        if (legs[0].is_one() && legs[1].is_one()) r += c;
    return r;
}

HElement h_antipode(const HElement& p) {
    HElement out;
    for (const auto& [pl, cp] : p.t.terms()) {
        const SuperMonomial& a = pl[0];
        const SuperMonomial& h = pl[1];
        for (const auto& [nl, cn] : coact_mono(h).terms()) {
            const SuperMonomial& h1 = nl[0];
            const SuperMonomial& h2 = nl[1];
            int sign = (h1.parity() && a.parity()) ? -1 : 1;
            FElement ah2 = mono_poly(a) * mono_poly(h2);
            HElement left = HElement::from_u(u_antipode(u_mono(h1)));
            HElement right = HElement::from_f(f_antipode(ah2));
            out += (cp * cn * sign) * h_mul(left, right);
        }
    }
    return out;
}

GradedTensor htensor_mul(const GradedTensor& x, const GradedTensor& y) {
    GradedTensor out(FUFU);
    for (const auto& [xl, cx] : x.terms()) {
        HElement x1 = h_single(xl[0], xl[1], 1);
        HElement x2 = h_single(xl[2], xl[3], 1);
        bool px2 = h_term_parity({xl[2], xl[3]});
        for (const auto& [yl, cy] : y.terms()) {
            HElement y1 = h_single(yl[0], yl[1], 1);
            HElement y2 = h_single(yl[2], yl[3], 1);
            bool py1 = h_term_parity({yl[0], yl[1]});
            int sign = (px2 && py1) ? -1 : 1;
            HElement left = h_mul(x1, y1);
            HElement right = h_mul(x2, y2);
            for (const auto& [ll, cl] : left.t.terms())
                for (const auto& [rl, cr] : right.t.terms())
                    out.add_term({ll[0], ll[1], rl[0], rl[1]}, cx * cy * cl * cr * sign);
        }
    }
    return out;
}

// --- compatibility conditions --------------------------------------------------

namespace {

const std::vector<LegKind> FF2 = {LegKind::F, LegKind::F};

// Delta(h |> a) = (-1)^{|a_(1)|(|h_(1)^(2)|+|h_(2)|)}
//                  h_(1)^(1) |> a_(1) (x) h_(1)^(2) (h_(2) |> a_(2))
std::optional<std::string> check_cond1(const UEnvElement& h, const FElement& a,
                                       const std::string& what) {
    GradedTensor lhs = f_coproduct(act(h, a));
    GradedTensor rhs(FF2);
    GradedTensor da = f_coproduct(a);
    for (const auto& [hl, ch] : u_coproduct(h).terms()) {
        const SuperMonomial& h1 = hl[0];
        const SuperMonomial& h2 = hl[1];
        for (const auto& [nl, cn] : coact_mono(h1).terms()) {
            const SuperMonomial& h11 = nl[0];
            const SuperMonomial& h12 = nl[1];
            bool rho = h12.parity() ^ h2.parity();
            for (const auto& [al, ca] : da.terms()) {
                int sign = (al[0].parity() && rho) ? -1 : 1;
                FElement leg1 = act(u_mono(h11), mono_poly(al[0]));
                if (leg1.is_zero()) continue;
                FElement leg2 = mono_poly(h12) * act(u_mono(h2), mono_poly(al[1]));
                if (leg2.is_zero()) continue;
                rhs += (ch * cn * ca * sign) * tensor_of({leg1, leg2}, FF2);
            }
        }
    }
    return expect_equal(lhs, rhs, what);
}

std::optional<std::string> check_cond2(const UEnvElement& h, const FElement& a,
                                       const std::string& what) {
    Rational lhs = f_counit(act(h, a));
    Rational rhs = u_counit(h) * f_counit(a);
    if (lhs == rhs) return std::nullopt;
    return what + ": eps(h|>a) = " + rat_str(lhs) + ", eps(h)eps(a) = " + rat_str(rhs);
}

// nabla(gh) given by the extension formula for any Sweedler split of g
std::optional<std::string> check_cond3(const UEnvElement& g, const UEnvElement& h,
                                       const std::string& what) {
    return expect_equal(coact(u_mul(g, h)), coact_pair(g, h), what);
}

// (-1)^{|h_(1)||h_(2)^(1)|+|a||h_(2)^(2)|} h_(2)^(1) (x) (h_(1)|>a) h_(2)^(2)
//   = h_(1)^(1) (x) h_(1)^(2) (h_(2)|>a)
std::optional<std::string> check_cond5(const UEnvElement& h, const FElement& a,
                                       const std::string& what) {
    const std::vector<LegKind> UF = {LegKind::U, LegKind::F};
    GradedTensor lhs(UF), rhs(UF);
    for (const auto& [hl, ch] : u_coproduct(h).terms()) {
        const SuperMonomial& h1 = hl[0];
        const SuperMonomial& h2 = hl[1];
        for (const auto& [nl, cn] : coact_mono(h2).terms()) {
            for (const auto& [am, ca] : a.terms()) {
                int sign = ((h1.parity() && nl[0].parity()) ? -1 : 1) *
                           ((am.parity() && nl[1].parity()) ? -1 : 1);
                FElement fleg = act(u_mono(h1), mono_poly(am)) * mono_poly(nl[1]);
                for (const auto& [fm, cf] : fleg.terms())
                    lhs.add_term({nl[0], fm}, ch * cn * ca * cf * sign);
            }
        }
        for (const auto& [nl, cn] : coact_mono(h1).terms()) {
            FElement fleg = mono_poly(nl[1]) * act(u_mono(h2), a);
            for (const auto& [fm, cf] : fleg.terms())
                rhs.add_term({nl[0], fm}, ch * cn * cf);
        }
    }
    return expect_equal(lhs, rhs, what);
}

} // namespace

std::vector<Check> compatibility_checks(int max_index, int samples, std::uint64_t seed) {
    std::vector<Check> checks;

    for (Family lie : kLie) {
        std::string ln = family_info(lie).name;
        checks.push_back({"cond1[" + ln + ",*]", [lie, max_index]() -> std::optional<std::string> {
                              for (Family fam : kFFams)
                                  for (int n = 1; n <= max_index; ++n) {
                                      if (degenerate_value(fam, n) >= 0) continue;
                                      if (auto bad = check_cond1(
                                              UEnvElement::gen(lie), fgen(fam, n),
                                              std::string(family_info(lie).name) + " |> " +
                                                  GeneratorId{fam, n}.str()))
                                          return bad;
                                  }
                              return std::nullopt;
                          }});
        checks.push_back({"cond2[" + ln + ",*]", [lie, max_index]() -> std::optional<std::string> {
                              for (Family fam : kFFams)
                                  for (int n = 1; n <= max_index; ++n)
                                      if (auto bad = check_cond2(
                                              UEnvElement::gen(lie), fgen(fam, n),
                                              std::string(family_info(lie).name) + " |> " +
                                                  GeneratorId{fam, n}.str()))
                                          return bad;
                              return std::nullopt;
                          }});
        checks.push_back({"cond5[" + ln + ",*]", [lie, max_index]() -> std::optional<std::string> {
                              for (Family fam : kFFams)
                                  for (int n = 1; n <= max_index; ++n) {
                                      if (degenerate_value(fam, n) >= 0) continue;
                                      if (auto bad = check_cond5(
                                              UEnvElement::gen(lie), fgen(fam, n),
                                              std::string(family_info(lie).name) + " , " +
                                                  GeneratorId{fam, n}.str()))
                                          return bad;
                                  }
                              return std::nullopt;
                          }});
    }

    for (Family g : kLie)
        for (Family h : kLie) {
            std::string name = "cond3[" + std::string(family_info(g).name) + "," +
                               family_info(h).name + "]";
            checks.push_back({name, [g, h, name]() {
                                  return check_cond3(UEnvElement::gen(g), UEnvElement::gen(h),
                                                     name);
                              }});
        }

    checks.push_back({"cond4[nabla(1)]", []() {
                          return expect_equal(coact(UEnvElement::unit()),
                                              GradedTensor::unit({LegKind::U, LegKind::F}));
                      }});

    checks.push_back({"random-pairs", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed);
                          for (int i = 0; i < samples; ++i) {
                              UEnvElement h = s.u_element();
                              FElement a = s.f_element();
                              std::string what = "sample " + std::to_string(i);
                              if (auto bad = check_cond1(h, a, what)) return bad;
                              if (auto bad = check_cond2(h, a, what)) return bad;
                              if (auto bad = check_cond5(h, a, what)) return bad;
                              UEnvElement g = s.u_element(2);
                              if (auto bad = check_cond3(g, h, what)) return bad;
                          }
                          return std::nullopt;
                      }});

    return checks;
}

Report verify_compatibility(int max_index, int samples, std::uint64_t seed, Exec exec) {
    antipode_table().precompute(max_index + 1);
    return run_checks("compat", compatibility_checks(max_index, samples, seed), exec);
}

// --- Hopf axioms of H ----------------------------------------------------------

namespace {

GradedTensor apply_h_coproduct(const GradedTensor& t4, int pair) {
    std::vector<LegKind> shape6 = {LegKind::F, LegKind::U, LegKind::F,
                                   LegKind::U, LegKind::F, LegKind::U};
    GradedTensor out(shape6);
    for (const auto& [legs, c] : t4.terms()) {
        std::size_t off = pair == 0 ? 0 : 2;
        GradedTensor inner = h_coproduct(h_single(legs[off], legs[off + 1], 1));
        for (const auto& [il, ic] : inner.terms()) {
            Legs out_legs;
            if (pair == 0) {
                out_legs = {il[0], il[1], il[2], il[3], legs[2], legs[3]};
            } else {
                out_legs = {legs[0], legs[1], il[0], il[1], il[2], il[3]};
            }
            out.add_term(out_legs, c * ic);
        }
    }
    return out;
}

std::optional<std::string> check_h_coassoc(const HElement& p, const std::string& what) {
    GradedTensor d = h_coproduct(p);
    return expect_equal(apply_h_coproduct(d, 0), apply_h_coproduct(d, 1), what);
}

std::optional<std::string> check_h_counit(const HElement& p, const std::string& what) {
    GradedTensor d = h_coproduct(p);
    HElement left, right;
    for (const auto& [legs, c] : d.terms()) {
        if (legs[0].is_one() && legs[1].is_one()) left.t.add_term({legs[2], legs[3]}, c);
        if (legs[2].is_one() && legs[3].is_one()) right.t.add_term({legs[0], legs[1]}, c);
    }
    if (auto bad = expect_equal(left, p, what + " (eps x id)D")) return bad;
    return expect_equal(right, p, what + " (id x eps)D");
}

std::optional<std::string> check_h_antipode(const HElement& p, const std::string& what) {
    GradedTensor d = h_coproduct(p);
    HElement lhs, rhs;
    for (const auto& [legs, c] : d.terms()) {
        lhs += c * h_mul(h_antipode(h_single(legs[0], legs[1], 1)), h_single(legs[2], legs[3], 1));
        rhs += c * h_mul(h_single(legs[0], legs[1], 1), h_antipode(h_single(legs[2], legs[3], 1)));
    }
    HElement target = h_counit(p) * HElement::unit();
    if (auto bad = expect_equal(lhs, target, what + " m(S x id)D")) return bad;
    return expect_equal(rhs, target, what + " m(id x S)D");
}

std::optional<std::string> check_h_delta_mult(const HElement& p, const HElement& q,
                                              const std::string& what) {
    return expect_equal(h_coproduct(h_mul(p, q)), htensor_mul(h_coproduct(p), h_coproduct(q)),
                        what);
}

std::vector<HElement> h_generator_set(int max_index) {
    std::vector<HElement> gens;
    for (Family lie : kLie) gens.push_back(HElement::from_u(UEnvElement::gen(lie)));
    for (Family fam : kFFams)
        for (int n = 1; n <= max_index; ++n) {
            if (degenerate_value(fam, n) >= 0) continue;
            gens.push_back(HElement::from_f(fgen(fam, n)));
        }
    return gens;
}

HElement sample_h(Sampler& s) {
    FElement a = s.f_element(4);
    UEnvElement h = s.u_element(2);
    // homogeneous parity for meaningful Koszul checks
    return HElement::of(a, h);
}

} // namespace

std::vector<Check> h_hopf_checks(int max_index, int samples, std::uint64_t seed) {
    std::vector<Check> checks;

    checks.push_back({"golden-products", []() -> std::optional<std::string> {
                          // (1 (x) Y)(a_2 (x) 1) = a_2 (x) 1 + a_2 (x) Y
                          HElement lhs = h_mul(HElement::from_u(UEnvElement::gen(Family::Y)),
                                               HElement::from_f(fgen(Family::a, 2)));
                          HElement rhs = HElement::from_f(fgen(Family::a, 2)) +
                                         HElement::of(fgen(Family::a, 2),
                                                      UEnvElement::gen(Family::Y));
                          if (auto bad = expect_equal(lhs, rhs, "(1#Y)(a2#1)")) return bad;
                          // (1 (x) U)(b_1 (x) 1) = (-2a_2+d_1) (x) 1 - b_1 (x) U
                          HElement lhs2 = h_mul(HElement::from_u(UEnvElement::gen(Family::U)),
                                                HElement::from_f(fgen(Family::b, 1)));
                          HElement rhs2 =
                              HElement::from_f(Rational(-2) * fgen(Family::a, 2) +
                                               fgen(Family::d, 1)) -
                              HElement::of(fgen(Family::b, 1), UEnvElement::gen(Family::U));
                          return expect_equal(lhs2, rhs2, "(1#U)(b1#1)");
                      }});

    checks.push_back({"golden-coproduct[1#X]", []() -> std::optional<std::string> {
                          GradedTensor expect(FUFU);
                          auto one = one_monomial();
                          auto X = gen_monomial(lie_gen(Family::X));
                          expect.add_term({one, X, one, one}, 1);
                          expect.add_term({one, one, one, X}, 1);
                          expect.add_term({one, gen_monomial(lie_gen(Family::Y)),
                                           gen_monomial(GeneratorId{Family::a, 2}), one}, 2);
                          expect.add_term({one, gen_monomial(lie_gen(Family::Z)),
                                           gen_monomial(GeneratorId{Family::d, 1}), one}, 1);
                          expect.add_term({one, gen_monomial(lie_gen(Family::U)),
                                           gen_monomial(GeneratorId{Family::b, 1}), one}, 1);
                          expect.add_term({one, gen_monomial(lie_gen(Family::V)),
                                           gen_monomial(GeneratorId{Family::c, 2}), one}, 2);
                          return expect_equal(
                              h_coproduct(HElement::from_u(UEnvElement::gen(Family::X))),
                              expect);
                      }});

    checks.push_back({"assoc-generators", [max_index]() -> std::optional<std::string> {
                          auto gens = h_generator_set(std::min(max_index, 3));
                          for (std::size_t i = 0; i < gens.size(); ++i)
                              for (std::size_t j = 0; j < gens.size(); j += 3)
                                  for (std::size_t k = 0; k < gens.size(); k += 4) {
                                      const HElement &p = gens[i], &q = gens[j], &r = gens[k];
                                      if (auto bad = expect_equal(
                                              h_mul(h_mul(p, q), r), h_mul(p, h_mul(q, r)),
                                              "associativity"))
                                          return bad;
                                  }
                          return std::nullopt;
                      }});

    for (Family lie : kLie) {
        std::string ln = family_info(lie).name;
        checks.push_back({"hopf[1#" + ln + "]", [lie]() -> std::optional<std::string> {
                              HElement p = HElement::from_u(UEnvElement::gen(lie));
                              std::string what = "1#" + std::string(family_info(lie).name);
                              if (auto bad = check_h_coassoc(p, what)) return bad;
                              if (auto bad = check_h_counit(p, what)) return bad;
                              if (auto bad = check_h_antipode(p, what)) return bad;
                              return std::nullopt;
                          }});
    }
    for (Family fam : kFFams)
        for (int n = 1; n <= max_index; ++n) {
            if (degenerate_value(fam, n) >= 0) continue;
            GeneratorId id{fam, n};
            checks.push_back({"hopf[" + id.str() + "#1]", [fam, n, id]() -> std::optional<std::string> {
                                  HElement p = HElement::from_f(fgen(fam, n));
                                  if (auto bad = check_h_coassoc(p, id.str())) return bad;
                                  if (auto bad = check_h_counit(p, id.str())) return bad;
                                  if (auto bad = check_h_antipode(p, id.str())) return bad;
                                  return std::nullopt;
                              }});
        }

    checks.push_back({"delta-mult-generators", [max_index]() -> std::optional<std::string> {
                          auto gens = h_generator_set(std::min(max_index, 4));
                          for (std::size_t i = 0; i < gens.size(); ++i)
                              for (std::size_t j = 0; j < gens.size(); j += 2)
                                  if (auto bad = check_h_delta_mult(
                                          gens[i], gens[j], "generator pair"))
                                      return bad;
                          return std::nullopt;
                      }});

    checks.push_back({"random-hopf", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed + 11);
                          for (int i = 0; i < samples; ++i) {
                              HElement p = sample_h(s);
                              std::string what = "sample " + std::to_string(i);
                              if (auto bad = check_h_coassoc(p, what)) return bad;
                              if (auto bad = check_h_counit(p, what)) return bad;
                              if (auto bad = check_h_antipode(p, what)) return bad;
                          }
                          return std::nullopt;
                      }});

    checks.push_back({"random-assoc-mult", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed + 13);
                          for (int i = 0; i < samples; ++i) {
                              HElement p = sample_h(s), q = sample_h(s), r = sample_h(s);
                              std::string what = "sample " + std::to_string(i);
                              if (auto bad = expect_equal(h_mul(h_mul(p, q), r),
                                                          h_mul(p, h_mul(q, r)),
                                                          what + " associativity"))
                                  return bad;
                              if (auto bad = check_h_delta_mult(p, q, what + " Delta mult"))
                                  return bad;
                          }
                          return std::nullopt;
                      }});

    return checks;
}

Report verify_h_hopf(int max_index, int samples, std::uint64_t seed, Exec exec) {
    antipode_table().precompute(max_index + 1);
    return run_checks("hopf", h_hopf_checks(max_index, samples, seed), exec);
}

// --- classical quotient ---------------------------------------------------------

bool in_classical_kernel(const SuperMonomial& m) {
    auto killed = [](Family f) {
        return f == Family::b || f == Family::c || f == Family::d || f == Family::Z ||
               f == Family::U || f == Family::V || f == Family::W;
    };
    for (const auto& [g, e] : m.even)
        if (killed(g.fam)) return true;
    for (const auto& g : m.odd)
        if (killed(g.fam)) return true;
    return false;
}

FElement classical_quotient_f(const FElement& x) {
    FElement r;
    for (const auto& [m, c] : x.terms())
        if (!in_classical_kernel(m)) r.add_term(m, c);
    return r;
}

HElement classical_quotient_h(const HElement& x) {
    return HElement(classical_quotient_tensor(x.t));
}

GradedTensor classical_quotient_tensor(const GradedTensor& t) {
    GradedTensor r(t.shape());
    for (const auto& [legs, c] : t.terms()) {
        bool kernel = false;
        for (const auto& l : legs)
            if (in_classical_kernel(l)) { kernel = true; break; }
        if (!kernel) r.add_term(legs, c);
    }
    return r;
}

FElement lambda_antipode(int n_plus_1) {
    int n = n_plus_1 - 1;
    if (n < 1) throw std::invalid_argument("lambda_antipode needs index >= 2");
    FElement out;
    std::vector<int> cvec(static_cast<std::size_t>(n_plus_1) + 1, 0); // c_1..c_{n+1}
    std::function<void(int, int, int)> enumerate = [&](int j, int csum, int jcsum) {
        if (csum > n || jcsum > 2 * n) return;
        if (j > n_plus_1) {
            if (csum != n || jcsum != 2 * n) return;
            Int num = factorial(2 * n - cvec[1]) * factorial(cvec[1]);
            Int den = factorial(n + 1);
            for (int i = 1; i <= n_plus_1; ++i) den *= factorial(cvec[static_cast<std::size_t>(i)]);
            Rational coeff(num, den);
            if ((n - cvec[1]) % 2 != 0) coeff = -coeff;
            FElement mono = SuperPoly::one();
            for (int i = 2; i <= n_plus_1; ++i)
                for (int k = 0; k < cvec[static_cast<std::size_t>(i)]; ++k)
                    mono *= fgen(Family::a, i);
            out += coeff * mono;
            return;
        }
        for (int c = 0; c + csum <= n && j * c + jcsum <= 2 * n; ++c) {
            cvec[static_cast<std::size_t>(j)] = c;
            enumerate(j + 1, csum + c, jcsum + j * c);
        }
        cvec[static_cast<std::size_t>(j)] = 0;
    };
    enumerate(1, 0, 0);
    return out;
}

std::vector<Check> classical_checks(int max_n) {
    std::vector<Check> checks;

    auto Xh = HElement::from_u(UEnvElement::gen(Family::X));
    auto Yh = HElement::from_u(UEnvElement::gen(Family::Y));
    auto deltas = std::make_shared<std::vector<HElement>>(); // deltas[n] = delta_n, 1-based
    deltas->push_back(HElement::zero());
    deltas->push_back(HElement::from_f(Rational(2) * fgen(Family::a, 2)));
    for (int n = 1; n <= max_n; ++n) deltas->push_back(h_commutator(Xh, deltas->back()));

    checks.push_back({"[Y^,X^]=X^", [Xh, Yh]() { return expect_equal(h_commutator(Yh, Xh), Xh); }});

    for (int n = 1; n <= max_n; ++n)
        checks.push_back({"[Y^,delta_" + std::to_string(n) + "]", [Yh, deltas, n]() {
                              return expect_equal(h_commutator(Yh, (*deltas)[static_cast<std::size_t>(n)]),
                                                  Rational(n) * (*deltas)[static_cast<std::size_t>(n)]);
                          }});

    checks.push_back({"[delta_m,delta_n]=0", [deltas, max_n]() -> std::optional<std::string> {
                          for (int m = 1; m <= max_n; ++m)
                              for (int n = 1; n <= max_n; ++n) {
                                  HElement c = h_commutator((*deltas)[static_cast<std::size_t>(m)],
                                                            (*deltas)[static_cast<std::size_t>(n)]);
                                  if (!c.is_zero())
                                      return "[delta_" + std::to_string(m) + ",delta_" +
                                             std::to_string(n) + "] = " + c.str();
                              }
                          return std::nullopt;
                      }});

    checks.push_back({"quotient-Delta(X^)", [Xh, deltas]() {
                          GradedTensor lhs = classical_quotient_tensor(h_coproduct(Xh));
                          GradedTensor rhs(FUFU);
                          auto one = one_monomial();
                          auto X = gen_monomial(lie_gen(Family::X));
                          auto Y = gen_monomial(lie_gen(Family::Y));
                          rhs.add_term({one, X, one, one}, 1);
                          rhs.add_term({one, one, one, X}, 1);
                          rhs.add_term({one, Y, gen_monomial(GeneratorId{Family::a, 2}), one}, 2);
                          return expect_equal(lhs, rhs, "Delta(X^) mod kernel");
                      }});

    checks.push_back({"Delta(delta_1)-primitive", [deltas]() {
                          const HElement& d1 = (*deltas)[1];
                          GradedTensor lhs = classical_quotient_tensor(h_coproduct(d1));
                          GradedTensor rhs(FUFU);
                          auto one = one_monomial();
                          auto a2 = gen_monomial(GeneratorId{Family::a, 2});
                          rhs.add_term({a2, one, one, one}, 2);
                          rhs.add_term({one, one, a2, one}, 2);
                          return expect_equal(lhs, rhs, "Delta(delta_1)");
                      }});

    checks.push_back({"kernel-hopf-ideal", [max_n]() -> std::optional<std::string> {
                          std::vector<HElement> kernel_gens;
                          for (int n = 1; n <= max_n + 1; ++n) {
                              for (Family f : {Family::b, Family::c, Family::d}) {
                                  if (degenerate_value(f, n) >= 0) continue;
                                  kernel_gens.push_back(HElement::from_f(fgen(f, n)));
                              }
                          }
                          for (Family f : {Family::Z, Family::U, Family::V, Family::W})
                              kernel_gens.push_back(HElement::from_u(UEnvElement::gen(f)));
                          for (const auto& g : kernel_gens)
                              for (const auto& [legs, c] : h_coproduct(g).terms()) {
                                  bool left = in_classical_kernel(legs[0]) ||
                                              in_classical_kernel(legs[1]);
                                  bool right = in_classical_kernel(legs[2]) ||
                                               in_classical_kernel(legs[3]);
                                  if (!left && !right)
                                      return "Delta(" + g.str() +
                                             ") has kernel-free term " + legs[0].str() + " # " +
                                             legs[1].str() + " (x) " + legs[2].str() + " # " +
                                             legs[3].str();
                              }
                          return std::nullopt;
                      }});

    checks.push_back({"lambda[S(a2)]", []() {
                          return expect_equal(lambda_antipode(2), -fgen(Family::a, 2));
                      }});
    checks.push_back({"lambda[S(a3)]", []() {
                          FElement expect = -fgen(Family::a, 3) +
                                            Rational(2) * fgen(Family::a, 2) * fgen(Family::a, 2);
                          return expect_equal(lambda_antipode(3), expect);
                      }});
    checks.push_back({"lambda[S(a4)]", []() {
                          FElement a2 = fgen(Family::a, 2);
                          FElement expect = -fgen(Family::a, 4) +
                                            Rational(5) * a2 * fgen(Family::a, 3) -
                                            Rational(5) * a2 * a2 * a2;
                          return expect_equal(lambda_antipode(4), expect);
                      }});

    for (int m = 2; m <= max_n + 1; ++m) {
        checks.push_back({"lambda-vs-quotient[a" + std::to_string(m) + "]", [m]() {
                              return expect_equal(classical_quotient_f(f_antipode(fgen(Family::a, m))),
                                                  lambda_antipode(m), "S(a_" + std::to_string(m) + ")");
                          }});
        checks.push_back({"lambda-vs-jet-reversion[a" + std::to_string(m) + "]", [m, max_n]() {
                              return expect_equal(oracle_classical_antipode(m, max_n + 1),
                                                  lambda_antipode(m),
                                                  "a_" + std::to_string(m) + "(phi^{-1})");
                          }});
    }

    return checks;
}

Report classical_check(int max_n, Exec exec) {
    if (max_n < 2) throw std::invalid_argument("classical_check requires max_n >= 2");
    antipode_table().precompute(max_n + 1);
    return run_checks("classical", classical_checks(max_n), exec);
}

} // namespace hs1
