#include "hs1/action.hpp"

#include "hs1/sampling.hpp"

namespace hs1 {

namespace {

constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                            Family::U, Family::V, Family::W};
constexpr Family kFFams[4] = {Family::a, Family::b, Family::c, Family::d};

} // namespace

FElement act_gen(Family lie, Family fam, int n) {
    using F = Family;
    auto g = [](Family f, int k) { return fgen(f, k); };
    Rational N(n);
    switch (lie) {
    case F::X:
        switch (fam) {
        case F::a: return (N + 1) * g(F::a, n + 1) - Rational(2) * g(F::a, n) * g(F::a, 2) -
                          g(F::b, 1) * g(F::c, n);
        case F::b: return (N + 1) * g(F::b, n + 1) - Rational(2) * g(F::b, n) * g(F::a, 2) -
                          g(F::b, 1) * g(F::d, n);
        case F::c: return Rational(-2) * g(F::c, 2) * g(F::a, n) + (N + 1) * g(F::c, n + 1) -
                          g(F::c, n) * g(F::d, 1);
        case F::d: return Rational(-2) * g(F::c, 2) * g(F::b, n) + (N + 1) * g(F::d, n + 1) -
                          g(F::d, n) * g(F::d, 1);
        default: break;
        }
        break;
    case F::Y:
        switch (fam) {
        case F::a: return (N - 1) * g(F::a, n);
        case F::b: return (N - 1) * g(F::b, n);
        case F::c: return N * g(F::c, n);
        case F::d: return N * g(F::d, n);
        default: break;
        }
        break;
    case F::Z:
        switch (fam) {
        case F::a: return FElement();
        case F::b: return g(F::b, n);
        case F::c: return -g(F::c, n);
        case F::d: return FElement();
        default: break;
        }
        break;
    case F::U:
        switch (fam) {
        case F::a: return g(F::c, n);
        case F::b: return -(N + 1) * g(F::a, n + 1) + g(F::d, n);
        case F::c: return FElement();
        case F::d: return (N + 1) * g(F::c, n + 1);
        default: break;
        }
        break;
    case F::V:
        switch (fam) {
        case F::a: return g(F::b, n - 1);
        case F::b: return FElement();
        case F::c: return g(F::a, n) - g(F::d, n - 1);
        case F::d: return g(F::b, n);
        default: break;
        }
        break;
    case F::W:
        switch (fam) {
        case F::a: return -g(F::b, 1) * g(F::a, n) + g(F::b, n);
        case F::b: return -g(F::b, 1) * g(F::b, n);
        case F::c: return g(F::d, 1) * g(F::a, n) - g(F::d, n);
        case F::d: return g(F::d, 1) * g(F::b, n);
        default: break;
        }
        break;
    default: break;
    }
    throw std::invalid_argument("act_gen: bad generator pair");
}

namespace {

// Leibniz step over a fixed left-associated factorization:
// g |> (f * rest) = (g |> f) rest + (-1)^{|f||g|} f (g |> rest)
FElement act_lie_factors(Family lie, const std::vector<GeneratorId>& factors, std::size_t from) {
    if (from == factors.size()) return FElement(); // g |> 1 = eps(g) = 0
    GeneratorId f = factors[from];
    FElement head = act_gen(lie, f.fam, f.idx);
    FElement rest = SuperPoly::one();
    for (std::size_t i = from + 1; i < factors.size(); ++i)
        rest *= SuperPoly::gen(factors[i]);
    FElement out = head * rest;
    int sign = (f.odd() && is_odd(lie)) ? -1 : 1;
    out += Rational(sign) * (SuperPoly::gen(f) * act_lie_factors(lie, factors, from + 1));
    return out;
}

std::vector<GeneratorId> factor_list(const SuperMonomial& m) {
    std::vector<GeneratorId> fs;
    for (const auto& [g, e] : m.even) {
        if (e < 0) throw std::invalid_argument("action on Laurent monomial");
        for (int k = 0; k < e; ++k) fs.push_back(g);
    }
    for (const auto& g : m.odd) fs.push_back(g);
    return fs;
}

} // namespace

FElement act_lie(Family lie, const FElement& x) {
    FElement r;
    for (const auto& [m, c] : x.terms()) r += c * act_lie_factors(lie, factor_list(m), 0);
    return r;
}

FElement act(const UEnvElement& h, const FElement& x) {
    FElement r;
    for (const auto& [m, c] : h.p.terms()) {
        LieWord w = word_of_monomial(m);
        FElement acc = x;
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = act_lie(*it, acc);
        r += c * acc;
    }
    return r;
}

// --- verification ------------------------------------------------------------

namespace {

std::optional<std::string> check_bracket_consistency(Family g, Family h, Family fam, int n) {
    FElement x = fgen(fam, n);
    if (x.is_zero() || x.constant_term() != 0) return std::nullopt; // degenerate index
    FElement lhs = act(bracket_element(g, h), x);
    int sign = (is_odd(g) && is_odd(h)) ? -1 : 1;
    FElement rhs = act_lie(g, act_lie(h, x)) - Rational(sign) * act_lie(h, act_lie(g, x));
    return expect_equal(lhs, rhs, "[" + std::string(family_info(g).name) + "," +
                                      family_info(h).name + "] |> " +
                                      GeneratorId{fam, n}.str());
}

// h |> (xy) = (-1)^{|x||h_(2)|} (h_(1) |> x)(h_(2) |> y)
std::optional<std::string> check_module_algebra_law(const UEnvElement& h, const FElement& x,
                                                    const FElement& y, const std::string& what) {
    FElement lhs = act(h, x * y);
    FElement rhs;
    bool px = x.parity();
    for (const auto& [legs, c] : u_coproduct(h).terms()) {
        UEnvElement h1(SuperPoly(Rational(1), legs[0]));
        UEnvElement h2(SuperPoly(Rational(1), legs[1]));
        int sign = (px && legs[1].parity()) ? -1 : 1;
        rhs += (c * sign) * (act(h1, x) * act(h2, y));
    }
    return expect_equal(lhs, rhs, what);
}

} // namespace

std::vector<Check> action_checks(int max_index, int samples, std::uint64_t seed) {
    std::vector<Check> checks;

    // all 21 unordered generator pairs, every table family, indices <= max_index
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            Family g = kLie[i], h = kLie[j];
            checks.push_back(
                {"bracket[" + std::string(family_info(g).name) + "," + family_info(h).name +
                     "]",
                 [g, h, max_index]() -> std::optional<std::string> {
                     for (Family fam : kFFams)
                         for (int n = 1; n <= max_index; ++n)
                             if (auto bad = check_bracket_consistency(g, h, fam, n)) return bad;
                     return std::nullopt;
                 }});
        }

    checks.push_back({"Y-diagonal-weight", [max_index]() -> std::optional<std::string> {
                          for (Family fam : kFFams)
                              for (int n = 1; n <= max_index; ++n) {
                                  FElement x = fgen(fam, n);
                                  if (degenerate_value(fam, n) >= 0) continue;
                                  GeneratorId id{fam, n};
                                  if (auto bad = expect_equal(
                                          act_lie(Family::Y, x), Rational(id.weight()) * x,
                                          "Y |> " + id.str()))
                                      return bad;
                              }
                          return std::nullopt;
                      }});

    checks.push_back({"Z-diagonal-charge", [max_index]() -> std::optional<std::string> {
                          for (Family fam : kFFams)
                              for (int n = 1; n <= max_index; ++n) {
                                  FElement x = fgen(fam, n);
                                  if (degenerate_value(fam, n) >= 0) continue;
                                  GeneratorId id{fam, n};
                                  if (auto bad = expect_equal(
                                          act_lie(Family::Z, x), Rational(id.bc_charge()) * x,
                                          "Z |> " + id.str()))
                                      return bad;
                              }
                          return std::nullopt;
                      }});

    checks.push_back({"counit-compat", [max_index, samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed + 7);
                          for (int i = 0; i < samples; ++i) {
                              UEnvElement h = s.u_element();
                              FElement x = s.f_element();
                              Rational lhs = f_counit(act(h, x));
                              Rational rhs = u_counit(h) * f_counit(x);
                              if (lhs != rhs)
                                  return "eps(h|>a) = " + rat_str(lhs) + " but eps(h)eps(a) = " +
                                         rat_str(rhs);
                          }
                          (void)max_index;
                          return std::nullopt;
                      }});

    checks.push_back({"module-algebra-law", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed);
                          for (int i = 0; i < samples; ++i) {
                              UEnvElement h = s.u_element();
                              FElement x = s.f_element(4), y = s.f_element(4);
                              if (auto bad = check_module_algebra_law(
                                      h, x, y, "sample " + std::to_string(i)))
                                  return bad;
                          }
                          return std::nullopt;
                      }});

    checks.push_back({"act-unit", []() -> std::optional<std::string> {
                          for (Family g : kLie) {
                              FElement lhs = act(UEnvElement::gen(g), SuperPoly::one());
                              if (!lhs.is_zero())
                                  return std::string(family_info(g).name) + " |> 1 = " +
                                         lhs.str();
                          }
                          return std::nullopt;
                      }});

    return checks;
}

Report verify_module_algebra(int max_index, int samples, std::uint64_t seed, Exec exec) {
    return run_checks("action", action_checks(max_index, samples, seed), exec);
}

} // namespace hs1
