#include "hs1/uenv.hpp"

#include "hs1/sampling.hpp"

#include <deque>

namespace hs1 {

namespace {

constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                            Family::U, Family::V, Family::W};

int lie_rank(Family f) { return static_cast<int>(f) - static_cast<int>(Family::X); }

struct BracketEntry {
    Family g, h;
    std::vector<std::pair<Rational, Family>> value;
};

// Upper triangle of the relation table in the order X<Y<Z<U<V<W.
const std::vector<BracketEntry>& bracket_table() {
    using F = Family;
    static const std::vector<BracketEntry> table = {
        {F::X, F::Y, {{-1, F::X}}},          // [Y,X] = X
        {F::X, F::Z, {}},
        {F::X, F::U, {}},
        {F::X, F::V, {{-1, F::W}}},
        {F::X, F::W, {}},
        {F::Y, F::Z, {}},
        {F::Y, F::U, {{1, F::U}}},
        {F::Y, F::V, {{-1, F::V}}},
        {F::Y, F::W, {}},
        {F::Z, F::U, {{-1, F::U}}},
        {F::Z, F::V, {{1, F::V}}},
        {F::Z, F::W, {{1, F::W}}},
        {F::U, F::V, {{-1, F::Y}, {-1, F::Z}}},
        {F::U, F::W, {{-1, F::X}}},
        {F::V, F::W, {}},
    };
    return table;
}

UEnvElement from_terms(const std::vector<std::pair<Rational, Family>>& terms,
                       const Rational& scale) {
    UEnvElement r;
    for (const auto& [c, f] : terms) r += (c * scale) * UEnvElement::gen(f);
    return r;
}

// [g, x] for x a linear combination of generators
UEnvElement bracket_with(Family g, const UEnvElement& x) {
    UEnvElement r;
    for (const auto& [m, c] : x.p.terms()) {
        LieWord w = word_of_monomial(m);
        if (w.size() != 1) throw std::invalid_argument("bracket argument not a generator");
        r += c * bracket_element(g, w[0]);
    }
    return r;
}

} // namespace

std::vector<std::pair<Rational, Family>> bracket_terms(Family g, Family h) {
    if (!is_lie(g) || !is_lie(h)) throw std::invalid_argument("not Lie generators");
    if (g == h) return {};
    bool flip = lie_rank(g) > lie_rank(h);
    Family lo = flip ? h : g, hi = flip ? g : h;
    for (const auto& e : bracket_table()) {
        if (e.g == lo && e.h == hi) {
            auto v = e.value;
            if (flip) {
                // [g,h] = -(-1)^{|g||h|} [h,g]
                Rational s = (is_odd(g) && is_odd(h)) ? 1 : -1;
                for (auto& [c, f] : v) c *= s;
            }
            return v;
        }
    }
    throw std::logic_error("bracket table miss");
}

UEnvElement bracket_element(Family g, Family h) {
    return from_terms(bracket_terms(g, h), 1);
}

LieWord word_of_monomial(const SuperMonomial& m) {
    LieWord w;
    for (const auto& [g, e] : m.even) {
        if (!is_lie(g.fam) || e < 0) throw std::invalid_argument("not a PBW monomial");
        for (int k = 0; k < e; ++k) w.push_back(g.fam);
    }
    for (const auto& g : m.odd) {
        if (!is_lie(g.fam)) throw std::invalid_argument("not a PBW monomial");
        w.push_back(g.fam);
    }
    return w;
}

namespace {

SuperMonomial monomial_of_normal_word(const LieWord& w) {
    std::vector<std::pair<GeneratorId, int>> factors;
    factors.reserve(w.size());
    for (Family f : w) factors.push_back({lie_gen(f), 1});
    auto n = normalize_monomial(factors);
    if (!n || n->first != 1) throw std::logic_error("normal word not canonical");
    return n->second;
}

} // namespace

UEnvElement pbw_normalize(const LieWord& word, PbwStrategy strategy) {
    UEnvElement out;
    std::deque<std::pair<Rational, LieWord>> work;
    work.push_back({1, word});
    while (!work.empty()) {
        auto [coeff, w] = std::move(work.front());
        work.pop_front();
        if (coeff == 0) continue;
        // locate a rewrite position
        long pos = -1;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            bool inversion = lie_rank(w[i]) > lie_rank(w[i + 1]);
            bool odd_square = w[i] == w[i + 1] && is_odd(w[i]);
            if (inversion || odd_square) {
                pos = static_cast<long>(i);
                if (strategy == PbwStrategy::leftmost) break;
            }
        }
        if (pos < 0) {
            out.p.add_term(monomial_of_normal_word(w), coeff);
            continue;
        }
        auto i = static_cast<std::size_t>(pos);
        Family g = w[i], h = w[i + 1];
        if (g == h) {
            // gg = (1/2)[g,g] for odd g
            for (const auto& [c, k] : bracket_terms(g, h)) {
                LieWord nw(w.begin(), w.begin() + static_cast<long>(i));
                nw.push_back(k);
                nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                work.push_back({coeff * c / 2, std::move(nw)});
            }
            continue;
        }
        // gh = (-1)^{|g||h|} hg + [g,h]
        Rational swap_sign = (is_odd(g) && is_odd(h)) ? -1 : 1;
        LieWord sw = w;
        std::swap(sw[i], sw[i + 1]);
        work.push_back({coeff * swap_sign, std::move(sw)});
        for (const auto& [c, k] : bracket_terms(g, h)) {
            LieWord nw(w.begin(), w.begin() + static_cast<long>(i));
            nw.push_back(k);
            nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            work.push_back({coeff * c, std::move(nw)});
        }
    }
    return out;
}

std::vector<std::pair<Rational, SuperMonomial>> pbw_mul_mono(const SuperMonomial& x,
                                                             const SuperMonomial& y) {
    LieWord w = word_of_monomial(x);
    LieWord wy = word_of_monomial(y);
    w.insert(w.end(), wy.begin(), wy.end());
    UEnvElement e = pbw_normalize(w);
    std::vector<std::pair<Rational, SuperMonomial>> r;
    r.reserve(e.p.term_count());
    for (const auto& [m, c] : e.p.terms()) r.push_back({c, m});
    return r;
}

UEnvElement u_mul(const UEnvElement& x, const UEnvElement& y) {
    UEnvElement r;
    for (const auto& [mx, cx] : x.p.terms())
        for (const auto& [my, cy] : y.p.terms())
            for (const auto& [c, m] : pbw_mul_mono(mx, my)) r.p.add_term(m, cx * cy * c);
    return r;
}

GradedTensor u_coproduct_mono(const SuperMonomial& m) {
    const std::vector<LegKind> uu = {LegKind::U, LegKind::U};
    GradedTensor t = GradedTensor::unit(uu);
    for (Family f : word_of_monomial(m)) {
        GradedTensor prim(uu);
        prim.add_term({gen_monomial(lie_gen(f)), one_monomial()}, 1);
        prim.add_term({one_monomial(), gen_monomial(lie_gen(f))}, 1);
        t = tensor_mul(t, prim);
    }
    return t;
}

GradedTensor u_coproduct(const UEnvElement& x) {
    GradedTensor r({LegKind::U, LegKind::U});
    for (const auto& [m, c] : x.p.terms()) r += c * u_coproduct_mono(m);
    return r;
}

Rational u_counit(const UEnvElement& x) { return x.p.constant_term(); }

UEnvElement u_antipode(const UEnvElement& x) {
    UEnvElement r;
    for (const auto& [m, c] : x.p.terms()) {
        LieWord w = word_of_monomial(m);
        std::size_t odd = m.odd.size();
        // S(g_1...g_k) = (-1)^k (-1)^{C(odd,2)} g_k...g_1
        int sign = (w.size() % 2 == 0) ? 1 : -1;
        if ((odd * (odd - 1) / 2) % 2 != 0) sign = -sign;
        LieWord rev(w.rbegin(), w.rend());
        r += (c * sign) * pbw_normalize(rev);
    }
    return r;
}

// --- verification ------------------------------------------------------------

namespace {

GradedTensor u_tensor1(const UEnvElement& x) { return tensor_of({x.p}, {LegKind::U}); }

UEnvElement u_of_tensor1(const GradedTensor& t) {
    UEnvElement r;
    for (const auto& [legs, c] : t.terms()) r.p.add_term(legs[0], c);
    return r;
}

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

std::optional<std::string> check_jacobi(Family g, Family h, Family k) {
    auto sgn = [](Family p, Family q) { return (is_odd(p) && is_odd(q)) ? -1 : 1; };
    UEnvElement sum = sgn(g, k) * bracket_with(g, bracket_element(h, k)) +
                      sgn(h, g) * bracket_with(h, bracket_element(k, g)) +
                      sgn(k, h) * bracket_with(k, bracket_element(g, h));
    if (sum.is_zero()) return std::nullopt;
    return "jacobi sum = " + sum.str();
}

} // namespace

std::vector<Check> u_checks(int sample_count, std::uint64_t seed) {
    std::vector<Check> checks;

    for (Family g : kLie)
        for (Family h : kLie) {
            checks.push_back({"antisymmetry[" + std::string(family_info(g).name) + "," +
                                  family_info(h).name + "]",
                              [g, h]() {
                                  Rational s = (is_odd(g) && is_odd(h)) ? 1 : -1;
                                  return expect_equal(bracket_element(g, h),
                                                      s * bracket_element(h, g));
                              }});
            checks.push_back({"pbw-bracket[" + std::string(family_info(g).name) + "," +
                                  family_info(h).name + "]",
                              [g, h]() {
                                  UEnvElement gg = UEnvElement::gen(g);
                                  UEnvElement hh = UEnvElement::gen(h);
                                  Rational s = (is_odd(g) && is_odd(h)) ? -1 : 1;
                                  UEnvElement lhs = u_mul(gg, hh) - s * u_mul(hh, gg);
                                  return expect_equal(lhs, bracket_element(g, h));
                              }});
        }

    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b)
            for (int c = b; c < 6; ++c) {
                Family g = kLie[a], h = kLie[b], k = kLie[c];
                checks.push_back({"jacobi[" + std::string(family_info(g).name) + "," +
                                      family_info(h).name + "," + family_info(k).name + "]",
                                  [g, h, k]() { return check_jacobi(g, h, k); }});
            }

    checks.push_back({"pbw-confluence", [sample_count, seed]() -> std::optional<std::string> {
                          Sampler s(seed);
                          for (int i = 0; i < sample_count; ++i) {
                              LieWord w = s.lie_word(1 + s.uniform(8));
                              UEnvElement l = pbw_normalize(w, PbwStrategy::leftmost);
                              UEnvElement r = pbw_normalize(w, PbwStrategy::rightmost);
                              if (auto bad = expect_equal(l, r)) return bad;
                          }
                          return std::nullopt;
                      }});

    checks.push_back({"pbw-idempotent", [sample_count, seed]() -> std::optional<std::string> {
                          Sampler s(seed + 1);
                          for (int i = 0; i < sample_count; ++i) {
                              LieWord w = s.lie_word(1 + s.uniform(6));
                              UEnvElement n = pbw_normalize(w);
                              UEnvElement again;
                              for (const auto& [m, c] : n.p.terms())
                                  again += c * pbw_normalize(word_of_monomial(m));
                              if (auto bad = expect_equal(n, again)) return bad;
                          }
                          return std::nullopt;
                      }});

    const std::vector<LegKind> uu = {LegKind::U, LegKind::U};
    const std::vector<LegKind> u1 = {LegKind::U};
    auto delta_mono = [](const SuperMonomial& m) { return u_coproduct_mono(m); };

    checks.push_back({"coassociativity(deg<=4)", [delta_mono, uu]() -> std::optional<std::string> {
                          for (const auto& m : pbw_monomials_up_to(4)) {
                              GradedTensor d = u_coproduct_mono(m);
                              GradedTensor l = apply_leg(d, 0, delta_mono, uu);
                              GradedTensor r = apply_leg(d, 1, delta_mono, uu);
                              if (auto bad = expect_equal(l, r, "monomial " + m.str()))
                                  return bad;
                          }
                          return std::nullopt;
                      }});

    checks.push_back({"antipode-axiom(deg<=4)", [u1]() -> std::optional<std::string> {
                          auto s_mono = [u1](const SuperMonomial& m) {
                              UEnvElement x(SuperPoly(Rational(1), m));
                              return tensor_of({u_antipode(x).p}, u1);
                          };
                          for (const auto& m : pbw_monomials_up_to(4)) {
                              UEnvElement x(SuperPoly(Rational(1), m));
                              GradedTensor d = u_coproduct_mono(m);
                              UEnvElement lhs =
                                  u_of_tensor1(merge_legs(apply_leg(d, 0, s_mono, u1), 0));
                              UEnvElement rhs = u_counit(x) * UEnvElement::unit();
                              if (auto bad = expect_equal(lhs, rhs, "m(S x id)D " + m.str()))
                                  return bad;
                              UEnvElement lhs2 =
                                  u_of_tensor1(merge_legs(apply_leg(d, 1, s_mono, u1), 0));
                              if (auto bad = expect_equal(lhs2, rhs, "m(id x S)D " + m.str()))
                                  return bad;
                          }
                          return std::nullopt;
                      }});

    return checks;
}

Report verify_u(int sample_count, std::uint64_t seed, Exec exec) {
    return run_checks("u", u_checks(sample_count, seed), exec);
}

} // namespace hs1
