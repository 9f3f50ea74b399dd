#include "hs1/ffun.hpp"

#include "hs1/sampling.hpp"

#include <mutex>

namespace hs1 {

namespace {

const std::vector<LegKind> FF = {LegKind::F, LegKind::F};
const std::vector<LegKind> F1 = {LegKind::F};

constexpr Family kFFams[4] = {Family::a, Family::b, Family::c, Family::d};

void check_index(int n) {
    if (n < 0 || n > kMaxGeneratorIndex)
        throw std::out_of_range("generator index " + std::to_string(n) +
                                " exceeds configured bound");
}

GradedTensor f_tensor1(const FElement& x) { return tensor_of({x}, F1); }

FElement f_of_tensor1(const GradedTensor& t) {
    FElement r;
    for (const auto& [legs, c] : t.terms()) r.add_term(legs[0], c);
    return r;
}

} // namespace

FElement fgen(Family fam, int n) {
    check_index(n);
    int dv = degenerate_value(fam, n);
    if (dv >= 0) return FElement(Rational(dv));
    return SuperPoly::gen(GeneratorId{fam, n});
}

FElement composition_sum(int n, int k) {
    // P(n,k) = sum over ordered l_1+...+l_k = n, l_i >= 1, of a_{l_1}...a_{l_k}
    static std::map<std::pair<int, int>, FElement> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::function<const FElement&(int, int)> rec = [&](int n_, int k_) -> const FElement& {
        auto it = memo.find({n_, k_});
        if (it != memo.end()) return it->second;
        FElement r;
        if (k_ == 0) {
            if (n_ == 0) r = SuperPoly::one();
        } else if (n_ >= k_) {
            for (int l = 1; l <= n_ - k_ + 1; ++l) r += fgen(Family::a, l) * rec(n_ - l, k_ - 1);
        }
        return memo.emplace(std::make_pair(n_, k_), std::move(r)).first->second;
    };
    return rec(n, k);
}

namespace {

GradedTensor coproduct_generator_uncached(Family fam, int n) {
    GradedTensor t(FF);
    auto add = [&t](const Rational& c, const FElement& l, const FElement& r) {
        t += c * tensor_of({l, r}, FF);
    };
    switch (fam) {
    case Family::a:
        // sum_k a_k (x) P(n,k) + sum_i sum_k b_k (x) P(i,k) c_{n-i}
        for (int k = 1; k <= n; ++k) add(1, fgen(Family::a, k), composition_sum(n, k));
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= i; ++k)
                add(1, fgen(Family::b, k), composition_sum(i, k) * fgen(Family::c, n - i));
        break;
    case Family::b:
        add(1, SuperPoly::one(), fgen(Family::b, n));
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= i; ++k) {
                add(k + 1, fgen(Family::a, k + 1),
                    composition_sum(i, k) * fgen(Family::b, n - i));
                add(1, fgen(Family::b, k), composition_sum(i, k) * fgen(Family::d, n - i));
            }
        for (int i = 1; i <= n; ++i) {
            add(-1, fgen(Family::b, 1), fgen(Family::b, i) * fgen(Family::c, n - i));
            for (int j = 1; j <= i; ++j)
                for (int k = 1; k <= j; ++k)
                    add(-(k + 1), fgen(Family::b, k + 1),
                        composition_sum(j, k) * fgen(Family::b, i - j) * fgen(Family::c, n - i));
        }
        break;
    case Family::c:
        add(1, SuperPoly::one(), fgen(Family::c, n));
        for (int k = 1; k <= n; ++k) add(1, fgen(Family::c, k), composition_sum(n, k));
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= i; ++k)
                add(1, fgen(Family::d, k), composition_sum(i, k) * fgen(Family::c, n - i));
        break;
    case Family::d:
        add(1, SuperPoly::one(), fgen(Family::d, n));
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= i; ++k) {
                add(k + 1, fgen(Family::c, k + 1),
                    composition_sum(i, k) * fgen(Family::b, n - i));
                add(1, fgen(Family::d, k), composition_sum(i, k) * fgen(Family::d, n - i));
            }
        for (int i = 1; i <= n; ++i) {
            add(-1, fgen(Family::d, 1), fgen(Family::b, i) * fgen(Family::c, n - i));
            for (int j = 1; j <= i; ++j)
                for (int k = 1; k <= j; ++k)
                    add(-(k + 1), fgen(Family::d, k + 1),
                        composition_sum(j, k) * fgen(Family::b, i - j) * fgen(Family::c, n - i));
        }
        break;
    default:
        throw std::invalid_argument("coproduct_generator: not an F family");
    }
    return t;
}

} // namespace

GradedTensor coproduct_generator(Family fam, int n) {
    check_index(n);
    int dv = degenerate_value(fam, n);
    if (dv >= 0) return Rational(dv) * GradedTensor::unit(FF); // Delta of a constant
    static std::map<std::pair<Family, int>, GradedTensor> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(fam, n);
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, coproduct_generator_uncached(fam, n)).first;
    return it->second;
}

GradedTensor f_coproduct_mono(const SuperMonomial& m) {
    GradedTensor t = GradedTensor::unit(FF);
    for (const auto& [g, e] : m.even)
        for (int k = 0; k < e; ++k) t = tensor_mul(t, coproduct_generator(g.fam, g.idx));
    for (const auto& g : m.odd) t = tensor_mul(t, coproduct_generator(g.fam, g.idx));
    return t;
}

GradedTensor f_coproduct(const FElement& x) {
    GradedTensor r(FF);
    for (const auto& [m, c] : x.terms()) r += c * f_coproduct_mono(m);
    return r;
}

Rational f_counit(const FElement& x) { return x.constant_term(); }

// --- antipode ----------------------------------------------------------------

const FElement& AntipodeTable::at(Family fam, int n) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(fam, n);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    check_index(n);
    // Dependencies: S(a_m), S(c_m) need index < n only; S(b_n) needs S(a_n),
    // S(d_n) needs S(c_n).  Fill index by index in family order a, c, b, d.
    for (int m = 1; m <= n; ++m) {
        for (Family f : {Family::a, Family::c, Family::b, Family::d}) {
            auto k = std::make_pair(f, m);
            if (table_.count(k)) continue;
            if (degenerate_value(f, m) >= 0) {
                table_.emplace(k, FElement(Rational(-degenerate_value(f, m))));
                continue;
            }
            // m(S (x) id) Delta(gen) = 0:
            //   S(gen) = -gen - sum over middle terms S(left) * right
            SuperMonomial gen_mono = gen_monomial(GeneratorId{f, m});
            FElement s = -SuperPoly::gen(GeneratorId{f, m});
            for (const auto& [legs, c] : coproduct_generator(f, m).terms()) {
                const SuperMonomial& l = legs[0];
                if (l.is_one() || l == gen_mono) continue;
                // left legs of the four displayed sums are single generators
                if (l.even.size() + l.odd.size() != 1 ||
                    (!l.even.empty() && l.even[0].second != 1))
                    throw std::logic_error("unexpected composite left leg in Delta(" +
                                           gen_mono.str() + "): " + l.str());
                GeneratorId lg = l.even.empty() ? l.odd[0] : l.even[0].first;
                auto dep = table_.find({lg.fam, lg.idx});
                if (dep == table_.end())
                    throw std::logic_error("antipode dependency order violated at " + l.str());
                s -= c * (dep->second * SuperPoly(Rational(1), legs[1]));
            }
            table_.emplace(k, std::move(s));
        }
    }
    return table_.at(key);
}

void AntipodeTable::precompute(int max_index) {
    for (Family f : kFFams) at(f, max_index);
}

AntipodeTable& antipode_table() {
    static AntipodeTable t;
    return t;
}

FElement f_antipode(const FElement& x) {
    // In a supercommutative ring the Koszul reversal sign cancels against
    // reordering, so S on a monomial is the product of S over its factors.
    FElement r;
    for (const auto& [m, c] : x.terms()) {
        FElement term(c);
        for (const auto& [g, e] : m.even)
            for (int k = 0; k < e; ++k) term *= antipode_table().at(g.fam, g.idx);
        for (const auto& g : m.odd) term *= antipode_table().at(g.fam, g.idx);
        r += term;
    }
    return r;
}

// --- verification ------------------------------------------------------------

namespace {

FElement mono_poly(const SuperMonomial& m) { return SuperPoly(Rational(1), m); }

std::optional<std::string> check_coassoc_f(const FElement& x, const std::string& what) {
    GradedTensor d = f_coproduct(x);
    auto delta = [](const SuperMonomial& m) { return f_coproduct_mono(m); };
    GradedTensor l = apply_leg(d, 0, delta, FF);
    GradedTensor r = apply_leg(d, 1, delta, FF);
    return expect_equal(l, r, what);
}

std::optional<std::string> check_counit_f(const FElement& x, const std::string& what) {
    GradedTensor d = f_coproduct(x);
    FElement left, right;
    for (const auto& [legs, c] : d.terms()) {
        if (legs[0].is_one()) left.add_term(legs[1], c);
        if (legs[1].is_one()) right.add_term(legs[0], c);
    }
    if (auto bad = expect_equal(left, x, what + " (eps x id)")) return bad;
    return expect_equal(right, x, what + " (id x eps)");
}

std::optional<std::string> check_antipode_axioms_f(const FElement& x, const std::string& what) {
    GradedTensor d = f_coproduct(x);
    auto s_mono = [](const SuperMonomial& m) { return f_tensor1(f_antipode(mono_poly(m))); };
    FElement lhs = f_of_tensor1(merge_legs(apply_leg(d, 0, s_mono, F1), 0));
    FElement rhs(f_counit(x));
    if (auto bad = expect_equal(lhs, rhs, what + " m(S x id)D")) return bad;
    FElement lhs2 = f_of_tensor1(merge_legs(apply_leg(d, 1, s_mono, F1), 0));
    return expect_equal(lhs2, rhs, what + " m(id x S)D");
}

// Delta(S(a)) = (-1)^{|a_(1)||a_(2)|} S(a_(2)) (x) S(a_(1))
std::optional<std::string> check_anticoalgebra_f(const FElement& x, const std::string& what) {
    GradedTensor lhs = f_coproduct(f_antipode(x));
    GradedTensor rhs(FF);
    for (const auto& [legs, c] : f_coproduct(x).terms()) {
        int sign = (legs[0].parity() && legs[1].parity()) ? -1 : 1;
        rhs += (c * sign) *
               tensor_of({f_antipode(mono_poly(legs[1])), f_antipode(mono_poly(legs[0]))}, FF);
    }
    return expect_equal(lhs, rhs, what);
}

struct Golden {
    Family fam;
    int n;
    std::vector<std::tuple<Rational, FElement, FElement>> terms;
};

std::vector<Golden> golden_coproducts() {
    auto g = [](Family f, int n) { return fgen(f, n); };
    FElement one = SuperPoly::one();
    using F = Family;
    std::vector<Golden> v;
    v.push_back({F::a, 1, {{1, one, one}}});
    v.push_back({F::a, 2, {{1, one, g(F::a, 2)}, {1, g(F::a, 2), one}}});
    v.push_back({F::a, 3,
                 {{1, one, g(F::a, 3)},
                  {1, g(F::a, 3), one},
                  {2, g(F::a, 2), g(F::a, 2)},
                  {1, g(F::b, 1), g(F::c, 2)}}});
    v.push_back({F::b, 1, {{1, one, g(F::b, 1)}, {1, g(F::b, 1), one}}});
    v.push_back({F::b, 2,
                 {{1, one, g(F::b, 2)},
                  {1, g(F::b, 2), one},
                  {2, g(F::a, 2), g(F::b, 1)},
                  {1, g(F::b, 1), g(F::d, 1)},
                  {1, g(F::b, 1), g(F::a, 2)}}});
    v.push_back({F::b, 3,
                 {{1, one, g(F::b, 3)},
                  {1, g(F::b, 3), one},
                  {2, g(F::a, 2), g(F::b, 2)},
                  {2, g(F::a, 2), g(F::a, 2) * g(F::b, 1)},
                  {3, g(F::a, 3), g(F::b, 1)},
                  {1, g(F::b, 1), g(F::d, 2)},
                  {1, g(F::b, 1), g(F::a, 2) * g(F::d, 1)},
                  {1, g(F::b, 2), g(F::d, 1)},
                  {1, g(F::b, 1), g(F::a, 3)},
                  {2, g(F::b, 2), g(F::a, 2)},
                  {-1, g(F::b, 1), g(F::b, 1) * g(F::c, 2)}}});
    v.push_back({F::c, 1, {}}); // c_1 = 0
    v.push_back({F::c, 2, {{1, one, g(F::c, 2)}, {1, g(F::c, 2), one}}});
    v.push_back({F::c, 3,
                 {{1, one, g(F::c, 3)},
                  {1, g(F::c, 3), one},
                  {2, g(F::c, 2), g(F::a, 2)},
                  {1, g(F::d, 1), g(F::c, 2)}}});
    v.push_back({F::d, 1, {{1, one, g(F::d, 1)}, {1, g(F::d, 1), one}}});
    v.push_back({F::d, 2,
                 {{1, one, g(F::d, 2)},
                  {1, g(F::d, 2), one},
                  {2, g(F::c, 2), g(F::b, 1)},
                  {1, g(F::d, 1), g(F::d, 1)},
                  {1, g(F::d, 1), g(F::a, 2)}}});
    v.push_back({F::d, 3,
                 {{1, one, g(F::d, 3)},
                  {1, g(F::d, 3), one},
                  {2, g(F::c, 2), g(F::b, 2)},
                  {2, g(F::c, 2), g(F::a, 2) * g(F::b, 1)},
                  {3, g(F::c, 3), g(F::b, 1)},
                  {1, g(F::d, 1), g(F::d, 2)},
                  {1, g(F::d, 1), g(F::a, 2) * g(F::d, 1)},
                  {1, g(F::d, 2), g(F::d, 1)},
                  {1, g(F::d, 1), g(F::a, 3)},
                  {2, g(F::d, 2), g(F::a, 2)},
                  {-1, g(F::d, 1), g(F::b, 1) * g(F::c, 2)}}});
    return v;
}

} // namespace

std::vector<Check> f_hopf_checks(int max_index, int samples, std::uint64_t seed) {
    std::vector<Check> checks;

    for (const auto& gold : golden_coproducts()) {
        std::string name = "golden-coproduct[" +
                           GeneratorId{gold.fam, gold.n}.str() + "]";
        checks.push_back({name, [gold]() {
                              GradedTensor expected(FF);
                              for (const auto& [c, l, r] : gold.terms)
                                  expected += c * tensor_of({l, r}, FF);
                              return expect_equal(coproduct_generator(gold.fam, gold.n),
                                                  expected);
                          }});
    }

    for (Family f : kFFams)
        for (int n = 1; n <= max_index; ++n) {
            GeneratorId id{f, n};
            if (degenerate_value(f, n) >= 0) continue;
            checks.push_back({"coassoc[" + id.str() + "]", [f, n, id]() {
                                  return check_coassoc_f(fgen(f, n), id.str());
                              }});
            checks.push_back({"counit[" + id.str() + "]", [f, n, id]() {
                                  return check_counit_f(fgen(f, n), id.str());
                              }});
            checks.push_back({"antipode-axioms[" + id.str() + "]", [f, n, id]() {
                                  return check_antipode_axioms_f(fgen(f, n), id.str());
                              }});
            checks.push_back({"anticoalgebra[" + id.str() + "]", [f, n, id]() {
                                  return check_anticoalgebra_f(fgen(f, n), id.str());
                              }});
            checks.push_back(
                {"grading[" + id.str() + "]", [f, n, id]() -> std::optional<std::string> {
                     int w = id.weight(), q = id.bc_charge();
                     for (const auto& [legs, c] : coproduct_generator(f, n).terms()) {
                         if (legs[0].weight() + legs[1].weight() != w)
                             return "weight split " + std::to_string(legs[0].weight()) + "+" +
                                    std::to_string(legs[1].weight()) + " != " +
                                    std::to_string(w) + " in term " + legs[0].str() + " (x) " +
                                    legs[1].str();
                         if (legs[0].bc_charge() + legs[1].bc_charge() != q)
                             return "bc-charge split broken in term " + legs[0].str() +
                                    " (x) " + legs[1].str();
                     }
                     return std::nullopt;
                 }});
        }

    checks.push_back({"random-products", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed);
                          for (int i = 0; i < samples; ++i) {
                              FElement x = s.f_element();
                              std::string what = "sample " + std::to_string(i);
                              if (auto bad = check_coassoc_f(x, what)) return bad;
                              if (auto bad = check_counit_f(x, what)) return bad;
                              if (auto bad = check_antipode_axioms_f(x, what)) return bad;
                              if (auto bad = check_anticoalgebra_f(x, what)) return bad;
                          }
                          return std::nullopt;
                      }});

    checks.push_back({"delta-multiplicative", [samples, seed]() -> std::optional<std::string> {
                          Sampler s(seed + 1);
                          for (int i = 0; i < samples / 2 + 1; ++i) {
                              FElement x = s.f_element(), y = s.f_element();
                              if (auto bad = expect_equal(
                                      f_coproduct(x * y),
                                      tensor_mul(f_coproduct(x), f_coproduct(y)),
                                      "sample " + std::to_string(i)))
                                  return bad;
                          }
                          return std::nullopt;
                      }});

    return checks;
}

Report verify_f_hopf(int max_index, int samples, std::uint64_t seed, Exec exec) {
    antipode_table().precompute(max_index); // single-writer before the parallel fan-out
    return run_checks("f", f_hopf_checks(max_index, samples, seed), exec);
}

} // namespace hs1
