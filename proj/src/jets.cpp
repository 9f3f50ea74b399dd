#include "hs1/jets.hpp"

#include "hs1/coaction.hpp"

#include <mutex>

namespace hs1 {

// --- XPoly ---------------------------------------------------------------------

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.order() != order()) throw std::invalid_argument("order mismatch");
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] += o.coeff[k];
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.order() != order()) throw std::invalid_argument("order mismatch");
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] -= o.coeff[k];
    return *this;
}

XPoly operator*(const SuperPoly& c, const XPoly& x) {
    XPoly r(x.order());
    for (std::size_t k = 0; k < x.coeff.size(); ++k) r.coeff[k] = c * x.coeff[k];
    return r;
}

XPoly operator*(const XPoly& x, const XPoly& y) {
    if (x.order() != y.order()) throw std::invalid_argument("order mismatch");
    XPoly r(x.order());
    for (int i = 0; i <= x.order(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; i + j <= x.order(); ++j) {
            if (y[j].is_zero()) continue;
            r[i + j] += x[i] * y[j];
        }
    }
    return r;
}

XPoly XPoly::derivative() const {
    XPoly r(order());
    for (int k = 1; k <= order(); ++k) r[k - 1] = Rational(k) * coeff[static_cast<std::size_t>(k)];
    return r;
}

XPoly XPoly::compose(const XPoly& g) const {
    if (g.order() != order()) throw std::invalid_argument("order mismatch");
    XPoly r(order());
    for (int k = order(); k >= 0; --k) {
        r = r * g;
        r[0] += coeff[static_cast<std::size_t>(k)];
    }
    return r;
}

std::string XPoly::str() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
        if ((*this)[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + (*this)[k].str() + ")x^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

// --- jets ------------------------------------------------------------------------

SuperJet SuperJet::identity(int order) {
    SuperJet j(order);
    j.A[1] = SuperPoly::one();
    j.D[0] = SuperPoly::one();
    return j;
}

bool SuperJet::is_gs2() const {
    return A[0].is_zero() && A[1] == SuperPoly::one() && B[0].is_zero() && C[0].is_zero() &&
           (order() < 1 || C[1].is_zero()) && D[0] == SuperPoly::one();
}

std::string SuperJet::str() const {
    return "A: " + A.str() + "\nB: " + B.str() + "\nC: " + C.str() + "\nD: " + D.str();
}

AffineSuper AffineSuper::identity() {
    AffineSuper s;
    s.a = SuperPoly::one();
    s.d = SuperPoly::one();
    return s;
}

SuperJet AffineSuper::to_jet(int order) const {
    if (order < 1) throw std::invalid_argument("affine jet needs order >= 1");
    SuperJet j(order);
    j.A[0] = e;
    j.A[1] = a;
    j.B[0] = b;
    j.C[0] = f;
    j.C[1] = c;
    j.D[0] = d;
    return j;
}

std::string AffineSuper::str() const {
    return "(" + a.str() + ")x + (" + b.str() + ")th + (" + e.str() + ") ; (" + c.str() +
           ")x + (" + d.str() + ")th + (" + f.str() + ")";
}

SuperMatrix2 SuperMatrix2::identity() { return {SuperPoly::one(), {}, {}, SuperPoly::one()}; }

SuperMatrix2 operator*(const SuperMatrix2& m, const SuperMatrix2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

std::string SuperMatrix2::str() const {
    return "(" + a.str() + ", " + b.str() + "; " + c.str() + ", " + d.str() + ")";
}

SuperMatrix2 supermatrix_inv(const SuperMatrix2& m) {
    SuperPoly inv_a = invert_even(m.a);
    SuperPoly inv_d = invert_even(m.d);
    SuperPoly inv_da = invert_even(m.d * m.a);
    SuperMatrix2 r;
    r.a = inv_da * (m.d + m.b * m.c * inv_a);
    r.b = inv_da * (-m.b);
    r.c = inv_da * (-m.c);
    r.d = inv_da * (m.a + m.c * m.b * inv_d);
    return r;
}

SuperJet compose(const SuperJet& phi, const SuperJet& psi) {
    if (phi.order() != psi.order()) throw std::invalid_argument("jet order mismatch");
    const XPoly& Ap = psi.A;
    XPoly AoA = phi.A.compose(Ap);
    XPoly BoA = phi.B.compose(Ap);
    XPoly CoA = phi.C.compose(Ap);
    XPoly DoA = phi.D.compose(Ap);
    XPoly dAoA = phi.A.derivative().compose(Ap);
    XPoly dBoA = phi.B.derivative().compose(Ap);
    XPoly dCoA = phi.C.derivative().compose(Ap);
    XPoly dDoA = phi.D.derivative().compose(Ap);
    SuperJet r(phi.order());
    r.A = AoA + BoA * psi.C;
    r.B = dAoA * psi.B + BoA * psi.D - dBoA * psi.B * psi.C;
    r.C = CoA + DoA * psi.C;
    r.D = dCoA * psi.B + DoA * psi.D - dDoA * psi.B * psi.C;
    return r;
}

SuperJet compose(const AffineSuper& sigma, const SuperJet& psi) {
    return compose(sigma.to_jet(psi.order()), psi);
}

SuperJet compose(const SuperJet& phi, const AffineSuper& sigma) {
    return compose(phi, sigma.to_jet(phi.order()));
}

SuperMatrix2 jacobian0(const SuperJet& phi) {
    SuperMatrix2 m;
    m.a = phi.order() >= 1 ? phi.A[1] : SuperPoly::zero();
    m.b = phi.B[0];
    m.c = phi.order() >= 1 ? phi.C[1] : SuperPoly::zero();
    m.d = phi.D[0];
    return m;
}

std::pair<AffineSuper, SuperJet> factorize(const SuperJet& phi) {
    SuperMatrix2 m = jacobian0(phi);
    AffineSuper sigma;
    sigma.a = m.a;
    sigma.b = m.b;
    sigma.c = m.c;
    sigma.d = m.d;
    sigma.e = phi.A[0];
    sigma.f = phi.C[0];
    SuperMatrix2 inv = supermatrix_inv(m);
    XPoly A0 = phi.A, C0 = phi.C;
    A0[0] = SuperPoly::zero(); // Phi - Phi(0,0)
    C0[0] = SuperPoly::zero();
    SuperJet psi(phi.order());
    psi.A = inv.a * A0 + inv.b * C0;
    psi.B = inv.a * phi.B + inv.b * phi.D;
    psi.C = inv.c * A0 + inv.d * C0;
    psi.D = inv.c * phi.B + inv.d * phi.D;
    return {sigma, psi};
}

AffineSuper affine_inverse(const AffineSuper& s) {
    SuperMatrix2 m{s.a, s.b, s.c, s.d};
    SuperMatrix2 inv = supermatrix_inv(m);
    AffineSuper r;
    r.a = inv.a;
    r.b = inv.b;
    r.c = inv.c;
    r.d = inv.d;
    r.e = -(inv.a * s.e + inv.b * s.f);
    r.f = -(inv.c * s.e + inv.d * s.f);
    return r;
}

namespace {

// phi o psi for an arbitrary coefficient 4-tuple phi (not necessarily a group
// element); the component formulas are linear in the outer tuple.
SuperJet raw_substitute(const SuperJet& phi, const SuperJet& psi) { return compose(phi, psi); }

SuperJet invert_gs2(const SuperJet& phi) {
    int N = phi.order();
    SuperJet H = phi; // phi - id, valuation >= 2
    H.A[1] -= SuperPoly::one();
    H.D[0] -= SuperPoly::one();
    SuperJet psi = SuperJet::identity(N);
    for (int it = 0; it <= N; ++it) {
        SuperJet HoPsi = raw_substitute(H, psi);
        SuperJet next = SuperJet::identity(N);
        next.A -= HoPsi.A;
        next.B -= HoPsi.B;
        next.C -= HoPsi.C;
        next.D -= HoPsi.D;
        if (next == psi) break;
        psi = next;
    }
    return psi;
}

} // namespace

SuperJet invert(const SuperJet& phi) {
    try {
        invert_even(phi.A[1]);
        invert_even(phi.D[0]);
    } catch (const std::domain_error&) {
        throw std::domain_error("non-invertible linear part");
    }
    if (phi.is_gs2()) return invert_gs2(phi);
    auto [sigma, psi] = factorize(phi);
    return compose(invert_gs2(psi), affine_inverse(sigma).to_jet(phi.order()));
}

std::pair<AffineSuper, SuperJet> group_actions(const SuperJet& phi, const AffineSuper& sigma) {
    return factorize(compose(phi, sigma));
}

AffineSuper exp_affine(Family g, GeneratorId param) {
    bool odd_param = param.odd();
    if (is_odd(g) != odd_param)
        throw std::invalid_argument("parameter parity does not match the generator");
    SuperPoly t = SuperPoly::gen(param);
    AffineSuper s = AffineSuper::identity();
    switch (g) {
    case Family::X: s.e = t; break;
    case Family::Y: s.a += t; break;
    case Family::Z: s.d += t; break;
    case Family::U: s.b = t; break;
    case Family::V: s.c = -t; break;
    case Family::W: s.f = -t; break;
    default: throw std::invalid_argument("exp_affine: not a Lie generator");
    }
    return s;
}

// --- symbolic jets ----------------------------------------------------------------

SuperJet symbolic_gs2(int order, bool primed) {
    Family fa = primed ? Family::ap : Family::a;
    Family fb = primed ? Family::bp : Family::b;
    Family fc = primed ? Family::cp : Family::c;
    Family fd = primed ? Family::dp : Family::d;
    SuperJet j(order);
    for (int k = 0; k <= order; ++k) {
        j.A[k] = fgen(fa, k);
        j.B[k] = fgen(fb, k);
        j.C[k] = fgen(fc, k);
        j.D[k] = fgen(fd, k);
    }
    return j;
}

SuperJet symbolic_jet(int order, int instance, bool origin_preserving) {
    static const Family fams[3][4] = {
        {Family::A1, Family::B1, Family::C1, Family::D1},
        {Family::A2, Family::B2, Family::C2, Family::D2},
        {Family::A3, Family::B3, Family::C3, Family::D3},
    };
    if (instance < 0 || instance > 2) throw std::invalid_argument("jet instance out of range");
    SuperJet j(order);
    for (int k = 0; k <= order; ++k) {
        j.A[k] = SuperPoly::gen(GeneratorId{fams[instance][0], k});
        j.B[k] = SuperPoly::gen(GeneratorId{fams[instance][1], k});
        j.C[k] = SuperPoly::gen(GeneratorId{fams[instance][2], k});
        j.D[k] = SuperPoly::gen(GeneratorId{fams[instance][3], k});
    }
    if (origin_preserving) {
        // A(0)=B(0)=C(0)=0 keeps substitution valuation-preserving, so the
        // truncation is an exact quotient and composition identities hold on
        // the nose rather than up to truncation order.
        j.A[0] = SuperPoly::zero();
        j.B[0] = SuperPoly::zero();
        j.C[0] = SuperPoly::zero();
    }
    return j;
}

AffineSuper symbolic_affine(int instance) {
    AffineSuper s;
    s.a = SuperPoly::gen(GeneratorId{Family::sa, instance});
    s.b = SuperPoly::gen(GeneratorId{Family::sb, instance});
    s.e = SuperPoly::gen(GeneratorId{Family::se, instance});
    s.c = SuperPoly::gen(GeneratorId{Family::sc, instance});
    s.d = SuperPoly::gen(GeneratorId{Family::sd, instance});
    s.f = SuperPoly::gen(GeneratorId{Family::sf, instance});
    return s;
}

// --- oracles ----------------------------------------------------------------------

namespace {

const XPoly& jet_component(const SuperJet& j, Family fam) {
    switch (fam) {
    case Family::a: return j.A;
    case Family::b: return j.B;
    case Family::c: return j.C;
    case Family::d: return j.D;
    default: throw std::invalid_argument("not an F family");
    }
}

Family unprime(Family f) {
    return static_cast<Family>(static_cast<int>(f) - 4);
}

} // namespace

GradedTensor oracle_coproduct(Family fam, int n, int max_index) {
    if (n > max_index) throw std::invalid_argument("insufficient truncation order");
    int N = max_index + 1;
    SuperJet phi = symbolic_gs2(N, false);
    SuperJet phip = symbolic_gs2(N, true);
    SuperJet comp = compose(phi, phip);
    const SuperPoly& coeff = jet_component(comp, fam)[n];
    // split each mixed monomial into (unprimed) (x) (primed -> unprimed); the
    // odd order puts primary odd factors before primed ones, so no sign arises
    GradedTensor out({LegKind::F, LegKind::F});
    for (const auto& [m, c] : coeff.terms()) {
        SuperMonomial left, right;
        for (const auto& [g, e] : m.even) {
            if (is_primary_f(g.fam)) left.even.push_back({g, e});
            else if (is_primed_f(g.fam)) right.even.push_back({GeneratorId{unprime(g.fam), g.idx}, e});
            else throw std::logic_error("unexpected family in composition coefficient");
        }
        bool seen_primed = false;
        for (const auto& g : m.odd) {
            if (is_primary_f(g.fam)) {
                if (seen_primed) throw std::logic_error("odd factor order violated");
                left.odd.push_back(g);
            } else if (is_primed_f(g.fam)) {
                seen_primed = true;
                right.odd.push_back(GeneratorId{unprime(g.fam), g.idx});
            } else {
                throw std::logic_error("unexpected family in composition coefficient");
            }
        }
        out.add_term({left, right}, c);
    }
    return out;
}

namespace {

// d/dt of the family-n coefficient of phi <| e^{t g}, parameter on the left,
// before the per-generator pairing sign.
FElement oracle_action_raw(Family lie, Family fam, int n, int max_index) {
    int N = max_index + 1;
    SuperJet phi = symbolic_gs2(N, false);
    GeneratorId param{is_odd(lie) ? Family::tau : Family::t, 0};
    AffineSuper sigma = exp_affine(lie, param);
    auto [s, psi] = group_actions(phi, sigma);
    (void)s;
    return derivative_at_zero(jet_component(psi, fam)[n], param);
}

} // namespace

std::array<int, 6> oracle_action_signs(int max_index) {
    static std::array<int, 6> cached;
    static bool have = false;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (have) return cached;
    constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                                Family::U, Family::V, Family::W};
    constexpr Family kFF[4] = {Family::a, Family::b, Family::c, Family::d};
    int probe = std::min(max_index, 3);
    for (int i = 0; i < 6; ++i) {
        int sign = 0;
        for (Family fam : kFF) {
            for (int n = 1; n <= probe && sign == 0; ++n) {
                if (degenerate_value(fam, n) >= 0) continue;
                FElement raw = oracle_action_raw(kLie[i], fam, n, probe);
                FElement table = act_gen(kLie[i], fam, n);
                if (raw.is_zero() && table.is_zero()) continue;
                if (raw == table) sign = 1;
                else if (raw == -table) sign = -1;
                else throw std::logic_error("derivative oracle irreconcilable with table at " +
                                            std::string(family_info(kLie[i]).name));
            }
            if (sign != 0) break;
        }
        cached[static_cast<std::size_t>(i)] = sign == 0 ? 1 : sign;
    }
    have = true;
    return cached;
}

FElement oracle_action(Family lie, Family fam, int n, int max_index) {
    if (n > max_index) throw std::invalid_argument("insufficient truncation order");
    auto signs = oracle_action_signs(max_index);
    int i = static_cast<int>(lie) - static_cast<int>(Family::X);
    return Rational(signs[static_cast<std::size_t>(i)]) * oracle_action_raw(lie, fam, n, max_index);
}

FElement oracle_antipode(Family fam, int n, int max_index) {
    if (n > max_index) throw std::invalid_argument("insufficient truncation order");
    int N = max_index + 1;
    SuperJet inv = invert(symbolic_gs2(N, false));
    return jet_component(inv, fam)[n];
}

FElement oracle_classical_antipode(int n, int max_index) {
    int N = std::max(n, max_index) + 1;
    SuperJet phi(N);
    for (int k = 0; k <= N; ++k) phi.A[k] = fgen(Family::a, k);
    phi.D[0] = SuperPoly::one();
    SuperJet inv = invert(phi);
    return inv.A[n];
}

// --- lemma checks ------------------------------------------------------------------

namespace {

struct AffineTangent {
    SuperPoly a, b, e, c, d, f;
    bool operator==(const AffineTangent&) const = default;
    AffineTangent& operator+=(const AffineTangent& o) {
        a += o.a; b += o.b; e += o.e; c += o.c; d += o.d; f += o.f;
        return *this;
    }
    AffineTangent operator-(const AffineTangent& o) const {
        return {a - o.a, b - o.b, e - o.e, c - o.c, d - o.d, f - o.f};
    }
    std::string str() const {
        return "(a:" + a.str() + " b:" + b.str() + " e:" + e.str() + " c:" + c.str() +
               " d:" + d.str() + " f:" + f.str() + ")";
    }
};

AffineTangent d_param(const AffineSuper& s, GeneratorId param) {
    return {derivative_at_zero(s.a, param), derivative_at_zero(s.b, param),
            derivative_at_zero(s.e, param), derivative_at_zero(s.c, param),
            derivative_at_zero(s.d, param), derivative_at_zero(s.f, param)};
}

// Multiply the tangent (as a map) by a coordinate value from the right.  The
// b and d slots are coefficients of theta, so v commutes past theta first:
// (b theta) v = ((-1)^{|v|} b v) theta.
AffineTangent scale_right(const AffineTangent& t, const SuperPoly& v) {
    Rational th = (!v.is_zero() && v.parity()) ? -1 : 1;
    return {t.a * v, th * (t.b * v), t.e * v, t.c * v, th * (t.d * v), t.f * v};
}

// d/dt pi_1(phi o e^{t g0}) entrywise, parameter extracted on the left
AffineTangent lemma52_rhs(Family g0, const SuperJet& phi) {
    GeneratorId param{is_odd(g0) ? Family::tau : Family::t, 0};
    AffineSuper sigma = exp_affine(g0, param);
    auto [pi1, pi2] = factorize(compose(phi, sigma));
    (void)pi2;
    return d_param(pi1, param);
}

// sum over nabla(g0) legs of sign * d/dt(e^{t u-leg}) * f-leg(phi); on the
// generic symbolic jet the value of a coordinate function is the symbol itself
AffineTangent lemma52_lhs(Family g0, bool koszul_pairing) {
    AffineTangent total{};
    for (const auto& [legs, c] : coact_gen(g0).terms()) {
        LieWord w = word_of_monomial(legs[0]);
        if (w.size() != 1) throw std::logic_error("coaction leg is not a generator");
        Family gu = w[0];
        GeneratorId param{is_odd(gu) ? Family::tau : Family::t, 0};
        AffineTangent d = d_param(exp_affine(gu, param), param);
        int sign = 1;
        if (koszul_pairing && is_odd(gu) && legs[1].parity()) sign = -1;
        total += scale_right(d, (c * sign) * SuperPoly(Rational(1), legs[1]));
    }
    return total;
}

int lemma52_adjudicated_sign() {
    static int cached = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cached != 0) return cached;
    SuperJet phi = symbolic_gs2(3, false);
    bool koszul_ok = true, plain_ok = true;
    for (Family g0 : {Family::X, Family::W}) {
        AffineTangent rhs = lemma52_rhs(g0, phi);
        if (!(lemma52_lhs(g0, true) == rhs)) koszul_ok = false;
        if (!(lemma52_lhs(g0, false) == rhs)) plain_ok = false;
    }
    if (koszul_ok == plain_ok)
        throw std::logic_error("lemma 5.2 sign adjudication inconclusive");
    cached = koszul_ok ? -1 : 1;
    return cached;
}

} // namespace

std::vector<Check> lemma_checks(int max_index) {
    std::vector<Check> checks;

    // adjudicate eagerly so the convention is visible in the check name
    int sign = lemma52_adjudicated_sign();
    std::string conv = sign < 0 ? "(-1)^{|u-leg||f-leg|}" : "+1";
    checks.push_back(
        {"lemma5.2-sign-convention[" + conv + "]", [sign]() -> std::optional<std::string> {
             SuperJet phi = symbolic_gs2(3, false);
             for (Family g0 : {Family::X, Family::W}) {
                 AffineTangent lhs = lemma52_lhs(g0, sign < 0);
                 AffineTangent rhs = lemma52_rhs(g0, phi);
                 if (auto bad = expect_equal(lhs, rhs,
                                             std::string("lemma 5.2 at ") +
                                                 family_info(g0).name))
                     return bad;
             }
             return std::nullopt;
         }});

    checks.push_back({"lemma5.3-trivial", [max_index]() -> std::optional<std::string> {
                          int N = std::min(max_index, 4);
                          SuperJet phi1 = symbolic_gs2(N, false);
                          SuperJet phi2 = symbolic_gs2(N, true);
                          AffineSuper id = AffineSuper::identity();
                          // sigma = id
                          SuperJet lhs = factorize(compose(compose(phi1, phi2), id)).second;
                          auto p2s = factorize(compose(phi2, id));
                          SuperJet r1 = factorize(compose(phi1, p2s.first.to_jet(N))).second;
                          SuperJet rhs = compose(r1, p2s.second);
                          if (!(lhs == rhs)) return std::string("sigma = id case failed");
                          // phi2 = id
                          AffineSuper sg = symbolic_affine(0);
                          SuperJet idj = SuperJet::identity(N);
                          SuperJet l2 = factorize(compose(compose(phi1, idj), sg)).second;
                          auto p2s2 = factorize(compose(idj, sg));
                          SuperJet r2a = factorize(compose(phi1, p2s2.first.to_jet(N))).second;
                          SuperJet rhs2 = compose(r2a, p2s2.second);
                          if (!(l2 == rhs2)) return std::string("phi2 = id case failed");
                          return std::nullopt;
                      }});

    // Truncated jets lose order-(N+1) data whenever a substitution argument has
    // a constant term, so with the translation symbols present the identity is
    // exact only below the truncation boundary: coefficients x^j, j <= N-2 for
    // the full sigma (even translation e with e^2 = 0), j <= N-1 without e.
    auto lemma53_window = [](const SuperJet& lhs, const SuperJet& rhs,
                             int maxdeg) -> std::optional<std::string> {
        for (int j = 0; j <= maxdeg; ++j) {
            if (!(lhs.A[j] == rhs.A[j]) || !(lhs.B[j] == rhs.B[j]) ||
                !(lhs.C[j] == rhs.C[j]) || !(lhs.D[j] == rhs.D[j]))
                return "mismatch at x^" + std::to_string(j) + ":\nlhs " + lhs.str() +
                       "\nrhs " + rhs.str();
        }
        return std::nullopt;
    };

    checks.push_back({"lemma5.3-generic", [max_index, lemma53_window]() {
                          int N = std::min(max_index, 4) + 2;
                          SuperJet phi1 = symbolic_gs2(N, false);
                          SuperJet phi2 = symbolic_gs2(N, true);
                          AffineSuper sg = symbolic_affine(0);
                          SuperJet lhs = factorize(compose(compose(phi1, phi2), sg)).second;
                          auto p2s = group_actions(phi2, sg);
                          SuperJet r1 = factorize(compose(phi1, p2s.first.to_jet(N))).second;
                          SuperJet rhs = compose(r1, p2s.second);
                          return lemma53_window(lhs, rhs, N - 2);
                      }});

    checks.push_back({"lemma5.3-linear-part", [max_index, lemma53_window]() {
                          int N = std::min(max_index, 4) + 1;
                          SuperJet phi1 = symbolic_gs2(N, false);
                          SuperJet phi2 = symbolic_gs2(N, true);
                          AffineSuper sg = symbolic_affine(2);
                          sg.e = SuperPoly::zero();
                          SuperJet lhs = factorize(compose(compose(phi1, phi2), sg)).second;
                          auto p2s = group_actions(phi2, sg);
                          SuperJet r1 = factorize(compose(phi1, p2s.first.to_jet(N))).second;
                          SuperJet rhs = compose(r1, p2s.second);
                          return lemma53_window(lhs, rhs, N - 1);
                      }});

    checks.push_back({"exp-table", []() -> std::optional<std::string> {
                          GeneratorId t{Family::t, 0}, tau{Family::tau, 0};
                          SuperPoly pt = SuperPoly::gen(t), ptau = SuperPoly::gen(tau);
                          auto expect = [](const AffineSuper& s, const AffineSuper& e,
                                           const char* name) -> std::optional<std::string> {
                              if (s == e) return std::nullopt;
                              return std::string("exp mismatch at ") + name + ": " + s.str();
                          };
                          AffineSuper eX = AffineSuper::identity(); eX.e = pt;
                          AffineSuper eY = AffineSuper::identity(); eY.a += pt;
                          AffineSuper eZ = AffineSuper::identity(); eZ.d += pt;
                          AffineSuper eU = AffineSuper::identity(); eU.b = ptau;
                          AffineSuper eV = AffineSuper::identity(); eV.c = -ptau;
                          AffineSuper eW = AffineSuper::identity(); eW.f = -ptau;
                          if (auto bad = expect(exp_affine(Family::X, t), eX, "X")) return bad;
                          if (auto bad = expect(exp_affine(Family::Y, t), eY, "Y")) return bad;
                          if (auto bad = expect(exp_affine(Family::Z, t), eZ, "Z")) return bad;
                          if (auto bad = expect(exp_affine(Family::U, tau), eU, "U")) return bad;
                          if (auto bad = expect(exp_affine(Family::V, tau), eV, "V")) return bad;
                          return expect(exp_affine(Family::W, tau), eW, "W");
                      }});

    return checks;
}

Report verify_lemmas(Exec exec) { return run_checks("lemmas", lemma_checks(6), exec); }

// --- full oracle suite ---------------------------------------------------------------

std::vector<Check> jets_checks(int max_index, int samples, std::uint64_t seed) {
    (void)samples;
    (void)seed;
    std::vector<Check> checks;
    constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                                Family::U, Family::V, Family::W};
    constexpr Family kFF[4] = {Family::a, Family::b, Family::c, Family::d};

    checks.push_back({"compose-identity", [max_index]() -> std::optional<std::string> {
                          int N = std::min(max_index, 4);
                          SuperJet phi = symbolic_gs2(N, false);
                          SuperJet id = SuperJet::identity(N);
                          if (!(compose(id, phi) == phi)) return std::string("id o phi != phi");
                          if (!(compose(phi, id) == phi)) return std::string("phi o id != phi");
                          return std::nullopt;
                      }});

    checks.push_back({"compose-affine-vs-supermatrix", []() -> std::optional<std::string> {
                          AffineSuper s = symbolic_affine(0), t = symbolic_affine(1);
                          SuperJet viajets = compose(s.to_jet(2), t.to_jet(2));
                          SuperMatrix2 ms{s.a, s.b, s.c, s.d}, mt{t.a, t.b, t.c, t.d};
                          SuperMatrix2 mm = ms * mt;
                          AffineSuper direct;
                          direct.a = mm.a; direct.b = mm.b; direct.c = mm.c; direct.d = mm.d;
                          direct.e = s.a * t.e + s.b * t.f + s.e;
                          direct.f = s.c * t.e + s.d * t.f + s.f;
                          if (viajets == direct.to_jet(2)) return std::nullopt;
                          return std::string("affine composition disagrees with supermatrix model");
                      }});

    checks.push_back({"compose-golden[x+x^2]", []() -> std::optional<std::string> {
                          SuperJet phi = SuperJet::identity(4);
                          phi.A[2] = SuperPoly::one();
                          SuperJet c = compose(phi, phi);
                          XPoly expect(4);
                          expect[1] = SuperPoly::one();
                          expect[2] = SuperPoly(Rational(2));
                          expect[3] = SuperPoly(Rational(2));
                          expect[4] = SuperPoly::one();
                          if (c.A == expect) return std::nullopt;
                          return "A-part = " + c.A.str();
                      }});

    checks.push_back({"compose-associativity", []() -> std::optional<std::string> {
                          int N = 4;
                          SuperJet a = symbolic_jet(N, 0, true);
                          SuperJet b = symbolic_jet(N, 1, true);
                          SuperJet c = symbolic_jet(N, 2, true);
                          if (compose(compose(a, b), c) == compose(a, compose(b, c)))
                              return std::nullopt;
                          return std::string("associativity failed on generic triple");
                      }});

    checks.push_back({"invert-identity", []() -> std::optional<std::string> {
                          SuperJet id = SuperJet::identity(4);
                          if (invert(id) == id) return std::nullopt;
                          return std::string("invert(id) != id");
                      }});

    checks.push_back({"invert-golden[x+x^2]", []() -> std::optional<std::string> {
                          SuperJet phi = SuperJet::identity(4);
                          phi.A[2] = SuperPoly::one();
                          SuperJet inv = invert(phi);
                          XPoly expect(4);
                          expect[1] = SuperPoly::one();
                          expect[2] = SuperPoly(Rational(-1));
                          expect[3] = SuperPoly(Rational(2));
                          expect[4] = SuperPoly(Rational(-5));
                          if (inv.A == expect && inv.B.is_zero() && inv.C.is_zero())
                              return std::nullopt;
                          return "inverse A-part = " + inv.A.str();
                      }});

    checks.push_back({"invert-two-sided[gs2]", [max_index]() -> std::optional<std::string> {
                          int N = std::min(max_index, 4);
                          SuperJet phi = symbolic_gs2(N, false);
                          SuperJet inv = invert(phi);
                          SuperJet id = SuperJet::identity(N);
                          if (!(compose(phi, inv) == id)) return std::string("phi o inv != id");
                          if (!(compose(inv, phi) == id)) return std::string("inv o phi != id");
                          return std::nullopt;
                      }});

    checks.push_back({"invert-two-sided[generic]", []() -> std::optional<std::string> {
                          SuperJet phi = symbolic_jet(4, 0, true);
                          SuperJet inv = invert(phi);
                          SuperJet id = SuperJet::identity(4);
                          if (!(compose(phi, inv) == id)) return std::string("phi o inv != id");
                          if (!(compose(inv, phi) == id)) return std::string("inv o phi != id");
                          return std::nullopt;
                      }});

    checks.push_back({"jacobian0", []() -> std::optional<std::string> {
                          if (!(jacobian0(SuperJet::identity(3)) == SuperMatrix2::identity()))
                              return std::string("J(id) != id");
                          if (!(jacobian0(symbolic_gs2(3, false)) == SuperMatrix2::identity()))
                              return std::string("J(phi in Gs2) != id");
                          SuperJet g = symbolic_jet(3, 0, false);
                          SuperMatrix2 m = jacobian0(g);
                          if (!(m.a == g.A[1] && m.b == g.B[0] && m.c == g.C[1] && m.d == g.D[0]))
                              return std::string("generic jacobian entry pattern wrong");
                          return std::nullopt;
                      }});

    checks.push_back({"supermatrix-inverse", []() -> std::optional<std::string> {
                          SuperMatrix2 m{SuperPoly::gen(GeneratorId{Family::sa, 9}),
                                         SuperPoly::gen(GeneratorId{Family::sb, 9}),
                                         SuperPoly::gen(GeneratorId{Family::sc, 9}),
                                         SuperPoly::gen(GeneratorId{Family::sd, 9})};
                          SuperMatrix2 inv = supermatrix_inv(m);
                          if (!(m * inv == SuperMatrix2::identity()))
                              return "M M^-1 = " + (m * inv).str();
                          if (!(inv * m == SuperMatrix2::identity()))
                              return "M^-1 M = " + (inv * m).str();
                          // numeric Grassmann instance
                          SuperMatrix2 n{SuperPoly(Rational(2)), fgen(Family::b, 1),
                                         fgen(Family::c, 2), SuperPoly(Rational(3))};
                          SuperMatrix2 ninv = supermatrix_inv(n);
                          if (!(n * ninv == SuperMatrix2::identity()) ||
                              !(ninv * n == SuperMatrix2::identity()))
                              return std::string("numeric Grassmann instance failed");
                          return std::nullopt;
                      }});

    checks.push_back({"factorize-gs2-trivial", [max_index]() -> std::optional<std::string> {
                          int N = std::min(max_index, 4);
                          SuperJet phi = symbolic_gs2(N, false);
                          auto [sg, psi] = factorize(phi);
                          AffineSuper id = AffineSuper::identity();
                          if (!(sg == id)) return std::string("pi1(phi in Gs2) != id");
                          if (!(psi == phi)) return std::string("pi2(phi in Gs2) != phi");
                          return std::nullopt;
                      }});

    checks.push_back({"factorize-affine-trivial", []() -> std::optional<std::string> {
                          AffineSuper sg = symbolic_affine(0);
                          auto [s, psi] = factorize(sg.to_jet(3));
                          if (!(s == sg)) return std::string("pi1(affine) != affine");
                          if (!(psi == SuperJet::identity(3))) return std::string("pi2(affine) != id");
                          return std::nullopt;
                      }});

    checks.push_back({"factorize-recomposition(order<=7)", []() -> std::optional<std::string> {
                          for (int N : {4, 7}) {
                              SuperJet phi = symbolic_jet(N, 0, false);
                              auto [sg, psi] = factorize(phi);
                              if (!psi.is_gs2())
                                  return "pi2 not in Gs2 at order " + std::to_string(N);
                              if (!(compose(sg, psi) == phi))
                                  return "pi1 o pi2 != Phi at order " + std::to_string(N);
                          }
                          return std::nullopt;
                      }});

    checks.push_back({"group-actions", [max_index]() -> std::optional<std::string> {
                          int N = std::min(max_index, 4);
                          SuperJet phi = symbolic_gs2(N, false);
                          AffineSuper id = AffineSuper::identity();
                          auto [l, r] = group_actions(phi, id);
                          if (!(l == id) || !(r == phi)) return std::string("sigma = id case failed");
                          AffineSuper sg = symbolic_affine(1);
                          auto [l2, r2] = group_actions(SuperJet::identity(N), sg);
                          if (!(l2 == sg) || !(r2 == SuperJet::identity(N)))
                              return std::string("phi = id case failed");
                          auto [l3, r3] = group_actions(phi, sg);
                          if (!r3.is_gs2()) return std::string("phi <| sigma not in Gs2");
                          if (!(compose(l3.to_jet(N), r3) == compose(phi, sg)))
                              return std::string("(phi|>sigma)(phi<|sigma) != phi sigma");
                          return std::nullopt;
                      }});

    // oracle vs closed-form tables
    for (Family fam : kFF)
        for (int n = 1; n <= max_index; ++n) {
            if (degenerate_value(fam, n) >= 0) continue;
            GeneratorId id{fam, n};
            checks.push_back({"oracle-coproduct[" + id.str() + "]", [fam, n, max_index]() {
                                  return expect_equal(oracle_coproduct(fam, n, max_index),
                                                      coproduct_generator(fam, n),
                                                      "composition oracle vs Delta");
                              }});
            checks.push_back({"oracle-antipode[" + id.str() + "]", [fam, n, max_index]() {
                                  return expect_equal(oracle_antipode(fam, n, max_index),
                                                      f_antipode(fgen(fam, n)),
                                                      "inverse-jet oracle vs S");
                              }});
        }

    {
        auto signs = oracle_action_signs(max_index);
        std::string signstr;
        for (int i = 0; i < 6; ++i) signstr += (signs[static_cast<std::size_t>(i)] > 0 ? '+' : '-');
        checks.push_back({"oracle-action-signs[" + signstr + "]",
                          [signs]() -> std::optional<std::string> {
                              for (int i = 0; i < 3; ++i)
                                  if (signs[static_cast<std::size_t>(i)] != 1)
                                      return std::string("even-parameter row needed a sign flip");
                              return std::nullopt;
                          }});
    }

    for (Family lie : kLie)
        for (Family fam : kFF) {
            std::string name = "oracle-action[" + std::string(family_info(lie).name) + "," +
                               family_info(fam).name + "*]";
            checks.push_back({name, [lie, fam, max_index]() -> std::optional<std::string> {
                                  for (int n = 1; n <= max_index; ++n) {
                                      if (degenerate_value(fam, n) >= 0) continue;
                                      if (auto bad = expect_equal(
                                              oracle_action(lie, fam, n, max_index),
                                              act_gen(lie, fam, n),
                                              std::string(family_info(lie).name) + " |> " +
                                                  GeneratorId{fam, n}.str()))
                                          return bad;
                                  }
                                  return std::nullopt;
                              }});
        }

    for (auto& c : lemma_checks(max_index)) checks.push_back(std::move(c));

    return checks;
}

Report verify_jets(int max_index, int samples, std::uint64_t seed, Exec exec) {
    antipode_table().precompute(max_index);
    return run_checks("jets", jets_checks(max_index, samples, seed), exec);
}

} // namespace hs1
