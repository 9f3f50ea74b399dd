#include "hs1/tensor.hpp"

#include "hs1/uenv.hpp"

namespace hs1 {

GradedTensor tensor_of(const std::vector<SuperPoly>& polys, std::vector<LegKind> shape) {
    if (polys.size() != shape.size()) throw std::invalid_argument("leg count mismatch");
    GradedTensor r(std::move(shape));
    Legs legs(polys.size());
    std::function<void(std::size_t, const Rational&)> rec =
        [&](std::size_t i, const Rational& c) {
            if (i == polys.size()) {
                r.add_term(legs, c);
                return;
            }
            for (const auto& [m, k] : polys[i].terms()) {
                legs[i] = m;
                rec(i + 1, c * k);
            }
        };
    rec(0, Rational(1));
    return r;
}

GradedTensor tensor_mul(const GradedTensor& s, const GradedTensor& t) {
    if (s.shape() != t.shape()) throw std::invalid_argument("tensor arity mismatch");
    const auto& shape = s.shape();
    const std::size_t n = shape.size();
    GradedTensor r(shape);
    for (const auto& [xs, cx] : s.terms()) {
        for (const auto& [ys, cy] : t.terms()) {
            // Koszul sign: y_i crosses x_j for all j > i
            int sign = 1;
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (ys[i].parity() && legs_parity(xs, i + 1, n)) sign = -sign;
            // per-leg products; U legs may expand into several monomials
            std::vector<std::vector<std::pair<Rational, SuperMonomial>>> legprod(n);
            bool dead = false;
            for (std::size_t i = 0; i < n && !dead; ++i) {
                if (shape[i] == LegKind::F) {
                    auto p = mono_mul(xs[i], ys[i]);
                    if (!p) { dead = true; break; }
                    legprod[i].push_back({Rational(p->first), p->second});
                } else {
                    legprod[i] = pbw_mul_mono(xs[i], ys[i]);
                    if (legprod[i].empty()) { dead = true; break; }
                }
            }
            if (dead) continue;
            Legs legs(n);
            std::function<void(std::size_t, const Rational&)> rec =
                [&](std::size_t i, const Rational& c) {
                    if (i == n) {
                        r.add_term(legs, c);
                        return;
                    }
                    for (const auto& [k, m] : legprod[i]) {
                        legs[i] = m;
                        rec(i + 1, c * k);
                    }
                };
            rec(0, cx * cy * sign);
        }
    }
    return r;
}

GradedTensor apply_leg(const GradedTensor& t, std::size_t i,
                       const std::function<GradedTensor(const SuperMonomial&)>& f,
                       const std::vector<LegKind>& replacement_kinds) {
    std::vector<LegKind> shape;
    shape.insert(shape.end(), t.shape().begin(), t.shape().begin() + static_cast<long>(i));
    shape.insert(shape.end(), replacement_kinds.begin(), replacement_kinds.end());
    shape.insert(shape.end(), t.shape().begin() + static_cast<long>(i) + 1, t.shape().end());
    GradedTensor r(shape);
    for (const auto& [legs, c] : t.terms()) {
        GradedTensor img = f(legs[i]);
        if (img.shape() != replacement_kinds)
            throw std::invalid_argument("apply_leg: image shape mismatch");
        for (const auto& [il, ic] : img.terms()) {
            Legs out;
            out.reserve(shape.size());
            out.insert(out.end(), legs.begin(), legs.begin() + static_cast<long>(i));
            out.insert(out.end(), il.begin(), il.end());
            out.insert(out.end(), legs.begin() + static_cast<long>(i) + 1, legs.end());
            r.add_term(out, c * ic);
        }
    }
    return r;
}

GradedTensor merge_legs(const GradedTensor& t, std::size_t i) {
    if (i + 1 >= t.arity()) throw std::invalid_argument("merge_legs: no adjacent leg");
    if (t.shape()[i] != t.shape()[i + 1])
        throw std::invalid_argument("merge_legs: kind mismatch");
    LegKind kind = t.shape()[i];
    std::vector<LegKind> shape = t.shape();
    shape.erase(shape.begin() + static_cast<long>(i) + 1);
    GradedTensor r(shape);
    for (const auto& [legs, c] : t.terms()) {
        std::vector<std::pair<Rational, SuperMonomial>> prod;
        if (kind == LegKind::F) {
            auto p = mono_mul(legs[i], legs[i + 1]);
            if (!p) continue;
            prod.push_back({Rational(p->first), p->second});
        } else {
            prod = pbw_mul_mono(legs[i], legs[i + 1]);
        }
        for (const auto& [k, m] : prod) {
            Legs out;
            out.reserve(shape.size());
            out.insert(out.end(), legs.begin(), legs.begin() + static_cast<long>(i));
            out.push_back(m);
            out.insert(out.end(), legs.begin() + static_cast<long>(i) + 2, legs.end());
            r.add_term(out, c * k);
        }
    }
    return r;
}

} // namespace hs1
