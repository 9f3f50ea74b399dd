#pragma once

#include "hs1/superpoly.hpp"

#include <functional>
#include <map>
#include <vector>

namespace hs1 {

// Which algebra a tensor leg lives in: F legs multiply supercommutatively,
// U legs by the enveloping-algebra (PBW) product.
enum class LegKind : std::uint8_t { F, U };

using Legs = std::vector<SuperMonomial>;

struct LegsLess {
    bool operator()(const Legs& x, const Legs& y) const {
        MonoLess less;
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
            if (less(x[i], y[i])) return true;
            if (less(y[i], x[i])) return false;
        }
        return x.size() < y.size();
    }
};

inline bool legs_parity(const Legs& legs, std::size_t from, std::size_t to) {
    bool p = false;
    for (std::size_t i = from; i < to; ++i) p ^= legs[i].parity();
    return p;
}

// Parity-graded tensor with monomial legs, so every leg carries a definite
// parity and Koszul signs are well defined.
class GradedTensor {
public:
    using TermMap = std::map<Legs, Rational, LegsLess>;

    GradedTensor() = default;
    explicit GradedTensor(std::vector<LegKind> shape) : shape_(std::move(shape)) {}

    static GradedTensor unit(std::vector<LegKind> shape) {
        GradedTensor t(std::move(shape));
        t.add_term(Legs(t.shape_.size()), Rational(1));
        return t;
    }

    const std::vector<LegKind>& shape() const { return shape_; }
    std::size_t arity() const { return shape_.size(); }
    // rvalue overload keeps `for (... : f(...).terms())` safe from dangling
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const GradedTensor& o) const {
        return shape_ == o.shape_ && terms_ == o.terms_;
    }

    void add_term(const Legs& legs, const Rational& c) {
        if (c == 0) return;
        if (legs.size() != shape_.size()) throw std::invalid_argument("leg count mismatch");
        auto it = terms_.find(legs);
        if (it == terms_.end()) {
            terms_.emplace(legs, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GradedTensor& operator+=(const GradedTensor& o) {
        check_shape(o);
        for (const auto& [l, c] : o.terms_) add_term(l, c);
        return *this;
    }
    GradedTensor& operator-=(const GradedTensor& o) {
        check_shape(o);
        for (const auto& [l, c] : o.terms_) add_term(l, -c);
        return *this;
    }
    friend GradedTensor operator+(GradedTensor x, const GradedTensor& y) { return x += y; }
    friend GradedTensor operator-(GradedTensor x, const GradedTensor& y) { return x -= y; }
    friend GradedTensor operator-(const GradedTensor& x) {
        GradedTensor r(x.shape_);
        for (const auto& [l, c] : x.terms_) r.terms_.emplace(l, -c);
        return r;
    }
    friend GradedTensor operator*(const Rational& c, const GradedTensor& x) {
        GradedTensor r(x.shape_);
        if (c == 0) return r;
        for (const auto& [l, k] : x.terms_) r.terms_.emplace(l, c * k);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [legs, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1) s += rat_str(a) + "*";
            for (std::size_t i = 0; i < legs.size(); ++i) {
                if (i) s += " (x) ";
                s += legs[i].str();
            }
        }
        return s;
    }

private:
    void check_shape(const GradedTensor& o) const {
        if (shape_ != o.shape_) throw std::invalid_argument("tensor shape mismatch");
    }

    std::vector<LegKind> shape_;
    TermMap terms_;
};

// Outer product of polynomials placed into legs (bilinear, no sign).
GradedTensor tensor_of(const std::vector<SuperPoly>& polys, std::vector<LegKind> shape);

// Koszul-signed leg-wise product: on homogeneous terms
//   (x_1 (x) ... (x) x_n)(y_1 (x) ... (x) y_n)
//     = (-1)^{sum_{i<j} |y_i||x_j|} x_1y_1 (x) ... (x) x_ny_n,
// with F legs multiplied supercommutatively and U legs by the PBW product.
GradedTensor tensor_mul(const GradedTensor& s, const GradedTensor& t);

// Replace leg i by the expansion f(leg_i); the replacement may have any arity
// (kinds supplied by the caller).  All structure maps used here are parity
// preserving, so no Koszul sign arises.
GradedTensor apply_leg(const GradedTensor& t, std::size_t i,
                       const std::function<GradedTensor(const SuperMonomial&)>& f,
                       const std::vector<LegKind>& replacement_kinds);

// Multiply adjacent legs i and i+1 inside each term (both legs of kind `kind`).
GradedTensor merge_legs(const GradedTensor& t, std::size_t i);

} // namespace hs1
