#pragma once

#include "hs1/monomial.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace hs1 {

// Element of the supercommutative polynomial ring over exact rationals.
// Invariant: no zero coefficients stored; terms keyed by canonical monomials
// in the deterministic term order.
class SuperPoly {
public:
    using TermMap = std::map<SuperMonomial, Rational, MonoLess>;

    SuperPoly() = default;
    explicit SuperPoly(const Rational& c) {
        if (c != 0) terms_[one_monomial()] = c;
    }
    SuperPoly(const Rational& c, const SuperMonomial& m) {
        if (c != 0) terms_[m] = c;
    }

    static SuperPoly zero() { return SuperPoly(); }
    static SuperPoly one() { return SuperPoly(Rational(1)); }
    static SuperPoly gen(GeneratorId g, int exp = 1) {
        return SuperPoly(Rational(1), gen_monomial(g, exp));
    }

    // rvalue overload keeps `for (... : f(...).terms())` safe from dangling
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const SuperPoly& o) const { return terms_ == o.terms_; }

    void add_term(const SuperMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SuperPoly& operator+=(const SuperPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SuperPoly& operator-=(const SuperPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SuperPoly operator+(SuperPoly x, const SuperPoly& y) { return x += y; }
    friend SuperPoly operator-(SuperPoly x, const SuperPoly& y) { return x -= y; }
    friend SuperPoly operator-(const SuperPoly& x) {
        SuperPoly r;
        for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend SuperPoly operator*(const SuperPoly& x, const SuperPoly& y) {
        SuperPoly r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                auto p = mono_mul(mx, my);
                if (!p) continue;
                r.add_term(p->second, cx * cy * p->first);
            }
        return r;
    }
    SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }

    friend SuperPoly operator*(const Rational& c, const SuperPoly& x) {
        SuperPoly r;
        if (c == 0) return r;
        for (const auto& [m, k] : x.terms_) r.terms_.emplace(m, c * k);
        return r;
    }
    friend SuperPoly operator*(const SuperPoly& x, const Rational& c) { return c * x; }

    SuperPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative power of polynomial");
        SuperPoly r = one();
        for (int k = 0; k < n; ++k) r *= *this;
        return r;
    }

    // Parity of a homogeneous element; throws on mixed parity.
    bool parity() const {
        if (terms_.empty()) return false;
        bool p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) throw std::domain_error("mixed-parity element");
        return p;
    }
    bool parity_homogeneous() const {
        if (terms_.empty()) return true;
        bool p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) return false;
        return true;
    }

    SuperPoly even_part() const { return parity_component(false); }
    SuperPoly odd_part() const { return parity_component(true); }
    SuperPoly parity_component(bool odd) const {
        SuperPoly r;
        for (const auto& [m, c] : terms_)
            if (m.parity() == odd) r.terms_.emplace(m, c);
        return r;
    }
    SuperPoly weight_component(int w) const {
        SuperPoly r;
        for (const auto& [m, c] : terms_)
            if (m.weight() == w) r.terms_.emplace(m, c);
        return r;
    }

    Rational constant_term() const {
        auto it = terms_.find(one_monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (m.is_one()) os << rat_str(a);
            else if (a == 1) os << m.str();
            else os << rat_str(a) << "*" << m.str();
        }
        return os.str();
    }

private:
    TermMap terms_;
};

// Per-term grading report: parity, weight, bc-charge of each term.
struct GradingEntry {
    SuperMonomial mono;
    Rational coeff;
    bool odd;
    int weight;
    int bc_charge;
};

inline std::vector<GradingEntry> grading(const SuperPoly& x) {
    std::vector<GradingEntry> r;
    r.reserve(x.term_count());
    for (const auto& [m, c] : x.terms())
        r.push_back({m, c, m.parity(), m.weight(), m.bc_charge()});
    return r;
}

inline bool weight_homogeneous(const SuperPoly& x, int w) {
    for (const auto& [m, c] : x.terms())
        if (m.weight() != w) return false;
    return true;
}

// Multiplicative inverse of an even element of the form
// (invertible monomial) * (1 + nilpotent); finite geometric series.
inline SuperPoly invert_even(const SuperPoly& p, int max_steps = 200) {
    if (p.is_zero()) throw std::domain_error("inverting zero");
    for (const auto& [m, c] : p.terms()) {
        auto inv = mono_inverse(m);
        if (!inv) continue;
        SuperPoly unit_inv(Rational(1) / c, *inv);
        SuperPoly rest = unit_inv * p - SuperPoly::one(); // must be nilpotent
        SuperPoly acc = SuperPoly::one();
        SuperPoly power = SuperPoly::one();
        bool ok = false;
        for (int k = 0; k < max_steps; ++k) {
            power *= rest;
            if (power.is_zero()) { ok = true; break; }
            acc += (k % 2 == 0) ? -power : power;
        }
        if (ok) return acc * unit_inv;
    }
    throw std::domain_error("element is not invertible: " + p.str());
}

// Coefficient of a deformation parameter, parameter written on the left.
// For an even parameter this is the coefficient of t^1; for an odd parameter
// the tau factor is moved to the front of the odd factor sequence first.
inline SuperPoly derivative_at_zero(const SuperPoly& p, GeneratorId param) {
    SuperPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (!param.odd()) {
            SuperMonomial rest = m;
            bool found = false;
            for (auto it = rest.even.begin(); it != rest.even.end(); ++it) {
                if (it->first == param) {
                    if (it->second != 1)
                        throw std::domain_error("parameter power > 1 in derivative");
                    rest.even.erase(it);
                    found = true;
                    break;
                }
            }
            if (found) r.add_term(rest, c);
        } else {
            SuperMonomial rest = m;
            for (std::size_t k = 0; k < rest.odd.size(); ++k) {
                if (rest.odd[k] == param) {
                    int sign = (k % 2 == 0) ? 1 : -1; // crossings to reach the front
                    rest.odd.erase(rest.odd.begin() + static_cast<long>(k));
                    r.add_term(rest, c * sign);
                    break;
                }
            }
        }
    }
    return r;
}

} // namespace hs1
