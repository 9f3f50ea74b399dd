#pragma once

#include "hs1/bicross.hpp"

#include <memory>
#include <variant>

namespace hs1 {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Abstract syntax over the CLI grammar: rationals, generators (a2, b1, ..., X..W),
// +, -, *, ^, the tensor separator "(x)" and the H pair separator "#".
struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
    enum class Op { num, gen, add, sub, mul, pow, neg, tensor, hpair };
    Op op;
    Rational value;          // num
    std::string name;        // gen
    std::size_t pos = 0;     // for error reporting
    int exponent = 0;        // pow
    std::vector<ExprPtr> kids;
};

ExprPtr parse_expression(const std::string& text);

// Evaluated expression: scalars promote into the algebra they meet.
struct TensorValue; // tensor with possibly unpinned leg kinds

struct EValue {
    std::variant<Rational, FElement, UEnvElement, HElement, GradedTensor> v;
};

EValue eval_expression(const ExprPtr& e);

FElement parse_f(const std::string& text);
UEnvElement parse_u(const std::string& text);
HElement parse_h(const std::string& text);
GradedTensor parse_tensor(const std::string& text);

// F or U element, decided by the generator families present.
std::variant<FElement, UEnvElement> parse_element(const std::string& text);

} // namespace hs1
