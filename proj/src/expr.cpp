#include "hs1/expr.hpp"

#include <cctype>

namespace hs1 {

namespace {

enum class Tok { num, ident, plus, minus, star, caret, lparen, rparen, tensor, hash, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '(' && i + 2 < s.size() && s[i + 1] == 'x' && s[i + 2] == ')') {
            out.push_back({Tok::tensor, "(x)", i});
            i += 3;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '/') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == j + 1) throw ParseError("missing denominator", j);
                out.push_back({Tok::num, s.substr(i, k - i), i});
                i = k;
            } else {
                out.push_back({Tok::num, s.substr(i, j - i), i});
                i = j;
            }
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '\'')) ++j;
            out.push_back({Tok::ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
        case '+': out.push_back({Tok::plus, "+", i}); break;
        case '-': out.push_back({Tok::minus, "-", i}); break;
        case '*': out.push_back({Tok::star, "*", i}); break;
        case '^': out.push_back({Tok::caret, "^", i}); break;
        case '(': out.push_back({Tok::lparen, "(", i}); break;
        case ')': out.push_back({Tok::rparen, ")", i}); break;
        case '#': out.push_back({Tok::hash, "#", i}); break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    Token take() { return toks[at++]; }
    bool accept(Tok k) {
        if (peek().kind == k) { ++at; return true; }
        return false;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    static ExprPtr node(Expr::Op op, std::size_t pos) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->pos = pos;
        return e;
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_hterm();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Token t = take();
            ExprPtr rhs = parse_hterm();
            ExprPtr e = node(t.kind == Tok::plus ? Expr::Op::add : Expr::Op::sub, t.pos);
            e->kids = {lhs, rhs};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parse_hterm() {
        ExprPtr lhs = parse_tensor_term();
        if (peek().kind == Tok::hash) {
            Token t = take();
            ExprPtr rhs = parse_tensor_term();
            if (peek().kind == Tok::hash) throw ParseError("chained '#'", peek().pos);
            ExprPtr e = node(Expr::Op::hpair, t.pos);
            e->kids = {lhs, rhs};
            return e;
        }
        return lhs;
    }

    ExprPtr parse_tensor_term() {
        ExprPtr first = parse_product();
        if (peek().kind != Tok::tensor) return first;
        ExprPtr e = node(Expr::Op::tensor, peek().pos);
        e->kids.push_back(first);
        while (accept(Tok::tensor)) e->kids.push_back(parse_product());
        return e;
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        while (peek().kind == Tok::star) {
            Token t = take();
            ExprPtr rhs = parse_unary();
            ExprPtr e = node(Expr::Op::mul, t.pos);
            e->kids = {lhs, rhs};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (peek().kind == Tok::minus) {
            Token t = take();
            ExprPtr e = node(Expr::Op::neg, t.pos);
            e->kids = {parse_unary()};
            return e;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (accept(Tok::caret)) {
            bool negative = accept(Tok::minus);
            if (peek().kind != Tok::num) throw ParseError("expected integer exponent", peek().pos);
            Token t = take();
            if (t.text.find('/') != std::string::npos)
                throw ParseError("exponent must be an integer", t.pos);
            ExprPtr e = node(Expr::Op::pow, t.pos);
            e->exponent = std::stoi(t.text) * (negative ? -1 : 1);
            e->kids = {base};
            return e;
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::num: {
            Token n = take();
            ExprPtr e = node(Expr::Op::num, n.pos);
            e->value = parse_rational(n.text);
            return e;
        }
        case Tok::ident: {
            Token n = take();
            ExprPtr e = node(Expr::Op::gen, n.pos);
            e->name = n.text;
            return e;
        }
        case Tok::lparen: {
            take();
            ExprPtr inner = parse_sum();
            expect(Tok::rparen, "')'");
            return inner;
        }
        default: throw ParseError("expected a term", t.pos);
        }
    }
};

// --- evaluation ----------------------------------------------------------------

// Tensor whose leg kinds may still be undetermined (scalar-only legs).
struct ProtoTensor {
    std::vector<std::optional<LegKind>> kinds;
    std::vector<std::pair<Rational, std::vector<SuperPoly>>> terms;
};

using IValue = std::variant<Rational, FElement, UEnvElement, HElement, ProtoTensor>;

std::string kind_name(const IValue& v) {
    switch (v.index()) {
    case 0: return "scalar";
    case 1: return "F element";
    case 2: return "U element";
    case 3: return "H element";
    default: return "tensor";
    }
}

void unify_kinds(ProtoTensor& a, const ProtoTensor& b, std::size_t pos) {
    if (a.kinds.size() != b.kinds.size()) throw ParseError("tensor arity mismatch", pos);
    for (std::size_t i = 0; i < a.kinds.size(); ++i) {
        if (!a.kinds[i]) a.kinds[i] = b.kinds[i];
        else if (b.kinds[i] && *a.kinds[i] != *b.kinds[i])
            throw ParseError("tensor leg kind mismatch", pos);
    }
}

GradedTensor finalize_tensor(const ProtoTensor& p) {
    std::vector<LegKind> shape;
    shape.reserve(p.kinds.size());
    for (const auto& k : p.kinds) shape.push_back(k.value_or(LegKind::F));
    GradedTensor out(shape);
    for (const auto& [c, legs] : p.terms) out += c * tensor_of(legs, shape);
    return out;
}

IValue eval(const ExprPtr& e);

IValue resolve_generator(const std::string& name, std::size_t pos) {
    if (name.size() == 1) {
        switch (name[0]) {
        case 'X': return UEnvElement::gen(Family::X);
        case 'Y': return UEnvElement::gen(Family::Y);
        case 'Z': return UEnvElement::gen(Family::Z);
        case 'U': return UEnvElement::gen(Family::U);
        case 'V': return UEnvElement::gen(Family::V);
        case 'W': return UEnvElement::gen(Family::W);
        default: break;
        }
    }
    if (name.size() >= 2 && name[0] >= 'a' && name[0] <= 'd') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) { digits = false; break; }
        if (digits) {
            Family fam = static_cast<Family>(name[0] - 'a');
            int idx = std::stoi(name.substr(1));
            return fgen(fam, idx);
        }
    }
    throw ParseError("unknown generator '" + name + "'", pos);
}

HElement to_h(const IValue& v, std::size_t pos) {
    switch (v.index()) {
    case 0: return std::get<Rational>(v) * HElement::unit();
    case 1: return HElement::from_f(std::get<FElement>(v));
    case 2: return HElement::from_u(std::get<UEnvElement>(v));
    case 3: return std::get<HElement>(v);
    default: throw ParseError("cannot use a tensor as an H element", pos);
    }
}

// scalars promote into the algebra of the other operand
IValue promote_scalar(const IValue& v, std::size_t target_index) {
    const Rational& c = std::get<Rational>(v);
    switch (target_index) {
    case 1: return FElement(c);
    case 2: return UEnvElement::scalar(c);
    case 3: return c * HElement::unit();
    default: return v;
    }
}

IValue add_vals(IValue a, IValue b, bool subtract, std::size_t pos) {
    Rational s = subtract ? -1 : 1;
    if (a.index() == 0 && b.index() == 0)
        return std::get<Rational>(a) + s * std::get<Rational>(b);
    if (a.index() == 3 || b.index() == 3) return to_h(a, pos) + (s * to_h(b, pos));
    if (a.index() == 0) a = promote_scalar(a, b.index());
    if (b.index() == 0) b = promote_scalar(b, a.index());
    if (a.index() == 1 && b.index() == 1)
        return std::get<FElement>(a) + s * std::get<FElement>(b);
    if (a.index() == 2 && b.index() == 2)
        return std::get<UEnvElement>(a) + s * std::get<UEnvElement>(b);
    if (a.index() == 4 && b.index() == 4) {
        ProtoTensor pa = std::get<ProtoTensor>(a);
        const ProtoTensor& pb = std::get<ProtoTensor>(b);
        unify_kinds(pa, pb, pos);
        for (const auto& [c, legs] : pb.terms) pa.terms.push_back({s * c, legs});
        return pa;
    }
    throw ParseError("cannot add " + kind_name(a) + " and " + kind_name(b), pos);
}

IValue mul_vals(IValue a, IValue b, std::size_t pos) {
    if (std::holds_alternative<Rational>(a) || std::holds_alternative<Rational>(b)) {
        bool ra = std::holds_alternative<Rational>(a);
        Rational c = ra ? std::get<Rational>(a) : std::get<Rational>(b);
        IValue& other = ra ? b : a;
        switch (other.index()) {
        case 0: return c * std::get<Rational>(other);
        case 1: return c * std::get<FElement>(other);
        case 2: return c * std::get<UEnvElement>(other);
        case 3: return c * std::get<HElement>(other);
        default: {
            ProtoTensor p = std::get<ProtoTensor>(other);
            for (auto& [k, legs] : p.terms) k *= c;
            return p;
        }
        }
    }
    if (a.index() == 3 || b.index() == 3) return h_mul(to_h(a, pos), to_h(b, pos));
    if (a.index() == 1 && b.index() == 1) return std::get<FElement>(a) * std::get<FElement>(b);
    if (a.index() == 2 && b.index() == 2)
        return u_mul(std::get<UEnvElement>(a), std::get<UEnvElement>(b));
    if (a.index() == 4 && b.index() == 4) {
        ProtoTensor pa = std::get<ProtoTensor>(a);
        ProtoTensor pb = std::get<ProtoTensor>(b);
        unify_kinds(pa, pb, pos);
        unify_kinds(pb, pa, pos);
        GradedTensor prod = tensor_mul(finalize_tensor(pa), finalize_tensor(pb));
        ProtoTensor out;
        for (auto k : prod.shape()) out.kinds.push_back(k);
        for (const auto& [legs, c] : prod.terms()) {
            std::vector<SuperPoly> lp;
            for (const auto& m : legs) lp.push_back(SuperPoly(Rational(1), m));
            out.terms.push_back({c, lp});
        }
        return out;
    }
    throw ParseError("cannot multiply " + kind_name(a) + " and " + kind_name(b), pos);
}

IValue eval(const ExprPtr& e) {
    switch (e->op) {
    case Expr::Op::num: return e->value;
    case Expr::Op::gen: return resolve_generator(e->name, e->pos);
    case Expr::Op::add: return add_vals(eval(e->kids[0]), eval(e->kids[1]), false, e->pos);
    case Expr::Op::sub: return add_vals(eval(e->kids[0]), eval(e->kids[1]), true, e->pos);
    case Expr::Op::mul: return mul_vals(eval(e->kids[0]), eval(e->kids[1]), e->pos);
    case Expr::Op::neg: return mul_vals(Rational(-1), eval(e->kids[0]), e->pos);
    case Expr::Op::pow: {
        IValue base = eval(e->kids[0]);
        int n = e->exponent;
        switch (base.index()) {
        case 0: {
            Rational b = std::get<Rational>(base);
            if (n < 0 && b == 0) throw ParseError("division by zero", e->pos);
            Rational r = 1;
            for (int k = 0; k < std::abs(n); ++k) r *= b;
            return n >= 0 ? r : Rational(1) / r;
        }
        case 1: {
            if (n < 0) throw ParseError("negative power of a polynomial", e->pos);
            return std::get<FElement>(base).pow(n);
        }
        case 2: {
            if (n < 0) throw ParseError("negative power of a polynomial", e->pos);
            UEnvElement r = UEnvElement::unit();
            for (int k = 0; k < n; ++k) r = u_mul(r, std::get<UEnvElement>(base));
            return r;
        }
        case 3: {
            if (n < 0) throw ParseError("negative power of an H element", e->pos);
            HElement r = HElement::unit();
            for (int k = 0; k < n; ++k) r = h_mul(r, std::get<HElement>(base));
            return r;
        }
        default: throw ParseError("cannot exponentiate a tensor", e->pos);
        }
    }
    case Expr::Op::tensor: {
        ProtoTensor p;
        std::vector<SuperPoly> legs;
        for (const auto& kid : e->kids) {
            IValue v = eval(kid);
            switch (v.index()) {
            case 0:
                p.kinds.push_back(std::nullopt);
                legs.push_back(SuperPoly(std::get<Rational>(v)));
                break;
            case 1:
                p.kinds.push_back(LegKind::F);
                legs.push_back(std::get<FElement>(v));
                break;
            case 2:
                p.kinds.push_back(LegKind::U);
                legs.push_back(std::get<UEnvElement>(v).p);
                break;
            default: throw ParseError("tensor legs must be F or U elements", kid->pos);
            }
        }
        p.terms.push_back({Rational(1), legs});
        return p;
    }
    case Expr::Op::hpair: {
        IValue l = eval(e->kids[0]);
        IValue r = eval(e->kids[1]);
        FElement a;
        if (std::holds_alternative<Rational>(l)) a = FElement(std::get<Rational>(l));
        else if (l.index() == 1) a = std::get<FElement>(l);
        else throw ParseError("left of '#' must be an F element", e->kids[0]->pos);
        UEnvElement h;
        if (std::holds_alternative<Rational>(r)) h = UEnvElement::scalar(std::get<Rational>(r));
        else if (r.index() == 2) h = std::get<UEnvElement>(r);
        else throw ParseError("right of '#' must be a U element", e->kids[1]->pos);
        return HElement::of(a, h);
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

ExprPtr parse_expression(const std::string& text) {
    Parser p{lex(text)};
    ExprPtr e = p.parse_sum();
    if (p.peek().kind != Tok::end) throw ParseError("trailing input", p.peek().pos);
    return e;
}

EValue eval_expression(const ExprPtr& e) {
    IValue v = eval(e);
    EValue out;
    switch (v.index()) {
    case 0: out.v = std::get<Rational>(v); break;
    case 1: out.v = std::get<FElement>(v); break;
    case 2: out.v = std::get<UEnvElement>(v); break;
    case 3: out.v = std::get<HElement>(v); break;
    default: out.v = finalize_tensor(std::get<ProtoTensor>(v)); break;
    }
    return out;
}

FElement parse_f(const std::string& text) {
    EValue v = eval_expression(parse_expression(text));
    if (std::holds_alternative<Rational>(v.v)) return FElement(std::get<Rational>(v.v));
    if (std::holds_alternative<FElement>(v.v)) return std::get<FElement>(v.v);
    throw ParseError("expected an F element", 0);
}

UEnvElement parse_u(const std::string& text) {
    EValue v = eval_expression(parse_expression(text));
    if (std::holds_alternative<Rational>(v.v))
        return UEnvElement::scalar(std::get<Rational>(v.v));
    if (std::holds_alternative<UEnvElement>(v.v)) return std::get<UEnvElement>(v.v);
    throw ParseError("expected a U element", 0);
}

HElement parse_h(const std::string& text) {
    EValue v = eval_expression(parse_expression(text));
    if (std::holds_alternative<Rational>(v.v)) return std::get<Rational>(v.v) * HElement::unit();
    if (std::holds_alternative<FElement>(v.v))
        return HElement::from_f(std::get<FElement>(v.v));
    if (std::holds_alternative<UEnvElement>(v.v))
        return HElement::from_u(std::get<UEnvElement>(v.v));
    if (std::holds_alternative<HElement>(v.v)) return std::get<HElement>(v.v);
    throw ParseError("expected an H element", 0);
}

GradedTensor parse_tensor(const std::string& text) {
    EValue v = eval_expression(parse_expression(text));
    if (std::holds_alternative<GradedTensor>(v.v)) return std::get<GradedTensor>(v.v);
    throw ParseError("expected a tensor expression", 0);
}

std::variant<FElement, UEnvElement> parse_element(const std::string& text) {
    EValue v = eval_expression(parse_expression(text));
    if (std::holds_alternative<Rational>(v.v)) return FElement(std::get<Rational>(v.v));
    if (std::holds_alternative<FElement>(v.v)) return std::get<FElement>(v.v);
    if (std::holds_alternative<UEnvElement>(v.v)) return std::get<UEnvElement>(v.v);
    throw ParseError("expected an F or U element", 0);
}

} // namespace hs1
