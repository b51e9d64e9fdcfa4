#include "homogopt/expr.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace homogopt {

namespace exprs {

namespace {
bool is_const(const ExprHandle& e, double v) {
    return e->op == ExprOp::Constant && e->constant == v;
}

ExprHandle unary(ExprOp op, ExprHandle x, double (*fold)(double)) {
    if (x->op == ExprOp::Constant) return constant(fold(x->constant));
    auto n = std::make_shared<ExprNode>(op);
    n->a = std::move(x);
    return n;
}
} // namespace

ExprHandle constant(double value) {
    auto n = std::make_shared<ExprNode>(ExprOp::Constant);
    n->constant = value;
    return n;
}

ExprHandle variable(int index, std::string name) {
    auto n = std::make_shared<ExprNode>(ExprOp::Variable);
    n->var = index;
    n->var_name = std::move(name);
    return n;
}

ExprHandle neg(ExprHandle x) {
    return unary(ExprOp::Neg, std::move(x), [](double v) { return -v; });
}
ExprHandle sin(ExprHandle x) {
    return unary(ExprOp::Sin, std::move(x), [](double v) { return std::sin(v); });
}
ExprHandle cos(ExprHandle x) {
    return unary(ExprOp::Cos, std::move(x), [](double v) { return std::cos(v); });
}
ExprHandle exp(ExprHandle x) {
    return unary(ExprOp::Exp, std::move(x), [](double v) { return std::exp(v); });
}
ExprHandle sqrt(ExprHandle x) {
    if (x->op == ExprOp::Constant && x->constant >= 0)
        return constant(std::sqrt(x->constant));
    auto n = std::make_shared<ExprNode>(ExprOp::Sqrt);
    n->a = std::move(x);
    return n;
}
ExprHandle abs(ExprHandle x) {
    return unary(ExprOp::Abs, std::move(x), [](double v) { return std::abs(v); });
}

ExprHandle add(ExprHandle lhs, ExprHandle rhs) {
    if (is_const(lhs, 0.0)) return rhs;
    if (is_const(rhs, 0.0)) return lhs;
    if (lhs->op == ExprOp::Constant && rhs->op == ExprOp::Constant)
        return constant(lhs->constant + rhs->constant);
    auto n = std::make_shared<ExprNode>(ExprOp::Add);
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return n;
}

ExprHandle sub(ExprHandle lhs, ExprHandle rhs) {
    if (is_const(rhs, 0.0)) return lhs;
    if (lhs->op == ExprOp::Constant && rhs->op == ExprOp::Constant)
        return constant(lhs->constant - rhs->constant);
    if (is_const(lhs, 0.0)) return neg(std::move(rhs));
    auto n = std::make_shared<ExprNode>(ExprOp::Sub);
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return n;
}

ExprHandle mul(ExprHandle lhs, ExprHandle rhs) {
    if (is_const(lhs, 0.0) || is_const(rhs, 0.0)) return constant(0.0);
    if (is_const(lhs, 1.0)) return rhs;
    if (is_const(rhs, 1.0)) return lhs;
    if (lhs->op == ExprOp::Constant && rhs->op == ExprOp::Constant)
        return constant(lhs->constant * rhs->constant);
    auto n = std::make_shared<ExprNode>(ExprOp::Mul);
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return n;
}

ExprHandle div(ExprHandle lhs, ExprHandle rhs) {
    if (is_const(rhs, 1.0)) return lhs;
    if (lhs->op == ExprOp::Constant && rhs->op == ExprOp::Constant && rhs->constant != 0.0)
        return constant(lhs->constant / rhs->constant);
    auto n = std::make_shared<ExprNode>(ExprOp::Div);
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return n;
}

ExprHandle pow(ExprHandle base, int exponent) {
    if (exponent == 0) return constant(1.0);
    if (exponent == 1) return base;
    if (base->op == ExprOp::Constant)
        return constant(std::pow(base->constant, exponent));
    auto n = std::make_shared<ExprNode>(ExprOp::Pow);
    n->a = std::move(base);
    n->exponent = exponent;
    return n;
}

} // namespace exprs

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    ExprHandle run() {
        ExprHandle e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    ExprHandle parse_expr() {
        ExprHandle e = parse_term();
        for (;;) {
            if (consume('+'))
                e = exprs::add(e, parse_term());
            else if (consume('-'))
                e = exprs::sub(e, parse_term());
            else
                return e;
        }
    }

    ExprHandle parse_term() {
        ExprHandle e = parse_factor();
        for (;;) {
            if (consume('*'))
                e = exprs::mul(e, parse_factor());
            else if (consume('/'))
                e = exprs::div(e, parse_factor());
            else
                return e;
        }
    }

    ExprHandle parse_factor() {
        ExprHandle base = parse_atom();
        if (consume('^')) return exprs::pow(base, parse_integer());
        return base;
    }

    int parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) throw ParseError("expected integer exponent", start);
        int value = 0;
        auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || p != text_.data() + pos_)
            throw ParseError("invalid integer exponent", start);
        return value;
    }

    ExprHandle parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return exprs::neg(parse_atom());
        }
        if (c == '(') {
            ++pos_;
            ExprHandle e = parse_expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprHandle parse_number() {
        std::size_t start = pos_;
        double value = 0.0;
        auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{})
            throw ParseError("invalid number literal", start);
        pos_ = static_cast<std::size_t>(p - text_.data());
        return exprs::constant(value);
    }

    ExprHandle parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));

        if (peek_is('(')) {
            ++pos_;
            ExprHandle arg = parse_expr();
            expect(')', "')'");
            if (name == "sin") return exprs::sin(arg);
            if (name == "cos") return exprs::cos(arg);
            if (name == "exp") return exprs::exp(arg);
            if (name == "sqrt") return exprs::sqrt(arg);
            if (name == "abs") return exprs::abs(arg);
            throw ParseError("unknown function '" + name + "'", start);
        }
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return exprs::variable(static_cast<int>(i), name);
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

std::string format_point(std::span<const double> point) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) os << ", ";
        os << point[i];
    }
    os << ")";
    return os.str();
}

double eval_node(const ExprNode& n, std::span<const double> p) {
    switch (n.op) {
    case ExprOp::Constant: return n.constant;
    case ExprOp::Variable: return p[static_cast<std::size_t>(n.var)];
    case ExprOp::Neg: return -eval_node(*n.a, p);
    case ExprOp::Sin: return std::sin(eval_node(*n.a, p));
    case ExprOp::Cos: return std::cos(eval_node(*n.a, p));
    case ExprOp::Exp: return std::exp(eval_node(*n.a, p));
    case ExprOp::Sqrt: {
        double v = eval_node(*n.a, p);
        if (v < 0.0)
            throw DomainError("sqrt of negative value at " + format_point(p));
        return std::sqrt(v);
    }
    case ExprOp::Abs: return std::abs(eval_node(*n.a, p));
    case ExprOp::Add: return eval_node(*n.a, p) + eval_node(*n.b, p);
    case ExprOp::Sub: return eval_node(*n.a, p) - eval_node(*n.b, p);
    case ExprOp::Mul: return eval_node(*n.a, p) * eval_node(*n.b, p);
    case ExprOp::Div: {
        double d = eval_node(*n.b, p);
        if (d == 0.0)
            throw DomainError("division by zero at " + format_point(p));
        return eval_node(*n.a, p) / d;
    }
    case ExprOp::Pow: {
        double base = eval_node(*n.a, p);
        int e = n.exponent;
        if (e < 0) {
            if (base == 0.0)
                throw DomainError("zero raised to a negative power at " + format_point(p));
            base = 1.0 / base;
            e = -e;
        }
        double r = 1.0;
        double acc = base;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= acc;
            acc *= acc;
        }
        return r;
    }
    }
    assert(false);
    return 0.0;
}

ExprHandle diff_node(const ExprHandle& n, int var) {
    using namespace exprs;
    switch (n->op) {
    case ExprOp::Constant: return constant(0.0);
    case ExprOp::Variable: return constant(n->var == var ? 1.0 : 0.0);
    case ExprOp::Neg: return neg(diff_node(n->a, var));
    case ExprOp::Sin: return mul(cos(n->a), diff_node(n->a, var));
    case ExprOp::Cos: return neg(mul(sin(n->a), diff_node(n->a, var)));
    case ExprOp::Exp: return mul(exp(n->a), diff_node(n->a, var));
    case ExprOp::Sqrt:
        return div(diff_node(n->a, var), mul(constant(2.0), sqrt(n->a)));
    case ExprOp::Abs:
        throw DomainError("abs is not differentiable; it is excluded from the "
                          "differentiable grammar subset");
    case ExprOp::Add: return add(diff_node(n->a, var), diff_node(n->b, var));
    case ExprOp::Sub: return sub(diff_node(n->a, var), diff_node(n->b, var));
    case ExprOp::Mul:
        return add(mul(diff_node(n->a, var), n->b), mul(n->a, diff_node(n->b, var)));
    case ExprOp::Div:
        return div(sub(mul(diff_node(n->a, var), n->b), mul(n->a, diff_node(n->b, var))),
                   mul(n->b, n->b));
    case ExprOp::Pow:
        return mul(mul(constant(static_cast<double>(n->exponent)), pow(n->a, n->exponent - 1)),
                   diff_node(n->a, var));
    }
    assert(false);
    return nullptr;
}

// Precedence levels for the printer: additive 1, multiplicative 2,
// unary minus 3, power 4, atoms 5.
int precedence(const ExprNode& n) {
    switch (n.op) {
    case ExprOp::Add:
    case ExprOp::Sub: return 1;
    case ExprOp::Mul:
    case ExprOp::Div: return 2;
    case ExprOp::Neg: return 3;
    case ExprOp::Pow: return 4;
    default: return 5;
    }
}

bool is_grammar_atom(const ExprNode& n) {
    switch (n.op) {
    case ExprOp::Variable:
    case ExprOp::Sin:
    case ExprOp::Cos:
    case ExprOp::Exp:
    case ExprOp::Sqrt:
    case ExprOp::Abs: return true;
    case ExprOp::Constant: return n.constant >= 0.0; // negative constants print with '-'
    default: return false;
    }
}

void print_node(std::ostringstream& os, const ExprNode& n);

void print_child(std::ostringstream& os, const ExprNode& child, bool parens) {
    if (parens) {
        os << "(";
        print_node(os, child);
        os << ")";
    } else {
        print_node(os, child);
    }
}

void print_number(std::ostringstream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

void print_node(std::ostringstream& os, const ExprNode& n) {
    switch (n.op) {
    case ExprOp::Constant:
        if (n.constant < 0.0) {
            os << "-";
            print_number(os, -n.constant);
        } else {
            print_number(os, n.constant);
        }
        return;
    case ExprOp::Variable: os << n.var_name; return;
    case ExprOp::Neg:
        os << "-";
        // '-' binds a grammar atom, so anything else must be parenthesized
        // or "-x^2" would re-parse as (-x)^2.
        print_child(os, *n.a, !is_grammar_atom(*n.a));
        return;
    case ExprOp::Sin: os << "sin("; print_node(os, *n.a); os << ")"; return;
    case ExprOp::Cos: os << "cos("; print_node(os, *n.a); os << ")"; return;
    case ExprOp::Exp: os << "exp("; print_node(os, *n.a); os << ")"; return;
    case ExprOp::Sqrt: os << "sqrt("; print_node(os, *n.a); os << ")"; return;
    case ExprOp::Abs: os << "abs("; print_node(os, *n.a); os << ")"; return;
    // Binary operators parse left-associative, so a right child at the same
    // precedence level needs parentheses to re-parse to the same tree.
    case ExprOp::Add:
        print_child(os, *n.a, precedence(*n.a) < 1);
        os << " + ";
        print_child(os, *n.b, precedence(*n.b) <= 1);
        return;
    case ExprOp::Sub:
        print_child(os, *n.a, precedence(*n.a) < 1);
        os << " - ";
        print_child(os, *n.b, precedence(*n.b) <= 1);
        return;
    case ExprOp::Mul:
        print_child(os, *n.a, precedence(*n.a) < 2);
        os << "*";
        print_child(os, *n.b, precedence(*n.b) <= 2);
        return;
    case ExprOp::Div:
        print_child(os, *n.a, precedence(*n.a) < 2);
        os << "/";
        print_child(os, *n.b, precedence(*n.b) <= 2);
        return;
    case ExprOp::Pow:
        print_child(os, *n.a, !is_grammar_atom(*n.a));
        os << "^" << n.exponent;
        return;
    }
}

} // namespace

Expression parse_expression(std::string_view text, std::vector<std::string> variables) {
    if (text.empty()) throw ParseError("empty expression", 0);
    if (variables.empty()) throw ConfigError("variable list must be non-empty");
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw ConfigError("duplicate variable name '" + variables[i] + "'");
    Parser parser(text, variables);
    return Expression{parser.run(), std::move(variables)};
}

double evaluate(const Expression& e, std::span<const double> point) {
    if (point.size() != e.variables.size())
        throw ConfigError("point dimension " + std::to_string(point.size()) +
                          " does not match variable count " +
                          std::to_string(e.variables.size()));
    double v = eval_node(*e.root, point);
    if (!std::isfinite(v))
        throw DomainError("non-finite result at " + format_point(point));
    return v;
}

Expression differentiate(const Expression& e, std::string_view variable) {
    int index = -1;
    for (std::size_t i = 0; i < e.variables.size(); ++i)
        if (e.variables[i] == variable) index = static_cast<int>(i);
    if (index < 0)
        throw ConfigError("cannot differentiate with respect to undeclared variable '" +
                          std::string(variable) + "'");
    return Expression{diff_node(e.root, index), e.variables};
}

std::string to_string(const Expression& e) {
    std::ostringstream os;
    print_node(os, *e.root);
    return os.str();
}

bool structurally_equal(const ExprHandle& lhs, const ExprHandle& rhs) {
    if (lhs == rhs) return true;
    if (!lhs || !rhs) return false;
    if (lhs->op != rhs->op) return false;
    switch (lhs->op) {
    case ExprOp::Constant: return lhs->constant == rhs->constant;
    case ExprOp::Variable: return lhs->var == rhs->var;
    case ExprOp::Pow:
        return lhs->exponent == rhs->exponent && structurally_equal(lhs->a, rhs->a);
    default:
        return structurally_equal(lhs->a, rhs->a) && structurally_equal(lhs->b, rhs->b);
    }
}

bool structurally_equal(const Expression& lhs, const Expression& rhs) {
    return lhs.variables == rhs.variables && structurally_equal(lhs.root, rhs.root);
}

} // namespace homogopt
