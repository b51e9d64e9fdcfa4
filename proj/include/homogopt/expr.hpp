#ifndef HOMOGOPT_EXPR_HPP
#define HOMOGOPT_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homogopt/errors.hpp"

namespace homogopt {

enum class ExprOp {
    Constant,
    Variable,
    Neg,
    Sin,
    Cos,
    Exp,
    Sqrt,
    Abs,
    Add,
    Sub,
    Mul,
    Div,
    Pow, // constant integer exponent only
};

class ExprNode;
using ExprHandle = std::shared_ptr<const ExprNode>;

/// Immutable node of an expression tree. Build through the factory
/// functions below; they fold constant subtrees (0*e, e+0, const op const).
class ExprNode {
public:
    ExprOp op;
    double constant = 0.0; // Constant
    int var = -1;          // Variable: index into the declared variable list
    std::string var_name;  // Variable: display name
    int exponent = 0;      // Pow
    ExprHandle a, b;       // children; unary ops use `a` only

    explicit ExprNode(ExprOp o) : op(o) {}
};

namespace exprs {
ExprHandle constant(double value);
ExprHandle variable(int index, std::string name);
ExprHandle neg(ExprHandle x);
ExprHandle sin(ExprHandle x);
ExprHandle cos(ExprHandle x);
ExprHandle exp(ExprHandle x);
ExprHandle sqrt(ExprHandle x);
ExprHandle abs(ExprHandle x);
ExprHandle add(ExprHandle lhs, ExprHandle rhs);
ExprHandle sub(ExprHandle lhs, ExprHandle rhs);
ExprHandle mul(ExprHandle lhs, ExprHandle rhs);
ExprHandle div(ExprHandle lhs, ExprHandle rhs);
ExprHandle pow(ExprHandle base, int exponent);
} // namespace exprs

/// An expression together with its declared (ordered) variable list.
struct Expression {
    ExprHandle root;
    std::vector<std::string> variables;

    int dimension() const { return static_cast<int>(variables.size()); }
};

/// Parse `text` against the declared variables.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' integer)?
///   atom   := number | ident | ident '(' expr ')' | '(' expr ')' | '-' atom
/// Function idents: sin, cos, exp, sqrt, abs.
///
/// Throws ParseError (with byte offset) on malformed input and on
/// identifiers that are neither declared variables nor known functions.
Expression parse_expression(std::string_view text, std::vector<std::string> variables);

/// Evaluate at `point` (length must equal the variable count). Division by
/// zero, sqrt of a negative, and non-finite results throw DomainError.
double evaluate(const Expression& e, std::span<const double> point);

/// Exact symbolic partial derivative with respect to `variable`.
/// Differentiating abs is rejected with DomainError.
Expression differentiate(const Expression& e, std::string_view variable);

/// Render to text that re-parses to a structurally identical tree.
std::string to_string(const Expression& e);

bool structurally_equal(const Expression& lhs, const Expression& rhs);
bool structurally_equal(const ExprHandle& lhs, const ExprHandle& rhs);

} // namespace homogopt

#endif
