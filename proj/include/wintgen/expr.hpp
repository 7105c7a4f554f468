#pragma once

#include <memory>
#include <string>

#include "wintgen/jet.hpp"

namespace wintgen {

// Scalar expressions of (u,v), parsed once and evaluated many times.
//
// Grammar (EBNF, also documented in the README):
//
//   expr    = term   { ("+" | "-") term } ;
//   term    = factor { ("*" | "/") factor } ;
//   factor  = "-" factor | power ;
//   power   = atom { "^" exponent } ;            (* left-associative *)
//   exponent= "-" exponent | atom ;
//   atom    = number | "u" | "v" | "pi" | "e"
//           | func "(" expr ")" | "(" expr ")" ;
//   func    = "sin" | "cos" | "tan" | "exp" | "log" | "sqrt" | "abs" ;
//
// Precedence: pow > unary minus > *,/ > +,-. Number literals are base-10
// doubles. Expressions are immutable after parsing; evaluation is pure and
// reentrant.

enum class UnaryOp { Neg, Sin, Cos, Tan, Exp, Log, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Const, VarU, VarV, Unary, Binary } kind;

    // Const
    double value = 0.0;
    std::string const_name;  // "pi" / "e" when parsed from the named literal

    // Unary / Binary
    UnaryOp uop = UnaryOp::Neg;
    BinaryOp bop = BinaryOp::Add;
    ExprPtr lhs;  // unary child lives here
    ExprPtr rhs;
};

class Expression {
  public:
    Expression() = default;
    explicit Expression(ExprPtr root) : root_(std::move(root)) {}

    bool empty() const { return root_ == nullptr; }
    const ExprPtr& root() const { return root_; }

    // Exact value and partials at (u,v). Throws DomainError when the point
    // leaves the smooth domain of some sub-expression.
    ScalarJet2 eval_jet(double u, double v) const;
    double eval(double u, double v) const { return eval_jet(u, v).v; }

    // Prints with minimal parentheses; parsing the result yields a
    // structurally identical tree.
    std::string to_string() const;

    bool structurally_equal(const Expression& other) const;

    bool depends_on_u() const;

    // Construction helpers for programmatic assembly (used by the Vranceanu
    // family builders and the fuzz suites).
    static Expression constant(double c);
    static Expression named_constant(const std::string& name);  // "pi" or "e"
    static Expression var_u();
    static Expression var_v();
    static Expression unary(UnaryOp op, const Expression& x);
    static Expression binary(BinaryOp op, const Expression& a, const Expression& b);

  private:
    ExprPtr root_;
};

// Parses UTF-8 text under the grammar above. Throws SyntaxError (with byte
// offset) on malformed input or unknown identifiers.
Expression parse_expression(const std::string& text);

inline Expression operator+(const Expression& a, const Expression& b) {
    return Expression::binary(BinaryOp::Add, a, b);
}
inline Expression operator-(const Expression& a, const Expression& b) {
    return Expression::binary(BinaryOp::Sub, a, b);
}
inline Expression operator*(const Expression& a, const Expression& b) {
    return Expression::binary(BinaryOp::Mul, a, b);
}
inline Expression operator/(const Expression& a, const Expression& b) {
    return Expression::binary(BinaryOp::Div, a, b);
}
inline Expression operator-(const Expression& a) {
    return Expression::unary(UnaryOp::Neg, a);
}

}  // namespace wintgen
