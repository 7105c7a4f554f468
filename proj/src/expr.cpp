#include "wintgen/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

#include "wintgen/errors.hpp"

namespace wintgen {

namespace {

// ---------------------------------------------------------------- lexer ---

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    double value = 0.0;
    std::size_t offset = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            // mantissa
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < n && s[j] == '.') {
                ++j;
                while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            // exponent, only when the full [eE][+-]?digits pattern is present
            if (j < n && (s[j] == 'e' || s[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < n && (s[k] == '+' || s[k] == '-')) ++k;
                if (k < n && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    ++k;
                    while (k < n && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    j = k;
                }
            }
            const std::string text = s.substr(i, j - i);
            out.push_back({Tok::Number, text, std::strtod(text.c_str(), nullptr), at});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), 0.0, at});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", at);
        }
        out.push_back({k, std::string(1, c), 0.0, at});
        ++i;
    }
    out.push_back({Tok::End, "", 0.0, n});
    return out;
}

// --------------------------------------------------------------- parser ---

ExprPtr make_const(double value, std::string name = "") {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Const;
    n->value = value;
    n->const_name = std::move(name);
    return n;
}

ExprPtr make_var(bool is_u) {
    auto n = std::make_shared<ExprNode>();
    n->kind = is_u ? ExprNode::Kind::VarU : ExprNode::Kind::VarV;
    return n;
}

ExprPtr make_unary(UnaryOp op, ExprPtr x) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Unary;
    n->uop = op;
    n->lhs = std::move(x);
    return n;
}

ExprPtr make_binary(BinaryOp op, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Binary;
    n->bop = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

struct Parser {
    const std::vector<Token>& toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        if (t.kind == Tok::End) throw SyntaxError("unexpected end of input, " + what, t.offset);
        throw SyntaxError("unexpected '" + t.text + "', " + what, t.offset);
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool plus = take().kind == Tok::Plus;
            lhs = make_binary(plus ? BinaryOp::Add : BinaryOp::Sub, lhs, parse_term());
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const bool mul = take().kind == Tok::Star;
            lhs = make_binary(mul ? BinaryOp::Mul : BinaryOp::Div, lhs, parse_factor());
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        if (peek().kind == Tok::Minus) {
            take();
            return negate(parse_factor());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr lhs = parse_atom();
        while (peek().kind == Tok::Caret) {
            take();
            lhs = make_binary(BinaryOp::Pow, lhs, parse_exponent());
        }
        return lhs;
    }

    ExprPtr parse_exponent() {
        if (peek().kind == Tok::Minus) {
            take();
            return negate(parse_exponent());
        }
        return parse_atom();
    }

    // Unary minus on a literal folds into the literal, so printed negative
    // constants re-parse to the same node.
    static ExprPtr negate(ExprPtr x) {
        if (x->kind == ExprNode::Kind::Const && x->const_name.empty())
            return make_const(-x->value);
        return make_unary(UnaryOp::Neg, std::move(x));
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number:
                take();
                return make_const(t.value);
            case Tok::LParen: {
                take();
                ExprPtr inner = parse_expr();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                take();
                return inner;
            }
            case Tok::Ident: {
                const Token id = take();
                if (id.text == "u") return make_var(true);
                if (id.text == "v") return make_var(false);
                if (id.text == "pi") return make_const(M_PI, "pi");
                if (id.text == "e") return make_const(M_E, "e");
                UnaryOp op;
                if (id.text == "sin") op = UnaryOp::Sin;
                else if (id.text == "cos") op = UnaryOp::Cos;
                else if (id.text == "tan") op = UnaryOp::Tan;
                else if (id.text == "exp") op = UnaryOp::Exp;
                else if (id.text == "log") op = UnaryOp::Log;
                else if (id.text == "sqrt") op = UnaryOp::Sqrt;
                else if (id.text == "abs") op = UnaryOp::Abs;
                else throw SyntaxError("unknown identifier '" + id.text + "'", id.offset);
                if (peek().kind != Tok::LParen) fail("expected '(' after function name");
                take();
                ExprPtr arg = parse_expr();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                take();
                return make_unary(op, std::move(arg));
            }
            default:
                fail("expected a number, variable, function call or '('");
        }
    }
};

// -------------------------------------------------------------- printer ---

// Precedence levels: Add/Sub 1, Mul/Div 2, unary minus 3, Pow 4, atoms 5.
int precedence(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Binary:
            switch (n.bop) {
                case BinaryOp::Add:
                case BinaryOp::Sub: return 1;
                case BinaryOp::Mul:
                case BinaryOp::Div: return 2;
                case BinaryOp::Pow: return 4;
            }
            return 1;
        case ExprNode::Kind::Unary:
            return n.uop == UnaryOp::Neg ? 3 : 5;
        case ExprNode::Kind::Const:
            // a bare negative literal would re-lex as unary minus
            return (n.value < 0.0 && n.const_name.empty()) ? 3 : 5;
        default:
            return 5;
    }
}

const char* op_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Pow: return "^";
    }
    return "?";
}

const char* func_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Sin: return "sin";
        case UnaryOp::Cos: return "cos";
        case UnaryOp::Tan: return "tan";
        case UnaryOp::Exp: return "exp";
        case UnaryOp::Log: return "log";
        case UnaryOp::Sqrt: return "sqrt";
        case UnaryOp::Abs: return "abs";
        case UnaryOp::Neg: return "-";
    }
    return "?";
}

// Shortest decimal form that parses back to the same double.
std::string format_literal(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& parent, const ExprNode& child, bool right_side, std::string& out) {
    const int pp = precedence(parent);
    const int cp = precedence(child);
    const bool parens = cp < pp || (cp == pp && right_side);
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprNode::Kind::Const:
            if (!n.const_name.empty()) out += n.const_name;
            else out += format_literal(n.value);
            return;
        case ExprNode::Kind::VarU: out += 'u'; return;
        case ExprNode::Kind::VarV: out += 'v'; return;
        case ExprNode::Kind::Unary:
            if (n.uop == UnaryOp::Neg) {
                out += '-';
                // a nested unary minus is still a valid factor, no parens
                const int cp = precedence(*n.lhs);
                const bool parens = cp < 3;
                if (parens) out += '(';
                print_node(*n.lhs, out);
                if (parens) out += ')';
            } else {
                out += func_name(n.uop);
                out += '(';
                print_node(*n.lhs, out);
                out += ')';
            }
            return;
        case ExprNode::Kind::Binary:
            print_child(n, *n.lhs, false, out);
            out += op_symbol(n.bop);
            print_child(n, *n.rhs, true, out);
            return;
    }
}

// ------------------------------------------------------------ evaluator ---

std::string subexpr_text(const ExprNode& n) {
    std::string s;
    print_node(n, s);
    return s;
}

ScalarJet2 eval_node(const ExprNode& n, double u, double v) {
    switch (n.kind) {
        case ExprNode::Kind::Const: return ScalarJet2::constant(n.value);
        case ExprNode::Kind::VarU: return ScalarJet2::var_u(u);
        case ExprNode::Kind::VarV: return ScalarJet2::var_v(v);
        case ExprNode::Kind::Unary: {
            const ScalarJet2 x = eval_node(*n.lhs, u, v);
            switch (n.uop) {
                case UnaryOp::Neg: return -x;
                case UnaryOp::Sin: return jet_sin(x);
                case UnaryOp::Cos: return jet_cos(x);
                case UnaryOp::Tan: {
                    const double t = std::tan(x.v);
                    if (!std::isfinite(t) || std::abs(t) > 1e150)
                        throw DomainError("tan at a pole", subexpr_text(n));
                    return jet_tan(x);
                }
                case UnaryOp::Exp: return jet_exp(x);
                case UnaryOp::Log:
                    if (!(x.v > 0.0)) throw DomainError("log of non-positive value", subexpr_text(n));
                    return jet_log(x);
                case UnaryOp::Sqrt:
                    if (!(x.v > 0.0)) throw DomainError("sqrt of non-positive value", subexpr_text(n));
                    return jet_sqrt(x);
                case UnaryOp::Abs:
                    if (x.v == 0.0) throw DomainError("abs is not differentiable at 0", subexpr_text(n));
                    return jet_abs(x);
            }
            break;
        }
        case ExprNode::Kind::Binary: {
            const ScalarJet2 a = eval_node(*n.lhs, u, v);
            const ScalarJet2 b = eval_node(*n.rhs, u, v);
            switch (n.bop) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (b.v == 0.0) throw DomainError("division by zero", subexpr_text(n));
                    return a / b;
                case BinaryOp::Pow: {
                    if (b.is_constant()) {
                        const double c = b.v;
                        const bool c_integral = std::nearbyint(c) == c && std::abs(c) < 1e15;
                        if (a.v > 0.0 || (a.v < 0.0 && c_integral) ||
                            (a.v == 0.0 && c_integral && c >= 0.0))
                            return jet_pow_const(a, c);
                        throw DomainError("pow outside smooth domain", subexpr_text(n));
                    }
                    if (!(a.v > 0.0))
                        throw DomainError("pow with variable exponent needs positive base",
                                          subexpr_text(n));
                    return jet_pow(a, b);
                }
            }
            break;
        }
    }
    throw DomainError("malformed expression node");
}

}  // namespace

Expression parse_expression(const std::string& text) {
    const std::vector<Token> toks = lex(text);
    Parser p{toks};
    ExprPtr root = p.parse_expr();
    if (p.peek().kind != Tok::End) p.fail("expected end of input");
    return Expression(std::move(root));
}

ScalarJet2 Expression::eval_jet(double u, double v) const {
    if (!root_) throw DomainError("empty expression");
    ScalarJet2 j = eval_node(*root_, u, v);
    if (!std::isfinite(j.v) || !std::isfinite(j.du) || !std::isfinite(j.dv) ||
        !std::isfinite(j.duu) || !std::isfinite(j.duv) || !std::isfinite(j.dvv))
        throw DomainError("non-finite evaluation", subexpr_text(*root_));
    return j;
}

std::string Expression::to_string() const {
    if (!root_) return "";
    std::string s;
    print_node(*root_, s);
    return s;
}

namespace {
bool nodes_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::Const: return a.value == b.value;
        case ExprNode::Kind::VarU:
        case ExprNode::Kind::VarV: return true;
        case ExprNode::Kind::Unary:
            return a.uop == b.uop && nodes_equal(*a.lhs, *b.lhs);
        case ExprNode::Kind::Binary:
            return a.bop == b.bop && nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    }
    return false;
}
}  // namespace

bool Expression::structurally_equal(const Expression& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return nodes_equal(*root_, *other.root_);
}

namespace {
bool node_uses_u(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::VarU: return true;
        case ExprNode::Kind::Unary: return node_uses_u(*n.lhs);
        case ExprNode::Kind::Binary: return node_uses_u(*n.lhs) || node_uses_u(*n.rhs);
        default: return false;
    }
}
}  // namespace

bool Expression::depends_on_u() const { return root_ && node_uses_u(*root_); }

Expression Expression::constant(double c) {
    if (!std::isfinite(c)) throw InputError("non-finite constant");
    return Expression(make_const(c));
}

Expression Expression::named_constant(const std::string& name) {
    if (name == "pi") return Expression(make_const(M_PI, "pi"));
    if (name == "e") return Expression(make_const(M_E, "e"));
    throw InputError("unknown named constant '" + name + "'");
}

Expression Expression::var_u() { return Expression(make_var(true)); }
Expression Expression::var_v() { return Expression(make_var(false)); }

Expression Expression::unary(UnaryOp op, const Expression& x) {
    if (x.empty()) throw InputError("empty operand");
    // Route unary minus through the same literal folding the parser applies,
    // so built trees print/re-parse identically to parsed ones.
    if (op == UnaryOp::Neg) return Expression(Parser::negate(x.root()));
    return Expression(make_unary(op, x.root()));
}

Expression Expression::binary(BinaryOp op, const Expression& a, const Expression& b) {
    if (a.empty() || b.empty()) throw InputError("empty operand");
    return Expression(make_binary(op, a.root(), b.root()));
}

}  // namespace wintgen
