#ifndef OPMFP_EXPR_HPP
#define OPMFP_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "space.hpp"

namespace opmfp {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { Add, Sub, Mul, Div };
enum class Func { Min, Max, Abs };

/// Immutable AST for the small arithmetic language used to define coupled
/// maps on the real-vector backend: decimal literals, variables x1..xn and
/// y1..yn, binary + - * /, unary -, min/max/abs, parentheses.
class Expr {
public:
    struct Number { double value; };
    struct Var { bool is_y; int index; };  // index is 1-based
    struct Neg { ExprPtr operand; };
    struct Binary { BinOp op; ExprPtr lhs; ExprPtr rhs; };
    struct Call { Func fn; std::vector<ExprPtr> args; };
    using Node = std::variant<Number, Var, Neg, Binary, Call>;

    explicit Expr(Node n) : node_(std::move(n)) {}
    const Node& node() const { return node_; }

private:
    Node node_;
};

/// Syntax or scoping problem in an expression; `offset` is the byte offset
/// of the offending token in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t offset, const std::string& message)
        : std::runtime_error("at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Parses `text` against the given space dimension. Precedence: unary minus
/// binds tighter than * and /, which bind tighter than + and -; binary
/// operators are left-associative.
ExprPtr parse_expr(std::string_view text, int dimension);

/// Evaluates with x bound to x1..xn and y to y1..yn. Division by zero
/// throws EvalError.
double evaluate(const Expr& e, const Vec& x, const Vec& y);

/// Fully parenthesized rendering; parse_expr(to_string(e)) reproduces the
/// tree structurally.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

} // namespace opmfp

#endif
