#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace opmfp {

namespace {

class Parser {
public:
    Parser(std::string_view text, int dimension) : text_(text), dim_(dimension) {}

    ExprPtr run() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    int dim_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr sum() {
        ExprPtr lhs = product();
        for (;;) {
            if (eat('+'))
                lhs = std::make_shared<Expr>(Expr::Binary{BinOp::Add, lhs, product()});
            else if (eat('-'))
                lhs = std::make_shared<Expr>(Expr::Binary{BinOp::Sub, lhs, product()});
            else
                return lhs;
        }
    }

    ExprPtr product() {
        ExprPtr lhs = factor();
        for (;;) {
            if (eat('*'))
                lhs = std::make_shared<Expr>(Expr::Binary{BinOp::Mul, lhs, factor()});
            else if (eat('/'))
                lhs = std::make_shared<Expr>(Expr::Binary{BinOp::Div, lhs, factor()});
            else
                return lhs;
        }
    }

    // Unary minus sits here, above * and /, so -x1*x1 is (-x1)*x1.
    ExprPtr factor() {
        if (eat('-')) return std::make_shared<Expr>(Expr::Neg{factor()});
        return primary();
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr inner = sum();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    ExprPtr number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            size_t mark = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // 'e' was not an exponent
            }
        }
        double value = 0.0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + pos_)
            throw ParseError(start, "malformed number");
        return std::make_shared<Expr>(Expr::Number{value});
    }

    ExprPtr identifier() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "min" || name == "max" || name == "abs") {
            Func fn = name == "min" ? Func::Min : name == "max" ? Func::Max : Func::Abs;
            size_t arity = fn == Func::Abs ? 1 : 2;
            if (!eat('(')) throw ParseError(pos_, name + " must be followed by '('");
            std::vector<ExprPtr> args;
            args.push_back(sum());
            while (eat(',')) args.push_back(sum());
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            if (args.size() != arity)
                throw ParseError(start, name + " takes " + std::to_string(arity) + " argument(s), got " +
                                            std::to_string(args.size()));
            return std::make_shared<Expr>(Expr::Call{fn, std::move(args)});
        }
        if ((name[0] == 'x' || name[0] == 'y') && name.size() > 1) {
            int index = 0;
            auto res = std::from_chars(name.data() + 1, name.data() + name.size(), index);
            if (res.ec == std::errc() && res.ptr == name.data() + name.size()) {
                if (index < 1 || index > dim_)
                    throw ParseError(start, "variable " + name + " out of range for dimension " +
                                                std::to_string(dim_));
                return std::make_shared<Expr>(Expr::Var{name[0] == 'y', index});
            }
        }
        throw ParseError(start, "unknown identifier '" + name + "'");
    }
};

struct Evaluator {
    const Vec& x;
    const Vec& y;

    double operator()(const Expr::Number& n) const { return n.value; }
    double operator()(const Expr::Var& v) const {
        return (v.is_y ? y : x)[static_cast<size_t>(v.index - 1)];
    }
    double operator()(const Expr::Neg& n) const { return -eval(*n.operand); }
    double operator()(const Expr::Binary& b) const {
        double l = eval(*b.lhs);
        double r = eval(*b.rhs);
        switch (b.op) {
            case BinOp::Add: return l + r;
            case BinOp::Sub: return l - r;
            case BinOp::Mul: return l * r;
            case BinOp::Div:
                if (r == 0.0) throw EvalError("division by zero");
                return l / r;
        }
        return 0.0;
    }
    double operator()(const Expr::Call& c) const {
        switch (c.fn) {
            case Func::Min: return std::min(eval(*c.args[0]), eval(*c.args[1]));
            case Func::Max: return std::max(eval(*c.args[0]), eval(*c.args[1]));
            case Func::Abs: return std::abs(eval(*c.args[0]));
        }
        return 0.0;
    }

    double eval(const Expr& e) const { return std::visit(*this, e.node()); }
};

struct Printer {
    std::ostringstream& out;

    void operator()(const Expr::Number& n) const {
        out.precision(17);
        out << n.value;
    }
    void operator()(const Expr::Var& v) const { out << (v.is_y ? 'y' : 'x') << v.index; }
    void operator()(const Expr::Neg& n) const {
        out << "(-";
        print(*n.operand);
        out << ')';
    }
    void operator()(const Expr::Binary& b) const {
        out << '(';
        print(*b.lhs);
        switch (b.op) {
            case BinOp::Add: out << " + "; break;
            case BinOp::Sub: out << " - "; break;
            case BinOp::Mul: out << " * "; break;
            case BinOp::Div: out << " / "; break;
        }
        print(*b.rhs);
        out << ')';
    }
    void operator()(const Expr::Call& c) const {
        switch (c.fn) {
            case Func::Min: out << "min("; break;
            case Func::Max: out << "max("; break;
            case Func::Abs: out << "abs("; break;
        }
        for (size_t i = 0; i < c.args.size(); ++i) {
            if (i) out << ", ";
            print(*c.args[i]);
        }
        out << ')';
    }

    void print(const Expr& e) const { std::visit(*this, e.node()); }
};

} // namespace

ExprPtr parse_expr(std::string_view text, int dimension) {
    return Parser(text, dimension).run();
}

double evaluate(const Expr& e, const Vec& x, const Vec& y) {
    return Evaluator{x, y}.eval(e);
}

std::string to_string(const Expr& e) {
    std::ostringstream out;
    Printer{out}.print(e);
    return out.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
    const auto& na = a.node();
    const auto& nb = b.node();
    if (na.index() != nb.index()) return false;
    if (const auto* n = std::get_if<Expr::Number>(&na))
        return n->value == std::get<Expr::Number>(nb).value;
    if (const auto* v = std::get_if<Expr::Var>(&na)) {
        const auto& w = std::get<Expr::Var>(nb);
        return v->is_y == w.is_y && v->index == w.index;
    }
    if (const auto* n = std::get_if<Expr::Neg>(&na))
        return structurally_equal(*n->operand, *std::get<Expr::Neg>(nb).operand);
    if (const auto* x = std::get_if<Expr::Binary>(&na)) {
        const auto& y = std::get<Expr::Binary>(nb);
        return x->op == y.op && structurally_equal(*x->lhs, *y.lhs) && structurally_equal(*x->rhs, *y.rhs);
    }
    const auto& ca = std::get<Expr::Call>(na);
    const auto& cb = std::get<Expr::Call>(nb);
    if (ca.fn != cb.fn || ca.args.size() != cb.args.size()) return false;
    for (size_t i = 0; i < ca.args.size(); ++i)
        if (!structurally_equal(*ca.args[i], *cb.args[i])) return false;
    return true;
}

} // namespace opmfp
