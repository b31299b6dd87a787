#include "dfbvp/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

#include "dfbvp/specfun.hpp"

namespace dfbvp {

namespace {

enum class NodeKind { literal, variable, unary_minus, binary, call };

enum class BinOp { add, sub, mul, div, pow };

enum class Func { ln, exp, sqrt, abs, gamma };

const char* func_name(Func f) {
    switch (f) {
        case Func::ln: return "ln";
        case Func::exp: return "exp";
        case Func::sqrt: return "sqrt";
        case Func::abs: return "abs";
        case Func::gamma: return "gamma";
    }
    return "?";
}

}  // namespace

struct Expr::Node {
    NodeKind kind;
    double literal = 0.0;
    BinOp op = BinOp::add;
    Func func = Func::ln;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_literal(double v) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = NodeKind::literal;
    n->literal = v;
    return n;
}

NodePtr make_variable() {
    auto n = std::make_shared<Expr::Node>();
    n->kind = NodeKind::variable;
    return n;
}

NodePtr make_unary(NodePtr child) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = NodeKind::unary_minus;
    n->lhs = std::move(child);
    return n;
}

NodePtr make_binary(BinOp op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = NodeKind::binary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_call(Func f, NodePtr arg) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = NodeKind::call;
    n->func = f;
    n->lhs = std::move(arg);
    return n;
}

class Parser {
public:
    Parser(std::string_view src, std::string_view var) : src_(src), var_(var) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_space();
        if (pos_ != src_.size()) {
            fail("unexpected trailing input");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            if (consume('+')) {
                lhs = make_binary(BinOp::add, lhs, parse_product());
            } else if (consume('-')) {
                lhs = make_binary(BinOp::sub, lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (consume('*')) {
                lhs = make_binary(BinOp::mul, lhs, parse_unary());
            } else if (consume('/')) {
                lhs = make_binary(BinOp::div, lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) {
            return make_unary(parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (consume('^')) {
            // right-associative; allow a signed exponent like 2^-3
            return make_binary(BinOp::pow, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        const char c = peek();
        if (c == '\0') {
            fail("unexpected end of input");
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_sum();
            if (!consume(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_identifier();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    // decimal literal: digits [ '.' digits ] [ (e|E) [+|-] digits ]
    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                ++pos_;
            }
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    ++pos_;
                }
            } else {
                pos_ = mark;  // the 'e' belongs to something else; not ours
                fail("malformed exponent in numeric literal");
            }
        }
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            pos_ = start;
            fail("malformed numeric literal");
        }
        return make_literal(value);
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == var_) {
            return make_variable();
        }
        Func f;
        if (name == "ln") f = Func::ln;
        else if (name == "exp") f = Func::exp;
        else if (name == "sqrt") f = Func::sqrt;
        else if (name == "abs") f = Func::abs;
        else if (name == "gamma") f = Func::gamma;
        else if (name == "t" || name == "y") {
            pos_ = start;
            fail("variable '" + std::string(name) + "' not allowed here (expected '" +
                 std::string(var_) + "')");
        } else {
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        if (!consume('(')) {
            fail(std::string("function '") + func_name(f) + "' requires an argument list");
        }
        NodePtr arg = parse_sum();
        if (!consume(')')) {
            fail("expected ')' closing the argument of '" + std::string(func_name(f)) + "'");
        }
        return make_call(f, arg);
    }

    std::string_view src_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

double check_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw EvalError(std::string("evaluation produced a non-finite value in ") + what);
    }
    return v;
}

double eval_node(const Expr::Node& n, double x) {
    switch (n.kind) {
        case NodeKind::literal:
            return n.literal;
        case NodeKind::variable:
            return x;
        case NodeKind::unary_minus:
            return -eval_node(*n.lhs, x);
        case NodeKind::binary: {
            const double a = eval_node(*n.lhs, x);
            const double b = eval_node(*n.rhs, x);
            switch (n.op) {
                case BinOp::add: return check_finite(a + b, "'+'");
                case BinOp::sub: return check_finite(a - b, "'-'");
                case BinOp::mul: return check_finite(a * b, "'*'");
                case BinOp::div:
                    if (b == 0.0) throw EvalError("division by zero");
                    return check_finite(a / b, "'/'");
                case BinOp::pow: return check_finite(std::pow(a, b), "'^'");
            }
            break;
        }
        case NodeKind::call: {
            const double a = eval_node(*n.lhs, x);
            switch (n.func) {
                case Func::ln:
                    if (a <= 0.0) throw EvalError("ln of a nonpositive value");
                    return std::log(a);
                case Func::exp:
                    return check_finite(std::exp(a), "'exp'");
                case Func::sqrt:
                    if (a < 0.0) throw EvalError("sqrt of a negative value");
                    return std::sqrt(a);
                case Func::abs:
                    return std::abs(a);
                case Func::gamma: {
                    if (a <= 0.0) throw EvalError("gamma of a nonpositive value");
                    return check_finite(std::exp(ln_gamma(a)), "'gamma'");
                }
            }
            break;
        }
    }
    throw EvalError("corrupt expression tree");
}

void print_node(const Expr::Node& n, const std::string& var, std::string& out) {
    switch (n.kind) {
        case NodeKind::literal: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", n.literal);
            out += buf;
            return;
        }
        case NodeKind::variable:
            out += var;
            return;
        case NodeKind::unary_minus:
            out += "(-";
            print_node(*n.lhs, var, out);
            out += ')';
            return;
        case NodeKind::binary: {
            const char* op = n.op == BinOp::add   ? "+"
                             : n.op == BinOp::sub ? "-"
                             : n.op == BinOp::mul ? "*"
                             : n.op == BinOp::div ? "/"
                                                  : "^";
            out += '(';
            print_node(*n.lhs, var, out);
            out += op;
            print_node(*n.rhs, var, out);
            out += ')';
            return;
        }
        case NodeKind::call:
            out += func_name(n.func);
            out += '(';
            print_node(*n.lhs, var, out);
            out += ')';
            return;
    }
}

}  // namespace

Expr::Expr(std::shared_ptr<const Node> root, std::string var)
    : root_(std::move(root)), var_(std::move(var)) {}

Expr Expr::parse(std::string_view src, std::string_view var_name) {
    if (src.empty()) {
        throw ParseError("empty expression", 0);
    }
    Parser p(src, var_name);
    return Expr(p.run(), std::string(var_name));
}

double Expr::eval(double value) const {
    return eval_node(*root_, value);
}

std::string Expr::print() const {
    std::string out;
    print_node(*root_, var_, out);
    return out;
}

}  // namespace dfbvp
