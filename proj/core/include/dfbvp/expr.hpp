#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dfbvp {

/// Syntax error carrying the byte offset of the offending input position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Runtime evaluation failure (ln/sqrt of a negative, gamma of a
/// nonpositive, division by zero, overflow to a non-finite value).
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parsed univariate expression.
///
/// Grammar (one free variable, named at parse time; usually `t` or `y`):
///
///   sum     := product (('+'|'-') product)*
///   product := unary (('*'|'/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?          right-associative
///   primary := number | var | func '(' sum ')' | '(' sum ')'
///   func    := ln | exp | sqrt | abs | gamma
///
/// so '^' binds tighter than unary minus ("-y^2" is -(y^2)) and
/// "2^3^2" is 2^(3^2). Parsed expressions are immutable and cheap to copy.
class Expr {
public:
    static Expr parse(std::string_view src, std::string_view var_name);

    double eval(double value) const;

    /// Fully parenthesized rendering; parse(print(), var_name()) evaluates
    /// identically.
    std::string print() const;

    const std::string& var_name() const { return var_; }

    struct Node;

private:
    Expr(std::shared_ptr<const Node> root, std::string var);

    std::shared_ptr<const Node> root_;
    std::string var_;
};

}  // namespace dfbvp
