#pragma once

#include "prymlab/arith.hpp"

#include <map>
#include <memory>
#include <string>

namespace prymlab {

using Bindings = std::map<std::string, Rational>;

// Immutable rational-function expression over named parameters.
class Expr {
public:
    enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow };

    Expr(long v);
    explicit Expr(Rational v);
    static Expr var(std::string name);

    // Throws DegenerateParameters on division by zero, ParseError on an unbound variable.
    Rational eval(const Bindings& env) const;
    std::string str() const;

    friend Expr operator+(const Expr& x, const Expr& y);
    friend Expr operator-(const Expr& x, const Expr& y);
    friend Expr operator*(const Expr& x, const Expr& y);
    friend Expr operator/(const Expr& x, const Expr& y);
    friend Expr operator-(const Expr& x);
    friend Expr pow(const Expr& x, int n);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr make(Op op, Expr lhs, Expr rhs, int exponent = 0);
    int precedence() const;

    std::shared_ptr<const Node> node_;
};

} // namespace prymlab
