#include "prymlab/expr.hpp"
#include "prymlab/errors.hpp"

namespace prymlab {

struct Expr::Node {
    Op op;
    Rational value;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
    int exponent = 0;
};

Expr::Expr(long v) : Expr(Rational(v)) {}

Expr::Expr(Rational v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = std::move(v);
    node_ = std::move(n);
}

Expr Expr::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->name = std::move(name);
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::make(Op op, Expr lhs, Expr rhs, int exponent) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    n->exponent = exponent;
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr operator+(const Expr& x, const Expr& y) { return Expr::make(Expr::Op::Add, x, y); }
Expr operator-(const Expr& x, const Expr& y) { return Expr::make(Expr::Op::Sub, x, y); }
Expr operator*(const Expr& x, const Expr& y) { return Expr::make(Expr::Op::Mul, x, y); }
Expr operator/(const Expr& x, const Expr& y) { return Expr::make(Expr::Op::Div, x, y); }
Expr operator-(const Expr& x) { return Expr::make(Expr::Op::Neg, x, x); }
Expr pow(const Expr& x, int n) { return Expr::make(Expr::Op::Pow, x, x, n); }

Rational Expr::eval(const Bindings& env) const {
    const Node& n = *node_;
    auto sub = [](const std::shared_ptr<const Node>& p, const Bindings& e) { return Expr(p).eval(e); };
    switch (n.op) {
    case Op::Const:
        return n.value;
    case Op::Var: {
        auto it = env.find(n.name);
        if (it == env.end())
            throw ParseError("missing parameter '" + n.name + "'");
        return it->second;
    }
    case Op::Add: return sub(n.lhs, env) + sub(n.rhs, env);
    case Op::Sub: return sub(n.lhs, env) - sub(n.rhs, env);
    case Op::Mul: return sub(n.lhs, env) * sub(n.rhs, env);
    case Op::Div: {
        Rational den = sub(n.rhs, env);
        if (den == 0)
            throw DegenerateParameters("division by zero evaluating " + str());
        return sub(n.lhs, env) / den;
    }
    case Op::Neg: return -sub(n.lhs, env);
    case Op::Pow: {
        Rational base = sub(n.lhs, env);
        if (base == 0 && n.exponent < 0)
            throw DegenerateParameters("division by zero evaluating " + str());
        return prymlab::pow(base, static_cast<long>(n.exponent));
    }
    }
    return 0;
}

int Expr::precedence() const {
    switch (node_->op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    case Op::Const: return node_->value < 0 || node_->value.get_den() != 1 ? 2 : 5;
    case Op::Var: return 5;
    }
    return 0;
}

std::string Expr::str() const {
    const Node& n = *node_;
    auto wrap = [](const Expr& e, int min_prec) {
        return e.precedence() < min_prec ? "(" + e.str() + ")" : e.str();
    };
    const Expr l(n.lhs), r(n.rhs);
    switch (n.op) {
    case Op::Const: return to_string(n.value);
    case Op::Var: return n.name;
    case Op::Add: return wrap(l, 1) + " + " + wrap(r, 2);
    case Op::Sub: return wrap(l, 1) + " - " + wrap(r, 2);
    case Op::Mul: return wrap(l, 2) + "*" + wrap(r, 3);
    case Op::Div: return wrap(l, 2) + "/" + wrap(r, 3);
    case Op::Neg: return "-" + wrap(l, 3);
    case Op::Pow: return wrap(l, 5) + "^" + std::to_string(n.exponent);
    }
    return "";
}

} // namespace prymlab
