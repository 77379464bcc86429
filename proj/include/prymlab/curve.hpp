#pragma once

#include "prymlab/arith.hpp"
#include "prymlab/polynomial.hpp"

#include <array>
#include <optional>
#include <utility>

namespace prymlab {

// y^3 = x^4 + a x^2 + b with 16 b (a^2 - 4b) != 0.
class Curve {
public:
    Curve(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational discriminant() const;

    friend bool operator==(const Curve& x, const Curve& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Rational a_, b_;
};

Rational discriminant(const Rational& a, const Rational& b);
Curve new_curve(const Rational& a, const Rational& b);

Rational j_invariant(const Curve& c);
bool is_special(const Curve& c);
Curve bigonal_dual(const Curve& c);
Curve sextic_twist(const Curve& c, const Rational& delta);
std::optional<Rational> is_isomorphic_marked(const Curve& c1, const Curve& c2);
bool is_geometrically_isomorphic(const Curve& c1, const Curve& c2);

// Marked-isomorphic curve with integer coefficients, minimal at every prime.
Curve integral_model(const Curve& c);
// The scaling lambda with integral_model(c) = (lambda^6 a, lambda^12 b).
Rational integral_scaling(const Curve& c);

IntPolynomial quartic_f(const Curve& c);
IntPolynomial quartic_fhat(const Curve& c);

struct EllipticModel {
    enum class Role { E, Ehat };
    Rational c;
    Role role;
};

// E: y^2 = x^3 + 16(a^2 - 4b) and Ehat: y^2 = x^3 + b.
std::pair<EllipticModel, EllipticModel> elliptic_quotients(const Curve& c);

struct Genus2Model {
    Rational s;
    Rational d;
    Rational lhs_scale;
    std::array<Rational, 7> sextic;
};

// lhs_scale * y^2 = (x^2 + 2x - 2)(s^3 x^4 + 4 s^3 x^3 + 2 d x - d).
Genus2Model genus2_model(const Curve& c);

} // namespace prymlab
