#pragma once

#include "prymlab/arith.hpp"

#include <string>
#include <vector>

namespace prymlab {

// Dense integer polynomial, lowest degree first.
struct IntPolynomial {
    std::vector<Integer> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> c);

    // Clears denominators; the result has the same roots.
    static IntPolynomial from_rationals(const std::vector<Rational>& c);

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Integer& leading() const { return coeffs.back(); }

    Rational operator()(const Rational& x) const;
    bool vanishes_at(const Rational& x) const;
    IntPolynomial primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);

// Sorted, without multiplicity.
std::vector<Rational> rational_roots(const IntPolynomial& p);

} // namespace prymlab
