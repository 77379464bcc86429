#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prymlab {

using Integer = mpz_class;
// mpq_class keeps lowest terms with a positive denominator after every operation.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

std::optional<Integer> exact_root(const Integer& n, unsigned long k);
std::optional<Rational> is_nth_power(const Rational& q, unsigned long n);

bool is_prime(const Integer& n);

using Factorization = std::vector<std::pair<Integer, unsigned>>;
Factorization factor_integer(const Integer& n);

// Exponent of p in q (q nonzero).
long valuation(const Rational& q, const Integer& p);
long valuation(const Integer& n, const Integer& p);

Rational pow(const Rational& q, long e);

} // namespace prymlab
