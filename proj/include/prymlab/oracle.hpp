#pragma once

#include "prymlab/curve.hpp"

#include <cstdint>
#include <vector>

namespace prymlab {

struct LPolynomial {
    std::uint64_t p = 0;
    int genus = 0;
    std::vector<Integer> coeffs;

    Integer operator()(const Integer& t) const;
    // Functional equation and Weil-size checks; throws WeilBoundViolation.
    void validate() const;

    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

struct PrymCount {
    std::uint64_t p = 0;
    LPolynomial l_c;
    LPolynomial l_e;
    LPolynomial l_p;
    Integer order;
};

std::uint64_t prime_cap();

std::vector<std::uint64_t> good_primes(const Curve& c, std::size_t count, std::uint64_t min = 5);
bool is_good_prime(const Curve& c, std::uint64_t p);

std::uint64_t count_points_C(const Curve& c, std::uint64_t p, int k);
// Double loop over F_p x F_p; reference count for small p.
std::uint64_t naive_count_points_C(const Curve& c, std::uint64_t p);
std::uint64_t count_points_E(const EllipticModel& e, std::uint64_t p);

LPolynomial l_polynomial(const std::vector<std::uint64_t>& counts, std::uint64_t p, int genus);
PrymCount prym_order(const Curve& c, std::uint64_t p);
Integer torsion_multiplicative_bound(const Curve& c, const std::vector<std::uint64_t>& primes);

struct OracleSummary {
    std::vector<PrymCount> per_prime;
    Integer gcd;
};

OracleSummary run_oracle(const Curve& c, const std::vector<std::uint64_t>& primes);

} // namespace prymlab
