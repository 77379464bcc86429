#include "prymlab/oracle.hpp"
#include "prymlab/errors.hpp"
#include "prymlab/finite_field.hpp"

#include <cstdlib>
#include <string>

namespace prymlab {

namespace {

constexpr std::uint64_t kDefaultPrimeCap = 499;

std::uint64_t reduce(const Rational& q, std::uint64_t p) {
    Integer pz(static_cast<unsigned long>(p));
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t()) == 0)
        throw BadPrime("p = " + std::to_string(p) + " divides a denominator");
    Integer r = Integer(q.get_num()) * den_inv % pz;
    if (r < 0)
        r += pz;
    return r.get_ui();
}

void require_prime(std::uint64_t p) {
    if (p < 5 || !is_prime(Integer(static_cast<unsigned long>(p))))
        throw BadPrime(std::to_string(p) + " is not a prime >= 5");
}

void require_good(const Curve& c, std::uint64_t p) {
    require_prime(p);
    if (!is_good_prime(c, p))
        throw BadPrime("p = " + std::to_string(p) + " divides 6 times the discriminant");
}

Integer ipow(std::uint64_t p, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

Integer binom(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Integer square root comparison: |x| <= bound * sqrt(p)^e with e odd handled by squaring.
bool within(const Integer& x, const Integer& coeff, std::uint64_t p, unsigned half_power) {
    // x^2 <= coeff^2 * p^half_power
    return x * x <= coeff * coeff * ipow(p, half_power);
}

} // namespace

std::uint64_t prime_cap() {
    if (const char* env = std::getenv("PRYMLAB_PRIME_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad PRYMLAB_PRIME_CAP '") + env + "'");
        }
    }
    return kDefaultPrimeCap;
}

bool is_good_prime(const Curve& c, std::uint64_t p) {
    if (p < 5)
        return false;
    const Curve m = integral_model(c);
    Integer n = m.discriminant().get_num();
    return !mpz_divisible_ui_p(n.get_mpz_t(), p);
}

std::vector<std::uint64_t> good_primes(const Curve& c, std::size_t count, std::uint64_t min) {
    const Curve m = integral_model(c);
    const Integer n = 6 * Integer(m.discriminant().get_num());
    std::vector<std::uint64_t> out;
    Integer p(static_cast<unsigned long>(std::max<std::uint64_t>(5, min) - 1));
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
            out.push_back(p.get_ui());
    }
    return out;
}

std::uint64_t count_points_C(const Curve& c, std::uint64_t p, int k) {
    require_good(c, p);
    if (k < 1 || k > 3)
        throw std::invalid_argument("extension degree must be 1, 2 or 3");
    if (k == 3 && p > prime_cap())
        throw PrimeCapExceeded("p = " + std::to_string(p) + " exceeds the cap " + std::to_string(prime_cap()) +
                               " for cubic extensions (PRYMLAB_PRIME_CAP)");
    const Curve m = integral_model(c);
    const FiniteField F(p, k);
    const std::uint64_t q = F.size();
    if (q % 3 == 2)
        return q + 1;
    std::vector<bool> cube(q, false);
    auto y = F.zero();
    do {
        cube[F.index(F.mul(F.mul(y, y), y))] = true;
    } while (F.next(y));
    const std::uint64_t a = reduce(m.a(), p), b = reduce(m.b(), p);
    const auto bb = F.from_int(static_cast<std::int64_t>(b));
    std::uint64_t n = 1;
    auto x = F.zero();
    do {
        const auto x2 = F.mul(x, x);
        const auto v = F.add(F.add(F.mul(x2, x2), F.scale(x2, a)), bb);
        const std::uint64_t idx = F.index(v);
        if (idx == 0)
            n += 1;
        else if (cube[idx])
            n += 3;
    } while (F.next(x));
    return n;
}

std::uint64_t naive_count_points_C(const Curve& c, std::uint64_t p) {
    require_good(c, p);
    const Curve m = integral_model(c);
    const std::uint64_t a = reduce(m.a(), p), b = reduce(m.b(), p);
    std::uint64_t n = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t x2 = x * x % p;
        const std::uint64_t rhs = (x2 * x2 + a * x2 + b) % p;
        for (std::uint64_t y = 0; y < p; ++y)
            if (y * y % p * y % p == rhs)
                ++n;
    }
    return n;
}

std::uint64_t count_points_E(const EllipticModel& e, std::uint64_t p) {
    require_prime(p);
    if (e.c == 0 || mpz_divisible_ui_p(e.c.get_num_mpz_t(), p))
        throw BadPrime("p = " + std::to_string(p) + " divides the elliptic coefficient");
    const std::uint64_t cc = reduce(e.c, p);
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y < p; ++y)
        chi[y * y % p] = 1;
    std::int64_t n = 1 + static_cast<std::int64_t>(p);
    for (std::uint64_t x = 0; x < p; ++x)
        n += chi[(x * x % p * x + cc) % p];
    return static_cast<std::uint64_t>(n);
}

Integer LPolynomial::operator()(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

void LPolynomial::validate() const {
    const unsigned g = static_cast<unsigned>(genus);
    auto fail = [&](const std::string& what) {
        throw WeilBoundViolation(what + " (p = " + std::to_string(p) + ", genus " + std::to_string(genus) + ")");
    };
    if (coeffs.size() != 2 * g + 1 || coeffs[0] != 1)
        fail("malformed L-polynomial");
    for (unsigned i = 0; i <= g; ++i)
        if (coeffs[2 * g - i] != ipow(p, g - i) * coeffs[i])
            fail("functional equation fails at degree " + std::to_string(i));
    for (unsigned i = 1; i <= g; ++i)
        if (!within(coeffs[i], binom(2 * g, i), p, i))
            fail("coefficient " + std::to_string(i) + " exceeds the Weil bound");
    if ((*this)(1) <= 0 || (*this)(-1) <= 0)
        fail("L(1) or L(-1) is not positive");
}

LPolynomial l_polynomial(const std::vector<std::uint64_t>& counts, std::uint64_t p, int genus) {
    if (genus < 1 || genus > 3 || counts.size() < static_cast<std::size_t>(genus))
        throw std::invalid_argument("l_polynomial needs genus in 1..3 and one count per degree");
    const unsigned g = static_cast<unsigned>(genus);
    // s_k = sum of k-th powers of the reciprocal roots.
    std::vector<Integer> s(g + 1), e(g + 1);
    for (unsigned k = 1; k <= g; ++k)
        s[k] = ipow(p, k) + 1 - Integer(static_cast<unsigned long>(counts[k - 1]));
    e[0] = 1;
    for (unsigned k = 1; k <= g; ++k) {
        Integer acc = 0;
        for (unsigned i = 1; i <= k; ++i)
            acc += ((i % 2) ? 1 : -1) * e[k - i] * s[i];
        if (acc % k != 0)
            throw WeilBoundViolation("Newton identity does not give an integer at degree " + std::to_string(k) +
                                     " (p = " + std::to_string(p) + ")");
        e[k] = acc / k;
    }
    LPolynomial L;
    L.p = p;
    L.genus = genus;
    L.coeffs.resize(2 * g + 1);
    for (unsigned i = 0; i <= g; ++i)
        L.coeffs[i] = (i % 2 ? -1 : 1) * e[i];
    for (unsigned i = 0; i < g; ++i)
        L.coeffs[2 * g - i] = ipow(p, g - i) * L.coeffs[i];
    L.validate();
    return L;
}

PrymCount prym_order(const Curve& c, std::uint64_t p) {
    require_good(c, p);
    const Curve m = integral_model(c);
    PrymCount out;
    out.p = p;
    out.l_c = l_polynomial({count_points_C(m, p, 1), count_points_C(m, p, 2), count_points_C(m, p, 3)}, p, 3);
    out.l_e = l_polynomial({count_points_E(elliptic_quotients(m).first, p)}, p, 1);
    const auto& C = out.l_c.coeffs;
    const Integer e1 = out.l_e.coeffs[1];
    const Integer pp(static_cast<unsigned long>(p));
    std::vector<Integer> quo(7, 0);
    for (int i = 0; i <= 6; ++i) {
        Integer r = C[i];
        if (i >= 1)
            r -= e1 * quo[i - 1];
        if (i >= 2)
            r -= pp * quo[i - 2];
        if (i <= 4)
            quo[i] = r;
        else if (r != 0)
            throw NonExactDivision("L_E does not divide L_C at p = " + std::to_string(p));
    }
    quo.resize(5);
    out.l_p.p = p;
    out.l_p.genus = 2;
    out.l_p.coeffs = quo;
    out.l_p.validate();
    out.order = out.l_p(1);
    // (sqrt p - 1)^4 <= order <= (sqrt p + 1)^4
    const Integer mid = pp * pp + 6 * pp + 1;
    const Integer dev = out.order - mid;
    if (dev * dev > 16 * pp * (pp + 1) * (pp + 1))
        throw WeilBoundViolation("Prym order " + to_string(out.order) + " outside the Weil interval at p = " +
                                 std::to_string(p));
    return out;
}

Integer torsion_multiplicative_bound(const Curve& c, const std::vector<std::uint64_t>& primes) {
    return run_oracle(c, primes).gcd;
}

OracleSummary run_oracle(const Curve& c, const std::vector<std::uint64_t>& primes) {
    if (primes.size() < 2)
        throw std::invalid_argument("the oracle bound needs at least two good primes");
    OracleSummary s;
    s.gcd = 0;
    for (auto p : primes) {
        s.per_prime.push_back(prym_order(c, p));
        s.gcd = gcd(s.gcd, s.per_prime.back().order);
    }
    return s;
}

} // namespace prymlab
