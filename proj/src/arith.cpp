#include "prymlab/arith.hpp"
#include "prymlab/errors.hpp"

#include <algorithm>
#include <map>

namespace prymlab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw ParseError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        throw ParseError("not a rational: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw ParseError("not a rational: '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    auto dtext = text.substr(slash + 1);
    if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Integer den = parse_integer(dtext, text);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer numerator(const Rational& q) { return q.get_num(); }
Integer denominator(const Rational& q) { return q.get_den(); }

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
    if (k == 0)
        return std::nullopt;
    if (n < 0 && k % 2 == 0)
        return std::nullopt;
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0)
        return std::nullopt;
    return r;
}

std::optional<Rational> is_nth_power(const Rational& q, unsigned long n) {
    if (n == 0)
        throw std::invalid_argument("is_nth_power: n must be positive");
    auto num = exact_root(q.get_num(), n);
    if (!num)
        return std::nullopt;
    auto den = exact_root(q.get_den(), n);
    if (!den)
        return std::nullopt;
    return make_rational(*num, *den);
}

Rational pow(const Rational& q, long e) {
    Integer num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    return e < 0 ? make_rational(den, num) : make_rational(num, den);
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0)
        throw std::invalid_argument("valuation of zero");
    Integer m = abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long valuation(const Rational& q, const Integer& p) {
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

namespace {

constexpr unsigned long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                          31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

bool miller_rabin(const Integer& n, const Integer& d, unsigned long s, unsigned long base) {
    Integer a = base;
    if (a % n == 0)
        return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Integer nm1 = n - 1;
    if (x == 1 || x == nm1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

} // namespace

bool is_prime(const Integer& n) {
    if (n < 2)
        return false;
    for (unsigned long p : kSmallPrimes) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    Integer d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    // The first 13 prime bases are deterministic below 3.3e24; beyond that all 20 are used.
    static const Integer kDeterministicLimit("3317044064679887385961981", 10);
    std::size_t nbases = n < kDeterministicLimit ? 13 : std::size(kSmallPrimes);
    for (std::size_t i = 0; i < nbases; ++i)
        if (!miller_rabin(n, d, s, kSmallPrimes[i]))
            return false;
    return true;
}

namespace {

// Brent's cycle finding with batched gcds.
Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    const Integer c = seed;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    Integer y = seed + 1, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(Integer(x - y))) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(Integer(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (auto r = exact_root(n, 2)) {
        split(*r, out);
        split(*r, out);
        return;
    }
    for (unsigned long seed = 1;; ++seed) {
        Integer g = pollard_brent(n, seed);
        if (g != n && g != 1) {
            split(g, out);
            split(Integer(n / g), out);
            return;
        }
    }
}

} // namespace

Factorization factor_integer(const Integer& n) {
    if (n == 0)
        throw std::invalid_argument("factor_integer: zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> out;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++out[Integer(p)];
        }
    }
    // Wheel mod 30 up to 10^6.
    static constexpr unsigned long kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    unsigned long p = 7;
    for (std::size_t w = 0; p <= 1000000; p += kWheel[w], w = (w + 1) % 8) {
        if (Integer(p) * p > m)
            break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++out[Integer(p)];
        }
    }
    if (m != 1) {
        if (Integer(p) * p > m)
            ++out[m];
        else
            split(m, out);
    }
    return Factorization(out.begin(), out.end());
}

} // namespace prymlab
