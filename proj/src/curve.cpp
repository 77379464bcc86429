#include "prymlab/curve.hpp"
#include "prymlab/errors.hpp"

#include <set>

namespace prymlab {

Rational discriminant(const Rational& a, const Rational& b) { return 16 * b * (a * a - 4 * b); }

Curve::Curve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (prymlab::discriminant(a_, b_) == 0)
        throw DegenerateCurve();
}

Rational Curve::discriminant() const { return prymlab::discriminant(a_, b_); }

Curve new_curve(const Rational& a, const Rational& b) { return Curve(a, b); }

Rational j_invariant(const Curve& c) { return (4 * c.b() - c.a() * c.a()) / (4 * c.b()); }

bool is_special(const Curve& c) { return c.a() == 0; }

Curve bigonal_dual(const Curve& c) {
    return Curve(8 * c.a(), 16 * (c.a() * c.a() - 4 * c.b()));
}

Curve sextic_twist(const Curve& c, const Rational& delta) {
    if (delta == 0)
        throw std::invalid_argument("sextic_twist: zero twist parameter");
    return Curve(delta * c.a(), delta * delta * c.b());
}

std::optional<Rational> is_isomorphic_marked(const Curve& c1, const Curve& c2) {
    if ((c1.a() == 0) != (c2.a() == 0))
        return std::nullopt;
    if (c1.a() == 0)
        return is_nth_power(c2.b() / c1.b(), 12);
    auto lambda = is_nth_power(c2.a() / c1.a(), 6);
    if (!lambda || pow(*lambda, 12) * c1.b() != c2.b())
        return std::nullopt;
    return lambda;
}

bool is_geometrically_isomorphic(const Curve& c1, const Curve& c2) {
    return j_invariant(c1) == j_invariant(c2);
}

namespace {

long ceil_div(long n, long d) {
    long q = n / d;
    if (q * d != n && ((n < 0) == (d < 0)))
        ++q;
    return q;
}

} // namespace

namespace {

// Primes p with p^12 | n. Only these can lower the model, so a full factorization is rarely needed.
std::vector<Integer> twelfth_power_primes(Integer n) {
    std::vector<Integer> out;
    n = abs(n);
    if (n == 0)
        return out;
    unsigned long p = 2;
    for (; p <= 1000000; p = p == 2 ? 3 : p + 2) {
        Integer p12 = pow(Rational(static_cast<long>(p)), 12).get_num();
        if (p12 > n)
            return out;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p))
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e >= 12)
            out.emplace_back(p);
    }
    for (const auto& [q, e] : factor_integer(n))
        if (e >= 12)
            out.push_back(q);
    return out;
}

} // namespace

Rational integral_scaling(const Curve& c) {
    std::set<Integer> primes;
    for (const auto& [p, e] : factor_integer(c.b().get_den()))
        primes.insert(p);
    if (c.a() != 0)
        for (const auto& [p, e] : factor_integer(c.a().get_den()))
            primes.insert(p);
    const Integer bn = c.b().get_num();
    const Integer an = c.a().get_num();
    for (const auto& p : twelfth_power_primes(c.a() == 0 ? bn : Integer(gcd(Integer(an * an), bn))))
        primes.insert(p);
    Rational lambda = 1;
    for (const auto& p : primes) {
        long e = ceil_div(-valuation(c.b(), p), 12);
        if (c.a() != 0)
            e = std::max(e, ceil_div(-valuation(c.a(), p), 6));
        lambda *= pow(Rational(p), e);
    }
    return lambda;
}

Curve integral_model(const Curve& c) {
    Rational lambda = integral_scaling(c);
    return Curve(pow(lambda, 6) * c.a(), pow(lambda, 12) * c.b());
}

IntPolynomial quartic_f(const Curve& c) {
    return IntPolynomial::from_rationals({c.b(), 0, c.a(), 0, 1});
}

IntPolynomial quartic_fhat(const Curve& c) {
    return IntPolynomial::from_rationals({16 * (c.a() * c.a() - 4 * c.b()), 0, 8 * c.a(), 0, 1});
}

std::pair<EllipticModel, EllipticModel> elliptic_quotients(const Curve& c) {
    return {EllipticModel{16 * (c.a() * c.a() - 4 * c.b()), EllipticModel::Role::E},
            EllipticModel{c.b(), EllipticModel::Role::Ehat}};
}

Genus2Model genus2_model(const Curve& c) {
    auto s = is_nth_power(c.b(), 3);
    if (!s)
        throw NotACube("b = " + to_string(c.b()) + " is not a rational cube");
    Genus2Model g;
    g.s = *s;
    g.d = c.a() * c.a() - 4 * c.b();
    g.lhs_scale = -c.a() * g.s;
    const std::array<Rational, 3> left{-2, 2, 1};
    const std::array<Rational, 5> right{-g.d, 2 * g.d, 0, 4 * c.b(), c.b()};
    for (auto& x : g.sextic)
        x = 0;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t k = 0; k < right.size(); ++k)
            g.sextic[i + k] += left[i] * right[k];
    return g;
}

} // namespace prymlab
