#include "prymlab/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace prymlab {

IntPolynomial::IntPolynomial(std::vector<Integer> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

IntPolynomial IntPolynomial::from_rationals(const std::vector<Rational>& c) {
    Integer l = 1;
    for (const auto& q : c)
        l = lcm(l, Integer(q.get_den()));
    std::vector<Integer> out;
    out.reserve(c.size());
    for (const auto& q : c)
        out.emplace_back(q.get_num() * (l / q.get_den()));
    return IntPolynomial(std::move(out));
}

Rational IntPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

bool IntPolynomial::vanishes_at(const Rational& x) const {
    // Homogeneous evaluation: sum c_i p^i q^(n-i) stays in the integers.
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    Integer acc = 0, qpow = 1;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * p + *it * qpow;
        qpow *= q;
    }
    return acc == 0;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (coeffs.empty())
        return *this;
    Integer g = 0;
    for (const auto& c : coeffs)
        g = gcd(g, c);
    if (leading() < 0)
        g = -g;
    std::vector<Integer> out;
    for (const auto& c : coeffs)
        out.emplace_back(c / g);
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs.empty())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs[i];
        if (c == 0)
            continue;
        Integer m = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (m != 1 || i == 0)
            s += m.get_str();
        if (i >= 1)
            s += var;
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        return {};
    std::vector<Integer> out(f.coeffs.size() + g.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] += f.coeffs[i] * g.coeffs[j];
    return IntPolynomial(std::move(out));
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

// Remainder of f by g over Q; g nonzero.
QPoly rem(QPoly f, const QPoly& g) {
    trim(f);
    while (f.size() >= g.size()) {
        const Rational k = f.back() / g.back();
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] -= k * g[i];
        f.pop_back();
        trim(f);
    }
    return f;
}

// Exact quotient of f by g over Q.
QPoly quo(QPoly f, const QPoly& g) {
    QPoly q(f.size() - g.size() + 1, 0);
    while (f.size() >= g.size() && !f.empty()) {
        const Rational k = f.back() / g.back();
        const std::size_t shift = f.size() - g.size();
        q[shift] = k;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] -= k * g[i];
        f.pop_back();
        trim(f);
    }
    return q;
}

QPoly to_q(const IntPolynomial& p) { return QPoly(p.coeffs.begin(), p.coeffs.end()); }

IntPolynomial squarefree_part(const IntPolynomial& p) {
    QPoly f = to_q(p), d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<unsigned long>(i));
    QPoly a = f, b = d;
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() <= 1)
        return p;
    return IntPolynomial::from_rationals(quo(f, a)).primitive_part();
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u64> reduce(const IntPolynomial& p, u64 m) {
    std::vector<u64> out;
    for (const auto& c : p.coeffs) {
        Integer r = c % Integer(static_cast<unsigned long>(m));
        if (r < 0)
            r += static_cast<unsigned long>(m);
        out.push_back(r.get_ui());
    }
    return out;
}

u64 inv_mod(u64 x, u64 m) {
    u64 r = 1, e = m - 2;
    while (e) {
        if (e & 1)
            r = static_cast<u64>(static_cast<u128>(r) * x % m);
        x = static_cast<u64>(static_cast<u128>(x) * x % m);
        e >>= 1;
    }
    return r;
}

void trim_mod(std::vector<u64>& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

std::vector<u64> rem_mod(std::vector<u64> f, const std::vector<u64>& g, u64 m) {
    trim_mod(f);
    const u64 inv = inv_mod(g.back(), m);
    while (f.size() >= g.size()) {
        const u64 k = static_cast<u64>(static_cast<u128>(f.back()) * inv % m);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = (f[shift + i] + m - static_cast<u64>(static_cast<u128>(k) * g[i] % m)) % m;
        f.pop_back();
        trim_mod(f);
    }
    return f;
}

// True when the monic f stays squarefree of full degree mod m.
bool squarefree_mod(const IntPolynomial& f, u64 m) {
    auto a = reduce(f, m);
    std::vector<u64> b;
    for (std::size_t i = 1; i < a.size(); ++i)
        b.push_back(static_cast<u64>(static_cast<u128>(a[i]) * (i % m) % m));
    trim_mod(b);
    if (b.empty())
        return false;
    while (!b.empty()) {
        auto r = rem_mod(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

Integer eval(const IntPolynomial& f, const Integer& x) {
    Integer acc = 0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Integer eval_derivative(const IntPolynomial& f, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = f.coeffs.size() - 1; i >= 1; --i)
        acc = acc * x + f.coeffs[i] * static_cast<unsigned long>(i);
    return acc;
}

Integer mod_pos(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0)
        r += m;
    return r;
}

// Fujiwara: every complex root satisfies |z| <= 2 max_k |c_{n-k}/c_n|^(1/k).
Integer root_bound(const IntPolynomial& p) {
    const int n = p.degree();
    const Integer lead = abs(p.leading());
    Integer best = 0;
    for (int k = 1; k <= n; ++k) {
        Integer c = abs(p.coeffs[n - k]);
        if (c == 0)
            continue;
        Integer ratio = (c + lead - 1) / lead;
        Integer r;
        mpz_root(r.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(k));
        r += 1;
        best = std::max(best, r);
    }
    return 2 * best;
}

} // namespace

std::vector<Rational> rational_roots(const IntPolynomial& poly) {
    if (poly.is_zero())
        throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    std::size_t shift = 0;
    while (poly.coeffs[shift] == 0)
        ++shift;
    if (shift > 0)
        roots.emplace_back(0);
    IntPolynomial p = IntPolynomial(
        std::vector<Integer>(poly.coeffs.begin() + static_cast<long>(shift), poly.coeffs.end()))
        .primitive_part();
    if (p.degree() >= 1) {
        p = squarefree_part(p);
        // Monic q(y) = l^(n-1) p(y / l); its integer roots are l times the rational roots of p.
        const int n = p.degree();
        const Integer l = p.leading();
        std::vector<Integer> qc(p.coeffs.size());
        Integer lp = 1;
        for (int i = n; i >= 0; --i) {
            qc[i] = i == n ? Integer(1) : p.coeffs[i] * lp;
            if (i < n)
                lp *= l;
        }
        const IntPolynomial q(std::move(qc));
        const Integer bound = root_bound(q);
        Integer prime = 2;
        while (!squarefree_mod(q, prime.get_ui()))
            mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 m = prime.get_ui();
        const auto qm = reduce(q, m);
        for (u64 r0 = 0; r0 < m; ++r0) {
            u64 acc = 0;
            for (auto it = qm.rbegin(); it != qm.rend(); ++it)
                acc = static_cast<u64>((static_cast<u128>(acc) * r0 + *it) % m);
            if (acc != 0)
                continue;
            // Newton steps double the p-adic precision of the simple root.
            Integer r = static_cast<unsigned long>(r0), mod = prime;
            while (mod <= 2 * bound) {
                mod *= mod;
                Integer inv, d = mod_pos(eval_derivative(q, r), mod);
                mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
                r = mod_pos(r - eval(q, r) * inv, mod);
            }
            if (2 * r > mod)
                r -= mod;
            if (eval(q, r) == 0)
                roots.push_back(Rational(r, l));
        }
        for (auto& x : roots)
            x.canonicalize();
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace prymlab
