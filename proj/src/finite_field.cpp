#include "prymlab/finite_field.hpp"

#include <stdexcept>

namespace prymlab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

bool has_root(const std::vector<std::uint64_t>& m, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            v = (mulmod(v, x, p) + *it) % p;
        if (v == 0)
            return true;
    }
    return false;
}

} // namespace

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, int k) {
    if (k == 1)
        return {0, 1};
    if (k != 2 && k != 3)
        throw std::invalid_argument("extension degree must be 1, 2 or 3");
    // Degree <= 3: irreducible iff rootless. Order compares x^{k-1} first, down to x^0.
    std::vector<std::uint64_t> m(static_cast<std::size_t>(k) + 1, 0);
    m[k] = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i)
        total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < k; ++i) {
            m[i] = c % p;
            c /= p;
        }
        if (!has_root(m, p))
            return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint64_t p, int k) : p_(p), k_(k), q_(1) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("extension degree must be 1, 2 or 3");
    for (int i = 0; i < k; ++i)
        q_ *= p;
    auto m = smallest_irreducible(p, k);
    for (int i = 0; i < k; ++i)
        mod_[i] = m[i];
}

FiniteField::Element FiniteField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r), 0, 0};
}

FiniteField::Element FiniteField::from_index(std::uint64_t idx) const {
    Element x{0, 0, 0};
    for (int i = 0; i < k_; ++i) {
        x[i] = idx % p_;
        idx /= p_;
    }
    return x;
}

std::uint64_t FiniteField::index(const Element& x) const {
    std::uint64_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i)
        idx = idx * p_ + x[i];
    return idx;
}

FiniteField::Element FiniteField::add(const Element& x, const Element& y) const {
    Element z{0, 0, 0};
    for (int i = 0; i < k_; ++i) {
        z[i] = x[i] + y[i];
        if (z[i] >= p_)
            z[i] -= p_;
    }
    return z;
}

FiniteField::Element FiniteField::scale(const Element& x, std::uint64_t s) const {
    Element z{0, 0, 0};
    for (int i = 0; i < k_; ++i)
        z[i] = mulmod(x[i], s % p_, p_);
    return z;
}

FiniteField::Element FiniteField::mul(const Element& x, const Element& y) const {
    if (k_ == 1)
        return {mulmod(x[0], y[0], p_), 0, 0};
    std::array<std::uint64_t, 5> t{0, 0, 0, 0, 0};
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            t[i + j] = (t[i + j] + mulmod(x[i], y[j], p_)) % p_;
    // x^k = -(m_{k-1} x^{k-1} + ... + m_0)
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        std::uint64_t c = t[d];
        if (c == 0)
            continue;
        t[d] = 0;
        for (int i = 0; i < k_; ++i) {
            std::uint64_t sub = mulmod(c, mod_[i], p_);
            auto& slot = t[d - k_ + i];
            slot = slot >= sub ? slot - sub : slot + p_ - sub;
        }
    }
    return {t[0], t[1], k_ == 3 ? t[2] : 0};
}

FiniteField::Element FiniteField::pow(Element x, std::uint64_t e) const {
    Element r = from_int(1);
    while (e) {
        if (e & 1)
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

bool FiniteField::next(Element& x) const {
    for (int i = 0; i < k_; ++i) {
        if (++x[i] < p_)
            return true;
        x[i] = 0;
    }
    return false;
}

} // namespace prymlab
