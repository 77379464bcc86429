#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace prymlab {

// F_{p^k} for k <= 3 as F_p[x]/(m) with m the lexicographically smallest monic irreducible of degree k.
class FiniteField {
public:
    using Element = std::array<std::uint64_t, 3>;

    FiniteField(std::uint64_t p, int k);

    std::uint64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint64_t size() const { return q_; }
    // Low coefficients of the monic modulus.
    const Element& modulus() const { return mod_; }

    Element zero() const { return {0, 0, 0}; }
    Element from_int(std::int64_t v) const;
    Element from_index(std::uint64_t idx) const;
    std::uint64_t index(const Element& x) const;

    Element add(const Element& x, const Element& y) const;
    Element mul(const Element& x, const Element& y) const;
    Element scale(const Element& x, std::uint64_t s) const;
    Element pow(Element x, std::uint64_t e) const;

    // Advances x to the element with the next index; returns false after the last.
    bool next(Element& x) const;

private:
    std::uint64_t p_;
    int k_;
    std::uint64_t q_;
    Element mod_{};
};

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, int k);

} // namespace prymlab
