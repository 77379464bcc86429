#pragma once

#include "prymlab/curve.hpp"
#include "prymlab/endo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prymlab {

// Finite abelian group by invariant factors d1, d2, ... with d_{i+1} | d_i.
struct AbelianGroup {
    std::vector<long> invariant_factors;

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup elementary(int two_rank, int three_rank);
    static AbelianGroup parse(const std::string& name);

    long order() const;
    int rank_at(long prime) const;
    bool contains(const AbelianGroup& sub) const;
    std::string name() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// 1, Z/2, Z/3, Z/6, (Z/2)^2, (Z/3)^2, Z/6 x Z/3.
const std::vector<AbelianGroup>& admissible_torsion_groups();

enum class TorsionStatus { Exact, LowerBound };
std::string to_string(TorsionStatus s);

struct TwoTorsionReport {
    bool e_part = false;
    std::optional<Rational> ehat_point;
    bool lift = false;
    int rank = 0;
    std::optional<Rational> witness_root;

    friend bool operator==(const TwoTorsionReport&, const TwoTorsionReport&) = default;
};

struct PTorsionRank {
    int rank = 0;
    std::vector<Rational> f_roots;
    std::vector<Rational> fhat_roots;

    friend bool operator==(const PTorsionRank&, const PTorsionRank&) = default;
};

struct ThreePartReport {
    int r = 0;
    int r_twist = 0;
    int lower = 0;
    int upper = 0;
    TorsionStatus status = TorsionStatus::Exact;
    std::vector<Rational> f_roots;
    std::vector<Rational> fhat_roots;

    friend bool operator==(const ThreePartReport&, const ThreePartReport&) = default;
};

struct TorsionReport {
    AbelianGroup group;
    TorsionStatus status = TorsionStatus::Exact;
    TwoTorsionReport two;
    ThreePartReport three;
    std::optional<std::string> end_module;

    friend bool operator==(const TorsionReport&, const TorsionReport&) = default;
};

// g_{a,t}(z) = z^4 - 6 t z^2 + 4 a z - 3 t^2
IntPolynomial lifting_quartic(const Rational& a, const Rational& t);

TwoTorsionReport two_torsion(const Curve& c);
// Roots are reported on the integral model.
PTorsionRank p_torsion_rank(const Curve& c);
ThreePartReport three_part(const Curve& c, const std::optional<Integer>& oracle_bound = std::nullopt);
TorsionReport torsion_group(const Curve& c, const std::optional<Integer>& oracle_bound = std::nullopt);

// Module label for End(P) in {Z[sqrt2], Z[sqrt6]}; empty when the group is not in the list for D.
std::optional<std::string> end_module_label(EndRingKind kind, const AbelianGroup& g);
std::optional<std::string> end_module_structure(const Curve& c,
                                                const std::optional<Integer>& oracle_bound = std::nullopt);

} // namespace prymlab
