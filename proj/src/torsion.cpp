#include "prymlab/torsion.hpp"
#include "prymlab/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace prymlab {

AbelianGroup AbelianGroup::elementary(int two_rank, int three_rank) {
    AbelianGroup g;
    for (int i = 0; i < std::max(two_rank, three_rank); ++i)
        g.invariant_factors.push_back((i < two_rank ? 2 : 1) * (i < three_rank ? 3 : 1));
    return g;
}

AbelianGroup AbelianGroup::parse(const std::string& name) {
    AbelianGroup g;
    if (name == "trivial")
        return g;
    std::istringstream in(name);
    std::string tok;
    bool expect_factor = true;
    while (in >> tok) {
        if (expect_factor) {
            if (tok.rfind("Z/", 0) != 0)
                throw ParseError("bad group name '" + name + "'");
            try {
                g.invariant_factors.push_back(std::stol(tok.substr(2)));
            } catch (const std::exception&) {
                throw ParseError("bad group name '" + name + "'");
            }
        } else if (tok != "x") {
            throw ParseError("bad group name '" + name + "'");
        }
        expect_factor = !expect_factor;
    }
    if (expect_factor || g.invariant_factors.empty())
        throw ParseError("bad group name '" + name + "'");
    return g;
}

long AbelianGroup::order() const {
    long n = 1;
    for (long d : invariant_factors)
        n *= d;
    return n;
}

int AbelianGroup::rank_at(long prime) const {
    int r = 0;
    for (long d : invariant_factors)
        if (d % prime == 0)
            ++r;
    return r;
}

namespace {

std::vector<int> valuations(const std::vector<long>& factors, long p) {
    std::vector<int> v;
    for (long d : factors) {
        int e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        if (e > 0)
            v.push_back(e);
    }
    std::sort(v.rbegin(), v.rend());
    return v;
}

std::set<long> prime_support(const std::vector<long>& factors) {
    std::set<long> primes;
    for (long d : factors) {
        for (long p = 2; p * p <= d; ++p)
            while (d % p == 0) {
                primes.insert(p);
                d /= p;
            }
        if (d > 1)
            primes.insert(d);
    }
    return primes;
}

} // namespace

bool AbelianGroup::contains(const AbelianGroup& sub) const {
    for (long p : prime_support(sub.invariant_factors)) {
        auto vs = valuations(sub.invariant_factors, p);
        auto vg = valuations(invariant_factors, p);
        if (vs.size() > vg.size())
            return false;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i] > vg[i])
                return false;
    }
    return true;
}

std::string AbelianGroup::name() const {
    if (invariant_factors.empty())
        return "trivial";
    std::string s;
    for (long d : invariant_factors) {
        if (!s.empty())
            s += " x ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

const std::vector<AbelianGroup>& admissible_torsion_groups() {
    static const std::vector<AbelianGroup> list = {
        AbelianGroup::elementary(0, 0), AbelianGroup::elementary(1, 0), AbelianGroup::elementary(0, 1),
        AbelianGroup::elementary(1, 1), AbelianGroup::elementary(2, 0), AbelianGroup::elementary(0, 2),
        AbelianGroup::elementary(1, 2),
    };
    return list;
}

std::string to_string(TorsionStatus s) { return s == TorsionStatus::Exact ? "exact" : "lower_bound"; }

IntPolynomial lifting_quartic(const Rational& a, const Rational& t) {
    return IntPolynomial::from_rationals({-3 * t * t, 4 * a, -6 * t, 0, 1});
}

TwoTorsionReport two_torsion(const Curve& c) {
    TwoTorsionReport rep;
    rep.e_part = is_nth_power(16 * (c.a() * c.a() - 4 * c.b()), 3).has_value();
    rep.ehat_point = is_nth_power(c.b(), 3);
    if (rep.ehat_point) {
        auto roots = rational_roots(lifting_quartic(c.a(), *rep.ehat_point));
        if (!roots.empty()) {
            rep.lift = true;
            rep.witness_root = roots.front();
        }
    }
    rep.rank = (rep.e_part ? 1 : 0) + (rep.lift ? 1 : 0);
    return rep;
}

PTorsionRank p_torsion_rank(const Curve& c) {
    const Curve m = integral_model(c);
    PTorsionRank out;
    out.f_roots = rational_roots(quartic_f(m));
    out.fhat_roots = rational_roots(quartic_fhat(m));
    if (out.f_roots.size() == 4)
        out.rank = 2;
    else if (!out.f_roots.empty() || !out.fhat_roots.empty())
        out.rank = 1;
    return out;
}

ThreePartReport three_part(const Curve& c, const std::optional<Integer>& oracle_bound) {
    ThreePartReport rep;
    auto own = p_torsion_rank(c);
    rep.r = own.rank;
    rep.f_roots = std::move(own.f_roots);
    rep.fhat_roots = std::move(own.fhat_roots);
    rep.lower = rep.r;
    rep.r_twist = p_torsion_rank(sextic_twist(c, -27)).rank;
    rep.upper = std::min(2, rep.r + rep.r_twist);
    if (oracle_bound) {
        if (*oracle_bound == 0)
            throw std::invalid_argument("three_part: zero oracle bound");
        long v3 = valuation(*oracle_bound, Integer(3));
        if (v3 < rep.lower)
            throw InternalInconsistency("3-rank " + std::to_string(rep.lower) +
                                        " exceeds oracle bound " + to_string(*oracle_bound));
        rep.upper = std::min<long>(rep.upper, v3);
    }
    rep.status = rep.upper == rep.lower ? TorsionStatus::Exact : TorsionStatus::LowerBound;
    return rep;
}

std::optional<std::string> end_module_label(EndRingKind kind, const AbelianGroup& g) {
    if (kind != EndRingKind::Z_sqrt2 && kind != EndRingKind::Z_sqrt6)
        return std::nullopt;
    if (g == AbelianGroup::trivial())
        return "trivial";
    if (g == AbelianGroup::elementary(1, 0))
        return "mod_a2";
    if (g == AbelianGroup::elementary(0, kind == EndRingKind::Z_sqrt2 ? 2 : 1))
        return "mod_a3";
    return std::nullopt;
}

TorsionReport torsion_group(const Curve& c, const std::optional<Integer>& oracle_bound) {
    TorsionReport rep;
    rep.two = two_torsion(c);
    rep.three = three_part(c, oracle_bound);
    rep.status = rep.three.status;
    const int m = rep.two.rank;
    const int n = rep.three.lower;
    if (m == 2 && n > 0)
        throw InternalInconsistency("(Z/2)^2 x Z/3 assembled for (" + to_string(c.a()) + ", " +
                                    to_string(c.b()) + ")");
    rep.group = AbelianGroup::elementary(m, n);
    const auto& ok = admissible_torsion_groups();
    if (std::find(ok.begin(), ok.end(), rep.group) == ok.end())
        throw InternalInconsistency("group " + rep.group.name() + " is not admissible");
    if (oracle_bound && *oracle_bound % rep.group.order() != 0)
        throw InternalInconsistency("order " + std::to_string(rep.group.order()) +
                                    " does not divide oracle bound " + to_string(*oracle_bound));
    const auto kind = end_ring(c).kind;
    if (kind == EndRingKind::Z_sqrt2 || kind == EndRingKind::Z_sqrt6) {
        rep.end_module = end_module_label(kind, rep.group);
        if (!rep.end_module && rep.status == TorsionStatus::Exact)
            throw InternalInconsistency("group " + rep.group.name() + " is not a quotient module for " +
                                        to_string(kind));
    }
    return rep;
}

std::optional<std::string> end_module_structure(const Curve& c, const std::optional<Integer>& oracle_bound) {
    const auto kind = end_ring(c).kind;
    if (kind != EndRingKind::Z_sqrt2 && kind != EndRingKind::Z_sqrt6)
        throw std::invalid_argument("end_module_structure: End(P) is not Z[sqrt2] or Z[sqrt6]");
    return torsion_group(c, oracle_bound).end_module;
}

} // namespace prymlab
