#include "prymlab/endo.hpp"
#include "prymlab/errors.hpp"

#include <numeric>

namespace prymlab {

std::string to_string(EndRingKind kind) {
    switch (kind) {
    case EndRingKind::Z: return "Z";
    case EndRingKind::Z_sqrt2: return "Z_sqrt2";
    case EndRingKind::Z_sqrt6: return "Z_sqrt6";
    case EndRingKind::CM: return "CM";
    }
    return "?";
}

EndRingKind end_ring_kind_from_string(const std::string& s) {
    for (auto k : {EndRingKind::Z, EndRingKind::Z_sqrt2, EndRingKind::Z_sqrt6, EndRingKind::CM})
        if (to_string(k) == s)
            return k;
    throw ParseError("unknown endomorphism ring '" + s + "'");
}

const std::vector<CMEntry>& cm_table() {
    static const std::vector<CMEntry> table = {
        {-3, Rational(0)},
        {-4, Rational(1)},
        {-24, Rational(-1)},
        {-75, parse_rational("256/135")},
        {-84, Rational(-27)},
        {-120, parse_rational("27/125")},
        {-228, parse_rational("15625/729")},
        {-147, parse_rational("-48384/15625")},
        {-372, parse_rational("-1771561/421875")},
        {-408, parse_rational("-11390625/4913")},
    };
    return table;
}

EndoFieldDescriptor endo_field(const Curve& c) {
    EndoFieldDescriptor e;
    e.delta = c.discriminant();
    e.d2 = (is_nth_power(e.delta, 2) || is_nth_power(-3 * e.delta, 2)) ? 1 : 2;
    e.d3 = is_nth_power(e.delta, 3) ? 1 : 3;
    e.d = std::lcm(e.d2, e.d3);
    e.degree = 2 * e.d;
    e.group_label = "D" + std::to_string(e.d);
    return e;
}

std::optional<long> cm_discriminant(const Curve& c) {
    const Rational j = j_invariant(c);
    const Rational jinv = 1 / j;
    for (const auto& row : cm_table())
        if (row.j == j || row.j == jinv)
            return row.discriminant;
    return std::nullopt;
}

EndRing end_ring(const Curve& c) {
    if (auto disc = cm_discriminant(c))
        return {EndRingKind::CM, disc};
    const Rational delta = c.discriminant();
    if (is_nth_power(delta, 6))
        return {EndRingKind::Z_sqrt2, std::nullopt};
    if (is_nth_power(-27 * delta, 6))
        return {EndRingKind::Z_sqrt6, std::nullopt};
    return {EndRingKind::Z, std::nullopt};
}

bool is_gl2_type(const Curve& c) {
    const Rational delta = c.discriminant();
    return is_nth_power(delta, 6) || is_nth_power(-27 * delta, 6);
}

namespace {

void require_non_cm(const Curve& c, const char* what) {
    if (auto disc = cm_discriminant(c))
        throw CMNotSupported(std::string(what) + " is undefined for CM curves (disc " +
                             std::to_string(*disc) + ")");
}

} // namespace

bool is_principally_polarizable(const Curve& c) {
    require_non_cm(c, "principal polarizability");
    return end_ring(c).kind == EndRingKind::Z_sqrt2;
}

int ns_rank(const Curve& c) {
    require_non_cm(c, "Neron-Severi rank");
    return endo_field(c).d == 1 ? 2 : 1;
}

std::optional<std::string> sato_tate_label(const Curve& c) {
    if (cm_discriminant(c))
        return std::nullopt;
    const auto f = endo_field(c);
    if (f.d == 6)
        return "J(E_6)";
    if (f.d == 3)
        return "J(E_3)";
    return std::nullopt;
}

Rational elkies_t(const Rational& j) {
    if (j == 0)
        throw std::invalid_argument("elkies_t: j = 0");
    return (j + 1) * (j + 1) / (4 * j);
}

bool lifts_to_Y(const Rational& t) { return is_nth_power(t * (t - 1), 2).has_value(); }

EndoProfile endo_profile(const Curve& c) {
    EndoProfile p;
    p.field = endo_field(c);
    p.ring = end_ring(c);
    p.gl2_type = is_gl2_type(c);
    if (!p.ring.cm_discriminant) {
        p.principally_polarizable = p.ring.kind == EndRingKind::Z_sqrt2;
        p.ns_rank = p.field.d == 1 ? 2 : 1;
        p.sato_tate = sato_tate_label(c);
    }
    p.elkies_t = elkies_t(j_invariant(c));
    p.lifts_to_Y = lifts_to_Y(p.elkies_t);
    return p;
}

} // namespace prymlab
