#pragma once

#include "prymlab/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prymlab {

// L = Q(omega, delta^(1/6)) with Gal(L/Q) dihedral of order 2d.
struct EndoFieldDescriptor {
    Rational delta;
    int d2 = 1;
    int d3 = 1;
    int d = 1;
    int degree = 2;
    std::string group_label;
};

enum class EndRingKind { Z, Z_sqrt2, Z_sqrt6, CM };

struct EndRing {
    EndRingKind kind = EndRingKind::Z;
    std::optional<long> cm_discriminant;

    friend bool operator==(const EndRing&, const EndRing&) = default;
};

std::string to_string(EndRingKind kind);
EndRingKind end_ring_kind_from_string(const std::string& s);

struct CMEntry {
    long discriminant;
    Rational j;
};

// Rational CM j-invariants. The disc -3 row (j = 0) is listed but never realized by a smooth curve.
const std::vector<CMEntry>& cm_table();

EndoFieldDescriptor endo_field(const Curve& c);
std::optional<long> cm_discriminant(const Curve& c);
EndRing end_ring(const Curve& c);
bool is_gl2_type(const Curve& c);
bool is_principally_polarizable(const Curve& c);
int ns_rank(const Curve& c);
std::optional<std::string> sato_tate_label(const Curve& c);

Rational elkies_t(const Rational& j);
bool lifts_to_Y(const Rational& t);

struct EndoProfile {
    EndoFieldDescriptor field;
    EndRing ring;
    bool gl2_type = false;
    std::optional<bool> principally_polarizable;
    std::optional<int> ns_rank;
    std::optional<std::string> sato_tate;
    Rational elkies_t;
    bool lifts_to_Y = false;

    friend bool operator==(const EndoProfile& x, const EndoProfile& y) {
        return x.field.delta == y.field.delta && x.field.d2 == y.field.d2 && x.field.d3 == y.field.d3 &&
               x.field.d == y.field.d && x.field.degree == y.field.degree &&
               x.field.group_label == y.field.group_label && x.ring == y.ring &&
               x.gl2_type == y.gl2_type && x.principally_polarizable == y.principally_polarizable &&
               x.ns_rank == y.ns_rank && x.sato_tate == y.sato_tate && x.elkies_t == y.elkies_t &&
               x.lifts_to_Y == y.lifts_to_Y;
    }
};

EndoProfile endo_profile(const Curve& c);

} // namespace prymlab
