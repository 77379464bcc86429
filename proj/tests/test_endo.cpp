#include <doctest.h>

#include "prymlab/endo.hpp"
#include "prymlab/errors.hpp"

#include <random>

using namespace prymlab;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

} // namespace

TEST_CASE("endomorphism field") {
    auto e = endo_field(Curve(3, 4));
    CHECK(e.delta == -448);
    CHECK(e.d2 == 2);
    CHECK(e.d3 == 3);
    CHECK(e.d == 6);
    CHECK(e.degree == 12);
    CHECK(e.group_label == "D6");

    auto f = endo_field(Curve(-4, 2));
    CHECK(f.delta == 256);
    CHECK(f.d2 == 1);
    CHECK(f.d3 == 3);
    CHECK(f.degree == 6);
    CHECK(f.group_label == "D3");

    auto g = endo_field(Curve(8, 8));
    CHECK(g.delta == 4096);
    CHECK(g.d == 1);
    CHECK(g.degree == 2);
    CHECK(g.group_label == "D1");

    // delta = -3 * square but not a cube
    auto h = endo_field(Curve(0, 1));
    CHECK(h.d2 == 2);
    CHECK(h.d3 == 1);
    CHECK(h.group_label == "D2");
}

TEST_CASE("CM discriminants") {
    CHECK(*cm_discriminant(Curve(0, 1)) == -4);
    CHECK(*cm_discriminant(Curve(4, 2)) == -24);
    CHECK_FALSE(cm_discriminant(Curve(3, 4)));
    // 1/j also matches
    CHECK(*cm_discriminant(bigonal_dual(Curve(4, 2))) == -24);
    CHECK(cm_table().size() == 10);
}

TEST_CASE("endomorphism ring") {
    CHECK(end_ring(Curve(100, 500)) == EndRing{EndRingKind::Z_sqrt2, std::nullopt});
    CHECK(end_ring(Curve(72, -648)) == EndRing{EndRingKind::Z_sqrt6, std::nullopt});
    CHECK(end_ring(Curve(3, 4)) == EndRing{EndRingKind::Z, std::nullopt});
    CHECK(end_ring(Curve(0, 1)) == EndRing{EndRingKind::CM, -4});
    // delta = 4^6 but j = -1 sits in the CM table, which takes precedence.
    CHECK(end_ring(Curve(8, 8)) == EndRing{EndRingKind::CM, -24});
    CHECK(is_gl2_type(Curve(8, 8)));
    CHECK(is_gl2_type(Curve(100, 500)));
    CHECK(is_gl2_type(Curve(72, -648)));
    CHECK_FALSE(is_gl2_type(Curve(3, 4)));
}

TEST_CASE("polarization, Neron-Severi rank, Sato-Tate") {
    CHECK(is_principally_polarizable(Curve(100, 500)));
    CHECK_FALSE(is_principally_polarizable(Curve(3, 4)));
    CHECK_FALSE(is_principally_polarizable(Curve(72, -648)));
    CHECK_THROWS_AS(is_principally_polarizable(Curve(0, 1)), CMNotSupported);
    CHECK_THROWS_AS(is_principally_polarizable(Curve(8, 8)), CMNotSupported);
    CHECK(ns_rank(Curve(100, 500)) == 2);
    CHECK(ns_rank(Curve(3, 4)) == 1);
    CHECK(ns_rank(Curve(5, 5)) == 1);
    CHECK_THROWS_AS(ns_rank(Curve(4, 2)), CMNotSupported);
    CHECK_THROWS_AS(ns_rank(Curve(-4, 2)), CMNotSupported);
    CHECK(*sato_tate_label(Curve(3, 4)) == "J(E_6)");
    CHECK(endo_field(Curve(5, 5)).group_label == "D3");
    CHECK(*sato_tate_label(Curve(5, 5)) == "J(E_3)");
    CHECK_FALSE(sato_tate_label(Curve(100, 500)));
    // j(-4, 2) = -1 is a CM point, so no label is asserted.
    CHECK_FALSE(sato_tate_label(Curve(-4, 2)));
}

TEST_CASE("Elkies coordinate") {
    CHECK(elkies_t(1) == 1);
    CHECK(lifts_to_Y(1));
    CHECK(elkies_t(-1) == 0);
    CHECK(lifts_to_Y(0));
    CHECK(elkies_t(Q("7/16")) == Q("529/448"));
    CHECK_FALSE(lifts_to_Y(2));
}

TEST_CASE("Elkies symmetry and lifting on realized j") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> v(-60, 60), den(1, 8);
    int checked = 0;
    while (checked < 300) {
        Rational a = make_rational(v(rng), den(rng)), b = make_rational(v(rng), den(rng));
        if (discriminant(a, b) == 0)
            continue;
        Curve c(a, b);
        Rational j = j_invariant(c);
        CHECK(elkies_t(j) == elkies_t(1 / j));
        CHECK(lifts_to_Y(elkies_t(j)));
        ++checked;
    }
}

TEST_CASE("RM parameterizations") {
    int sqrt2 = 0, sqrt6 = 0;
    for (long tn = -6; tn <= 6; ++tn)
        for (long td : {1L, 2L, 3L, 5L})
            for (long d : {-2L, 1L, 3L}) {
                Rational t = make_rational(tn, td);
                Rational a2 = 2 * pow(t * t + 1, 2) * t * pow(Rational(d), 3);
                Rational b2 = pow(t * t + 1, 3) * t * t * pow(Rational(d), 6);
                if (discriminant(a2, b2) != 0) {
                    Curve c(a2, b2);
                    if (!cm_discriminant(c)) {
                        CHECK(end_ring(c).kind == EndRingKind::Z_sqrt2);
                        CHECK(is_gl2_type(c));
                        CHECK(is_principally_polarizable(c));
                        ++sqrt2;
                    }
                }
                Rational a6 = 18 * pow(Rational(d), 3) * t * pow(1 - 3 * t * t, 2);
                Rational b6 = 81 * pow(Rational(d), 6) * t * t * pow(1 - 3 * t * t, 3);
                if (discriminant(a6, b6) != 0) {
                    Curve c(a6, b6);
                    if (!cm_discriminant(c)) {
                        CHECK(end_ring(c).kind == EndRingKind::Z_sqrt6);
                        CHECK(is_gl2_type(c));
                        CHECK_FALSE(is_principally_polarizable(c));
                        ++sqrt6;
                    }
                }
            }
    CHECK(sqrt2 > 50);
    CHECK(sqrt6 > 50);
}

TEST_CASE("twists preserve CM and geometric class") {
    for (const auto& row : cm_table()) {
        if (row.j == 0)
            continue;
        Curve c = row.j == 1 ? Curve(0, 1) : Curve(2 * (1 - row.j), 1 - row.j);
        for (long delta : {-27L, -1L, 2L, 7L}) {
            Curve t = sextic_twist(c, delta);
            CHECK(cm_discriminant(t) == cm_discriminant(c));
            CHECK(is_geometrically_isomorphic(t, c));
        }
    }
}

TEST_CASE("profile bundles the pieces") {
    auto p = endo_profile(Curve(3, 4));
    CHECK(p.field.degree == 12);
    CHECK(p.ring.kind == EndRingKind::Z);
    CHECK(*p.principally_polarizable == false);
    CHECK(*p.ns_rank == 1);
    CHECK(*p.sato_tate == "J(E_6)");
    CHECK(p.elkies_t == Q("529/448"));
    auto cm = endo_profile(Curve(0, 1));
    CHECK(cm.ring.kind == EndRingKind::CM);
    CHECK_FALSE(cm.principally_polarizable);
    CHECK_FALSE(cm.ns_rank);
    CHECK_FALSE(cm.sato_tate);
}
