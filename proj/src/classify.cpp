#include "prymlab/classify.hpp"
#include "prymlab/errors.hpp"

#include <sstream>

namespace prymlab {

ClassifyRecord classify(const Curve& c, const ClassifyOptions& opts) {
    std::optional<OracleSummary> oracle;
    std::optional<Integer> bound;
    if (opts.oracle) {
        auto primes = opts.primes.empty() ? good_primes(c, 5, 5) : opts.primes;
        oracle = run_oracle(c, primes);
        bound = oracle->gcd;
    }
    return ClassifyRecord{c,
                          j_invariant(c),
                          c.discriminant(),
                          is_special(c),
                          endo_profile(c),
                          torsion_group(c, bound),
                          std::move(oracle),
                          bigonal_dual(c)};
}

namespace {

std::string roots_text(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& r : v)
        s += (s.empty() ? "" : ", ") + to_string(r);
    return "{" + s + "}";
}

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v)
        out.push_back(to_string(r));
    return out;
}

std::vector<Rational> rationals_from(const Json& j) {
    std::vector<Rational> v;
    for (const auto& x : j)
        v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

Json optional_rational(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

std::optional<Rational> optional_rational_from(const Json& j) {
    if (j.is_null())
        return std::nullopt;
    return parse_rational(j.get<std::string>());
}

Json integer_json(const Integer& n) {
    if (n.fits_slong_p())
        return Json(n.get_si());
    return Json(to_string(n));
}

Integer integer_from(const Json& j) {
    if (j.is_string())
        return Integer(j.get<std::string>(), 10);
    return Integer(j.get<long>());
}

LPolynomial lpoly_from(const Json& j, std::uint64_t p, int genus) {
    LPolynomial l;
    l.p = p;
    l.genus = genus;
    for (const auto& c : j)
        l.coeffs.push_back(integer_from(c));
    return l;
}

} // namespace

Json to_json(const Curve& c) { return Json{{"a", to_string(c.a())}, {"b", to_string(c.b())}}; }

Curve curve_from_json(const Json& j) {
    return Curve(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()));
}

Json to_json(const EndoProfile& e) {
    Json j;
    j["delta"] = to_string(e.field.delta);
    j["d2"] = e.field.d2;
    j["d3"] = e.field.d3;
    j["d"] = e.field.d;
    j["degree"] = e.field.degree;
    j["group_label"] = e.field.group_label;
    j["end_ring"] = to_string(e.ring.kind);
    j["cm_discriminant"] = e.ring.cm_discriminant ? Json(*e.ring.cm_discriminant) : Json(nullptr);
    j["gl2_type"] = e.gl2_type;
    j["principally_polarizable"] = e.principally_polarizable ? Json(*e.principally_polarizable) : Json(nullptr);
    j["ns_rank"] = e.ns_rank ? Json(*e.ns_rank) : Json(nullptr);
    j["sato_tate"] = e.sato_tate ? Json(*e.sato_tate) : Json(nullptr);
    j["elkies_t"] = to_string(e.elkies_t);
    j["lifts_to_Y"] = e.lifts_to_Y;
    return j;
}

EndoProfile endo_from_json(const Json& j) {
    EndoProfile e;
    e.field.delta = parse_rational(j.at("delta").get<std::string>());
    e.field.d2 = j.at("d2").get<int>();
    e.field.d3 = j.at("d3").get<int>();
    e.field.d = j.at("d").get<int>();
    e.field.degree = j.at("degree").get<int>();
    e.field.group_label = j.at("group_label").get<std::string>();
    e.ring.kind = end_ring_kind_from_string(j.at("end_ring").get<std::string>());
    if (!j.at("cm_discriminant").is_null())
        e.ring.cm_discriminant = j.at("cm_discriminant").get<long>();
    e.gl2_type = j.at("gl2_type").get<bool>();
    if (!j.at("principally_polarizable").is_null())
        e.principally_polarizable = j.at("principally_polarizable").get<bool>();
    if (!j.at("ns_rank").is_null())
        e.ns_rank = j.at("ns_rank").get<int>();
    if (!j.at("sato_tate").is_null())
        e.sato_tate = j.at("sato_tate").get<std::string>();
    e.elkies_t = parse_rational(j.at("elkies_t").get<std::string>());
    e.lifts_to_Y = j.at("lifts_to_Y").get<bool>();
    return e;
}

Json to_json(const TorsionReport& t) {
    Json j;
    j["group"] = t.group.name();
    j["invariant_factors"] = t.group.invariant_factors;
    j["status"] = to_string(t.status);
    j["two_rank"] = t.two.rank;
    j["three_rank"] = t.three.lower;
    j["witnesses"] = Json{{"ehat_point", optional_rational(t.two.ehat_point)},
                          {"lift_root", optional_rational(t.two.witness_root)},
                          {"f_roots", rationals(t.three.f_roots)},
                          {"fhat_roots", rationals(t.three.fhat_roots)}};
    j["end_module"] = t.end_module ? Json(*t.end_module) : Json(nullptr);
    j["two"] = Json{{"e_part", t.two.e_part}, {"lift", t.two.lift}};
    j["three"] = Json{{"r", t.three.r}, {"r_twist", t.three.r_twist}, {"lower", t.three.lower},
                      {"upper", t.three.upper}, {"status", to_string(t.three.status)}};
    return j;
}

namespace {

TorsionStatus status_from(const std::string& s) {
    if (s == "exact")
        return TorsionStatus::Exact;
    if (s == "lower_bound")
        return TorsionStatus::LowerBound;
    throw ParseError("unknown torsion status '" + s + "'");
}

} // namespace

TorsionReport torsion_from_json(const Json& j) {
    TorsionReport t;
    t.group.invariant_factors = j.at("invariant_factors").get<std::vector<long>>();
    t.status = status_from(j.at("status").get<std::string>());
    const auto& w = j.at("witnesses");
    t.two.e_part = j.at("two").at("e_part").get<bool>();
    t.two.lift = j.at("two").at("lift").get<bool>();
    t.two.rank = j.at("two_rank").get<int>();
    t.two.ehat_point = optional_rational_from(w.at("ehat_point"));
    t.two.witness_root = optional_rational_from(w.at("lift_root"));
    const auto& th = j.at("three");
    t.three.r = th.at("r").get<int>();
    t.three.r_twist = th.at("r_twist").get<int>();
    t.three.lower = th.at("lower").get<int>();
    t.three.upper = th.at("upper").get<int>();
    t.three.status = status_from(th.at("status").get<std::string>());
    t.three.f_roots = rationals_from(w.at("f_roots"));
    t.three.fhat_roots = rationals_from(w.at("fhat_roots"));
    if (!j.at("end_module").is_null())
        t.end_module = j.at("end_module").get<std::string>();
    return t;
}

Json to_json(const LPolynomial& l) {
    Json out = Json::array();
    for (const auto& c : l.coeffs)
        out.push_back(integer_json(c));
    return out;
}

Json to_json(const OracleSummary& s) {
    Json per = Json::array();
    for (const auto& pc : s.per_prime)
        per.push_back(Json{{"p", pc.p},
                           {"l_c", to_json(pc.l_c)},
                           {"l_e", to_json(pc.l_e)},
                           {"l_p", to_json(pc.l_p)},
                           {"prym_order", integer_json(pc.order)}});
    return Json{{"per_prime", per}, {"gcd", integer_json(s.gcd)}};
}

OracleSummary oracle_from_json(const Json& j) {
    OracleSummary s;
    for (const auto& e : j.at("per_prime")) {
        PrymCount pc;
        pc.p = e.at("p").get<std::uint64_t>();
        pc.l_c = lpoly_from(e.at("l_c"), pc.p, 3);
        pc.l_e = lpoly_from(e.at("l_e"), pc.p, 1);
        pc.l_p = lpoly_from(e.at("l_p"), pc.p, 2);
        pc.order = integer_from(e.at("prym_order"));
        s.per_prime.push_back(std::move(pc));
    }
    s.gcd = integer_from(j.at("gcd"));
    return s;
}

Json to_json(const ClassifyRecord& r) {
    Json j;
    j["curve"] = to_json(r.curve);
    j["j"] = to_string(r.j);
    j["delta"] = to_string(r.delta);
    j["special"] = r.special;
    j["endo"] = to_json(r.endo);
    j["torsion"] = to_json(r.torsion);
    j["oracle"] = r.oracle ? to_json(*r.oracle) : Json(nullptr);
    j["dual"] = to_json(r.dual);
    return j;
}

ClassifyRecord record_from_json(const Json& j) {
    std::optional<OracleSummary> oracle;
    if (!j.at("oracle").is_null())
        oracle = oracle_from_json(j.at("oracle"));
    return ClassifyRecord{curve_from_json(j.at("curve")),
                          parse_rational(j.at("j").get<std::string>()),
                          parse_rational(j.at("delta").get<std::string>()),
                          j.at("special").get<bool>(),
                          endo_from_json(j.at("endo")),
                          torsion_from_json(j.at("torsion")),
                          std::move(oracle),
                          curve_from_json(j.at("dual"))};
}

std::string format_report(const ClassifyRecord& r) {
    std::ostringstream out;
    const auto& e = r.endo;
    out << "curve      y^3 = x^4 + (" << to_string(r.curve.a()) << ")x^2 + (" << to_string(r.curve.b()) << ")\n";
    out << "j          " << to_string(r.j) << "\n";
    out << "delta      " << to_string(r.delta) << "\n";
    out << "special    " << (r.special ? "yes" : "no") << "\n";
    out << "dual       (" << to_string(r.dual.a()) << ", " << to_string(r.dual.b()) << ")\n";
    out << "endo field degree " << e.field.degree << ", Galois group " << e.field.group_label << "\n";
    out << "End(P)     " << to_string(e.ring.kind);
    if (e.ring.cm_discriminant)
        out << " (disc " << *e.ring.cm_discriminant << ")";
    out << "\n";
    out << "GL2-type   " << (e.gl2_type ? "yes" : "no") << "\n";
    if (e.principally_polarizable)
        out << "princ. pol " << (*e.principally_polarizable ? "yes" : "no") << "\n";
    if (e.ns_rank)
        out << "NS rank    " << *e.ns_rank << "\n";
    if (e.sato_tate)
        out << "Sato-Tate  " << *e.sato_tate << "\n";
    out << "Elkies t   " << to_string(e.elkies_t) << "\n";
    const auto& t = r.torsion;
    out << "torsion    " << t.group.name() << " (" << to_string(t.status) << ")\n";
    out << "  2-part   rank " << t.two.rank << (t.two.e_part ? ", E[2] point" : "")
        << (t.two.lift ? ", lifted root " + to_string(*t.two.witness_root) : "") << "\n";
    out << "  3-part   r = " << t.three.r << ", twist r = " << t.three.r_twist << ", bounds [" << t.three.lower
        << ", " << t.three.upper << "]\n";
    if (!t.three.f_roots.empty() || !t.three.fhat_roots.empty())
        out << "  roots    f " << roots_text(t.three.f_roots) << ", fhat " << roots_text(t.three.fhat_roots)
            << "\n";
    if (t.end_module)
        out << "module     " << *t.end_module << "\n";
    if (r.oracle) {
        out << "oracle     gcd " << to_string(r.oracle->gcd) << " over p =";
        for (const auto& pc : r.oracle->per_prime)
            out << " " << pc.p;
        out << "\n";
    }
    return out.str();
}

} // namespace prymlab
