#include "prymlab/families.hpp"
#include "prymlab/errors.hpp"

#include <algorithm>

namespace prymlab {

namespace {

std::vector<FamilySpec> build_registry() {
    const Expr a = Expr::var("a"), b = Expr::var("b"), c = Expr::var("c"), d = Expr::var("d");
    const Expr s = Expr::var("s"), t = Expr::var("t"), v = Expr::var("v"), w = Expr::var("w");
    const auto G = [](int m, int n) { return AbelianGroup::elementary(m, n); };
    std::vector<FamilySpec> r;

    r.push_back({"table2_trivial", {"a", "b"}, {}, a, b, G(0, 0), std::nullopt,
                 (4 * b - pow(a, 2)) / (4 * b), {}});
    r.push_back({"table2_Z2", {"s", "t"}, {}, 2 * s, pow(s, 2) - pow(t, 3), G(1, 0), std::nullopt,
                 pow(t, 3) / (pow(t, 3) - pow(s, 2)), {}});
    r.push_back({"table2_Z3_f", {"c", "d"}, {}, -(c + 1) * pow(d, 2), c * pow(d, 4), G(0, 1), std::nullopt,
                 -pow(c - 1, 2) / (4 * c), {}});
    r.push_back({"Z3_fhat", {"c", "d"}, {}, -8 * (c + 1) * pow(d, 2), 16 * pow(c - 1, 2) * pow(d, 4),
                 G(0, 1), std::nullopt, std::nullopt, {}});
    r.push_back({"table2_Z2xZ2", {"w", "d"}, {}, (16 * pow(w, 6) + 40 * pow(w, 3) - 2) * pow(d, 3),
                 pow(8 * pow(w, 3) + 1, 3) * pow(d, 6), G(2, 0), std::nullopt,
                 -pow(4 * w * (pow(w, 3) - 1) / (8 * pow(w, 3) + 1), 3), {}});
    r.push_back({"Z6_case1", {"c"}, {}, -16 * (c + 1) * pow(c - 1, 2), 256 * c * pow(c - 1, 4), G(1, 1),
                 std::nullopt, std::nullopt, {}});
    r.push_back({"Z6_case2", {"c"}, {}, 8 * c * (1 - c), 16 * pow(c, 2) * pow(1 + c, 2), G(1, 1),
                 std::nullopt, 4 * c / pow(c + 1, 2), {"table2_Z6"}});
    r.push_back({"Z6_case3", {"t"},
                 {{"c", (3 * t - 2) * pow(5 * t - 2, 3) / (t * pow(7 * t - 4, 3))}},
                 -(c + 1) * pow(c, 4), pow(c, 9), G(1, 1), std::nullopt, std::nullopt, {}});
    r.push_back({"Z6_case4", {"v"}, {},
                 Expr(make_rational(1, 4)) * pow(1 - v, 3) * pow(3 * v + 1, 3) *
                     (3 * pow(v, 4) + 6 * pow(v, 2) - 1),
                 pow(v, 6) * pow(v - 1, 6) * pow(3 * v + 1, 6), G(1, 1), std::nullopt, std::nullopt, {}});
    r.push_back({"table2_Z3xZ3", {"c", "d"}, {}, -(pow(c, 2) + 1) * pow(d, 2), pow(c, 2) * pow(d, 4),
                 G(0, 2), std::nullopt, pow(pow(c, 2) - 1, 2) / (-4 * pow(c, 2)), {}});
    r.push_back({"table2_Z3xZ6", {"c"}, {}, -16 * (pow(c, 2) + 1) * pow(pow(c, 2) - 1, 2),
                 256 * pow(c, 2) * pow(pow(c, 2) - 1, 4), G(1, 2), std::nullopt,
                 pow(pow(c, 2) - 1, 2) / (-4 * pow(c, 2)), {}});
    r.push_back({"two_lift", {"s", "d"}, {}, (4 * s + 3) * (4 * pow(s, 2) - 3) * pow(d, 3),
                 pow(4 * s + 3, 3) * pow(d, 6), G(1, 0), std::nullopt, std::nullopt, {}});
    r.push_back({"rm_sqrt2", {"t", "d"}, {}, 2 * pow(pow(t, 2) + 1, 2) * t * pow(d, 3),
                 pow(pow(t, 2) + 1, 3) * pow(t, 2) * pow(d, 6), G(0, 0), EndRingKind::Z_sqrt2, std::nullopt,
                 {}});
    r.push_back({"rm_sqrt6", {"t", "d"}, {}, 18 * pow(d, 3) * t * pow(1 - 3 * pow(t, 2), 2),
                 81 * pow(d, 6) * pow(t, 2) * pow(1 - 3 * pow(t, 2), 3), G(0, 0), EndRingKind::Z_sqrt6,
                 std::nullopt, {}});
    r.push_back({"gl2_sqrt2_F9", {"t"}, {}, -4 * (pow(t, 2) + 1) / (pow(t, 2) * pow(pow(t, 2) - 1, 2)),
                 16 / (pow(t, 2) * pow(pow(t, 2) - 1, 4)), G(0, 2), EndRingKind::Z_sqrt2, std::nullopt, {}});
    r.push_back({"gl2_sqrt6_Z3", {"t"}, {}, 36 * (3 * pow(t, 2) - 1) / (pow(t, 2) * pow(3 * pow(t, 2) + 1, 2)),
                 -3888 / (pow(t, 2) * pow(3 * pow(t, 2) + 1, 4)), G(0, 1), EndRingKind::Z_sqrt6, std::nullopt,
                 {}});
    return r;
}

} // namespace

const std::vector<FamilySpec>& list_families() {
    static const std::vector<FamilySpec> registry = build_registry();
    return registry;
}

const FamilySpec& find_family(const std::string& id) {
    for (const auto& f : list_families())
        if (f.id == id || std::find(f.aliases.begin(), f.aliases.end(), id) != f.aliases.end())
            return f;
    throw UnknownFamily("unknown family '" + id + "'");
}

Bindings family_bindings(const FamilySpec& spec, const Bindings& params) {
    for (const auto& [name, value] : params)
        if (std::find(spec.param_names.begin(), spec.param_names.end(), name) == spec.param_names.end())
            throw ParseError("family " + spec.id + " has no parameter '" + name + "'");
    for (const auto& name : spec.param_names)
        if (!params.count(name))
            throw ParseError("family " + spec.id + " needs parameter '" + name + "'");
    Bindings env = params;
    for (const auto& [name, e] : spec.derived)
        env[name] = e.eval(env);
    return env;
}

Curve instantiate(const std::string& id, const Bindings& params) {
    const auto& spec = find_family(id);
    const Bindings env = family_bindings(spec, params);
    const Rational a = spec.a.eval(env), b = spec.b.eval(env);
    if (discriminant(a, b) == 0)
        throw DegenerateParameters("degenerate parameters for " + spec.id + ": discriminant vanishes");
    return Curve(a, b);
}

AbelianGroup expected_torsion(const std::string& id) { return find_family(id).expected_torsion; }

} // namespace prymlab
