#pragma once

#include "prymlab/curve.hpp"
#include "prymlab/endo.hpp"
#include "prymlab/expr.hpp"
#include "prymlab/torsion.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prymlab {

struct FamilySpec {
    std::string id;
    std::vector<std::string> param_names;
    // Auxiliary quantities evaluated in order before a and b.
    std::vector<std::pair<std::string, Expr>> derived;
    Expr a;
    Expr b;
    AbelianGroup expected_torsion;
    std::optional<EndRingKind> expected_end_ring;
    std::optional<Expr> j_formula;
    std::vector<std::string> aliases;
};

const std::vector<FamilySpec>& list_families();
const FamilySpec& find_family(const std::string& id);

Bindings family_bindings(const FamilySpec& spec, const Bindings& params);
Curve instantiate(const std::string& id, const Bindings& params);
AbelianGroup expected_torsion(const std::string& id);

} // namespace prymlab
