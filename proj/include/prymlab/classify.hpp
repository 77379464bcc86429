#pragma once

#include "prymlab/curve.hpp"
#include "prymlab/endo.hpp"
#include "prymlab/oracle.hpp"
#include "prymlab/torsion.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace prymlab {

using Json = nlohmann::ordered_json;

struct ClassifyRecord {
    Curve curve;
    Rational j;
    Rational delta;
    bool special = false;
    EndoProfile endo;
    TorsionReport torsion;
    std::optional<OracleSummary> oracle;
    Curve dual;
};

struct ClassifyOptions {
    bool oracle = false;
    // Empty means the first five good primes from 5.
    std::vector<std::uint64_t> primes;
};

ClassifyRecord classify(const Curve& c, const ClassifyOptions& opts = {});
std::string format_report(const ClassifyRecord& r);

Json to_json(const Curve& c);
Curve curve_from_json(const Json& j);
Json to_json(const EndoProfile& e);
EndoProfile endo_from_json(const Json& j);
Json to_json(const TorsionReport& t);
TorsionReport torsion_from_json(const Json& j);
Json to_json(const LPolynomial& l);
Json to_json(const OracleSummary& s);
OracleSummary oracle_from_json(const Json& j);
Json to_json(const ClassifyRecord& r);
ClassifyRecord record_from_json(const Json& j);

} // namespace prymlab
