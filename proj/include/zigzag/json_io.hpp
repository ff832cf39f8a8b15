#pragma once

// JSON forms shared by the CLI and the reports.
//
// A polynomial is an object mapping exponent to coefficient, both as decimal
// strings, exponents ascending:  {"2": "1", "4": "1"}  for q^2 + q^4.
// A rational is {"numerator": "...", "denominator": "...", "decimal": 0.8};
// the decimal is advisory only.

#include <json.hpp>

#include "zigzag/lattice.hpp"
#include "zigzag/partition.hpp"
#include "zigzag/qpoly.hpp"

namespace zigzag {

using Json = nlohmann::ordered_json;

Json poly_to_json(const LaurentPoly& p);
/// Throws PreconditionError on malformed keys or values.
LaurentPoly poly_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Json point_to_json(const Point& p);

/// {identity, parameters, holds, lhs, rhs[, note]}
Json report_to_json(const IdentityReport& r);
Json average_report_to_json(const AverageReport& r);

} // namespace zigzag
