#pragma once

#include <json.hpp>

#include "semilie/intersection.hpp"
#include "semilie/kernel.hpp"
#include "semilie/qpoly.hpp"
#include "semilie/satake.hpp"

namespace semilie {

using nlohmann::json;

// Rationals serialize as [num, den]; integers that overflow int64 become decimal strings.
json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const json& j);
json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const json& j);
json satake_y_to_json(const SatakeY& s);
SatakeY satake_y_from_json(const json& j);
json matrix_to_json(const PolyMatrix& m);

json params_to_json(const OrbitalParams& p);
json report_to_json(const IdentityReport& r);

}  // namespace semilie
