#pragma once

#include <complex>

#include <nlohmann/json.hpp>

#include "supint/isometry.hpp"
#include "supint/killing.hpp"
#include "supint/pluecker.hpp"
#include "supint/sic.hpp"

namespace supint::io {

using nlohmann::json;

/// "p/q" for rationals, {"re": "p/q", "im": "p/q"} otherwise.
json to_json(const GaussRat& x);
/// Accepts both forms above and plain JSON integers. Throws ParseError.
GaussRat rat_from_json(const json& j);

json to_json(std::complex<double> x);

json to_json(const Sckt& t);
/// {"A_zz", "b_z", "c", "b_w", "A_ww"}; missing keys are an error.
Sckt tensor_from_json(const json& j);

/// Array of ten coordinates in canonical order.
json to_json(const PlueckerPoint& p);
PlueckerPoint point_from_json(const json& j);

/// Sparse {"i,j": coeff}.
json to_json(const BiPoly& p);
BiPoly poly_from_json(const json& j);

json to_json(const SicReport& r);

json to_json(const PlanarIsometry& g);
json to_json(const FloatIsometry& g);
PlanarIsometry isometry_from_json(const json& j);

/// Parses text, mapping JSON syntax errors to ParseError.
json parse_json(const std::string& text);

}  // namespace supint::io
