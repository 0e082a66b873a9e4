#pragma once

#include <json.hpp>

#include "seqhc/spaces/dyadic.hpp"
#include "seqhc/spaces/grid_vector.hpp"

namespace seqhc::spaces {

using json = nlohmann::ordered_json;

json scalar_to_json(const Rational& s);
json scalar_to_json(const Complex& s);

/// [{"exponent": {"numerator": n, "scale": s}, "coefficient": [re, im]}, ...]
/// in increasing exponent order.
json to_json(const DyadicPolynomial& f);
DyadicPolynomial dyadic_polynomial_from_json(const json& j);

/// [{"i": row, "j": col, "coefficient": ...}, ...] in row-major order; rational
/// coefficients are "p/q" strings, complex ones [re, im].
template <class S>
json to_json(const GridVector<S>& v) {
  json out = json::array();
  for (const auto& [cell, c] : v.entries())
    out.push_back({{"i", cell.row}, {"j", cell.col}, {"coefficient", scalar_to_json(c)}});
  return out;
}

GridVector<Rational> rational_grid_vector_from_json(const json& j);

}  // namespace seqhc::spaces
