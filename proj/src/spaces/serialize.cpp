#include "seqhc/spaces/serialize.hpp"

#include <stdexcept>

namespace seqhc::spaces {

json scalar_to_json(const Rational& s) { return to_string(s); }

json scalar_to_json(const Complex& s) { return json::array({s.real(), s.imag()}); }

json to_json(const DyadicPolynomial& f) {
  json out = json::array();
  for (const auto& [q, c] : f.terms())
    out.push_back({{"exponent", {{"numerator", q.numerator()}, {"scale", q.scale()}}},
                   {"coefficient", scalar_to_json(c)}});
  return out;
}

DyadicPolynomial dyadic_polynomial_from_json(const json& j) {
  DyadicPolynomial f;
  for (const auto& term : j) {
    const auto& e = term.at("exponent");
    const auto q = DyadicExponent::from_parts(e.at("numerator").get<std::uint64_t>(),
                                              e.at("scale").get<std::int64_t>());
    const auto& c = term.at("coefficient");
    f += DyadicPolynomial::monomial(q, {c.at(0).get<double>(), c.at(1).get<double>()});
  }
  return f;
}

GridVector<Rational> rational_grid_vector_from_json(const json& j) {
  GridVector<Rational> v;
  for (const auto& entry : j) {
    const auto row = entry.at("i").get<std::uint64_t>();
    const auto col = entry.at("j").get<std::uint64_t>();
    if (row == 0 || col == 0) throw std::invalid_argument("grid indices start at 1");
    const auto& c = entry.at("coefficient");
    const Rational value = c.is_string() ? parse_rational(c.get<std::string>())
                                         : parse_rational(std::to_string(c.get<long long>()));
    v.add({row, col}, value);
  }
  return v;
}

}  // namespace seqhc::spaces
