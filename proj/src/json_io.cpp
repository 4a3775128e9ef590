#include "semilie/json_io.hpp"

#include <stdexcept>

namespace semilie {

namespace {

json int_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<int64_t>(z.get_si());
  return z.get_str();
}

mpz_class int_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

}  // namespace

json poly_to_json(const QPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, int_to_json(c.get_num()), int_to_json(c.get_den())});
  return {{"q_terms", terms}};
}

QPolynomial poly_from_json(const json& j) {
  QPolynomial out;
  for (const auto& t : j.at("q_terms")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("q_terms entries are [exp, num, den]");
    Rational c(int_from_json(t[1]), int_from_json(t[2]));
    c.canonicalize();
    out.add_term(t[0].get<int>(), c);
  }
  return out;
}

json series_to_json(const LaurentSeries& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back({k, poly_to_json(c)});
  return {{"t_terms", terms}};
}

LaurentSeries series_from_json(const json& j) {
  LaurentSeries out;
  for (const auto& t : j.at("t_terms")) out.add_term(t.at(0).get<int>(), poly_from_json(t.at(1)));
  return out;
}

json satake_y_to_json(const SatakeY& s) {
  json terms = json::array();
  for (const auto& [i, c] : s.terms()) terms.push_back({i, poly_to_json(c)});
  return {{"y_terms", terms}};
}

SatakeY satake_y_from_json(const json& j) {
  SatakeY out;
  for (const auto& t : j.at("y_terms")) out.add(t.at(0).get<int>(), poly_from_json(t.at(1)));
  return out;
}

json matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(poly_to_json(e));
    rows.push_back(r);
  }
  return rows;
}

json params_to_json(const OrbitalParams& p) {
  json vda = is_inf(p.vda) ? json("inf") : json(p.vda);
  return {{"r", p.r}, {"vb", p.vb}, {"vc", p.vc}, {"ve", p.ve}, {"vda", vda}};
}

json report_to_json(const IdentityReport& r) {
  return {{"params", params_to_json(r.params)},
          {"lhs", poly_to_json(r.lhs)},
          {"rhs", poly_to_json(r.rhs)},
          {"pass", r.pass}};
}

}  // namespace semilie
