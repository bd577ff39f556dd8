#include "omega/serialization.hpp"

#include <charconv>
#include <string>

#include "omega/errors.hpp"

namespace omega {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_kind(const Json& j, const std::string& kind) {
  const Json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError("expected kind '" + kind + "', got " + k.dump());
  }
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

Exponent exponent_from(const std::string& key) {
  Exponent e = 0;
  auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
  if (ec != std::errc() || end != key.data() + key.size()) throw ParseError("invalid exponent key '" + key + "'");
  return e;
}

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(v.to_fraction_string());
  return out;
}

}  // namespace

Json to_json(const OmegaNumber& x) {
  Json j;
  j["kind"] = "omega";
  j["zero"] = x.is_zero();
  j["top"] = x.has_leading_term() ? Json(x.top()) : Json(nullptr);
  Json coeffs = Json::object();
  for (const Term& t : x.terms()) coeffs[std::to_string(t.exponent)] = t.value.to_fraction_string();
  j["coeffs"] = std::move(coeffs);
  j["floor"] = x.floor() ? Json(*x.floor()) : Json("exact");
  return j;
}

Json to_json(const AlephNumber& l) {
  Json j;
  j["kind"] = "aleph";
  j["coeffs"] = rational_list(l.coeffs());
  return j;
}

Json to_json(const CoeffTable& table) {
  Json j;
  j["kind"] = "coeff_table";
  j["direction"] = to_string(table.direction());
  j["cutoff"] = table.cutoff();
  Json rows = Json::array();
  for (const auto& row : table.rows()) rows.push_back(rational_list(row));
  j["rows"] = std::move(rows);
  return j;
}

OmegaNumber omega_from_json(const Json& j) {
  expect_kind(j, "omega");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
  std::vector<Term> terms;
  for (const auto& [key, value] : coeffs.items()) terms.push_back({exponent_from(key), rational_from(value)});

  const Json& floor_field = field(j, "floor");
  std::optional<Exponent> floor;
  if (floor_field.is_number_integer()) {
    floor = floor_field.get<Exponent>();
  } else if (!(floor_field.is_string() && floor_field.get<std::string>() == "exact")) {
    throw ParseError("'floor' must be an integer or \"exact\", got " + floor_field.dump());
  }
  OmegaNumber x = OmegaNumber::make(std::move(terms), floor);

  const Json& zero = field(j, "zero");
  if (!zero.is_boolean() || zero.get<bool>() != x.is_zero()) throw ParseError("'zero' disagrees with the coefficients");
  const Json& top = field(j, "top");
  if (x.has_leading_term() ? !(top.is_number_integer() && top.get<Exponent>() == x.top()) : !top.is_null()) {
    throw ParseError("'top' disagrees with the coefficients");
  }
  return x;
}

AlephNumber aleph_from_json(const Json& j) {
  expect_kind(j, "aleph");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw ParseError("'coeffs' must be a non-empty array");
  std::vector<Rational> values;
  for (const Json& c : coeffs) values.push_back(rational_from(c));
  return AlephNumber(std::move(values));
}

CoeffTable coeff_table_from_json(const Json& j) {
  expect_kind(j, "coeff_table");
  const Json& direction = field(j, "direction");
  if (!direction.is_string()) throw ParseError("'direction' must be a string");
  const Json& cutoff_field = field(j, "cutoff");
  if (!cutoff_field.is_number_unsigned()) throw ParseError("'cutoff' must be a natural number");
  auto cutoff = cutoff_field.get<std::size_t>();
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != cutoff) throw ParseError("'rows' must hold cutoff rows");

  CoeffTable table(parse_direction(direction.get<std::string>()), cutoff);
  for (std::size_t r = 0; r < cutoff; ++r) {
    if (!rows[r].is_array() || rows[r].size() != cutoff) throw ParseError("each row must hold cutoff entries");
    for (std::size_t c = 0; c < cutoff; ++c) table.at(r + 1, c + 1) = rational_from(rows[r][c]);
  }
  return table;
}

}  // namespace omega
