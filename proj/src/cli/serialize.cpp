#include "kmk/serialize.hpp"

#include <stdexcept>
#include <string>

namespace kmk {
namespace {

BigRational rational_from_json(const Json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("rational must be a \"p/q\" string");
  }
  return parse_rational(j.get<std::string>());
}

int int_key(const std::string& key) {
  std::size_t used = 0;
  const int value = std::stoi(key, &used);
  if (used != key.size()) {
    throw std::invalid_argument("non-integer key '" + key + "'");
  }
  return value;
}

}  // namespace

Json to_json(const BigRational& r) { return to_string(r); }

Json to_json(const PolyC& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    out.push_back(to_string(c));
  }
  return out;
}

Json to_json(const RationalFnC& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const FineStructureForm& form) {
  Json theta = Json::object();
  for (const auto& [k, value] : form.theta) {
    theta[std::to_string(k)] = to_string(value);
  }
  return Json{{"g", form.g}, {"theta", theta}};
}

Json to_json(const AnsatzSum& s) {
  Json out = Json::array();
  for (const auto& term : s.terms()) {
    out.push_back(Json{{"num", to_json(term.num)}, {"a", term.a}, {"b", term.b}});
  }
  return out;
}

Json to_json(const MomentPolynomial& m) {
  Json counts = Json::object();
  for (const auto& [g, count] : m.counts) {
    // Counts stay exact: plain JSON integers while they fit, strings beyond.
    if (count.fits_slong_p()) {
      counts[std::to_string(g)] = count.get_si();
    } else {
      counts[std::to_string(g)] = to_string(count);
    }
  }
  return Json{{"k", m.k}, {"counts", counts}};
}

PolyC poly_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("polynomial must be a coefficient array");
  }
  std::vector<BigRational> coeffs;
  for (const auto& c : j) {
    coeffs.push_back(rational_from_json(c));
  }
  return PolyC(std::move(coeffs));
}

RationalFnC rational_fn_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational function needs num and den");
  }
  return RationalFnC(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

FineStructureForm fine_structure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("theta")) {
    throw std::invalid_argument("fine structure form needs g and theta");
  }
  FineStructureForm form;
  form.g = j.at("g").get<int>();
  for (const auto& [key, value] : j.at("theta").items()) {
    BigRational theta = rational_from_json(value);
    if (theta != 0) {
      form.theta.emplace(int_key(key), theta);
    }
  }
  return form;
}

AnsatzSum ansatz_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("ansatz sum must be an array of terms");
  }
  AnsatzSum s;
  for (const auto& term : j) {
    s.add(poly_from_json(term.at("num")), term.at("a").get<int>(), term.at("b").get<int>());
  }
  return s;
}

MomentPolynomial moment_polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("counts")) {
    throw std::invalid_argument("moment polynomial needs k and counts");
  }
  MomentPolynomial m;
  m.k = j.at("k").get<int>();
  for (const auto& [key, value] : j.at("counts").items()) {
    Count count = value.is_string() ? Count(value.get<std::string>(), 10) : Count(value.get<long>());
    if (count != 0) {
      m.counts.emplace(int_key(key), std::move(count));
    }
  }
  return m;
}

}  // namespace kmk
