#pragma once

#include <map>
#include <string>

#include "chiy/qseries.hpp"
#include "chiy/specialization.hpp"
#include "json.hpp"

namespace chiy {

using json = nlohmann::json;

/// {"offset": int, "order": int, "coeffs": [coefficient strings]}; order is exclusive.
template <CoefficientRing C>
json series_to_json(const QSeries<C>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return {{"offset", s.offset()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

/// Nonzero terms as "q^e: coefficient".
template <CoefficientRing C>
json series_terms(const QSeries<C>& s) {
  json out = json::array();
  for (int e = s.offset(); e < s.order(); ++e) {
    const C c = s.coefficient(e);
    if (!c.is_zero()) out.push_back("q^" + std::to_string(e) + ": " + c.to_string());
  }
  return out;
}

json specialization_to_json(const Specialization& spec);

inline json counts_to_json(const std::map<int, std::size_t>& counts) {
  json out = json::object();
  for (const auto& [e, n] : counts) out[std::to_string(e)] = n;
  return out;
}

}  // namespace chiy
