#pragma once

#include <optional>
#include <string>

#include "chiy/character.hpp"
#include "chiy/qseries.hpp"
#include "chiy/specialization.hpp"

namespace chiy {

/// Argument substitution applied to (t1, t2) inside the rank-one series.
enum class WSubstitution { Identity, T2OverT1, T1OverT2 };

std::string to_string(WSubstitution s);
WSubstitution parse_w_substitution(const std::string& text);
ExponentMap exponent_map(WSubstitution s);

struct WRequest {
  Specialization spec;
  WSubstitution substitution = WSubstitution::Identity;
  /// Highest q-exponent kept (inclusive).
  int order = 0;
  unsigned threads = 1;
  CharacterHook hook;
};

/// W(t1, t2, y, q) = sum_Y prod_{s in Y} theta(t1^{-l} t2^{a+1}) theta(t1^{l+1} t2^{-a}) q^{|Y|},
/// with the requested substitution applied to (t1, t2). Graded by |Y|.
template <CoefficientField C>
QSeries<C> w_series(const WRequest& req);

template <CoefficientField C>
struct IdentityCheck {
  int order = 0;
  QSeries<C> lhs;
  QSeries<C> rhs;
  std::optional<int> first_failure;
  bool pass() const { return !first_failure.has_value(); }
};

/// Checks W(t1, t2/t1) W(t1/t2, t2) / W(t1, t2) = prod_{n>=1} (1 - (yq)^n)^{-1}
/// through q^order. `numerator_hook` rewrites the characters of the first
/// numerator factor only (negative controls).
template <CoefficientField C>
IdentityCheck<C> verify_nekrasov_okounkov(const Specialization& spec, int order, unsigned threads = 1,
                                          const CharacterHook& numerator_hook = {});

}  // namespace chiy
