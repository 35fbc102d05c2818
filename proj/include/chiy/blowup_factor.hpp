#pragma once

#include "chiy/qseries.hpp"
#include "chiy/ypoly.hpp"

namespace chiy {

/// Sign of the linear y-exponent: Plus uses y^{sum_{i<j}(k_i-k_j)/2},
/// Minus uses y^{-sum_{i<j}(k_i-k_j)/2}.
enum class YSign { Plus, Minus };

struct YkRequest {
  int rank = 1;
  int k = 0;
  /// Highest q-exponent kept (inclusive).
  int order = 0;
  YSign sign = YSign::Plus;
};

/// prod_{n>0} (1 - (q^2 y)^{rn})^{-r} * sum_{k_1+...+k_r = k}
///   q^{sum_{i<j}(k_i-k_j)^2} y^{sum_{i<j} ((k_i-k_j)^2 + (k_i-k_j))/2}.
/// Throws IntegralityViolation if a combined exponent is not a nonnegative integer.
QSeries<YPoly> yk_main(const YkRequest& req);

/// Same series as an eta quotient in x = q^{2r} y^r times the theta sum
/// sum_{v in Z^{r-1} + (k/r) I} x^{v^t A v} y^{v^t A I}, A upper unitriangular ones.
QSeries<YPoly> yk_gottsche(const YkRequest& req);

/// y = 1 specialization: prod (1 - q^{2rn})^{-r} * sum q^{sum_{i<j}(k_i-k_j)^2}.
QSeries<Rational> yk_euler(const YkRequest& req);

struct HolomorphicBlowupFactor {
  /// Value stated for the holomorphic Euler characteristic: 1 if k = 0, else 0.
  Rational stated;
  /// yk_main evaluated at y = 0.
  QSeries<Rational> computed;
  bool agrees() const;
};

HolomorphicBlowupFactor yk_hol(const YkRequest& req);

}  // namespace chiy
