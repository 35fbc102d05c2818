#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "chiy/character.hpp"
#include "chiy/fixed_point_cache.hpp"
#include "chiy/qseries.hpp"
#include "chiy/specialization.hpp"

namespace chiy {

/// Equivariant: theta products at the full specialization.
/// Limit: the ordered limit e_r -> 0, ..., e_1 -> 0 taken factor by factor.
enum class LocalizationMode { Equivariant, Limit };

std::string to_string(LocalizationMode m);
LocalizationMode parse_localization_mode(const std::string& text);

struct SeriesRequest {
  int rank = 1;
  /// Exceptional-curve degree; blow-up series only.
  int k = 0;
  /// Largest instanton number n included (P^2: q^{2rn}; blow-up: q^{2rn + k(r-k)}).
  int max_n = 0;
  Specialization spec;
  LocalizationMode mode = LocalizationMode::Equivariant;
  unsigned threads = 1;
  const FixedPointCache* cache = nullptr;
  CharacterHook tangent_hook;
};

template <CoefficientField C>
struct GeneratingSeries {
  QSeries<C> series;
  /// Number of fixed points contributing to each q-exponent.
  std::map<int, std::size_t> fixed_points;
};

/// Z = sum over r-tuples Y of theta(T_Y) q^{2r|Y|}. Offset 0, truncation order 2r(max_n + 1).
template <CoefficientField C>
GeneratingSeries<C> z_series(const SeriesRequest& req);

/// Zhat = sum over (Y, Z, k) of theta(T) q^{2r(|Y|+|Z|) + sum_{i<j}(k_i-k_j)^2}.
/// Offset k(r-k), truncation order 2r(max_n + 1) + k(r-k).
template <CoefficientField C>
GeneratingSeries<C> zhat_series(const SeriesRequest& req);

/// Limit-mode Z in closed form: W(t1, t2, y, y^{r-1} q^{2r})^r.
template <CoefficientField C>
QSeries<C> z_series_limit_closed(const SeriesRequest& req);

/// Instanton cutoffs needed to know Z and Zhat through q^order.
int z_max_n_for_order(int rank, int order);
int zhat_max_n_for_order(int rank, int k, int order);

}  // namespace chiy
