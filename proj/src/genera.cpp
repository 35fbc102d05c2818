#include "chiy/genera.hpp"

#include <stdexcept>

#include "chiy/rank1.hpp"
#include "chiy/theta.hpp"
#include "parallel.hpp"

namespace chiy {

std::string to_string(LocalizationMode m) { return m == LocalizationMode::Equivariant ? "equivariant" : "limit"; }

LocalizationMode parse_localization_mode(const std::string& text) {
  if (text == "equivariant") return LocalizationMode::Equivariant;
  if (text == "limit") return LocalizationMode::Limit;
  throw std::invalid_argument("unknown mode '" + text + "' (expected equivariant or limit)");
}

int z_max_n_for_order(int rank, int order) { return order < 0 ? 0 : order / (2 * rank); }

int zhat_max_n_for_order(int rank, int k, int order) {
  const int base = k * (rank - k);
  return order < base ? 0 : (order - base) / (2 * rank);
}

namespace {

void validate(const SeriesRequest& req, bool uses_k) {
  if (req.rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (uses_k && (req.k < 0 || req.k >= req.rank)) throw std::invalid_argument("k must satisfy 0 <= k < rank");
  if (req.max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  if (req.spec.rank() < req.rank) throw std::invalid_argument("specialization has fewer e-parameters than the rank");
}

template <CoefficientField C>
C contribution(Character tangent, const SeriesRequest& req) {
  if (req.tangent_hook) tangent = req.tangent_hook(tangent);
  return req.mode == LocalizationMode::Equivariant ? theta_eval<C>(tangent, req.spec)
                                                   : theta_limit_factor<C>(tangent, req.spec);
}

}  // namespace

template <CoefficientField C>
GeneratingSeries<C> z_series(const SeriesRequest& req) {
  validate(req, false);
  const int r = req.rank;
  std::vector<PartitionTuple> points;
  for (int n = 0; n <= req.max_n; ++n)
    for (auto& t : p2_fixed_points(r, n, req.cache)) points.push_back(std::move(t));

  const auto terms = detail::parallel_map<C>(points.size(), req.threads,
                                             [&](std::size_t i) { return contribution<C>(tangent_p2(points[i]), req); });

  GeneratingSeries<C> out;
  out.series = QSeries<C>::zero(2 * r * (req.max_n + 1));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int e = 2 * r * total_size(points[i]);
    out.series.add_to_coefficient(e, terms[i]);
    ++out.fixed_points[e];
  }
  return out;
}

template <CoefficientField C>
GeneratingSeries<C> zhat_series(const SeriesRequest& req) {
  validate(req, true);
  const int r = req.rank;
  const int base = req.k * (r - req.k);
  std::vector<BlowupFixedPoint> points;
  for (int n = 0; n <= req.max_n; ++n)
    for (auto& fp : blowup_fixed_points(r, req.k, n, req.cache)) points.push_back(std::move(fp));

  const auto terms = detail::parallel_map<C>(points.size(), req.threads,
                                             [&](std::size_t i) { return contribution<C>(tangent_blowup(points[i]), req); });

  GeneratingSeries<C> out;
  out.series = QSeries<C>(base, {}, 2 * r * (req.max_n + 1) + base);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int e = static_cast<int>(points[i].grading());
    if ((e - base) % (2 * r) != 0) throw std::logic_error("blow-up fixed point outside the expected q-grading");
    out.series.add_to_coefficient(e, terms[i]);
    ++out.fixed_points[e];
  }
  return out;
}

template <CoefficientField C>
QSeries<C> z_series_limit_closed(const SeriesRequest& req) {
  validate(req, false);
  if (req.mode != LocalizationMode::Limit) throw std::invalid_argument("closed form exists in limit mode only");
  const int r = req.rank;
  WRequest w{req.spec, WSubstitution::Identity, req.max_n, req.threads, {}};
  const C y = CoefficientTraits<C>::y(req.spec.y_mode);
  C y_power(1);
  for (int i = 0; i < r - 1; ++i) y_power = y_power * y;
  return w_series<C>(w).substitute_monomial(y_power, 2 * r).pow(r);
}

template GeneratingSeries<Rational> z_series<Rational>(const SeriesRequest&);
template GeneratingSeries<YRat> z_series<YRat>(const SeriesRequest&);
template GeneratingSeries<Rational> zhat_series<Rational>(const SeriesRequest&);
template GeneratingSeries<YRat> zhat_series<YRat>(const SeriesRequest&);
template QSeries<Rational> z_series_limit_closed<Rational>(const SeriesRequest&);
template QSeries<YRat> z_series_limit_closed<YRat>(const SeriesRequest&);

}  // namespace chiy
