#include <filesystem>

#include <unistd.h>

#include "chiy/genera.hpp"
#include "chiy/rank1.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chiy;

namespace {

Specialization spec_with(int rank, YMode y = SymbolicY{}) {
  Specialization s;
  s.t1 = Rational(2);
  s.t2 = Rational(3);
  for (int a = 0; a < rank; ++a) s.e.emplace_back(5 + 2 * a, 3 + a);
  s.y_mode = std::move(y);
  return s;
}

SeriesRequest request(int rank, int k, int max_n, Specialization spec,
                      LocalizationMode mode = LocalizationMode::Equivariant) {
  SeriesRequest r;
  r.rank = rank;
  r.k = k;
  r.max_n = max_n;
  r.spec = std::move(spec);
  r.mode = mode;
  return r;
}

// theta(x) = (x - y)/(x - 1), built directly.
YRat theta(const Rational& x) { return YRat(YPoly(x) - YPoly::y(), YPoly(x - Rational(1))); }

}  // namespace

TEST_CASE("Z: rank-one examples") {
  const auto z = z_series<YRat>(request(1, 0, 1, spec_with(1))).series;
  CHECK(z.order() == 4);
  CHECK(z.coefficient(0) == YRat(1));
  CHECK(z.coefficient(1).is_zero());
  CHECK(z.coefficient(2) == YRat((YPoly(2) - YPoly::y()) * (YPoly(3) - YPoly::y()), YPoly(2)));
  CHECK(z.coefficient(2) == theta(Rational(2)) * theta(Rational(3)));
}

TEST_CASE("Z at y = 1 counts tuples") {
  for (int r = 1; r <= 3; ++r) {
    const int max_n = r == 1 ? 8 : 3;
    const auto out = z_series<Rational>(request(r, 0, max_n, spec_with(r, NumericY{Rational(1)})));
    const auto counts = oracle::tuple_counts(r, max_n);
    for (int n = 0; n <= max_n; ++n) {
      CHECK(out.series.coefficient(2 * r * n) == Rational(counts[static_cast<std::size_t>(n)]));
      CHECK(static_cast<long>(out.fixed_points.at(2 * r * n)) == counts[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("Zhat: examples") {
  const auto s = spec_with(1);
  const auto zh = zhat_series<YRat>(request(1, 0, 1, s)).series;
  CHECK(zh.coefficient(0) == YRat(1));
  // Fixed points ((1), (), 0) and ((), (1), 0): T = t1 + t2/t1 and t1/t2 + t2.
  const YRat expected = theta(s.t1) * theta(s.t2 / s.t1) + theta(s.t1 / s.t2) * theta(s.t2);
  CHECK(zh.coefficient(2) == expected);

  const auto at_one = zhat_series<Rational>(request(2, 1, 1, spec_with(2, NumericY{Rational(1)})));
  CHECK(at_one.series.offset() == 1);
  CHECK(at_one.series.coefficient(1) == Rational(2));
  CHECK(at_one.fixed_points.at(1) == 2);
}

TEST_CASE("Zhat offsets and truncation orders") {
  const auto zh = zhat_series<YRat>(request(2, 1, 2, spec_with(2))).series;
  CHECK(zh.offset() == 1);
  CHECK(zh.order() == 2 * 2 * 3 + 1);
  const auto z = z_series<YRat>(request(3, 0, 1, spec_with(3))).series;
  CHECK(z.order() == 12);
  CHECK(z_max_n_for_order(2, 16) == 4);
  CHECK(z_max_n_for_order(3, 5) == 0);
  CHECK(zhat_max_n_for_order(2, 1, 17) == 4);
  CHECK(zhat_max_n_for_order(2, 1, 16) == 3);
  CHECK(zhat_max_n_for_order(3, 1, 1) == 0);
}

TEST_CASE("Zhat exponents stay in k(r-k) + 2r Z") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k < r; ++k) {
      const auto zh = zhat_series<Rational>(request(r, k, 2, spec_with(r, NumericY{Rational(1, 3)})));
      for (int e = zh.series.offset(); e < zh.series.order(); ++e)
        if ((e - k * (r - k)) % (2 * r) != 0) CHECK(zh.series.coefficient(e).is_zero());
    }
}

TEST_CASE("limit-mode Z has the closed form W(y^{r-1} q^{2r})^r") {
  const auto w = w_series<YRat>({spec_with(1), WSubstitution::Identity, 6, 1, {}});
  const auto z1 = z_series<YRat>(request(1, 0, 3, spec_with(1), LocalizationMode::Limit)).series;
  CHECK(z1 == z_series_limit_closed<YRat>(request(1, 0, 3, spec_with(1), LocalizationMode::Limit)));
  CHECK(agrees_through(z1, w.substitute_monomial(YRat(1), 2).truncated(z1.order()), z1.order() - 1));

  const auto s2 = spec_with(2);
  const auto closed = z_series_limit_closed<YRat>(request(2, 0, 2, s2, LocalizationMode::Limit));
  CHECK(closed.coefficient(4) == YRat(YPoly::y() * Rational(2)) * theta(s2.t1) * theta(s2.t2));
  for (int r = 2; r <= 3; ++r) {
    const auto req = request(r, 0, 2, spec_with(r), LocalizationMode::Limit);
    CHECK(z_series<YRat>(req).series == z_series_limit_closed<YRat>(req));
  }
  CHECK_THROWS_AS(z_series_limit_closed<YRat>(request(2, 0, 2, s2)), std::invalid_argument);
}

TEST_CASE("closed form at y = 1 gives products of partition counts") {
  for (int r = 1; r <= 3; ++r) {
    const auto closed =
        z_series_limit_closed<Rational>(request(r, 0, 3, spec_with(r, NumericY{Rational(1)}), LocalizationMode::Limit));
    const auto counts = oracle::tuple_counts(r, 3);
    for (int n = 0; n <= 3; ++n) CHECK(closed.coefficient(2 * r * n) == Rational(counts[static_cast<std::size_t>(n)]));
  }
}

TEST_CASE("rank one has no e-variables: limit mode equals equivariant mode") {
  for (int n = 1; n <= 3; ++n) {
    const auto eq = request(1, 0, n, spec_with(1));
    auto lim = eq;
    lim.mode = LocalizationMode::Limit;
    CHECK(z_series<YRat>(eq).series == z_series<YRat>(lim).series);
    CHECK(zhat_series<YRat>(eq).series == zhat_series<YRat>(lim).series);
  }
}

TEST_CASE("results do not depend on the thread count or the cache") {
  const auto dir = std::filesystem::temp_directory_path() / ("chiy_genera_cache_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const FixedPointCache cache(dir);
  auto req = request(2, 1, 2, spec_with(2));
  const auto base_z = z_series<YRat>(req);
  const auto base_zh = zhat_series<YRat>(req);
  for (unsigned threads : {2u, 3u, 8u}) {
    req.threads = threads;
    CHECK(z_series<YRat>(req).series == base_z.series);
    CHECK(zhat_series<YRat>(req).series == base_zh.series);
    CHECK(zhat_series<YRat>(req).fixed_points == base_zh.fixed_points);
  }
  req.cache = &cache;
  for (int pass = 0; pass < 2; ++pass) {
    CHECK(z_series<YRat>(req).series == base_z.series);
    CHECK(zhat_series<YRat>(req).series == base_zh.series);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("the tangent hook reaches every fixed point") {
  auto req = request(1, 0, 1, spec_with(1));
  req.tangent_hook = [](const Character& c) {
    Character out = c;
    if (!c.empty()) out.add(Weight::monomial(1, 1));
    return out;
  };
  const auto hooked = z_series<YRat>(req).series;
  const auto s = spec_with(1);
  CHECK(hooked.coefficient(2) == theta(s.t1) * theta(s.t2) * theta(s.t1 * s.t2));
}

TEST_CASE("mode strings and validation") {
  CHECK(to_string(LocalizationMode::Limit) == "limit");
  CHECK(parse_localization_mode("equivariant") == LocalizationMode::Equivariant);
  CHECK_THROWS_AS(parse_localization_mode("fast"), std::invalid_argument);
  CHECK_THROWS_AS(z_series<YRat>(request(2, 0, 1, spec_with(1))), std::invalid_argument);
  CHECK_THROWS_AS(zhat_series<YRat>(request(2, 2, 1, spec_with(2))), std::invalid_argument);
  CHECK_THROWS_AS(z_series<YRat>(request(1, 0, -1, spec_with(1))), std::invalid_argument);
  CHECK_THROWS_AS(z_series<Rational>(request(1, 0, 1, spec_with(1))), std::invalid_argument);
}
