#include "chiy/blowup_factor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiy/errors.hpp"
#include "chiy/partitions.hpp"

namespace chiy {

namespace {

void validate(const YkRequest& req) {
  if (req.rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (req.k < 0 || req.k >= req.rank) throw std::invalid_argument("k must satisfy 0 <= k < rank");
  if (req.order < 0) throw std::invalid_argument("order must be nonnegative");
}

YPoly y_power(long e) { return YPoly::monomial(Rational(1), static_cast<int>(e)); }

long exact_quotient(long num, long den, const char* what) {
  if (num % den != 0 || num < 0)
    throw IntegralityViolation(std::string(what) + " exponent " + std::to_string(num) + "/" + std::to_string(den) +
                               " is not a nonnegative integer");
  return num / den;
}

long isqrt(long x) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

QSeries<YPoly> eta_prefactor(int r, int order) {
  return euler_product<YPoly>(2 * r, y_power(r), -r, order + 1);
}

}  // namespace

QSeries<YPoly> yk_main(const YkRequest& req) {
  validate(req);
  const int sign = req.sign == YSign::Plus ? 1 : -1;
  QSeries<YPoly> lattice = QSeries<YPoly>::zero(req.order + 1);
  for (const auto& v : enumerate_lattice_vectors(req.rank, req.k, req.order)) {
    const long q_exp = v.pair_form();
    if ((q_exp - static_cast<long>(req.k) * (req.rank - req.k)) % (2L * req.rank) != 0)
      throw IntegralityViolation("lattice q-exponent " + std::to_string(q_exp) + " outside k(r-k) + 2rZ");
    const long y_exp = exact_quotient(q_exp + sign * v.pair_linear(), 2, "y");
    lattice.add_to_coefficient(static_cast<int>(q_exp), y_power(y_exp));
  }
  return eta_prefactor(req.rank, req.order) * lattice;
}

QSeries<YPoly> yk_gottsche(const YkRequest& req) {
  validate(req);
  const int r = req.rank;
  const int dim = r - 1;
  QSeries<YPoly> lattice = QSeries<YPoly>::zero(req.order + 1);

  // Work with u = r v = r w + k I, w integral, so every quantity is an integer.
  // x^{v^t A v} = q^{2 Q(u)/r} y^{Q(u)/r} with Q(u) = sum_{i<=j} u_i u_j >= |u|^2 / 2.
  const long q_budget = static_cast<long>(req.order) * r;  // bound on 2 Q(u)
  const long s = isqrt(q_budget);
  const auto floor_div = [](long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  const long w_lo = -floor_div(s + req.k, r);
  const long w_hi = floor_div(s - req.k, r);

  std::vector<long> u(static_cast<std::size_t>(dim));
  const auto visit = [&] {
    long quad = 0;
    long ai_dot = 0;
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) quad += u[i] * u[j];
      ai_dot += static_cast<long>(r - 1 - i) * u[i];  // (A I)_i = r - 1 - i, 0-based
    }
    if (2 * quad > q_budget) return;
    const long q_exp = exact_quotient(2 * quad, r, "q");
    const long y_exp = exact_quotient(quad + ai_dot, r, "y");
    lattice.add_to_coefficient(static_cast<int>(q_exp), y_power(y_exp));
  };
  const auto rec = [&](auto&& self, int i) -> void {
    if (i == dim) {
      visit();
      return;
    }
    for (long w = w_lo; w <= w_hi; ++w) {
      u[static_cast<std::size_t>(i)] = r * w + req.k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return eta_prefactor(r, req.order) * lattice;
}

QSeries<Rational> yk_euler(const YkRequest& req) {
  validate(req);
  QSeries<Rational> lattice = QSeries<Rational>::zero(req.order + 1);
  for (const auto& v : enumerate_lattice_vectors(req.rank, req.k, req.order))
    lattice.add_to_coefficient(static_cast<int>(v.pair_form()), Rational(1));
  return euler_product<Rational>(2 * req.rank, Rational(1), -req.rank, req.order + 1) * lattice;
}

bool HolomorphicBlowupFactor::agrees() const {
  for (int e = computed.offset(); e < computed.order(); ++e)
    if (!(computed.coefficient(e) == (e == 0 ? stated : Rational(0)))) return false;
  return true;
}

HolomorphicBlowupFactor yk_hol(const YkRequest& req) {
  HolomorphicBlowupFactor out;
  out.stated = req.k == 0 ? Rational(1) : Rational(0);
  out.computed = yk_main(req).map([](const YPoly& p) { return p.evaluate(Rational(0)); });
  return out;
}

}  // namespace chiy
