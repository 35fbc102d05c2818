#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chiy/errors.hpp"
#include "chiy/field.hpp"

namespace chiy {

/// Truncated Laurent series in q. Coefficient i of the dense vector belongs
/// to q^{offset + i}; every coefficient below the exclusive truncation order
/// is known exactly and nothing at or beyond it is ever reported.
template <CoefficientRing C>
class QSeries {
 public:
  QSeries() = default;
  QSeries(int offset, std::vector<C> coeffs, int order) : offset_(offset), order_(order), c_(std::move(coeffs)) {
    if (order_ < offset_) throw std::invalid_argument("truncation order below series offset");
    c_.resize(static_cast<std::size_t>(order_ - offset_), C{});
  }

  static QSeries zero(int order) { return QSeries(0, {}, order); }
  static QSeries one(int order) { return monomial(C(1), 0, order); }
  static QSeries monomial(const C& c, int exponent, int order) {
    QSeries s(std::min(exponent, order), {}, order);
    if (exponent < order) s.c_[0] = c;
    return s;
  }

  int offset() const { return offset_; }
  /// Exclusive truncation order.
  int order() const { return order_; }
  const std::vector<C>& coeffs() const { return c_; }

  /// Coefficient of q^e. Zero below the offset; TruncationError at or beyond the order.
  C coefficient(int e) const {
    if (e >= order_)
      throw TruncationError("coefficient of q^" + std::to_string(e) + " requested from a series known below q^" +
                            std::to_string(order_));
    if (e < offset_) return C{};
    return c_[static_cast<std::size_t>(e - offset_)];
  }

  void set_coefficient(int e, C value) {
    if (e < offset_ || e >= order_) throw TruncationError("set_coefficient outside the stored range");
    c_[static_cast<std::size_t>(e - offset_)] = std::move(value);
  }
  void add_to_coefficient(int e, const C& value) {
    if (e < offset_ || e >= order_) throw TruncationError("add_to_coefficient outside the stored range");
    auto& slot = c_[static_cast<std::size_t>(e - offset_)];
    slot = slot + value;
  }

  /// Lowest exponent with a nonzero coefficient; the order if the series vanishes.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return offset_ + static_cast<int>(i);
    return order_;
  }

  QSeries truncated(int new_order) const {
    if (new_order > order_) throw TruncationError("cannot extend a series beyond its truncation order");
    const int off = std::min(offset_, new_order);
    std::vector<C> out;
    for (int e = off; e < new_order; ++e) out.push_back(coefficient(e));
    return QSeries(off, std::move(out), new_order);
  }

  /// Multiplication by q^m.
  QSeries shifted(int m) const { return QSeries(offset_ + m, c_, order_ + m); }

  template <class F>
  auto map(F&& f) const -> QSeries<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<D> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return QSeries<D>(offset_, std::move(out), order_);
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    const int off = std::min(a.offset_, b.offset_);
    const int ord = std::min(a.order_, b.order_);
    std::vector<C> out;
    for (int e = off; e < ord; ++e) out.push_back(a.coefficient(e) + b.coefficient(e));
    return QSeries(std::min(off, ord), std::move(out), ord);
  }
  friend QSeries operator-(const QSeries& a) { return a.map([](const C& c) { return C(-c); }); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int va = a.valuation();
    const int vb = b.valuation();
    const int ord = std::min(a.order_ + vb, b.order_ + va);
    const int off = std::min(a.offset_ + b.offset_, ord);
    std::vector<C> out(static_cast<std::size_t>(ord - off), C{});
    for (int i = va; i < a.order_; ++i) {
      const C& x = a.c_[static_cast<std::size_t>(i - a.offset_)];
      if (x.is_zero()) continue;
      for (int j = vb; j < b.order_ && i + j < ord; ++j) {
        const C& z = b.c_[static_cast<std::size_t>(j - b.offset_)];
        if (z.is_zero()) continue;
        auto& slot = out[static_cast<std::size_t>(i + j - off)];
        slot = slot + x * z;
      }
    }
    return QSeries(off, std::move(out), ord);
  }

  friend QSeries operator*(const QSeries& a, const C& s) {
    return a.map([&](const C& c) { return C(c * s); });
  }

  /// Multiplicative inverse of q^v (c + ...), v the valuation: a series with offset -v.
  QSeries inverse() const
    requires CoefficientField<C>
  {
    const int v = valuation();
    if (v >= order_) throw InvertNonUnit("cannot invert a series that vanishes below q^" + std::to_string(order_));
    const int precision = order_ - v;
    const auto at = [&](int i) -> const C& { return c_[static_cast<std::size_t>(v - offset_ + i)]; };
    const C lead_inv = C(1) / at(0);
    std::vector<C> out(static_cast<std::size_t>(precision), C{});
    out[0] = lead_inv;
    for (int n = 1; n < precision; ++n) {
      C acc{};
      for (int i = 1; i <= n; ++i) {
        const C& x = at(i);
        if (x.is_zero()) continue;
        acc = acc + x * out[static_cast<std::size_t>(n - i)];
      }
      out[static_cast<std::size_t>(n)] = -(acc * lead_inv);
    }
    return QSeries(-v, std::move(out), -v + precision);
  }

  /// Nonnegative integer power.
  QSeries pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power; invert first");
    if (n == 0) return one(std::max(order_ - valuation(), 1));
    QSeries result = *this;
    for (int i = 1; i < n; ++i) result = result * *this;
    return result;
  }

  /// f(q) -> f(base * q^m) for m >= 1: the coefficient of q^e moves to q^{m e}
  /// and gains base^e. Requires a nonnegative offset.
  QSeries substitute_monomial(const C& base, int m) const {
    if (m < 1) throw std::invalid_argument("substitution exponent must be positive");
    if (offset_ < 0) throw std::invalid_argument("monomial substitution needs a power series");
    QSeries out(m * offset_, {}, m * order_);
    C power(1);
    for (int e = 0; e < order_; ++e) {
      if (e >= offset_) out.set_coefficient(m * e, c_[static_cast<std::size_t>(e - offset_)] * power);
      power = power * base;
    }
    return out;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  int offset_ = 0;
  int order_ = 0;
  std::vector<C> c_;
};

/// First exponent e <= through where a and b differ, or nullopt.
/// Throws TruncationError if either series is not known through q^through.
template <CoefficientRing C>
std::optional<int> first_mismatch(const QSeries<C>& a, const QSeries<C>& b, int through) {
  if (through >= a.order() || through >= b.order())
    throw TruncationError("comparison through q^" + std::to_string(through) + " exceeds a truncation order (" +
                          std::to_string(a.order()) + ", " + std::to_string(b.order()) + ")");
  const int lo = std::min(a.offset(), b.offset());
  for (int e = lo; e <= through; ++e)
    if (!(a.coefficient(e) == b.coefficient(e))) return e;
  return std::nullopt;
}

template <CoefficientRing C>
bool agrees_through(const QSeries<C>& a, const QSeries<C>& b, int through) {
  return !first_mismatch(a, b, through).has_value();
}

/// prod_{n>0} (1 - base^n q^{q_step n})^power, truncated below q^order.
template <CoefficientRing C>
QSeries<C> euler_product(int q_step, const C& base, int power, int order) {
  if (q_step < 1) throw std::invalid_argument("euler_product needs a positive q step");
  std::vector<C> p(static_cast<std::size_t>(std::max(order, 0)), C{});
  if (order > 0) p[0] = C(1);
  C base_n(1);
  for (int n = 1; n * q_step < order; ++n) {
    base_n = base_n * base;
    const int st = n * q_step;
    for (int rep = 0; rep < std::abs(power); ++rep) {
      if (power < 0) {
        // multiply by 1/(1 - c q^st)
        for (int e = st; e < order; ++e)
          p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e)] + base_n * p[static_cast<std::size_t>(e - st)];
      } else {
        for (int e = order - 1; e >= st; --e)
          p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e)] - base_n * p[static_cast<std::size_t>(e - st)];
      }
    }
  }
  return QSeries<C>(0, std::move(p), std::max(order, 0));
}

}  // namespace chiy
