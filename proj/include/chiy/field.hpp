#pragma once

#include <concepts>
#include <stdexcept>

#include "chiy/rational.hpp"
#include "chiy/specialization.hpp"
#include "chiy/ypoly.hpp"

namespace chiy {

template <class C>
concept CoefficientRing = std::regular<C> && requires(const C a, const C b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  C(1);
};

template <class C>
concept CoefficientField = CoefficientRing<C> && requires(const C a, const C b) {
  { a / b } -> std::convertible_to<C>;
};

/// How the formal variable y and y-polynomials enter a coefficient field.
/// Rational requires a numeric y; YRat works in both modes.
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<Rational> {
  static Rational y(const YMode& mode) {
    if (is_symbolic(mode)) throw std::invalid_argument("symbolic y needs rational-function coefficients");
    return std::get<NumericY>(mode).value;
  }
  static Rational from_ypoly(const YPoly& p, const YMode& mode) { return p.evaluate(y(mode)); }
};

template <>
struct CoefficientTraits<YRat> {
  static YRat y(const YMode& mode) {
    if (is_symbolic(mode)) return YRat(YPoly::y());
    return YRat(std::get<NumericY>(mode).value);
  }
  static YRat from_ypoly(const YPoly& p, const YMode& mode) {
    if (is_symbolic(mode)) return YRat(p);
    return YRat(p.evaluate(std::get<NumericY>(mode).value));
  }
};

}  // namespace chiy
