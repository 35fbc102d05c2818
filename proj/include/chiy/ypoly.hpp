#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chiy/rational.hpp"

namespace chiy {

/// Polynomial in y over the rationals; index i of the coefficient vector is
/// the coefficient of y^i. No trailing zero coefficients are stored, so the
/// zero polynomial has an empty vector.
class YPoly {
 public:
  YPoly() = default;
  template <std::integral I>
  YPoly(I c) : YPoly(Rational(c)) {}  // NOLINT
  YPoly(const Rational& constant);     // NOLINT
  explicit YPoly(std::vector<Rational> coeffs);

  static YPoly y() { return monomial(Rational(1), 1); }
  static YPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Coefficient of y^i; zero outside the stored range.
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& y0) const;

  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  YPoly& operator*=(const YPoly& o);
  YPoly& operator*=(const Rational& s);

  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend YPoly operator*(YPoly a, const Rational& s) { return a *= s; }
  friend YPoly operator-(YPoly a);
  friend bool operator==(const YPoly&, const YPoly&) = default;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<YPoly, YPoly> divmod(const YPoly& a, const YPoly& b);
  /// Monic gcd (zero only if both inputs are zero).
  static YPoly gcd(YPoly a, YPoly b);

  /// "c0 + c1*y + c2*y^2", zero terms omitted; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Rational function in y. Canonical form: reduced, and the denominator has
/// coprime integer coefficients with positive leading coefficient. Constant
/// denominators are therefore always 1 and equality is structural.
class YRat {
 public:
  YRat() : den_(1) {}
  template <std::integral I>
  YRat(I c) : num_(c), den_(1) {}   // NOLINT
  YRat(const Rational& c);          // NOLINT
  YRat(YPoly p);                    // NOLINT
  YRat(YPoly num, YPoly den);

  const YPoly& numerator() const { return num_; }
  const YPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Throws DivisionByZero if y0 is a pole.
  Rational evaluate(const Rational& y0) const;
  YRat inverse() const;

  YRat& operator+=(const YRat& o);
  YRat& operator-=(const YRat& o);
  YRat& operator*=(const YRat& o);
  YRat& operator/=(const YRat& o);

  friend YRat operator+(YRat a, const YRat& b) { return a += b; }
  friend YRat operator-(YRat a, const YRat& b) { return a -= b; }
  friend YRat operator*(YRat a, const YRat& b) { return a *= b; }
  friend YRat operator/(YRat a, const YRat& b) { return a /= b; }
  friend YRat operator-(YRat a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const YRat&, const YRat&) = default;

  /// Numerator string alone when the denominator is 1, else "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  YPoly num_;
  YPoly den_;
};

}  // namespace chiy
