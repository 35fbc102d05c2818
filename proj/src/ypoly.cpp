#include "chiy/ypoly.hpp"

#include <algorithm>

#include "chiy/errors.hpp"

namespace chiy {

YPoly::YPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

YPoly::YPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

YPoly YPoly::monomial(const Rational& c, int degree) {
  YPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void YPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational YPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational YPoly::evaluate(const Rational& y0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= y0;
    acc += *it;
  }
  return acc;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return YPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return YPoly(std::move(out));
}

YPoly& YPoly::operator*=(const YPoly& o) { return *this = *this * o; }

YPoly& YPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

YPoly operator-(YPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

std::pair<YPoly, YPoly> YPoly::divmod(const YPoly& a, const YPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {YPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  std::vector<Rational> rem = a.c_;
  const Rational lead_inv = b.leading().inverse();
  for (int d = a.degree(); d >= b.degree(); --d) {
    const Rational& top = rem[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    const Rational factor = top * lead_inv;
    const int shift = d - b.degree();
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<std::size_t>(shift + i)] -= factor * b.c_[static_cast<std::size_t>(i)];
  }
  return {YPoly(std::move(quot)), YPoly(std::move(rem))};
}

YPoly YPoly::gcd(YPoly a, YPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= a.leading().inverse();
  return a;
}

std::string YPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "y";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

YRat::YRat(const Rational& c) : num_(c), den_(1) {}

YRat::YRat(YPoly p) : num_(std::move(p)), den_(1) {}

YRat::YRat(YPoly num, YPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void YRat::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = YPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    YPoly g = YPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = YPoly::divmod(num_, g).first;
      den_ = YPoly::divmod(den_, g).first;
    }
  }
  // Scale the denominator to coprime integers with positive leading term.
  mpz_class lcm_den = 1;
  for (const auto& c : den_.coefficients())
    if (!c.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get().get_den_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& c : den_.coefficients()) {
    mpz_class n = c.get().get_num() * (lcm_den / c.get().get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(lcm_den, gcd_num);
  scale.canonicalize();
  if (den_.leading().sign() < 0) scale = -scale;
  const Rational s(scale);
  if (!s.is_one()) {
    num_ *= s;
    den_ *= s;
  }
}

Rational YRat::evaluate(const Rational& y0) const {
  const Rational d = den_.evaluate(y0);
  if (d.is_zero()) throw DivisionByZero("rational function has a pole at y = " + y0.to_string());
  return num_.evaluate(y0) / d;
}

YRat YRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return YRat(den_, num_);
}

YRat& YRat::operator+=(const YRat& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

YRat& YRat::operator-=(const YRat& o) { return *this += -o; }

YRat& YRat::operator*=(const YRat& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

YRat& YRat::operator/=(const YRat& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  if (o.num_.is_constant() && is_polynomial()) {
    num_ *= o.den_;
    num_ *= o.num_.leading().inverse();
    return *this;
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string YRat::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace chiy
