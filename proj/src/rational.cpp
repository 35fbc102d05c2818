#include "chiy/rational.hpp"

#include <cstdlib>
#include <stdexcept>

#include "chiy/errors.hpp"

namespace chiy {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= den;
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s, 10)));
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw DivisionByZero("rational with zero denominator: " + s);
    return Rational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  const unsigned long e = static_cast<unsigned long>(std::abs(exponent));
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), e);
  if (exponent < 0) {
    if (num == 0) throw DivisionByZero("negative power of zero");
    std::swap(num, den);
  }
  return Rational(mpq_class(num, den));
}

}  // namespace chiy
