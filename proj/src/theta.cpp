#include "chiy/theta.hpp"

#include "chiy/errors.hpp"

namespace chiy {

Rational weight_value(const Weight& w, const Specialization& spec) {
  Rational v = pow(spec.t1, w.t1) * pow(spec.t2, w.t2);
  if (w.has_e()) {
    const int r = spec.rank();
    if (w.e_num < 1 || w.e_num > r || w.e_den < 1 || w.e_den > r)
      throw std::out_of_range("weight " + w.to_string() + " refers to e-index beyond rank " + std::to_string(r));
    v *= spec.e[static_cast<std::size_t>(w.e_num - 1)];
    v /= spec.e[static_cast<std::size_t>(w.e_den - 1)];
  }
  return v;
}

namespace {

// Accumulates numerator and denominator separately so only one division
// happens per character.
template <CoefficientField C>
class ThetaProduct {
 public:
  explicit ThetaProduct(const Specialization& spec) : spec_(spec), y_(CoefficientTraits<C>::y(spec.y_mode)) {}

  void theta(const Weight& w, int mult) {
    const Rational x = weight_value(w, spec_);
    if (x.is_one())
      throw DegenerateSpecialization(w.to_string(), "weight " + w.to_string() + " evaluates to 1 at seed " +
                                                        std::to_string(spec_.seed));
    const C top = C(x) - y_;
    const C bottom = C(x - Rational(1));
    multiply(top, bottom, mult);
  }

  void power_of_y(int mult) { multiply(y_, C(1), mult); }

  C result() const { return num_ / den_; }

 private:
  void multiply(const C& top, const C& bottom, int mult) {
    for (int i = 0; i < mult; ++i) {
      num_ = num_ * top;
      den_ = den_ * bottom;
    }
    for (int i = 0; i < -mult; ++i) {
      num_ = num_ * bottom;
      den_ = den_ * top;
    }
  }

  const Specialization& spec_;
  C y_;
  C num_{1};
  C den_{1};
};

}  // namespace

template <CoefficientField C>
C theta_eval(const Character& c, const Specialization& spec) {
  ThetaProduct<C> prod(spec);
  for (const auto& [w, m] : c) {
    if (w.is_trivial()) throw TrivialWeight("theta of the trivial weight");
    prod.theta(w, m);
  }
  return prod.result();
}

template <CoefficientField C>
C theta_limit_factor(const Character& c, const Specialization& spec) {
  ThetaProduct<C> prod(spec);
  for (const auto& [w, m] : c) {
    if (w.has_e()) {
      if (w.e_den > w.e_num) prod.power_of_y(m);
      continue;
    }
    if (w.is_trivial()) throw TrivialWeight("theta of the trivial weight");
    prod.theta(w, m);
  }
  return prod.result();
}

template Rational theta_eval<Rational>(const Character&, const Specialization&);
template YRat theta_eval<YRat>(const Character&, const Specialization&);
template Rational theta_limit_factor<Rational>(const Character&, const Specialization&);
template YRat theta_limit_factor<YRat>(const Character&, const Specialization&);

}  // namespace chiy
