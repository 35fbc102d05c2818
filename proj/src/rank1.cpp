#include "chiy/rank1.hpp"

#include <stdexcept>

#include "chiy/theta.hpp"
#include "parallel.hpp"

namespace chiy {

std::string to_string(WSubstitution s) {
  switch (s) {
    case WSubstitution::Identity: return "identity";
    case WSubstitution::T2OverT1: return "t2/t1";
    case WSubstitution::T1OverT2: return "t1/t2";
  }
  return "?";
}

WSubstitution parse_w_substitution(const std::string& text) {
  if (text == "identity") return WSubstitution::Identity;
  if (text == "t2/t1") return WSubstitution::T2OverT1;
  if (text == "t1/t2") return WSubstitution::T1OverT2;
  throw std::invalid_argument("unknown substitution '" + text + "' (expected identity, t2/t1 or t1/t2)");
}

ExponentMap exponent_map(WSubstitution s) {
  switch (s) {
    case WSubstitution::Identity: return ExponentMap::identity();
    case WSubstitution::T2OverT1: return ExponentMap::t2_over_t1();
    case WSubstitution::T1OverT2: return ExponentMap::t1_over_t2();
  }
  return ExponentMap::identity();
}

template <CoefficientField C>
QSeries<C> w_series(const WRequest& req) {
  if (req.order < 0) throw std::invalid_argument("order must be nonnegative");
  const ExponentMap map = exponent_map(req.substitution);
  std::vector<Partition> diagrams;
  for (int n = 0; n <= req.order; ++n)
    for (auto& p : enumerate_partitions(n)) diagrams.push_back(std::move(p));

  const auto terms = detail::parallel_map<C>(diagrams.size(), req.threads, [&](std::size_t i) {
    Character hooks = substitute(n_block(diagrams[i], diagrams[i], 1, 1), map);
    if (req.hook) hooks = req.hook(hooks);
    return theta_eval<C>(hooks, req.spec);
  });

  QSeries<C> out = QSeries<C>::zero(req.order + 1);
  for (std::size_t i = 0; i < diagrams.size(); ++i) out.add_to_coefficient(diagrams[i].size(), terms[i]);
  return out;
}

template <CoefficientField C>
IdentityCheck<C> verify_nekrasov_okounkov(const Specialization& spec, int order, unsigned threads,
                                          const CharacterHook& numerator_hook) {
  WRequest req{spec, WSubstitution::Identity, order, threads, {}};
  const auto base = w_series<C>(req);
  req.substitution = WSubstitution::T1OverT2;
  const auto second = w_series<C>(req);
  req.substitution = WSubstitution::T2OverT1;
  req.hook = numerator_hook;
  const auto first = w_series<C>(req);

  IdentityCheck<C> check;
  check.order = order;
  check.lhs = first * second * base.inverse();
  check.rhs = euler_product<C>(1, CoefficientTraits<C>::y(spec.y_mode), -1, order + 1);
  check.first_failure = first_mismatch(check.lhs, check.rhs, order);
  return check;
}

template QSeries<Rational> w_series<Rational>(const WRequest&);
template QSeries<YRat> w_series<YRat>(const WRequest&);
template IdentityCheck<Rational> verify_nekrasov_okounkov<Rational>(const Specialization&, int, unsigned,
                                                                    const CharacterHook&);
template IdentityCheck<YRat> verify_nekrasov_okounkov<YRat>(const Specialization&, int, unsigned,
                                                            const CharacterHook&);

}  // namespace chiy
