#include "chiy/specialization.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace chiy {

namespace {

// std::uniform_int_distribution is implementation-defined, so draw by hand.
long uniform_in(std::mt19937_64& gen, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

}  // namespace

bool is_symbolic(const YMode& mode) { return std::holds_alternative<SymbolicY>(mode); }

std::string to_string(const YMode& mode) {
  if (is_symbolic(mode)) return "symbolic";
  return std::get<NumericY>(mode).value.to_string();
}

YMode parse_y_mode(const std::string& text) {
  if (text == "symbolic") return SymbolicY{};
  return NumericY{Rational::parse(text)};
}

Specialization sample_specialization(int rank, std::uint64_t seed, YMode y_mode) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  std::mt19937_64 gen(seed);
  std::vector<Rational> drawn;
  const auto draw = [&] {
    for (;;) {
      const long p = uniform_in(gen, 2, 97);
      const long q = uniform_in(gen, 2, 97);
      Rational v(p, q);
      if (v.is_one() || std::find(drawn.begin(), drawn.end(), v) != drawn.end()) continue;
      drawn.push_back(v);
      return v;
    }
  };
  Specialization s;
  s.t1 = draw();
  s.t2 = draw();
  s.e.reserve(static_cast<std::size_t>(rank));
  for (int a = 0; a < rank; ++a) s.e.push_back(draw());
  s.y_mode = std::move(y_mode);
  s.seed = seed;
  return s;
}

}  // namespace chiy
