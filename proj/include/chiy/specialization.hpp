#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chiy/rational.hpp"

namespace chiy {

struct SymbolicY {
  friend bool operator==(const SymbolicY&, const SymbolicY&) = default;
};
struct NumericY {
  Rational value;
  friend bool operator==(const NumericY&, const NumericY&) = default;
};
using YMode = std::variant<SymbolicY, NumericY>;

bool is_symbolic(const YMode& mode);
/// "symbolic" or the rational value of y.
std::string to_string(const YMode& mode);
/// Inverse of to_string.
YMode parse_y_mode(const std::string& text);

/// Exact values for the equivariant parameters t1, t2, e_1..e_r (and optionally y).
struct Specialization {
  Rational t1;
  Rational t2;
  std::vector<Rational> e;
  YMode y_mode;
  std::uint64_t seed = 0;

  int rank() const { return static_cast<int>(e.size()); }
  friend bool operator==(const Specialization&, const Specialization&) = default;
};

/// Name of the generator behind sample_specialization, recorded in reports.
inline constexpr const char* kSpecializationPrng = "mt19937_64/rejection-uniform[2,97]";

/// Deterministic in (rank, seed, y_mode). Each of t1, t2, e_1..e_r is p/q with
/// p, q uniform in [2, 97] drawn from std::mt19937_64 by rejection sampling;
/// a draw equal to 1 or to an earlier value is redrawn.
Specialization sample_specialization(int rank, std::uint64_t seed, YMode y_mode);

}  // namespace chiy
