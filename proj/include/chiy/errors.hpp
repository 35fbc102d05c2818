#pragma once

#include <stdexcept>
#include <string>

namespace chiy {

// Exact division or inversion by zero.
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// A tangent character contains the weight 1 (the fixed point would not be isolated).
struct TrivialWeight : std::domain_error {
  using std::domain_error::domain_error;
};

// Some weight evaluates to 1 at the chosen specialization, so theta has a pole.
// Callers resample with the next seed.
struct DegenerateSpecialization : std::runtime_error {
  DegenerateSpecialization(std::string weight, std::string what)
      : std::runtime_error(std::move(what)), weight_(std::move(weight)) {}
  const std::string& weight() const noexcept { return weight_; }

 private:
  std::string weight_;
};

struct InvertNonUnit : std::domain_error {
  using std::domain_error::domain_error;
};

// Access or comparison at or beyond the known truncation order of a series.
struct TruncationError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// A q- or y-exponent that must be a nonnegative integer is not.
struct IntegralityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Rank of a tangent character disagrees with the dimension of the moduli space.
struct DimensionMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace chiy
