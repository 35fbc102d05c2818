#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chiy/character.hpp"
#include "chiy/fixed_point_cache.hpp"
#include "chiy/genera.hpp"
#include "chiy/json_io.hpp"
#include "chiy/specialization.hpp"

namespace chiy {

inline constexpr const char* kReportSchema = "chiy.verification/1";

/// Seeds used when none are given: 1, 2, 3, 4, 5.
std::vector<std::uint64_t> default_seeds(std::size_t count = 5, std::uint64_t base = 1);

struct VerifyOptions {
  int rank = 1;
  int k = 0;
  /// Highest q-exponent compared (inclusive).
  int order = 0;
  std::vector<std::uint64_t> seeds = default_seeds();
  YMode y_mode = SymbolicY{};
  LocalizationMode mode = LocalizationMode::Equivariant;
  unsigned threads = 1;
  const FixedPointCache* cache = nullptr;
  CharacterHook tangent_hook;
  /// A degenerate specialization is retried with seed + 1, up to this many times.
  int max_resamples = 8;
};

struct VerificationReport {
  std::string check;
  json parameters = json::object();
  bool pass = false;
  json details = json::object();
  json conventions = json::object();
  double elapsed_ms = 0;

  /// Deterministic unless include_timing is set.
  json to_json(bool include_timing = false) const;
};

/// Zhat = Y_k * Z through q^order at every seed (product form), with the
/// quotient Zhat * Z^{-1} = Y_k as a secondary check. Also records which sign
/// of the linear y-exponent in Y_k matches.
VerificationReport verify_main_theorem(const VerifyOptions& opts);

/// y = 1: Zhat = Y_{k,e} * Z and Z counts fixed points. y = 0: Zhat/Z against
/// Y_k(y=0), reported next to the stated holomorphic value (a mismatch there is
/// a documented discrepancy, not a failure).
VerificationReport verify_corollary(const VerifyOptions& opts);

/// Equivariant and limit-mode quotients agree with each other and with Y_k,
/// and limit-mode Z matches W(t1, t2, y, y^{r-1} q^{2r})^r.
VerificationReport verify_limit_consistency(const VerifyOptions& opts);

/// Rank-one product identity W(t1,t2/t1) W(t1/t2,t2) / W(t1,t2) = prod (1-(yq)^n)^{-1}
/// at every seed, plus independence of the left side from the specialization.
VerificationReport verify_rank1(const VerifyOptions& opts);

}  // namespace chiy
