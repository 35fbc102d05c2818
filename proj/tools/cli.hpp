#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chiy::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  std::string subcommand;
  int rank = 1;
  int k = 0;
  /// Highest q-exponent (inclusive); -1 selects default_order.
  int order = -1;
  std::size_t seed_count = 5;
  std::uint64_t base_seed = 1;
  /// Overrides seed_count/base_seed when nonempty.
  std::vector<std::uint64_t> seed_list;
  std::string y = "symbolic";
  std::string mode = "equivariant";
  std::string output;
  std::string cache_dir;
  unsigned threads = 1;
  bool timing = false;
  std::string form = "main";
  std::string substitution = "identity";

  std::vector<std::uint64_t> seeds() const;
};

/// Order used when --order is absent:
///   verify-blowup/verify-all at r = 1: 16; r = 2: 16 + k; r = 3: 12 + k(3 - k);
///   otherwise 4r + k(r - k). verify-rank1: 8. Other subcommands: 8.
int default_order(const std::string& subcommand, int rank, int k);

/// args excludes the program name. JSON goes to `out` (or --output), the
/// summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chiy::cli
