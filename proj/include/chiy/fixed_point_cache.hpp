#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chiy/partitions.hpp"

namespace chiy {

/// On-disk cache of fixed-point enumerations, one text file per
/// (family, r, k, n):
///
///   # chiy fixed-point cache v1
///   # family=blowup r=2 k=1 n=3
///   count 2
///   [2,1];[] | [];[1] | 1,0
///   ...
///
/// A partition is its comma-separated parts in brackets and tuples are joined
/// by ';'. Rows of the P^2 family carry only the Y tuple. Unreadable or
/// mismatching files are ignored and rewritten; results never depend on the
/// cache.
class FixedPointCache {
 public:
  explicit FixedPointCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return dir_; }

  std::vector<PartitionTuple> p2_fixed_points(int r, int n) const;
  std::vector<BlowupFixedPoint> blowup_fixed_points(int r, int k, int n) const;

  static std::string serialize(int r, int n, const std::vector<PartitionTuple>& points);
  static std::string serialize(int r, int k, int n, const std::vector<BlowupFixedPoint>& points);

 private:
  std::filesystem::path file_for(const std::string& family, int r, int k, int n) const;
  void store(const std::filesystem::path& file, const std::string& text) const;

  std::filesystem::path dir_;
};

/// Enumerations routed through an optional cache.
std::vector<PartitionTuple> p2_fixed_points(int r, int n, const FixedPointCache* cache);
std::vector<BlowupFixedPoint> blowup_fixed_points(int r, int k, int n, const FixedPointCache* cache);

}  // namespace chiy
