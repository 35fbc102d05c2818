#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chiy {

/// A box of a Young diagram in matrix convention: row i, column j, both
/// starting at 1. Box (i, j) lies in a partition iff j <= lambda_i.
struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Young diagram given by weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// lambda_i, zero beyond the length.
  int row_length(int i) const;
  /// lambda^t_j, zero beyond the first part.
  int column_length(int j) const;
  bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= row_length(b.row); }
  /// Boxes in row-major order.
  std::vector<Box> boxes() const;
  Partition conjugate() const { return Partition(conj_); }

  /// "[3,1]", "[]" for the empty partition.
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> conj_;
  int size_ = 0;
};

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

/// (lambda_i - j, lambda^t_j - i). Defined for any box, so the values are
/// negative for boxes outside p.
ArmLeg arm_leg(const Partition& p, const Box& b);

using PartitionTuple = std::vector<Partition>;

int total_size(const PartitionTuple& t);
/// Partitions joined by ';', e.g. "[2];[];[1,1]".
std::string to_string(const PartitionTuple& t);
PartitionTuple parse_partition_tuple(const std::string& text, int expected_length);

/// (k_1, ..., k_r) in Z^r.
struct LatticeVector {
  std::vector<int> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  int sum() const;
  /// sum_{i<j} (k_i - k_j)^2.
  long pair_form() const;
  /// sum_{i<j} (k_i - k_j).
  long pair_linear() const;

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// Torus fixed point of the framed moduli space on the blow-up.
struct BlowupFixedPoint {
  PartitionTuple y_tuple;
  PartitionTuple z_tuple;
  LatticeVector kvec;

  int rank() const { return kvec.rank(); }
  int k() const { return kvec.sum(); }
  /// q-exponent 2r * sum(|Y_i| + |Z_i|) + sum_{i<j} (k_i - k_j)^2 (= virtual dimension).
  long grading() const;
  /// n in grading() = 2rn + k(r - k); throws std::logic_error if not integral.
  long instanton_number() const;

  friend bool operator==(const BlowupFixedPoint&, const BlowupFixedPoint&) = default;
};

/// All partitions of n in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// All r-tuples of partitions of total size n. Ordered by the size vector
/// (descending lexicographic) and then by the entries' canonical order.
std::vector<PartitionTuple> enumerate_tuples(int r, int n);

/// All integer vectors with sum k and pair form at most qform_bound,
/// ordered by pair form and then descending lexicographically.
std::vector<LatticeVector> enumerate_lattice_vectors(int r, int k, long qform_bound);

/// All fixed points with 2r * sum(|Y|+|Z|) + pair_form = 2rn + k(r-k).
/// Throws std::invalid_argument unless 0 <= k < r.
std::vector<BlowupFixedPoint> enumerate_blowup_fixed_points(int r, int k, int n);

}  // namespace chiy
