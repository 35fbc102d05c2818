#include "chiy/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chiy {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
  if (!parts_.empty()) {
    conj_.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj_[static_cast<std::size_t>(j)];
  }
}

int Partition::row_length(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column_length(int j) const {
  return (j >= 1 && j <= static_cast<int>(conj_.size())) ? conj_[static_cast<std::size_t>(j - 1)] : 0;
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("malformed partition: '" + text + "'");
  std::vector<int> parts;
  std::istringstream in(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

ArmLeg arm_leg(const Partition& p, const Box& b) {
  return {p.row_length(b.row) - b.col, p.column_length(b.col) - b.row};
}

int total_size(const PartitionTuple& t) {
  int n = 0;
  for (const auto& p : t) n += p.size();
  return n;
}

std::string to_string(const PartitionTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ";";
    out += t[i].to_string();
  }
  return out;
}

PartitionTuple parse_partition_tuple(const std::string& text, int expected_length) {
  PartitionTuple out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(Partition::parse(item));
  if (static_cast<int>(out.size()) != expected_length)
    throw std::invalid_argument("partition tuple has wrong length: '" + text + "'");
  return out;
}

int LatticeVector::sum() const {
  int s = 0;
  for (int v : entries) s += v;
  return s;
}

long LatticeVector::pair_form() const {
  long s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const long d = entries[i] - entries[j];
      s += d * d;
    }
  return s;
}

long LatticeVector::pair_linear() const {
  long s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) s += entries[i] - entries[j];
  return s;
}

long BlowupFixedPoint::grading() const {
  return 2L * rank() * (total_size(y_tuple) + total_size(z_tuple)) + kvec.pair_form();
}

long BlowupFixedPoint::instanton_number() const {
  const long r = rank();
  const long shifted = grading() - static_cast<long>(k()) * (r - k());
  if (shifted % (2 * r) != 0) throw std::logic_error("blow-up fixed point has non-integral instanton number");
  return shifted / (2 * r);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

// Size vectors of length r summing to n, first entry largest first.
void compositions_rec(int r, int n, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == r - 1) {
    current.push_back(n);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int m = n; m >= 0; --m) {
    current.push_back(m);
    compositions_rec(r, n - m, current, out);
    current.pop_back();
  }
}

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<PartitionTuple> enumerate_tuples(int r, int n) {
  if (r < 1) throw std::invalid_argument("tuple length must be at least 1");
  if (n < 0) throw std::invalid_argument("cannot enumerate tuples of negative size");
  std::vector<std::vector<Partition>> by_size;
  for (int m = 0; m <= n; ++m) by_size.push_back(enumerate_partitions(m));

  std::vector<std::vector<int>> sizes;
  std::vector<int> current;
  compositions_rec(r, n, current, sizes);

  std::vector<PartitionTuple> out;
  for (const auto& sz : sizes) {
    // Odometer over the cartesian product, last index fastest.
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    for (;;) {
      PartitionTuple t;
      t.reserve(static_cast<std::size_t>(r));
      for (int a = 0; a < r; ++a) t.push_back(by_size[static_cast<std::size_t>(sz[a])][idx[a]]);
      out.push_back(std::move(t));
      int a = r - 1;
      while (a >= 0 && ++idx[a] == by_size[static_cast<std::size_t>(sz[a])].size()) {
        idx[a] = 0;
        --a;
      }
      if (a < 0) break;
    }
  }
  return out;
}

std::vector<LatticeVector> enumerate_lattice_vectors(int r, int k, long qform_bound) {
  if (r < 1) throw std::invalid_argument("rank must be at least 1");
  if (qform_bound < 0) throw std::invalid_argument("pair-form bound must be nonnegative");
  // pair_form = r * sum (k_i - k/r)^2, so every entry satisfies |r k_i - k| <= isqrt(r * bound).
  const long limit = static_cast<long>(r) * qform_bound;
  long root = static_cast<long>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  const long lo = ceil_div(k - root, r);
  const long hi = floor_div(k + root, r);

  std::vector<LatticeVector> out;
  std::vector<int> current;
  const auto rec = [&](auto&& self, long remaining) -> void {
    if (static_cast<int>(current.size()) == r - 1) {
      if (remaining < lo || remaining > hi) return;
      current.push_back(static_cast<int>(remaining));
      LatticeVector v{current};
      if (v.pair_form() <= qform_bound) out.push_back(std::move(v));
      current.pop_back();
      return;
    }
    for (long x = hi; x >= lo; --x) {
      current.push_back(static_cast<int>(x));
      self(self, remaining - x);
      current.pop_back();
    }
  };
  rec(rec, k);
  std::stable_sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    if (a.pair_form() != b.pair_form()) return a.pair_form() < b.pair_form();
    return a.entries > b.entries;
  });
  return out;
}

std::vector<BlowupFixedPoint> enumerate_blowup_fixed_points(int r, int k, int n) {
  if (r < 1) throw std::invalid_argument("rank must be at least 1");
  if (k < 0 || k >= r) throw std::invalid_argument("k must satisfy 0 <= k < r");
  const long target = 2L * r * n + static_cast<long>(k) * (r - k);
  std::vector<BlowupFixedPoint> out;
  if (target < 0) return out;
  for (const auto& kvec : enumerate_lattice_vectors(r, k, target)) {
    const long weight = target - kvec.pair_form();
    if (weight < 0 || weight % (2L * r) != 0) continue;
    const int m = static_cast<int>(weight / (2L * r));
    for (auto& both : enumerate_tuples(2 * r, m)) {
      BlowupFixedPoint fp;
      fp.y_tuple.assign(both.begin(), both.begin() + r);
      fp.z_tuple.assign(both.begin() + r, both.end());
      fp.kvec = kvec;
      out.push_back(std::move(fp));
    }
  }
  return out;
}

}  // namespace chiy
