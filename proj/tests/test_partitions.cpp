#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

#include "chiy/fixed_point_cache.hpp"
#include "chiy/partitions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chiy;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("chiy_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("arm and leg lengths") {
  const Partition p({2, 1});
  CHECK(arm_leg(p, {1, 1}) == ArmLeg{1, 1});
  CHECK(arm_leg(p, {1, 2}) == ArmLeg{0, 0});
  CHECK(arm_leg(p, {2, 1}) == ArmLeg{0, 0});
  CHECK(arm_leg(Partition(), {1, 1}) == ArmLeg{-1, -1});
  CHECK(arm_leg(p, {2, 2}) == ArmLeg{-1, -1});
  CHECK(arm_leg(Partition({4, 2, 1}), {1, 2}) == ArmLeg{2, 1});
}

TEST_CASE("partition basics") {
  const Partition p({3, 1});
  CHECK(p.size() == 4);
  CHECK(p.length() == 2);
  CHECK(p.conjugate() == Partition({2, 1, 1}));
  CHECK(p.row_length(5) == 0);
  CHECK(p.column_length(1) == 2);
  CHECK(p.contains({1, 3}));
  CHECK_FALSE(p.contains({2, 2}));
  CHECK(p.boxes() == std::vector<Box>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
  CHECK(p.to_string() == "[3,1]");
  CHECK(Partition().to_string() == "[]");
  CHECK(Partition::parse("[3,1]") == p);
  CHECK(Partition::parse("[]") == Partition());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  const PartitionTuple t{Partition({2}), Partition(), Partition({1, 1})};
  CHECK(to_string(t) == "[2];[];[1,1]");
  CHECK(parse_partition_tuple("[2];[];[1,1]", 3) == t);
  CHECK(total_size(t) == 4);
  CHECK_THROWS(parse_partition_tuple("[2];[]", 3));
}

TEST_CASE("partition enumeration examples") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(4).front() == Partition({4}));
  CHECK(enumerate_partitions(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("partition enumeration matches brute force and the pentagonal recurrence") {
  const auto p = oracle::partition_counts(22);
  for (int n = 0; n <= 22; ++n) {
    const auto parts = enumerate_partitions(n);
    CHECK(static_cast<long>(parts.size()) == p[static_cast<std::size_t>(n)]);
    if (n <= 12) {
      std::vector<std::vector<int>> got;
      for (const auto& q : parts) got.push_back(q.parts());
      CHECK(got == oracle::brute_partitions(n));
    }
    for (const auto& q : parts) {
      CHECK(q.size() == n);
      CHECK(q.conjugate().conjugate() == q);
      CHECK(q.conjugate().size() == n);
      CHECK(static_cast<int>(q.boxes().size()) == n);
    }
  }
}

TEST_CASE("arm and leg are nonnegative exactly on the diagram") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
          const auto al = arm_leg(p, {i, j});
          const bool inside = p.contains({i, j});
          CHECK((al.arm >= 0) == inside);
          CHECK((al.leg >= 0) == inside);
        }
}

TEST_CASE("tuple enumeration") {
  CHECK(enumerate_tuples(1, 2).size() == 2);
  CHECK(enumerate_tuples(2, 2).size() == 5);
  CHECK(enumerate_tuples(2, 0) == std::vector<PartitionTuple>{{Partition(), Partition()}});
  for (int r = 1; r <= 3; ++r) {
    const auto counts = oracle::tuple_counts(r, 7);
    for (int n = 0; n <= 7; ++n) {
      const auto tuples = enumerate_tuples(r, n);
      CHECK(static_cast<long>(tuples.size()) == counts[static_cast<std::size_t>(n)]);
      CHECK(std::set<PartitionTuple>(tuples.begin(), tuples.end()).size() == tuples.size());
      for (const auto& t : tuples) {
        CHECK(static_cast<int>(t.size()) == r);
        CHECK(total_size(t) == n);
      }
    }
  }
}

TEST_CASE("lattice vector enumeration examples") {
  const auto r1 = enumerate_lattice_vectors(1, 0, 100);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].entries == std::vector<int>{0});
  std::set<std::vector<int>> got;
  for (const auto& v : enumerate_lattice_vectors(2, 1, 9)) got.insert(v.entries);
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {2, -1}, {-1, 2}});
  const auto zero = enumerate_lattice_vectors(2, 0, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].entries == std::vector<int>{0, 0});
}

TEST_CASE("lattice vector enumeration matches an exhaustive box scan") {
  for (int r = 1; r <= 4; ++r)
    for (int k = -2; k <= 3; ++k)
      for (long bound : {0L, 1L, 5L, 12L, 30L}) {
        std::set<std::vector<int>> expected;
        for (const auto& v : oracle::box_scan(r, k, -12, 12))
          if (oracle::pair_form(v) <= bound) expected.insert(v);
        const auto vecs = enumerate_lattice_vectors(r, k, bound);
        std::set<std::vector<int>> got;
        for (const auto& v : vecs) {
          got.insert(v.entries);
          CHECK(v.sum() == k);
          CHECK(v.pair_form() == oracle::pair_form(v.entries));
        }
        CHECK(got.size() == vecs.size());
        CHECK(got == expected);
        for (std::size_t i = 1; i < vecs.size(); ++i) CHECK(vecs[i - 1].pair_form() <= vecs[i].pair_form());
      }
}

TEST_CASE("pair forms and linear terms") {
  const LatticeVector v{{2, -1, 0}};
  CHECK(v.pair_form() == 9 + 4 + 1);
  CHECK(v.pair_linear() == 3 + 2 - 1);
  CHECK(v.sum() == 1);
}

TEST_CASE("blow-up fixed points: examples") {
  const auto a = enumerate_blowup_fixed_points(1, 0, 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == BlowupFixedPoint{{Partition()}, {Partition()}, LatticeVector{{0}}});
  const auto b = enumerate_blowup_fixed_points(1, 0, 1);
  REQUIRE(b.size() == 2);
  CHECK(std::count(b.begin(), b.end(), BlowupFixedPoint{{Partition({1})}, {Partition()}, LatticeVector{{0}}}) == 1);
  CHECK(std::count(b.begin(), b.end(), BlowupFixedPoint{{Partition()}, {Partition({1})}, LatticeVector{{0}}}) == 1);
  const auto c = enumerate_blowup_fixed_points(2, 1, 0);
  REQUIRE(c.size() == 2);
  std::set<std::vector<int>> kvecs;
  for (const auto& fp : c) {
    kvecs.insert(fp.kvec.entries);
    CHECK(total_size(fp.y_tuple) + total_size(fp.z_tuple) == 0);
  }
  CHECK(kvecs == std::set<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(enumerate_blowup_fixed_points(2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_blowup_fixed_points(2, -1, 0), std::invalid_argument);
}

TEST_CASE("blow-up fixed point counts agree with a generating-function oracle") {
  // #fixed points = sum over kvec with pair form d, d = k(r-k) + 2r m', of the
  // number of pairs of r-tuples with total size n - m'.
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k < r; ++k)
      for (int n = 0; n <= 3; ++n) {
        const auto tuples = oracle::tuple_counts(r, 2 * n + 2);
        std::vector<long> pairs(static_cast<std::size_t>(n + 1), 0);
        for (int a = 0; a <= n; ++a)
          for (int b = 0; a + b <= n; ++b)
            pairs[static_cast<std::size_t>(a + b)] += tuples[static_cast<std::size_t>(a)] * tuples[static_cast<std::size_t>(b)];
        const long target = 2L * r * n + static_cast<long>(k) * (r - k);
        long expected = 0;
        for (const auto& v : oracle::box_scan(r, k, -8, 8)) {
          const long d = oracle::pair_form(v);
          if (d > target || (target - d) % (2 * r) != 0) continue;
          expected += pairs[static_cast<std::size_t>((target - d) / (2 * r))];
        }
        const auto fps = enumerate_blowup_fixed_points(r, k, n);
        CHECK(static_cast<long>(fps.size()) == expected);
        for (const auto& fp : fps) {
          CHECK(fp.grading() == target);
          CHECK(fp.instanton_number() == n);
          CHECK(fp.k() == k);
          CHECK(fp.rank() == r);
        }
      }
}

TEST_CASE("fixed-point cache is transparent and bit-identical") {
  const auto dir = scratch_dir("cache");
  const FixedPointCache cache(dir);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 3; ++n) {
      const auto direct = enumerate_tuples(r, n);
      CHECK(cache.p2_fixed_points(r, n) == direct);
      const auto file = dir / ("p2_r" + std::to_string(r) + "_k0_n" + std::to_string(n) + ".txt");
      REQUIRE(std::filesystem::exists(file));
      CHECK(slurp(file) == FixedPointCache::serialize(r, n, direct));
      CHECK(cache.p2_fixed_points(r, n) == direct);
      for (int k = 0; k < r; ++k) {
        const auto bdirect = enumerate_blowup_fixed_points(r, k, n);
        CHECK(cache.blowup_fixed_points(r, k, n) == bdirect);
        CHECK(cache.blowup_fixed_points(r, k, n) == bdirect);
        const auto bfile = dir / ("blowup_r" + std::to_string(r) + "_k" + std::to_string(k) + "_n" + std::to_string(n) + ".txt");
        CHECK(slurp(bfile) == FixedPointCache::serialize(r, k, n, bdirect));
      }
    }
  CHECK(p2_fixed_points(2, 2, nullptr) == enumerate_tuples(2, 2));
  CHECK(blowup_fixed_points(2, 1, 1, &cache) == enumerate_blowup_fixed_points(2, 1, 1));
  std::filesystem::remove_all(dir);
}

TEST_CASE("corrupted cache files are rebuilt") {
  const auto dir = scratch_dir("corrupt");
  const FixedPointCache cache(dir);
  const auto expected = enumerate_blowup_fixed_points(2, 1, 2);
  CHECK(cache.blowup_fixed_points(2, 1, 2) == expected);
  const auto file = dir / "blowup_r2_k1_n2.txt";
  for (const std::string& bad : {std::string(""), std::string("garbage\n"),
                                slurp(file).substr(0, slurp(file).size() / 2),
                                FixedPointCache::serialize(2, 1, 1, enumerate_blowup_fixed_points(2, 1, 1))}) {
    {
      std::ofstream out(file, std::ios::trunc);
      out << bad;
    }
    CHECK(cache.blowup_fixed_points(2, 1, 2) == expected);
    CHECK(slurp(file) == FixedPointCache::serialize(2, 1, 2, expected));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache file format") {
  const std::vector<BlowupFixedPoint> pts{{{Partition({2, 1}), Partition()}, {Partition(), Partition({1})}, LatticeVector{{1, 0}}}};
  CHECK(FixedPointCache::serialize(2, 1, 3, pts) ==
        "# chiy fixed-point cache v1\n# family=blowup r=2 k=1 n=3\ncount 1\n[2,1];[] | [];[1] | 1,0\n");
}
