#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "chiy/partitions.hpp"

namespace chiy {

/// Torus weight e_b e_a^{-1} t1^{i1} t2^{i2}. The e-part is stored as the
/// index pair (b over a), 1-based; e_num == e_den == 0 means a pure
/// t-monomial. Equal indices cancel, so a == b is never stored.
struct Weight {
  int t1 = 0;
  int t2 = 0;
  int e_num = 0;
  int e_den = 0;

  static Weight monomial(int i1, int i2) { return {i1, i2, 0, 0}; }
  static Weight make(int b, int a, int i1, int i2) {
    if (a == b) return monomial(i1, i2);
    return {i1, i2, b, a};
  }

  bool has_e() const { return e_num != 0; }
  bool is_trivial() const { return !has_e() && t1 == 0 && t2 == 0; }
  /// "e_b/e_a * t1^i * t2^j", omitting the e-part when absent.
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Integer-linear change of torus coordinates acting on exponents:
/// (i1, i2) -> (m11 i1 + m12 i2 + s1, m21 i1 + m22 i2 + s2).
struct ExponentMap {
  int m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  int s1 = 0, s2 = 0;

  static ExponentMap identity() { return {}; }
  /// (t1, t2) -> (t1, t2/t1).
  static ExponentMap t2_over_t1() { return {1, -1, 0, 1, 0, 0}; }
  /// (t1, t2) -> (t1/t2, t2).
  static ExponentMap t1_over_t2() { return {1, 0, -1, 1, 0, 0}; }
  /// Multiplication by t1^m.
  static ExponentMap twist_t1(int m) { return {1, 0, 0, 1, m, 0}; }
  /// Multiplication by t2^m.
  static ExponentMap twist_t2(int m) { return {1, 0, 0, 1, 0, m}; }

  /// This map followed by `next`.
  ExponentMap then(const ExponentMap& next) const;
  Weight apply(const Weight& w) const;
};

/// Class of a torus representation: weights with nonzero integer multiplicities.
class Character {
 public:
  using Terms = std::map<Weight, int>;

  void add(const Weight& w, int multiplicity = 1);
  Character& operator+=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }

  int rank() const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int multiplicity(const Weight& w) const;
  bool contains_trivial() const { return multiplicity(Weight{}) != 0; }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  /// Sorted "mult * e_b/e_a * t1^i * t2^j" entries joined by " + ".
  std::string to_string() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Terms terms_;
};

/// Optional rewrite applied to tangent characters before evaluation; used to
/// plant deliberate errors in negative-control runs.
using CharacterHook = std::function<Character(const Character&)>;

Character substitute(const Character& c, const ExponentMap& map);

/// N^Y_{a,b} = e_b/e_a ( sum_{s in Y_a} t1^{-l_{Y_b}(s)} t2^{a_{Y_a}(s)+1}
///                      + sum_{s in Y_b} t1^{l_{Y_a}(s)+1} t2^{-a_{Y_b}(s)} ).
Character n_block(const Partition& ya, const Partition& yb, int a, int b);

/// L_{a,b} for the exceptional-curve part of the blow-up tangent space.
Character l_block(const LatticeVector& kvec, int a, int b);

/// Tangent space at a fixed point of framed sheaves on P^2. Throws
/// DimensionMismatch unless the rank is 2r|Y|.
Character tangent_p2(const PartitionTuple& fp);

/// Tangent space at a fixed point on the blow-up. Throws DimensionMismatch
/// unless the rank is the grading, and TrivialWeight if the weight 1 occurs.
Character tangent_blowup(const BlowupFixedPoint& fp);

}  // namespace chiy
