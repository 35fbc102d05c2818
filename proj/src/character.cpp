#include "chiy/character.hpp"

#include "chiy/errors.hpp"

namespace chiy {

std::string Weight::to_string() const {
  std::string out;
  if (has_e()) out += "e" + std::to_string(e_num) + "/e" + std::to_string(e_den) + " * ";
  out += "t1^" + std::to_string(t1) + " * t2^" + std::to_string(t2);
  return out;
}

ExponentMap ExponentMap::then(const ExponentMap& next) const {
  ExponentMap out;
  out.m11 = next.m11 * m11 + next.m12 * m21;
  out.m12 = next.m11 * m12 + next.m12 * m22;
  out.m21 = next.m21 * m11 + next.m22 * m21;
  out.m22 = next.m21 * m12 + next.m22 * m22;
  out.s1 = next.m11 * s1 + next.m12 * s2 + next.s1;
  out.s2 = next.m21 * s1 + next.m22 * s2 + next.s2;
  return out;
}

Weight ExponentMap::apply(const Weight& w) const {
  Weight out = w;
  out.t1 = m11 * w.t1 + m12 * w.t2 + s1;
  out.t2 = m21 * w.t1 + m22 * w.t2 + s2;
  return out;
}

void Character::add(const Weight& w, int multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

int Character::rank() const {
  int r = 0;
  for (const auto& [w, m] : terms_) r += m;
  return r;
}

int Character::multiplicity(const Weight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::string Character::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, m] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(m) + " * " + w.to_string();
  }
  return out;
}

Character substitute(const Character& c, const ExponentMap& map) {
  Character out;
  for (const auto& [w, m] : c) out.add(map.apply(w), m);
  return out;
}

Character n_block(const Partition& ya, const Partition& yb, int a, int b) {
  Character out;
  for (const Box& s : ya.boxes())
    out.add(Weight::make(b, a, -arm_leg(yb, s).leg, arm_leg(ya, s).arm + 1));
  for (const Box& s : yb.boxes())
    out.add(Weight::make(b, a, arm_leg(ya, s).leg + 1, -arm_leg(yb, s).arm));
  return out;
}

Character l_block(const LatticeVector& kvec, int a, int b) {
  Character out;
  const int d = kvec.entries.at(static_cast<std::size_t>(a - 1)) - kvec.entries.at(static_cast<std::size_t>(b - 1));
  if (d > 0) {
    for (int i = 0; i <= d - 1; ++i)
      for (int j = 0; i + j <= d - 1; ++j) out.add(Weight::make(b, a, -i, -j));
  } else if (d < -1) {
    for (int i = 0; i <= -d - 2; ++i)
      for (int j = 0; i + j <= -d - 2; ++j) out.add(Weight::make(b, a, i + 1, j + 1));
  }
  return out;
}

Character tangent_p2(const PartitionTuple& fp) {
  const int r = static_cast<int>(fp.size());
  Character out;
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b) out += n_block(fp[a - 1], fp[b - 1], a, b);
  const int expected = 2 * r * total_size(fp);
  if (out.rank() != expected)
    throw DimensionMismatch("P^2 tangent at " + to_string(fp) + " has rank " + std::to_string(out.rank()) +
                            ", expected " + std::to_string(expected));
  return out;
}

Character tangent_blowup(const BlowupFixedPoint& fp) {
  const int r = fp.rank();
  const auto& k = fp.kvec.entries;
  Character out;
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      const int shift = k[b - 1] - k[a - 1];
      out += l_block(fp.kvec, a, b);
      out += substitute(n_block(fp.y_tuple[a - 1], fp.y_tuple[b - 1], a, b),
                        ExponentMap::t2_over_t1().then(ExponentMap::twist_t1(shift)));
      out += substitute(n_block(fp.z_tuple[a - 1], fp.z_tuple[b - 1], a, b),
                        ExponentMap::t1_over_t2().then(ExponentMap::twist_t2(shift)));
    }
  }
  const long expected = fp.grading();
  if (out.rank() != expected)
    throw DimensionMismatch("blow-up tangent has rank " + std::to_string(out.rank()) + ", expected " +
                            std::to_string(expected));
  if (out.contains_trivial()) throw TrivialWeight("blow-up tangent contains the trivial weight");
  return out;
}

}  // namespace chiy
