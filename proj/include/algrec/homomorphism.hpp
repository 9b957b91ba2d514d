#pragma once

#include "algrec/group.hpp"

namespace algrec {

enum class HomKind : std::uint8_t { Abelianize, ModM, Pos, HeisenbergAbelianize };

/// One of the four projections used by the quotient arguments:
///   Abelianize            Free(d) -> ZPower(d), exponent sums
///   ModM                  ZPower(1) -> CyclicZ(m)
///   Pos                   LamplighterZ -> ZPower(1), (x, f) -> x
///   HeisenbergAbelianize  Heisenberg -> ZPower(2), (a, b, c) -> (a, b)
class Homomorphism {
public:
  static Homomorphism abelianize(int d);
  static Homomorphism mod_m(std::int64_t m);
  static Homomorphism pos();
  static Homomorphism heisenberg_abelianize();

  HomKind kind() const { return kind_; }
  const GroupDescriptor& source() const { return source_; }
  const GroupDescriptor& target() const { return target_; }

private:
  Homomorphism(HomKind k, GroupDescriptor s, GroupDescriptor t) : kind_(k), source_(s), target_(t) {}

  HomKind kind_;
  GroupDescriptor source_;
  GroupDescriptor target_;
};

GroupElement apply_homomorphism(const Homomorphism& h, const GroupElement& g);

} // namespace algrec
