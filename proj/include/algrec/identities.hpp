#pragma once

#include "algrec/group.hpp"

#include <cstdint>
#include <optional>

namespace algrec {

struct NilpotentIdentityResult {
  std::int64_t exponent_pos = 0; ///< central exponent of c^n d^m e^n f^m
  std::int64_t exponent_neg = 0; ///< central exponent of d^m c^n f^m e^n
  bool holds = false;
};

/// In the Heisenberg group with a = H(1,0,0), b = H(0,1,0), z = [a, b], sets
/// c = a z^k1, d = b z^k2, e = a^-1 z^k3, f = b^-1 z^k4 and multiplies out
///   c^n d^m e^n f^m  and  d^m c^n f^m e^n.
/// Both products must be central; `holds` reports whether their exponents are
/// nm + L and -nm + L with L = (k1 + k3) n + (k2 + k4) m.
NilpotentIdentityResult nilpotent_identity_check(std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                                 std::int64_t k4, std::int64_t n, std::int64_t m);

struct TorsionWitness {
  std::int64_t k;       ///< least k with (XY)^k = e
  GroupElement witness; ///< Y (XY)^(k-1), equal to X^-1
};

/// Searches k = 1..max_k for (XY)^k = e and returns Y (XY)^(k-1).
std::optional<TorsionWitness> torsion_inverse_witness(const GroupElement& x, const GroupElement& y,
                                                      std::int64_t max_k);

/// Nonnegative multiplicities expressing -x as a positive combination of x and
/// an opposite-signed y: copies_of_y * y + copies_of_x * x = -x.
struct IntegerCombination {
  std::int64_t copies_of_y;
  std::int64_t copies_of_x;
};

/// For x > 0 > y: (x, -y - 1).  For x < 0 < y: (-x, y - 1).
/// Throws std::invalid_argument when x == 0 or y does not have the opposite sign.
IntegerCombination z_inverse_witness(std::int64_t x, std::int64_t y);

} // namespace algrec
