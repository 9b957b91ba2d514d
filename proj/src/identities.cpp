#include "algrec/identities.hpp"

#include <stdexcept>
#include <string>

namespace algrec {

namespace {

std::int64_t central_exponent(const GroupElement& x) {
  const auto& t = x.as_heisenberg();
  if (t.a != 0 || t.b != 0)
    throw std::logic_error("expected a central element, got " + to_string(x));
  return t.c;
}

} // namespace

NilpotentIdentityResult nilpotent_identity_check(std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                                 std::int64_t k4, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive");
  const GroupElement a = GroupElement::heisenberg(1, 0, 0);
  const GroupElement b = GroupElement::heisenberg(0, 1, 0);
  const GroupElement z = commutator(a, b);

  const GroupElement c = multiply(a, power(z, k1));
  const GroupElement d = multiply(b, power(z, k2));
  const GroupElement e = multiply(invert(a), power(z, k3));
  const GroupElement f = multiply(invert(b), power(z, k4));

  const GroupElement cn = power(c, n), dm = power(d, m), en = power(e, n), fm = power(f, m);
  const GroupElement forward = multiply(multiply(cn, dm), multiply(en, fm));
  const GroupElement backward = multiply(multiply(dm, cn), multiply(fm, en));

  NilpotentIdentityResult r;
  r.exponent_pos = central_exponent(forward);
  r.exponent_neg = central_exponent(backward);
  const std::int64_t lin = (k1 + k3) * n + (k2 + k4) * m;
  r.holds = r.exponent_pos == n * m + lin && r.exponent_neg == -n * m + lin;
  return r;
}

std::optional<TorsionWitness> torsion_inverse_witness(const GroupElement& x, const GroupElement& y,
                                                      std::int64_t max_k) {
  require_same_group(x, y);
  const GroupElement xy = multiply(x, y);
  GroupElement acc = xy; // (XY)^k
  GroupElement prev = identity(x.group()); // (XY)^(k-1)
  for (std::int64_t k = 1; k <= max_k; ++k) {
    if (is_identity(acc)) return TorsionWitness{k, multiply(y, prev)};
    prev = acc;
    acc = multiply(acc, xy);
  }
  return std::nullopt;
}

IntegerCombination z_inverse_witness(std::int64_t x, std::int64_t y) {
  if (x == 0) throw std::invalid_argument("z_inverse_witness: x must be nonzero");
  if (x > 0 && y >= 0)
    throw std::invalid_argument("z_inverse_witness: x > 0 needs y < 0, got y = " + std::to_string(y));
  if (x < 0 && y <= 0)
    throw std::invalid_argument("z_inverse_witness: x < 0 needs y > 0, got y = " + std::to_string(y));
  return x > 0 ? IntegerCombination{x, -y - 1} : IntegerCombination{-x, y - 1};
}

} // namespace algrec
