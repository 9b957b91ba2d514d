#include "algrec/homomorphism.hpp"

namespace algrec {

Homomorphism Homomorphism::abelianize(int d) {
  return {HomKind::Abelianize, GroupDescriptor::free(d), GroupDescriptor::z_power(d)};
}

Homomorphism Homomorphism::mod_m(std::int64_t m) {
  return {HomKind::ModM, GroupDescriptor::z_power(1), GroupDescriptor::cyclic(m)};
}

Homomorphism Homomorphism::pos() {
  return {HomKind::Pos, GroupDescriptor::lamplighter_z(), GroupDescriptor::z_power(1)};
}

Homomorphism Homomorphism::heisenberg_abelianize() {
  return {HomKind::HeisenbergAbelianize, GroupDescriptor::heisenberg(), GroupDescriptor::z_power(2)};
}

GroupElement apply_homomorphism(const Homomorphism& h, const GroupElement& g) {
  if (!(g.group() == h.source()))
    throw DescriptorMismatch("homomorphism expects " + h.source().to_string() + ", got " +
                             g.group().to_string());
  switch (h.kind()) {
  case HomKind::Abelianize: {
    std::vector<std::int64_t> sums(h.target().rank(), 0);
    for (Letter s : g.as_word().letters) sums[std::abs(int(s)) - 1] += s > 0 ? 1 : -1;
    return GroupElement::lattice(h.target(), std::move(sums));
  }
  case HomKind::ModM: return GroupElement::residue(h.target(), g.as_lattice().coords[0]);
  case HomKind::Pos: return GroupElement::lattice(h.target(), {g.as_lamplighter().position});
  case HomKind::HeisenbergAbelianize: {
    const auto& t = g.as_heisenberg();
    return GroupElement::lattice(h.target(), {t.a, t.b});
  }
  }
  throw std::logic_error("unknown homomorphism");
}

} // namespace algrec
