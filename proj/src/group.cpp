#include "algrec/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>

namespace algrec {

namespace {

std::size_t mix(std::size_t seed, std::uint64_t v) {
  // boost::hash_combine style mixing
  return seed ^ (std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::vector<std::int64_t> symmetric_difference_shifted(const std::vector<std::int64_t>& f,
                                                        const std::vector<std::int64_t>& g,
                                                        std::int64_t shift) {
  std::vector<std::int64_t> out;
  out.reserve(f.size() + g.size());
  auto i = f.begin();
  auto j = g.begin();
  while (i != f.end() || j != g.end()) {
    if (j == g.end() || (i != f.end() && *i < *j + shift)) {
      out.push_back(*i++);
    } else if (i == f.end() || *j + shift < *i) {
      out.push_back(*j++ + shift);
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t mod_floor(std::int64_t r, std::int64_t m) {
  std::int64_t v = r % m;
  return v < 0 ? v + m : v;
}

} // namespace

// ---- descriptors -----------------------------------------------------------

GroupDescriptor GroupDescriptor::z_power(int d) {
  if (d < 1) throw std::invalid_argument("ZPower(d) requires d >= 1, got " + std::to_string(d));
  return {GroupKind::ZPower, d};
}

GroupDescriptor GroupDescriptor::free(int d) {
  if (d < 2) throw std::invalid_argument("Free(d) requires d >= 2, got " + std::to_string(d));
  if (d > kMaxFreeRank)
    throw std::invalid_argument("Free(d) requires d <= " + std::to_string(kMaxFreeRank));
  return {GroupKind::Free, d};
}

GroupDescriptor GroupDescriptor::heisenberg() { return {GroupKind::Heisenberg, 0}; }

GroupDescriptor GroupDescriptor::lamplighter_z() { return {GroupKind::LamplighterZ, 0}; }

GroupDescriptor GroupDescriptor::cyclic(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("CyclicZ(m) requires m >= 1, got " + std::to_string(m));
  return {GroupKind::CyclicZ, m};
}

int GroupDescriptor::rank() const {
  switch (kind_) {
  case GroupKind::ZPower:
  case GroupKind::Free: return static_cast<int>(param_);
  case GroupKind::Heisenberg: return 2;
  case GroupKind::LamplighterZ: return 2;
  case GroupKind::CyclicZ: return 1;
  }
  return 0;
}

std::int64_t GroupDescriptor::modulus() const {
  if (kind_ != GroupKind::CyclicZ) throw DescriptorMismatch("modulus() on " + to_string());
  return param_;
}

std::string GroupDescriptor::to_string() const {
  switch (kind_) {
  case GroupKind::ZPower: return "ZPower(" + std::to_string(param_) + ")";
  case GroupKind::Free: return "Free(" + std::to_string(param_) + ")";
  case GroupKind::Heisenberg: return "Heisenberg";
  case GroupKind::LamplighterZ: return "LamplighterZ";
  case GroupKind::CyclicZ: return "CyclicZ(" + std::to_string(param_) + ")";
  }
  return {};
}

// ---- element construction --------------------------------------------------

GroupElement detail::make_element(const GroupDescriptor& g, Payload p) {
  return GroupElement(g, std::move(p));
}

using detail::make_element;

GroupElement GroupElement::lattice(const GroupDescriptor& g, std::vector<std::int64_t> coords) {
  if (g.kind() != GroupKind::ZPower) throw DescriptorMismatch("lattice element for " + g.to_string());
  if (static_cast<int>(coords.size()) != g.rank())
    throw std::invalid_argument("expected " + std::to_string(g.rank()) + " coordinates, got " +
                                std::to_string(coords.size()));
  return make_element(g, LatticePoint{std::move(coords)});
}

GroupElement GroupElement::word(const GroupDescriptor& g, std::vector<Letter> letters) {
  if (g.kind() != GroupKind::Free) throw DescriptorMismatch("word element for " + g.to_string());
  std::vector<Letter> reduced;
  reduced.reserve(letters.size());
  for (Letter s : letters) {
    if (s == 0 || std::abs(int(s)) > g.rank())
      throw std::invalid_argument("letter " + std::to_string(int(s)) + " outside alphabet of " +
                                  g.to_string());
    if (!reduced.empty() && reduced.back() == -s)
      reduced.pop_back();
    else
      reduced.push_back(s);
  }
  return make_element(g, ReducedWord{std::move(reduced)});
}

GroupElement GroupElement::heisenberg(std::int64_t a, std::int64_t b, std::int64_t c) {
  return make_element(GroupDescriptor::heisenberg(), HeisenbergTriple{a, b, c});
}

GroupElement GroupElement::lamplighter(std::int64_t position, std::vector<std::int64_t> lamps) {
  std::sort(lamps.begin(), lamps.end());
  lamps.erase(std::unique(lamps.begin(), lamps.end()), lamps.end());
  return make_element(GroupDescriptor::lamplighter_z(), LampConfig{position, std::move(lamps)});
}

GroupElement GroupElement::residue(const GroupDescriptor& g, std::int64_t r) {
  if (g.kind() != GroupKind::CyclicZ) throw DescriptorMismatch("residue element for " + g.to_string());
  return make_element(g, Residue{mod_floor(r, g.modulus())});
}

std::size_t GroupElement::hash() const {
  std::size_t h = mix(static_cast<std::size_t>(group_.kind()), payload_.index());
  std::visit(
      [&h](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LatticePoint>) {
          for (auto v : p.coords) h = mix(h, static_cast<std::uint64_t>(v));
        } else if constexpr (std::is_same_v<T, ReducedWord>) {
          h = mix(h, p.letters.size());
          for (auto s : p.letters) h = mix(h, static_cast<std::uint64_t>(s));
        } else if constexpr (std::is_same_v<T, HeisenbergTriple>) {
          h = mix(mix(mix(h, p.a), p.b), p.c);
        } else if constexpr (std::is_same_v<T, LampConfig>) {
          h = mix(h, p.position);
          for (auto v : p.lamps) h = mix(h, static_cast<std::uint64_t>(v));
        } else {
          h = mix(h, p.value);
        }
      },
      payload_);
  return h;
}

void require_same_group(const GroupElement& x, const GroupElement& y) {
  if (!(x.group() == y.group()))
    throw DescriptorMismatch("descriptor mismatch: " + x.group().to_string() + " vs " +
                             y.group().to_string());
}

// ---- group law -------------------------------------------------------------

GroupElement identity(const GroupDescriptor& g) {
  switch (g.kind()) {
  case GroupKind::ZPower: return make_element(g, LatticePoint{std::vector<std::int64_t>(g.rank(), 0)});
  case GroupKind::Free: return make_element(g, ReducedWord{});
  case GroupKind::Heisenberg: return make_element(g, HeisenbergTriple{});
  case GroupKind::LamplighterZ: return make_element(g, LampConfig{});
  case GroupKind::CyclicZ: return make_element(g, Residue{0});
  }
  throw std::logic_error("unknown group kind");
}

std::size_t free_cancellation(std::span<const Letter> x, std::span<const Letter> y) {
  std::size_t k = 0;
  const std::size_t limit = std::min(x.size(), y.size());
  while (k < limit && x[x.size() - 1 - k] == -y[k]) ++k;
  return k;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  const GroupDescriptor& g = x.group();
  switch (g.kind()) {
  case GroupKind::ZPower: {
    std::vector<std::int64_t> sum = x.as_lattice().coords;
    const auto& b = y.as_lattice().coords;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
    return make_element(g, LatticePoint{std::move(sum)});
  }
  case GroupKind::Free: {
    const auto& u = x.as_word().letters;
    const auto& v = y.as_word().letters;
    const std::size_t k = free_cancellation(u, v);
    std::vector<Letter> out;
    out.reserve(u.size() + v.size() - 2 * k);
    out.insert(out.end(), u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    return make_element(g, ReducedWord{std::move(out)});
  }
  case GroupKind::Heisenberg: {
    const auto& p = x.as_heisenberg();
    const auto& q = y.as_heisenberg();
    return make_element(g, HeisenbergTriple{p.a + q.a, p.b + q.b, p.c + q.c + p.a * q.b});
  }
  case GroupKind::LamplighterZ: {
    // (x, f)(y, h) = (x + y, f + h(. - x)) with lamps in Z/2
    const auto& p = x.as_lamplighter();
    const auto& q = y.as_lamplighter();
    return make_element(
        g, LampConfig{p.position + q.position, symmetric_difference_shifted(p.lamps, q.lamps, p.position)});
  }
  case GroupKind::CyclicZ:
    return make_element(g, Residue{mod_floor(x.as_residue().value + y.as_residue().value, g.modulus())});
  }
  throw std::logic_error("unknown group kind");
}

GroupElement invert(const GroupElement& x) {
  const GroupDescriptor& g = x.group();
  switch (g.kind()) {
  case GroupKind::ZPower: {
    std::vector<std::int64_t> neg = x.as_lattice().coords;
    for (auto& v : neg) v = -v;
    return make_element(g, LatticePoint{std::move(neg)});
  }
  case GroupKind::Free: {
    const auto& u = x.as_word().letters;
    std::vector<Letter> out(u.rbegin(), u.rend());
    for (auto& s : out) s = static_cast<Letter>(-s);
    return make_element(g, ReducedWord{std::move(out)});
  }
  case GroupKind::Heisenberg: {
    const auto& p = x.as_heisenberg();
    return make_element(g, HeisenbergTriple{-p.a, -p.b, p.a * p.b - p.c});
  }
  case GroupKind::LamplighterZ: {
    const auto& p = x.as_lamplighter();
    std::vector<std::int64_t> lamps = p.lamps;
    for (auto& s : lamps) s -= p.position;
    return make_element(g, LampConfig{-p.position, std::move(lamps)});
  }
  case GroupKind::CyclicZ:
    return make_element(g, Residue{mod_floor(-x.as_residue().value, g.modulus())});
  }
  throw std::logic_error("unknown group kind");
}

GroupElement power(const GroupElement& x, std::int64_t k) {
  GroupElement base = k < 0 ? invert(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  GroupElement result = identity(x.group());
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

GroupElement commutator(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

bool is_identity(const GroupElement& x) { return x == identity(x.group()); }

std::vector<GroupElement> standard_generators(const GroupDescriptor& g) {
  std::vector<GroupElement> gens;
  switch (g.kind()) {
  case GroupKind::ZPower:
    for (int i = 0; i < g.rank(); ++i) {
      for (int sign : {1, -1}) {
        std::vector<std::int64_t> e(g.rank(), 0);
        e[i] = sign;
        gens.push_back(GroupElement::lattice(g, std::move(e)));
      }
    }
    break;
  case GroupKind::Free:
    for (int i = 1; i <= g.rank(); ++i) {
      gens.push_back(make_element(g, ReducedWord{{static_cast<Letter>(i)}}));
      gens.push_back(make_element(g, ReducedWord{{static_cast<Letter>(-i)}}));
    }
    break;
  case GroupKind::Heisenberg:
    gens = {GroupElement::heisenberg(1, 0, 0), GroupElement::heisenberg(-1, 0, 0),
            GroupElement::heisenberg(0, 1, 0), GroupElement::heisenberg(0, -1, 0)};
    break;
  case GroupKind::LamplighterZ:
    gens = {GroupElement::lamplighter(1, {}), GroupElement::lamplighter(-1, {}),
            GroupElement::lamplighter(0, {0})};
    break;
  case GroupKind::CyclicZ:
    gens = {GroupElement::residue(g, 1), GroupElement::residue(g, -1)};
    break;
  }
  sort_canonical(gens);
  return gens;
}

bool canonical_less(const GroupElement& x, const GroupElement& y) { return to_string(x) < to_string(y); }

void sort_canonical(std::vector<GroupElement>& xs) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) keys.emplace_back(to_string(xs[i]), i);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  std::vector<GroupElement> out;
  out.reserve(keys.size());
  for (const auto& [_, i] : keys) out.push_back(std::move(xs[i]));
  xs = std::move(out);
}

} // namespace algrec
