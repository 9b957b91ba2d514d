#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace algrec {

class DescriptorMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class GroupKind : std::uint8_t { ZPower, Free, Heisenberg, LamplighterZ, CyclicZ };

/// Names one of the five concrete groups. The parameter is the rank for
/// ZPower and Free, the modulus for CyclicZ, and unused otherwise.
class GroupDescriptor {
public:
  static GroupDescriptor z_power(int d);
  static GroupDescriptor free(int d);
  static GroupDescriptor heisenberg();
  static GroupDescriptor lamplighter_z();
  static GroupDescriptor cyclic(std::int64_t m);

  /// Accepts the forms printed by to_string(): "ZPower(2)", "Free(5)",
  /// "Heisenberg", "LamplighterZ", "CyclicZ(12)".
  static GroupDescriptor parse(std::string_view text);

  GroupKind kind() const { return kind_; }
  int rank() const;
  std::int64_t modulus() const;
  bool is_abelian() const { return kind_ == GroupKind::ZPower || kind_ == GroupKind::CyclicZ; }
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

private:
  GroupDescriptor(GroupKind kind, std::int64_t param) : kind_(kind), param_(param) {}

  GroupKind kind_;
  std::int64_t param_;
};

/// Letters of a free group are +-1 .. +-d; a negative letter is the inverse.
using Letter = std::int8_t;
inline constexpr int kMaxFreeRank = 127;

struct LatticePoint {
  std::vector<std::int64_t> coords;
  auto operator<=>(const LatticePoint&) const = default;
};

struct ReducedWord {
  std::vector<Letter> letters;
  auto operator<=>(const ReducedWord&) const = default;
};

/// Coordinates of the unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]].
struct HeisenbergTriple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  auto operator<=>(const HeisenbergTriple&) const = default;
};

/// Lamplighter element: lamp head position and the sorted set of lit lamps.
struct LampConfig {
  std::int64_t position = 0;
  std::vector<std::int64_t> lamps;
  auto operator<=>(const LampConfig&) const = default;
};

struct Residue {
  std::int64_t value = 0;
  auto operator<=>(const Residue&) const = default;
};

using Payload = std::variant<LatticePoint, ReducedWord, HeisenbergTriple, LampConfig, Residue>;

class GroupElement;
namespace detail {
// Wraps a payload already known to be canonical.
GroupElement make_element(const GroupDescriptor& g, Payload p);
} // namespace detail

/// An element of one of the five groups, always held in canonical form.
class GroupElement {
public:
  static GroupElement lattice(const GroupDescriptor& g, std::vector<std::int64_t> coords);
  /// Freely reduces the letters.
  static GroupElement word(const GroupDescriptor& g, std::vector<Letter> letters);
  static GroupElement heisenberg(std::int64_t a, std::int64_t b, std::int64_t c);
  /// Lamps are a set: sorted and deduplicated.
  static GroupElement lamplighter(std::int64_t position, std::vector<std::int64_t> lamps);
  /// Reduced into [0, m).
  static GroupElement residue(const GroupDescriptor& g, std::int64_t r);

  const GroupDescriptor& group() const { return group_; }
  const Payload& payload() const { return payload_; }

  const LatticePoint& as_lattice() const { return std::get<LatticePoint>(payload_); }
  const ReducedWord& as_word() const { return std::get<ReducedWord>(payload_); }
  const HeisenbergTriple& as_heisenberg() const { return std::get<HeisenbergTriple>(payload_); }
  const LampConfig& as_lamplighter() const { return std::get<LampConfig>(payload_); }
  const Residue& as_residue() const { return std::get<Residue>(payload_); }

  std::size_t hash() const;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.group_ == y.group_ && x.payload_ == y.payload_;
  }

private:
  GroupElement(GroupDescriptor g, Payload p) : group_(g), payload_(std::move(p)) {}
  friend GroupElement detail::make_element(const GroupDescriptor&, Payload);

  GroupDescriptor group_;
  Payload payload_;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

GroupElement identity(const GroupDescriptor& g);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
/// x^k for any integer k.
GroupElement power(const GroupElement& x, std::int64_t k);
/// [x, y] = x^-1 y^-1 x y.
GroupElement commutator(const GroupElement& x, const GroupElement& y);
bool is_identity(const GroupElement& x);

/// Number of letters cancelled when the reduced words x and y are
/// concatenated, i.e. |x| + |y| - |xy| = 2 * free_cancellation(x, y).
std::size_t free_cancellation(std::span<const Letter> x, std::span<const Letter> y);

/// The symmetric standard generating set, in canonical order:
///   ZPower(d): +-e_i;  Free(d): +-each letter;  Heisenberg: a+-, b+-;
///   LamplighterZ: (+-1, {}) and (0, {0});  CyclicZ(m): +-1.
std::vector<GroupElement> standard_generators(const GroupDescriptor& g);

/// Canonical text form; see parse_element.
std::string to_string(const GroupElement& x);

/// Parses the canonical text form for group g:
///   ZPower "(3,-4)", Free "x1 x2 X1" ("e" for the empty word),
///   Heisenberg "H(a,b,c)", LamplighterZ "L(x;{s1,s2})", CyclicZ "r mod m".
GroupElement parse_element(const GroupDescriptor& g, std::string_view text);

/// Lexicographic order on the canonical text form.
bool canonical_less(const GroupElement& x, const GroupElement& y);

/// Sorts in canonical order, removing duplicates.
void sort_canonical(std::vector<GroupElement>& xs);

void require_same_group(const GroupElement& x, const GroupElement& y);

} // namespace algrec

template <> struct std::hash<algrec::GroupElement> {
  std::size_t operator()(const algrec::GroupElement& g) const { return g.hash(); }
};
