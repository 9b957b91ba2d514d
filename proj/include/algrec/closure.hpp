#pragma once

#include "algrec/numeric.hpp"
#include "algrec/walk.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace algrec {

struct ClosureBudget {
  std::size_t radius = 6;           ///< word-length cap on retained elements
  std::size_t max_elements = 1'000'000;
  std::size_t max_products = 50'000'000;

  /// Throws std::invalid_argument if a field is zero or the radius is beyond
  /// what the group's word metric can certify.
  void validate(const GroupDescriptor& g) const;
};

/// Truncated semigroup closure. `elements` holds every retained element in
/// canonical order; all have word length <= budget.radius.
struct ClosureResult {
  GroupDescriptor group;
  ClosureBudget budget;
  std::vector<GroupElement> elements;
  std::unordered_set<GroupElement, ElementHash> index;
  bool exhausted = false;
  std::pair<std::size_t, std::size_t> generator_range{0, 0}; ///< 1-based walk indices (n, N)
  std::size_t products_performed = 0;

  bool has(const GroupElement& x) const { return index.count(x) > 0; }
};

/// Worklist saturation: seeds are the generators of word length <= radius;
/// each dequeued element is multiplied by every generator and by every
/// element dequeued before it, on both sides for non-abelian groups, keeping
/// new products within the radius. An exhausted result is therefore closed
/// under every product that stays inside the radius. Generators are visited
/// in canonical order and the worklist is FIFO, so the result is
/// deterministic. Running out of budget is reported through
/// `exhausted == false`, not as an error.
ClosureResult closure(std::vector<GroupElement> generators, const ClosureBudget& budget);

enum class Membership { Present, AbsentWithinBudget, Unknown };
std::string to_string(Membership m);

/// Present iff x was retained; AbsentWithinBudget iff it was not, lies within
/// the radius, and the closure is exhausted; Unknown otherwise.
Membership contains(const ClosureResult& c, const GroupElement& x);

/// |elements within radius r| / |ball(r)|. Requires r <= c.budget.radius.
Rational coverage_fraction(const ClosureResult& c, std::size_t r);

struct InverseWitnessEntry {
  std::size_t index; ///< 1-based walk index i
  Membership inverse;
  std::optional<std::size_t> word_length; ///< |X_i|, empty when beyond the metric cap
};

struct InverseWitnessReport {
  std::pair<std::size_t, std::size_t> range;
  std::vector<InverseWitnessEntry> entries;
  bool closure_exhausted = false;
  std::size_t present = 0;
  std::size_t within_radius = 0; ///< entries whose inverse has word length <= radius

  /// present / entries.size()
  double present_fraction() const;
  /// present / within_radius; the inverses beyond the radius can never be
  /// Present, so this is the statistic comparable across trace lengths.
  double present_fraction_within_radius() const;
};

/// Builds the closure of {X_n, ..., X_N} and reports the membership of each
/// X_i^-1 for i in [n, N]. n is 1-based.
InverseWitnessReport inverse_witness_report(const WalkTrace& trace, std::size_t n, const ClosureBudget& budget);
/// Same, reusing a closure already computed from the trace segment.
InverseWitnessReport inverse_witness_report(const WalkTrace& trace, const ClosureResult& c);

/// Closure of the walk segment X_n .. X_N (1-based, inclusive).
ClosureResult walk_closure(const WalkTrace& trace, std::size_t n, std::size_t last, const ClosureBudget& budget);

/// Header lines then the sorted canonical element list, one per line.
std::string closure_dump(const ClosureResult& c, const std::vector<std::string>& extra_header = {});
/// "i,state,word_length" rows.
std::string report_csv(const InverseWitnessReport& r, const std::vector<std::string>& extra_header = {});

} // namespace algrec
