#pragma once

#include "algrec/closure.hpp"
#include "algrec/numeric.hpp"
#include "algrec/walk.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace algrec {

// ---- prefix branching --------------------------------------------------------

/// counts[j] = number of distinct length-j prefixes among X_1..X_N, j >= 1;
/// counts[0] is 1 for a nonempty trace.
struct PrefixStats {
  int rank = 0;
  std::size_t trace_length = 0;
  std::vector<std::size_t> counts;
  std::size_t j0 = 64;

  std::size_t max_depth() const { return counts.empty() ? 0 : counts.size() - 1; }
};

/// Builds a prefix trie over the reduced words of the walk positions.
PrefixStats prefix_counts(const WalkTrace& trace);

struct LogBoundResult {
  bool holds = true;
  std::optional<std::size_t> first_violation;
};

/// V_j <= log2(j) for every j0 < j <= max depth (real-valued comparison).
LogBoundResult log_bound_check(const PrefixStats& stats, std::size_t j0);

/// Smallest j0 for which log_bound_check passes, i.e. the deepest violation
/// (0 when there is none).
std::size_t smallest_passing_threshold(const PrefixStats& stats);

// ---- reflected biased walk -------------------------------------------------

/// 2d / ((2d)^2 - 2d + 1), the closed form quoted for the level return
/// probability of the reflected walk.
Rational return_probability(int d);

/// p == 1/(2d) + (1/(2d)) ((2d-1)/(2d)) p, checked exactly.
bool satisfies_return_equation(int d, const Rational& p);

/// Probability that the reflected walk, started at level j >= 1, comes back to
/// j: 1/(2d) via a down-step (the upward drift brings it back surely) plus
/// ((2d-1)/(2d)) * 1/(2d-1) via an up-step. Equals 1/d.
Rational level_return_probability(int d);

struct ReflectedWalkStats {
  int rank = 0;
  std::size_t steps = 0;
  std::vector<std::size_t> visits; ///< visits[j]: time steps spent at level j, start included
  std::size_t settled_top = 0;     ///< levels 1..settled_top are far enough below the end to be final
  std::size_t departures = 0;      ///< visits to settled levels (each is an excursion start)
  std::size_t returns = 0;         ///< excursions that came back to their level
  double return_frequency = 0;     ///< returns / departures
  double mean_visits = 0;          ///< mean V_j over settled levels
  double variance_visits = 0;
  double fitted_p = 0;             ///< geometric fit 1 - 1/mean
  std::vector<std::size_t> visit_histogram; ///< number of settled levels with V_j = k
  bool never_negative = true;

  /// Mean of V_j over lo <= j <= hi, restricted to settled levels.
  double mean_visits_between(std::size_t lo, std::size_t hi) const;
};

/// Walk on {0, 1, 2, ...}: from 0 it moves to 1; otherwise up with probability
/// (2d-1)/(2d) and down with 1/(2d). Levels within `settle_margin` of the final
/// level are excluded from the return statistics (a later return from that far
/// has probability (2d-1)^-margin).
ReflectedWalkStats reflected_biased_walk(int d, std::size_t steps, std::uint64_t seed,
                                         std::size_t settle_margin = 32);

// ---- cancellation ------------------------------------------------------------

/// Number of letter pairs cancelled in the product x * y of reduced words.
std::size_t cancel(const GroupElement& x, const GroupElement& y);

/// Uniform reduced word of the given length: first letter uniform over 2d,
/// each later letter uniform over the 2d - 1 letters that do not cancel.
GroupElement random_reduced_word(const GroupDescriptor& g, std::size_t length, Rng& rng);

std::vector<GroupElement> random_word_pool(const GroupDescriptor& g, std::size_t size, std::size_t length,
                                           std::uint64_t seed);

struct CancellationRow {
  std::size_t length = 0;      ///< s = |X|
  std::size_t trials = 0;
  std::size_t exceedances = 0; ///< trials with cancel(X, w) > log2 s
  double empirical = 0;        ///< exceedances / trials
  double bound = 0;            ///< (2d-1)^(-log2 s)
  std::size_t max_cancel = 0;
};

struct CancellationSample {
  std::size_t length;
  std::size_t cancelled;
};

struct CancellationResult {
  int rank = 0;
  std::vector<CancellationRow> rows;
  std::vector<CancellationSample> samples; ///< kept only when requested
};

/// For each length s, draws `trials` uniform reduced words X of length s and a
/// word w uniformly from the pool, and tabulates how often cancel(X, w) > log2 s.
CancellationResult cancellation_experiment(int d, std::span<const std::size_t> lengths, std::size_t trials,
                                           const std::vector<GroupElement>& pool, std::uint64_t seed,
                                           bool keep_samples = false);

// ---- sphere growth of a closure ------------------------------------------------

struct GrowthProfile {
  std::vector<std::size_t> counts; ///< closure elements of word length exactly r
  double slope = 0;                ///< least-squares slope of log2(count) against r, r >= 1
  double ambient_slope = 0;        ///< log2(2d - 1)
  bool below_four_power = false;   ///< slope < 2
};

GrowthProfile sphere_growth_profile(const ClosureResult& c);

// ---- CSV ---------------------------------------------------------------------

std::string prefix_csv(const PrefixStats& s, const std::vector<std::string>& extra_header = {});
std::string cancellation_csv(const CancellationResult& r, const std::vector<std::string>& extra_header = {});
std::string growth_csv(const GrowthProfile& g, const std::vector<std::string>& extra_header = {});

} // namespace algrec
