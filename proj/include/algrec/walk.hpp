#pragma once

#include "algrec/measure.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace algrec {

/// Engine used by every sampler in the library. mt19937_64 output is fixed
/// by the C++ standard, and only raw 64-bit outputs are consumed, so traces
/// are identical across platforms.
using Rng = std::mt19937_64;

/// Inverse-CDF sampler over the measure's atom order. Cumulative weights are
/// rounded down to multiples of 2^-64 once at construction; this is the only
/// lossy step between the exact measure and the sampled walk.
class StepSampler {
public:
  explicit StepSampler(const StepMeasure& m);

  std::size_t draw(Rng& rng) const;
  const StepMeasure& measure() const { return *measure_; }

private:
  const StepMeasure* measure_;
  std::vector<std::uint64_t> thresholds_; ///< one per atom except the last
};

struct WalkTrace {
  GroupDescriptor group;
  std::uint64_t seed = 0;
  std::vector<GroupElement> increments; ///< zeta_1 .. zeta_N
  std::vector<GroupElement> positions;  ///< X_1 .. X_N, X_n = zeta_1 ... zeta_n

  std::size_t size() const { return positions.size(); }
};

WalkTrace generate_walk(const StepMeasure& m, std::size_t n_steps, std::uint64_t seed);

/// Rebuilds positions from increments.
WalkTrace trace_from_increments(const GroupDescriptor& g, std::uint64_t seed,
                                std::vector<GroupElement> increments);

/// Header line "# trace group=<G> seed=<S> steps=<N>", any extra '#'-lines,
/// then one increment per line in canonical text form.
std::string serialize_trace(const WalkTrace& t, const std::vector<std::string>& extra_header = {});
WalkTrace parse_trace(std::string_view text);

/// "n,position" rows for plotting, preceded by '#' metadata lines.
std::string positions_csv(const WalkTrace& t, const std::vector<std::string>& extra_header = {});

} // namespace algrec
