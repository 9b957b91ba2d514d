#pragma once

#include "algrec/closure.hpp"
#include "algrec/measure.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace algrec {

/// A configuration problem, tagged with the "section.key" it came from.
class ConfigError : public std::invalid_argument {
public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument("config error at " + field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

enum class MeasureType { Standard, HeavyTail, Atoms };

struct MeasureSpec {
  MeasureType type = MeasureType::Standard;
  double alpha = 2.0;          // heavy-tail exponent
  int cutoff = 8;              // heavy-tail support size
  Rational minor_weight{1, 2}; // heavy-tail mass on +-(1,-1)
  std::vector<std::pair<std::string, Rational>> atoms; // canonical element text, weight
};

struct FreeSpec {
  std::size_t j0 = 64;
  std::vector<std::size_t> lengths{16, 64, 256};
  std::size_t trials = 100000;
  std::size_t pool_size = 64;
  std::size_t pool_length = 256;
  std::size_t reflected_steps = 120000;
  std::size_t settle_margin = 32;
  std::size_t growth_radius = 6;
};

struct IdentitySpec {
  int k_range = 3;   // k_i in [-k_range, k_range]
  int nm_max = 10;   // n, m in [1, nm_max]
  int z_max = 100;   // x in [1, z_max], y in [-z_max, -1]
  int m_max = 24;    // cyclic moduli 1..m_max
};

struct ScenarioConfig {
  GroupDescriptor group = GroupDescriptor::z_power(1);
  MeasureSpec measure;
  std::size_t steps = 200;
  std::size_t tail = 1; // first walk index fed to the closure
  ClosureBudget budget;
  std::size_t coverage_radius = 5;
  bool require_exhausted = false;
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::size_t> checkpoints; // prefix lengths for ar-estimate; empty means {steps}
  std::string out = "out";
  FreeSpec free;
  IdentitySpec identities;
};

/// Parses INI-style text: "[section]" headers, "key = value" lines, '#' or
/// ';' comment lines. Unknown sections or keys are errors. The result is
/// validated (see validate_config).
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// Checks cross-field constraints and delegates to the owning modules
/// (group descriptor, measure, closure budget). Throws ConfigError.
void validate_config(const ScenarioConfig& c);

/// Every field, fixed order, normalized values. parse_config(canonical_text(c))
/// reproduces c.
std::string canonical_text(const ScenarioConfig& c);

/// FNV-1a 64 as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// fnv1a_hex of canonical_text with the output directory left out, so runs
/// written to different directories carry the same hash.
std::string config_hash(const ScenarioConfig& c);

StepMeasure build_measure(const ScenarioConfig& c);

std::string to_string(MeasureType t);

} // namespace algrec
