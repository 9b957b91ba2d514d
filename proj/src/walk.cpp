#include "algrec/walk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algrec {

StepSampler::StepSampler(const StepMeasure& m) : measure_(&m) {
  const Integer scale = Integer(1) << 64;
  Rational cumulative = 0;
  const auto& atoms = m.atoms();
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    cumulative += atoms[i].weight;
    Integer t = boost::multiprecision::numerator(cumulative) * scale / boost::multiprecision::denominator(cumulative);
    thresholds_.push_back(t >= scale ? ~std::uint64_t{0} : static_cast<std::uint64_t>(t));
  }
}

std::size_t StepSampler::draw(Rng& rng) const {
  const std::uint64_t u = rng();
  return static_cast<std::size_t>(std::upper_bound(thresholds_.begin(), thresholds_.end(), u) - thresholds_.begin());
}

WalkTrace generate_walk(const StepMeasure& m, std::size_t n_steps, std::uint64_t seed) {
  WalkTrace t{m.group(), seed, {}, {}};
  t.increments.reserve(n_steps);
  t.positions.reserve(n_steps);
  StepSampler sampler(m);
  Rng rng(seed);
  GroupElement x = identity(m.group());
  for (std::size_t n = 0; n < n_steps; ++n) {
    const GroupElement& step = m.atoms()[sampler.draw(rng)].element;
    x = multiply(x, step);
    t.increments.push_back(step);
    t.positions.push_back(x);
  }
  return t;
}

WalkTrace trace_from_increments(const GroupDescriptor& g, std::uint64_t seed, std::vector<GroupElement> increments) {
  WalkTrace t{g, seed, std::move(increments), {}};
  GroupElement x = identity(g);
  for (const auto& z : t.increments) {
    x = multiply(x, z);
    t.positions.push_back(x);
  }
  return t;
}

std::string serialize_trace(const WalkTrace& t, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# trace group=" << t.group.to_string() << " seed=" << t.seed << " steps=" << t.increments.size() << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  for (const auto& z : t.increments) os << to_string(z) << '\n';
  return os.str();
}

WalkTrace parse_trace(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || !line.starts_with("# trace "))
    throw ParseError("trace must start with '# trace group=... seed=... steps=...'");
  std::istringstream header(line.substr(8));
  std::string field, group_text, seed_text, steps_text;
  while (header >> field) {
    if (field.starts_with("group=")) group_text = field.substr(6);
    else if (field.starts_with("seed=")) seed_text = field.substr(5);
    else if (field.starts_with("steps=")) steps_text = field.substr(6);
  }
  if (group_text.empty() || seed_text.empty() || steps_text.empty())
    throw ParseError("trace header is missing group, seed or steps");
  const auto g = GroupDescriptor::parse(group_text);
  std::vector<GroupElement> increments;
  while (std::getline(is, line)) {
    if (line.starts_with("#")) continue;
    increments.push_back(parse_element(g, line));
  }
  if (increments.size() != std::stoull(steps_text))
    throw ParseError("trace header announces " + steps_text + " steps, found " + std::to_string(increments.size()));
  return trace_from_increments(g, std::stoull(seed_text), std::move(increments));
}

std::string positions_csv(const WalkTrace& t, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# group=" << t.group.to_string() << " seed=" << t.seed << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  os << "n,position\n";
  for (std::size_t n = 0; n < t.positions.size(); ++n) os << n + 1 << ",\"" << to_string(t.positions[n]) << "\"\n";
  return os.str();
}

} // namespace algrec
