#include "algrec/measure.hpp"

#include "algrec/word_metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace algrec {

StepMeasure::StepMeasure(GroupDescriptor g, std::vector<Atom> atoms) : group_(g) {
  if (atoms.empty()) throw std::invalid_argument("measure needs at least one atom");
  std::map<std::string, Atom> merged;
  Rational total = 0;
  for (auto& a : atoms) {
    if (!(a.element.group() == g))
      throw DescriptorMismatch("atom " + to_string(a.element) + " is not in " + g.to_string());
    if (a.weight <= 0) throw std::invalid_argument("atom " + to_string(a.element) + " has nonpositive weight");
    total += a.weight;
    auto key = to_string(a.element);
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(std::move(key), std::move(a));
    else
      it->second.weight += a.weight;
  }
  if (total != 1) throw std::invalid_argument("measure weights sum to " + algrec::to_string(total) + ", not 1");
  atoms_.reserve(merged.size());
  for (auto& [_, a] : merged) atoms_.push_back(std::move(a));
}

StepMeasure uniform_standard_measure(const GroupDescriptor& g) {
  auto gens = standard_generators(g);
  const Rational w(1, static_cast<long long>(gens.size()));
  std::vector<Atom> atoms;
  for (auto& s : gens) atoms.push_back({std::move(s), w});
  return StepMeasure(g, std::move(atoms));
}

StepMeasure heavy_tail_measure_z2(double alpha, int cutoff, const Rational& minor_weight) {
  if (!(alpha > 1)) throw std::invalid_argument("heavy-tail alpha must exceed 1");
  if (cutoff < 1) throw std::invalid_argument("heavy-tail cutoff must be positive");
  if (minor_weight <= 0 || minor_weight >= 1) throw std::invalid_argument("minor_weight must lie in (0, 1)");

  const bool integral = alpha == std::floor(alpha) && alpha <= 64;
  std::vector<Rational> raw;
  Rational raw_total = 0;
  for (int k = 1; k <= cutoff; ++k) {
    Rational w = integral ? Rational(Integer(1), boost::multiprecision::pow(Integer(k), static_cast<unsigned>(alpha)))
                          : rational_from_double(std::pow(static_cast<double>(k), -alpha));
    raw_total += w;
    raw.push_back(std::move(w));
  }

  const auto g = GroupDescriptor::z_power(2);
  const Rational major = 1 - minor_weight;
  std::vector<Atom> atoms;
  for (int k = 1; k <= cutoff; ++k) {
    const Rational half = raw[k - 1] / raw_total * major / 2;
    atoms.push_back({GroupElement::lattice(g, {k, k}), half});
    atoms.push_back({GroupElement::lattice(g, {-k, -k}), half});
  }
  atoms.push_back({GroupElement::lattice(g, {1, -1}), minor_weight / 2});
  atoms.push_back({GroupElement::lattice(g, {-1, 1}), minor_weight / 2});
  return StepMeasure(g, std::move(atoms));
}

SymmetryReport validate_symmetric(const StepMeasure& m, std::size_t ball_radius) {
  SymmetryReport report;
  report.ball_radius = ball_radius;

  std::unordered_map<GroupElement, Rational, ElementHash> weight;
  for (const auto& a : m.atoms()) weight.emplace(a.element, a.weight);
  report.symmetric = true;
  for (const auto& a : m.atoms()) {
    // report the heavier side of the first mismatched pair
    auto it = weight.find(invert(a.element));
    if (it == weight.end() || it->second < a.weight) {
      report.symmetric = false;
      report.offending_atom = to_string(a.element);
      break;
    }
  }

  // Explore the subgroup generated by the support within a radius large
  // enough for one atom to step out of the ball and back.
  const GroupDescriptor& g = m.group();
  std::size_t longest = 0;
  std::vector<GroupElement> steps;
  for (const auto& a : m.atoms()) {
    steps.push_back(a.element);
    steps.push_back(invert(a.element));
    longest = std::max(longest, word_length(a.element, kMaxBfsRadius).value_or(kMaxBfsRadius));
  }
  std::size_t explore = ball_radius + 2 * longest;
  if (uses_bfs_metric(g)) explore = std::min(explore, kMaxBfsRadius);
  if (explore < ball_radius) explore = ball_radius;

  std::unordered_set<GroupElement, ElementHash> seen{identity(g)};
  std::vector<GroupElement> frontier{identity(g)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : steps) {
        GroupElement y = multiply(x, s);
        auto len = word_length(y, explore);
        if (len && *len <= explore && seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }

  const auto target = ball(g, ball_radius);
  report.ball_size = target.size();
  report.ball_reached = static_cast<std::size_t>(
      std::count_if(target.begin(), target.end(), [&](const GroupElement& x) { return seen.count(x) > 0; }));
  report.ball_covered = report.ball_reached == report.ball_size;
  return report;
}

} // namespace algrec
