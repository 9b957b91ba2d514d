#pragma once

#include "algrec/group.hpp"
#include "algrec/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace algrec {

struct Atom {
  GroupElement element;
  Rational weight;
};

/// Finite-support probability measure with exact rational weights. Atoms are
/// kept in canonical element order with duplicates merged; weights must be
/// positive and sum to one. Symmetry is not enforced here, see validate_symmetric.
class StepMeasure {
public:
  StepMeasure(GroupDescriptor g, std::vector<Atom> atoms);

  const GroupDescriptor& group() const { return group_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

private:
  GroupDescriptor group_;
  std::vector<Atom> atoms_;
};

/// Uniform over standard_generators(g).
StepMeasure uniform_standard_measure(const GroupDescriptor& g);

/// Measure on Z^2 with atoms +-(k, k), k = 1..cutoff, weighted proportional to
/// k^-alpha with total mass 1 - minor_weight, plus +-(1, -1) sharing minor_weight.
/// Integral alpha gives exact weights 1/k^alpha; otherwise k^-alpha is taken as
/// the exact value of its double approximation.
StepMeasure heavy_tail_measure_z2(double alpha, int cutoff, const Rational& minor_weight);

struct SymmetryReport {
  bool symmetric = false;
  std::optional<std::string> offending_atom; ///< first atom (canonical order) outweighing its inverse
  std::size_t ball_radius = 0;
  std::size_t ball_size = 0;
  std::size_t ball_reached = 0; ///< ball elements found in the generated subgroup
  bool ball_covered = false;

  bool ok() const { return symmetric && ball_covered; }
};

/// Checks mu(g) = mu(g^-1) exactly, then searches the subgroup generated by
/// the support for every element of the radius ball. The search is bounded, so
/// a false ball_covered means "not covered within the explored radius".
SymmetryReport validate_symmetric(const StepMeasure& m, std::size_t ball_radius);

} // namespace algrec
