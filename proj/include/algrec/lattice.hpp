#pragma once

#include "algrec/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace algrec {

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<Integer>>;

// ---- exact matrix helpers -------------------------------------------------

IntMatrix to_matrix(const std::vector<IntVec>& rows);
IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);
std::size_t matrix_rank(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  std::vector<Integer> diagonal; ///< min(rows, cols) entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Checks the decomposition by exact multiplication: U*A*V == D, |det U| =
/// |det V| = 1, D diagonal with nonnegative entries forming a divisibility chain.
bool verify_smith(const IntMatrix& a, const SmithDecomposition& s);

// ---- subgroup generated by a set of vectors --------------------------------

struct LatticeBasisReport {
  std::vector<IntVec> vectors;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::optional<Integer> index; ///< empty means infinite index (rank < dimension)
  std::vector<Integer> smith_diagonal;
};

LatticeBasisReport subgroup_index(const std::vector<IntVec>& vectors);

// ---- cone witnesses --------------------------------------------------------

/// <normal, v> >= 0 for every input vector, normal a nonzero primitive integer vector.
struct HalfSpace {
  std::vector<Integer> normal;
};

/// sum t_i x_i = 0 with every t_i > 0 and the points spanning R^d; the first d
/// points are linearly independent. Coefficients are primitive integers.
struct ZeroInHull {
  std::vector<IntVec> points;
  std::vector<Integer> coefficients;
};

using ConeWitness = std::variant<HalfSpace, ZeroInHull>;

/// Either a closed half-space containing every vector, or a certificate that
/// the vectors positively span R^d. Certificates are checked before return.
/// Desk scale: dimension <= 6, at most 64 vectors.
ConeWitness zero_in_convex_hull(const std::vector<IntVec>& vectors);

bool verify_witness(const ConeWitness& w, const std::vector<IntVec>& vectors);

// ---- subsemigroups of Z^d ---------------------------------------------------

struct FullLattice {};
struct InProperSubgroup {
  std::optional<Integer> index; ///< empty: rank deficit
  std::size_t rank = 0;
};
struct InHalfSpace {
  std::vector<Integer> normal;
};

using SubsemigroupClass = std::variant<FullLattice, InProperSubgroup, InHalfSpace>;

/// The semigroup generated by the vectors is all of Z^d, lies in a proper
/// subgroup, or lies in a closed half-space. When the vectors positively span
/// R^d the semigroup equals the subgroup they generate, so the answer is exact.
/// Otherwise the answer is InHalfSpace, except for a rank-deficient set with 0
/// in its hull (say {(1,0),(-1,0)}), which is InProperSubgroup with no index.
SubsemigroupClass classify_subsemigroup(const std::vector<IntVec>& generators);

std::string to_string(const SubsemigroupClass& c);
std::string to_string(const ConeWitness& w);
std::string format_vector(const std::vector<Integer>& v);

/// Whitespace-separated integer rows, one vector per line; blank lines and
/// '#' comments are skipped. All rows must have the same length.
std::vector<IntVec> parse_integer_rows(std::string_view text);

// ---- exact linear programming --------------------------------------------

/// A basic solution u >= 0 of A u = b, or nullopt if none exists. Phase-one
/// simplex over rationals with Bland's rule.
std::optional<std::vector<Rational>> nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                          const std::vector<Rational>& b);

} // namespace algrec
