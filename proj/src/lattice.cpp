#include "algrec/lattice.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace algrec {

namespace {

// 0 = sum u_i x_i with u >= 0, sum u_i = 1. Covers the case where the
// vectors do not span and no spanning certificate exists.
bool zero_in_hull(const std::vector<IntVec>& vectors) {
  const std::size_t d = vectors.front().size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = Rational(static_cast<long long>(vectors[j][i]));
    a[d][j] = 1;
  }
  std::vector<Rational> b(d + 1);
  b[d] = 1;
  return nonnegative_solution(a, b).has_value();
}

} // namespace

SubsemigroupClass classify_subsemigroup(const std::vector<IntVec>& generators) {
  const ConeWitness w = zero_in_convex_hull(generators);
  const LatticeBasisReport r = subgroup_index(generators);
  // 0 on the boundary of a full-rank hull still leaves the semigroup in a
  // half-space, so only the rank-deficient case falls through to the subgroup.
  if (const auto* h = std::get_if<HalfSpace>(&w))
    if (r.index || !zero_in_hull(generators)) return InHalfSpace{h->normal};
  if (!r.index) return InProperSubgroup{std::nullopt, r.rank};
  if (*r.index != 1) return InProperSubgroup{r.index, r.rank};
  return FullLattice{};
}

std::string format_vector(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + ")";
}

std::string to_string(const SubsemigroupClass& c) {
  if (std::holds_alternative<FullLattice>(c)) return "Full";
  if (const auto* p = std::get_if<InProperSubgroup>(&c)) {
    if (p->index) return "InProperSubgroup index " + p->index->str();
    return "InProperSubgroup rank " + std::to_string(p->rank);
  }
  return "InHalfSpace " + format_vector(std::get<InHalfSpace>(c).normal);
}

std::string to_string(const ConeWitness& w) {
  if (const auto* h = std::get_if<HalfSpace>(&w)) return "HalfSpace normal " + format_vector(h->normal);
  const auto& z = std::get<ZeroInHull>(w);
  std::string s = "ZeroInHull";
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    std::vector<Integer> p(z.points[i].begin(), z.points[i].end());
    s += " " + z.coefficients[i].str() + "*" + format_vector(p);
  }
  return s;
}

std::vector<IntVec> parse_integer_rows(std::string_view text) {
  std::vector<IntVec> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    IntVec row;
    while (ls >> tok) {
      std::int64_t v = 0;
      const char* begin = tok.data() + (tok[0] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(begin, tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(rows[0].size()) + " entries, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace algrec
