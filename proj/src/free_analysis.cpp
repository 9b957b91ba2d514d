#include "algrec/free_analysis.hpp"

#include "algrec/word_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace algrec {

namespace {

void require_free(const GroupDescriptor& g, const char* what) {
  if (g.kind() != GroupKind::Free)
    throw DescriptorMismatch(std::string(what) + " needs a free group, got " + g.to_string());
}

/// Trie over letters with parent links, so consecutive walk positions can be
/// inserted by moving from the previous position's node.
class PrefixTrie {
public:
  PrefixTrie() { nodes_.push_back({0, 0, {}}); }

  std::size_t parent(std::size_t node) const { return nodes_[node].parent; }

  std::size_t child(std::size_t node, Letter s) {
    for (const auto& [letter, next] : nodes_[node].children)
      if (letter == s) return next;
    const std::size_t depth = nodes_[node].depth + 1;
    nodes_.push_back({node, depth, {}});
    nodes_[node].children.emplace_back(s, nodes_.size() - 1);
    if (per_depth_.size() <= depth) per_depth_.resize(depth + 1, 0);
    ++per_depth_[depth];
    return nodes_.size() - 1;
  }

  const std::vector<std::size_t>& per_depth() const { return per_depth_; }

private:
  struct Node {
    std::size_t parent;
    std::size_t depth;
    std::vector<std::pair<Letter, std::size_t>> children;
  };
  std::vector<Node> nodes_;
  std::vector<std::size_t> per_depth_{1};
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

} // namespace

PrefixStats prefix_counts(const WalkTrace& trace) {
  require_free(trace.group, "prefix_counts");
  PrefixStats stats;
  stats.rank = trace.group.rank();
  stats.trace_length = trace.size();

  PrefixTrie trie;
  std::size_t node = 0;
  std::span<const Letter> prev;
  for (const auto& x : trace.positions) {
    const auto& w = x.as_word().letters;
    const auto common = static_cast<std::size_t>(
        std::mismatch(prev.begin(), prev.end(), w.begin(), w.end()).first - prev.begin());
    for (std::size_t k = prev.size(); k > common; --k) node = trie.parent(node);
    for (std::size_t k = common; k < w.size(); ++k) node = trie.child(node, w[k]);
    prev = w;
  }
  stats.counts = trie.per_depth();
  if (trace.size() == 0) stats.counts = {};
  return stats;
}

LogBoundResult log_bound_check(const PrefixStats& stats, std::size_t j0) {
  LogBoundResult r;
  for (std::size_t j = j0 + 1; j <= stats.max_depth(); ++j) {
    if (static_cast<double>(stats.counts[j]) > std::log2(static_cast<double>(j))) {
      r.holds = false;
      r.first_violation = j;
      break;
    }
  }
  return r;
}

std::size_t smallest_passing_threshold(const PrefixStats& stats) {
  std::size_t last = 0;
  for (std::size_t j = 1; j <= stats.max_depth(); ++j)
    if (static_cast<double>(stats.counts[j]) > std::log2(static_cast<double>(j))) last = j;
  return last;
}

Rational return_probability(int d) {
  if (d < 1) throw std::invalid_argument("return_probability needs d >= 1");
  const long long two_d = 2LL * d;
  return Rational(two_d, two_d * two_d - two_d + 1);
}

bool satisfies_return_equation(int d, const Rational& p) {
  const long long two_d = 2LL * d;
  const Rational step(1, two_d);
  return p == step + step * Rational(two_d - 1, two_d) * p;
}

Rational level_return_probability(int d) {
  if (d < 1) throw std::invalid_argument("level_return_probability needs d >= 1");
  const long long two_d = 2LL * d;
  if (d == 1) return Rational(1); // symmetric walk on the half-line is recurrent
  return Rational(1, two_d) + Rational(two_d - 1, two_d) * Rational(1, two_d - 1);
}

double ReflectedWalkStats::mean_visits_between(std::size_t lo, std::size_t hi) const {
  hi = std::min(hi, settled_top);
  lo = std::max<std::size_t>(lo, 1);
  if (lo > hi) return 0;
  double sum = 0;
  for (std::size_t j = lo; j <= hi; ++j) sum += static_cast<double>(visits[j]);
  return sum / static_cast<double>(hi - lo + 1);
}

ReflectedWalkStats reflected_biased_walk(int d, std::size_t steps, std::uint64_t seed, std::size_t settle_margin) {
  if (d < 1) throw std::invalid_argument("reflected_biased_walk needs d >= 1");
  ReflectedWalkStats s;
  s.rank = d;
  s.steps = steps;
  Rng rng(seed);
  const std::uint64_t two_d = 2ULL * static_cast<std::uint64_t>(d);
  // P(down) = 1/(2d): u < 2^64 / (2d)
  const std::uint64_t down_below = ~std::uint64_t{0} / two_d;

  std::int64_t level = 0;
  s.visits.assign(1, 1);
  for (std::size_t t = 0; t < steps; ++t) {
    if (level == 0)
      level = 1;
    else
      level += rng() < down_below ? -1 : 1;
    if (level < 0) s.never_negative = false;
    if (static_cast<std::size_t>(level) >= s.visits.size()) s.visits.resize(level + 1, 0);
    ++s.visits[level];
  }

  s.settled_top = static_cast<std::size_t>(level) > settle_margin ? static_cast<std::size_t>(level) - settle_margin : 0;
  double sum = 0, sum_sq = 0;
  for (std::size_t j = 1; j <= s.settled_top; ++j) {
    const std::size_t v = s.visits[j];
    s.departures += v;
    s.returns += v - 1;
    sum += static_cast<double>(v);
    sum_sq += static_cast<double>(v) * static_cast<double>(v);
    if (s.visit_histogram.size() <= v) s.visit_histogram.resize(v + 1, 0);
    ++s.visit_histogram[v];
  }
  if (s.settled_top > 0) {
    const double n = static_cast<double>(s.settled_top);
    s.mean_visits = sum / n;
    s.variance_visits = sum_sq / n - s.mean_visits * s.mean_visits;
    s.fitted_p = 1.0 - 1.0 / s.mean_visits;
  }
  if (s.departures > 0) s.return_frequency = static_cast<double>(s.returns) / static_cast<double>(s.departures);
  return s;
}

std::size_t cancel(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  require_free(x.group(), "cancel");
  return free_cancellation(x.as_word().letters, y.as_word().letters);
}

GroupElement random_reduced_word(const GroupDescriptor& g, std::size_t length, Rng& rng) {
  require_free(g, "random_reduced_word");
  const auto d = static_cast<std::uint64_t>(g.rank());
  std::vector<Letter> w;
  w.reserve(length);
  // Letters indexed 0..2d-1 as +1, -1, +2, -2, ...; modulo bias is below 2^-56.
  auto letter_of = [](std::uint64_t k) {
    const auto i = static_cast<int>(k / 2) + 1;
    return static_cast<Letter>(k % 2 == 0 ? i : -i);
  };
  for (std::size_t k = 0; k < length; ++k) {
    if (w.empty()) {
      w.push_back(letter_of(rng() % (2 * d)));
    } else {
      // index over the 2d letters with the inverse of the previous one removed
      const Letter forbidden = static_cast<Letter>(-w.back());
      const std::uint64_t f = 2 * static_cast<std::uint64_t>(std::abs(forbidden) - 1) + (forbidden < 0 ? 1 : 0);
      std::uint64_t idx = rng() % (2 * d - 1);
      if (idx >= f) ++idx;
      const Letter s = letter_of(idx);
      w.push_back(s);
    }
  }
  return GroupElement::word(g, std::move(w));
}

std::vector<GroupElement> random_word_pool(const GroupDescriptor& g, std::size_t size, std::size_t length,
                                           std::uint64_t seed) {
  Rng rng(seed);
  std::vector<GroupElement> pool;
  pool.reserve(size);
  for (std::size_t i = 0; i < size; ++i) pool.push_back(random_reduced_word(g, length, rng));
  return pool;
}

CancellationResult cancellation_experiment(int d, std::span<const std::size_t> lengths, std::size_t trials,
                                           const std::vector<GroupElement>& pool, std::uint64_t seed,
                                           bool keep_samples) {
  const auto g = GroupDescriptor::free(d);
  if (pool.empty()) throw std::invalid_argument("cancellation_experiment needs a nonempty pool");
  for (const auto& w : pool)
    if (!(w.group() == g)) throw DescriptorMismatch("pool word outside " + g.to_string());

  CancellationResult result;
  result.rank = d;
  Rng rng(seed);
  for (std::size_t s : lengths) {
    if (s < 1) throw std::invalid_argument("cancellation lengths must be positive");
    CancellationRow row;
    row.length = s;
    row.trials = trials;
    const double log_s = std::log2(static_cast<double>(s));
    row.bound = std::pow(static_cast<double>(2 * d - 1), -log_s);
    for (std::size_t t = 0; t < trials; ++t) {
      const GroupElement x = random_reduced_word(g, s, rng);
      const GroupElement& w = pool[rng() % pool.size()];
      const std::size_t c = cancel(x, w);
      row.max_cancel = std::max(row.max_cancel, c);
      if (static_cast<double>(c) > log_s) ++row.exceedances;
      if (keep_samples) result.samples.push_back({s, c});
    }
    row.empirical = trials ? static_cast<double>(row.exceedances) / static_cast<double>(trials) : 0.0;
    result.rows.push_back(row);
  }
  return result;
}

GrowthProfile sphere_growth_profile(const ClosureResult& c) {
  require_free(c.group, "sphere_growth_profile");
  GrowthProfile p;
  p.counts.assign(c.budget.radius + 1, 0);
  for (const auto& x : c.elements) ++p.counts[x.as_word().letters.size()];
  p.ambient_slope = std::log2(static_cast<double>(2 * c.group.rank() - 1));

  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t r = 1; r < p.counts.size(); ++r) {
    if (p.counts[r] == 0) continue;
    const double x = static_cast<double>(r), y = std::log2(static_cast<double>(p.counts[r]));
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  p.slope = (n >= 2 && denom != 0) ? (n * sxy - sx * sy) / denom : 0.0;
  p.below_four_power = p.slope < 2.0;
  return p;
}

std::string prefix_csv(const PrefixStats& s, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# prefix-counts d=" << s.rank << " N=" << s.trace_length << " j0=" << s.j0 << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  os << "j,V_j,log2_j\n";
  for (std::size_t j = 1; j <= s.max_depth(); ++j)
    os << j << ',' << s.counts[j] << ',' << fmt(std::log2(static_cast<double>(j))) << '\n';
  return os.str();
}

std::string cancellation_csv(const CancellationResult& r, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# cancellation d=" << r.rank << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  os << "s,trials,exceedances,empirical_exceedance,bound,max_cancel\n";
  for (const auto& row : r.rows)
    os << row.length << ',' << row.trials << ',' << row.exceedances << ',' << fmt(row.empirical) << ','
       << fmt(row.bound) << ',' << row.max_cancel << '\n';
  return os.str();
}

std::string growth_csv(const GrowthProfile& g, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# sphere-growth slope=" << fmt(g.slope) << " ambient_slope=" << fmt(g.ambient_slope)
     << " below_4^r=" << (g.below_four_power ? "true" : "false") << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  os << "r,count\n";
  for (std::size_t r = 0; r < g.counts.size(); ++r) os << r << ',' << g.counts[r] << '\n';
  return os.str();
}

} // namespace algrec
