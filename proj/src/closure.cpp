#include "algrec/closure.hpp"

#include "algrec/word_metric.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace algrec {

void ClosureBudget::validate(const GroupDescriptor& g) const {
  if (radius == 0 || max_elements == 0 || max_products == 0)
    throw std::invalid_argument("closure budget fields must be positive");
  if (uses_bfs_metric(g) && radius > kMaxBfsRadius)
    throw std::invalid_argument("closure radius " + std::to_string(radius) + " exceeds the word-length cap " +
                                std::to_string(kMaxBfsRadius) + " for " + g.to_string());
}

namespace {

bool within(const GroupElement& x, std::size_t radius) {
  auto len = word_length(x, std::min(radius, kMaxBfsRadius));
  return len && *len <= radius;
}

} // namespace

ClosureResult closure(std::vector<GroupElement> generators, const ClosureBudget& budget) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  const GroupDescriptor g = generators.front().group();
  for (const auto& s : generators) require_same_group(generators.front(), s);
  budget.validate(g);
  sort_canonical(generators);

  ClosureResult result{g, budget, {}, {}, false, {0, 0}, 0};
  std::deque<GroupElement> queue;
  std::vector<GroupElement> order;
  bool stopped = false;

  auto offer = [&](GroupElement y) {
    if (!within(y, budget.radius) || result.index.count(y)) return;
    if (result.index.size() >= budget.max_elements) {
      stopped = true;
      return;
    }
    result.index.insert(y);
    order.push_back(y);
    queue.push_back(std::move(y));
  };

  for (const auto& s : generators) {
    offer(s);
    if (stopped) break;
  }

  // |xs| >= |s| - |x|, so a generator longer than twice the radius never
  // yields a retained product. Unknown lengths (beyond the BFS cap) are kept.
  std::vector<GroupElement> active;
  for (const auto& s : generators) {
    const auto len = word_length(s, std::min(2 * budget.radius, kMaxBfsRadius));
    if (!len && 2 * budget.radius <= kMaxBfsRadius) continue;
    if (len && *len > 2 * budget.radius) continue;
    active.push_back(s);
  }

  // Each dequeued x is multiplied by every generator and by every element
  // dequeued before it (and itself), on both sides for non-abelian groups.
  // Closing under retained products, not just generator steps, keeps the
  // result closed whenever a product of two retained elements lands inside
  // the radius even though every generator path to it leaves the ball.
  const bool two_sided = !g.is_abelian();
  std::vector<GroupElement> done;
  auto product = [&](const GroupElement& a, const GroupElement& b) {
    if (result.products_performed >= budget.max_products) {
      stopped = true;
      return;
    }
    ++result.products_performed;
    offer(multiply(a, b));
  };
  while (!stopped && !queue.empty()) {
    const GroupElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : active) {
      product(x, s);
      if (two_sided && !stopped) product(s, x);
      if (stopped) break;
    }
    for (std::size_t i = 0; i < done.size() && !stopped; ++i) {
      product(x, done[i]);
      if (two_sided && !stopped) product(done[i], x);
    }
    if (!stopped) product(x, x);
    if (stopped) break;
    done.push_back(x);
  }

  result.exhausted = !stopped && queue.empty();
  result.elements = std::move(order);
  sort_canonical(result.elements);
  return result;
}

std::string to_string(Membership m) {
  switch (m) {
  case Membership::Present: return "Present";
  case Membership::AbsentWithinBudget: return "AbsentWithinBudget";
  case Membership::Unknown: return "Unknown";
  }
  return {};
}

Membership contains(const ClosureResult& c, const GroupElement& x) {
  if (!(x.group() == c.group)) throw DescriptorMismatch("membership query in the wrong group");
  if (c.has(x)) return Membership::Present;
  if (c.exhausted && within(x, c.budget.radius)) return Membership::AbsentWithinBudget;
  return Membership::Unknown;
}

Rational coverage_fraction(const ClosureResult& c, std::size_t r) {
  if (r > c.budget.radius)
    throw std::invalid_argument("coverage radius " + std::to_string(r) + " exceeds closure radius " +
                                std::to_string(c.budget.radius));
  const auto target = ball(c.group, r);
  std::size_t hit = 0;
  for (const auto& x : target) hit += c.has(x) ? 1 : 0;
  return Rational(static_cast<long long>(hit), static_cast<long long>(target.size()));
}

double InverseWitnessReport::present_fraction() const {
  return entries.empty() ? 0.0 : static_cast<double>(present) / static_cast<double>(entries.size());
}

double InverseWitnessReport::present_fraction_within_radius() const {
  return within_radius == 0 ? 0.0 : static_cast<double>(present) / static_cast<double>(within_radius);
}

ClosureResult walk_closure(const WalkTrace& trace, std::size_t n, std::size_t last, const ClosureBudget& budget) {
  if (n < 1 || n > last || last > trace.size())
    throw std::invalid_argument("walk segment [" + std::to_string(n) + ", " + std::to_string(last) +
                                "] outside trace of length " + std::to_string(trace.size()));
  std::vector<GroupElement> gens(trace.positions.begin() + static_cast<std::ptrdiff_t>(n - 1),
                                 trace.positions.begin() + static_cast<std::ptrdiff_t>(last));
  ClosureResult c = closure(std::move(gens), budget);
  c.generator_range = {n, last};
  return c;
}

InverseWitnessReport inverse_witness_report(const WalkTrace& trace, const ClosureResult& c) {
  InverseWitnessReport report;
  report.range = c.generator_range;
  report.closure_exhausted = c.exhausted;
  for (std::size_t i = c.generator_range.first; i <= c.generator_range.second; ++i) {
    const GroupElement& x = trace.positions[i - 1];
    const GroupElement inv = invert(x);
    // BFS-metric lengths are only reported up to the closure radius.
    InverseWitnessEntry e{i, contains(c, inv), word_length(x, std::min(c.budget.radius, kMaxBfsRadius))};
    if (e.inverse == Membership::Present) ++report.present;
    if (within(inv, c.budget.radius)) ++report.within_radius;
    report.entries.push_back(std::move(e));
  }
  return report;
}

InverseWitnessReport inverse_witness_report(const WalkTrace& trace, std::size_t n, const ClosureBudget& budget) {
  if (trace.size() == 0) throw std::invalid_argument("inverse_witness_report on an empty trace");
  return inverse_witness_report(trace, walk_closure(trace, n, trace.size(), budget));
}

std::string closure_dump(const ClosureResult& c, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# closure group=" << c.group.to_string() << " generators=" << c.generator_range.first << ".."
     << c.generator_range.second << " radius=" << c.budget.radius << " max_elements=" << c.budget.max_elements
     << " max_products=" << c.budget.max_products << " exhausted=" << (c.exhausted ? "true" : "false")
     << " elements=" << c.elements.size() << " products=" << c.products_performed << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  for (const auto& x : c.elements) os << to_string(x) << '\n';
  return os.str();
}

std::string report_csv(const InverseWitnessReport& r, const std::vector<std::string>& extra_header) {
  std::ostringstream os;
  os << "# inverse-witness range=" << r.range.first << ".." << r.range.second
     << " exhausted=" << (r.closure_exhausted ? "true" : "false") << " present=" << r.present
     << " within_radius=" << r.within_radius << '\n';
  for (const auto& line : extra_header) os << "# " << line << '\n';
  os << "i,state,word_length\n";
  for (const auto& e : r.entries)
    os << e.index << ',' << to_string(e.inverse) << ',' << (e.word_length ? std::to_string(*e.word_length) : "") << '\n';
  return os.str();
}

} // namespace algrec
