#include "algrec/word_metric.hpp"

#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace algrec {

namespace {

/// Breadth-first layers of the Cayley graph, grown on demand.
class BfsCache {
public:
  explicit BfsCache(GroupDescriptor g) : group_(g), generators_(standard_generators(g)) {
    GroupElement e = identity(g);
    distance_.emplace(e, 0);
    layers_.push_back({e});
  }

  std::optional<std::size_t> distance(const GroupElement& x, std::size_t cap) {
    ensure(cap);
    std::shared_lock lock(mutex_);
    auto it = distance_.find(x);
    if (it == distance_.end() || it->second > cap) return std::nullopt;
    return it->second;
  }

  std::vector<GroupElement> ball(std::size_t radius) {
    ensure(radius);
    std::shared_lock lock(mutex_);
    std::vector<GroupElement> out;
    for (std::size_t r = 0; r <= radius; ++r) out.insert(out.end(), layers_[r].begin(), layers_[r].end());
    return out;
  }

  std::vector<std::size_t> sphere_sizes(std::size_t radius) {
    ensure(radius);
    std::shared_lock lock(mutex_);
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r <= radius; ++r) out.push_back(layers_[r].size());
    return out;
  }

private:
  void ensure(std::size_t radius) {
    if (radius > kMaxBfsRadius)
      throw std::invalid_argument("word-length radius " + std::to_string(radius) + " exceeds BFS limit " +
                                  std::to_string(kMaxBfsRadius) + " for " + group_.to_string());
    {
      std::shared_lock lock(mutex_);
      if (layers_.size() > radius) return;
    }
    std::unique_lock lock(mutex_);
    while (layers_.size() <= radius) {
      const std::size_t next = layers_.size();
      std::vector<GroupElement> layer;
      for (const auto& x : layers_.back()) {
        for (const auto& s : generators_) {
          GroupElement y = multiply(x, s);
          if (distance_.emplace(y, next).second) layer.push_back(std::move(y));
        }
      }
      layers_.push_back(std::move(layer));
    }
  }

  GroupDescriptor group_;
  std::vector<GroupElement> generators_;
  std::shared_mutex mutex_;
  std::unordered_map<GroupElement, std::size_t, ElementHash> distance_;
  std::vector<std::vector<GroupElement>> layers_;
};

BfsCache& cache_for(const GroupDescriptor& g) {
  static BfsCache heisenberg(GroupDescriptor::heisenberg());
  static BfsCache lamplighter(GroupDescriptor::lamplighter_z());
  if (g.kind() == GroupKind::Heisenberg) return heisenberg;
  if (g.kind() == GroupKind::LamplighterZ) return lamplighter;
  throw std::logic_error("no BFS cache for " + g.to_string());
}

void lattice_ball(int d, std::int64_t budget, std::vector<std::int64_t>& prefix,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (static_cast<int>(prefix.size()) == d) {
    out.push_back(prefix);
    return;
  }
  for (std::int64_t v = -budget; v <= budget; ++v) {
    prefix.push_back(v);
    lattice_ball(d, budget - std::abs(v), prefix, out);
    prefix.pop_back();
  }
}

} // namespace

bool uses_bfs_metric(const GroupDescriptor& g) {
  return g.kind() == GroupKind::Heisenberg || g.kind() == GroupKind::LamplighterZ;
}

std::optional<std::size_t> word_length(const GroupElement& x, std::size_t cap) {
  switch (x.group().kind()) {
  case GroupKind::ZPower: {
    std::size_t n = 0;
    for (auto v : x.as_lattice().coords) n += static_cast<std::size_t>(std::llabs(v));
    return n;
  }
  case GroupKind::Free: return x.as_word().letters.size();
  case GroupKind::CyclicZ: {
    const std::int64_t r = x.as_residue().value;
    return static_cast<std::size_t>(std::min(r, x.group().modulus() - r));
  }
  case GroupKind::Heisenberg:
  case GroupKind::LamplighterZ: return cache_for(x.group()).distance(x, cap);
  }
  return std::nullopt;
}

std::vector<GroupElement> ball(const GroupDescriptor& g, std::size_t radius) {
  std::vector<GroupElement> out;
  switch (g.kind()) {
  case GroupKind::ZPower: {
    std::vector<std::vector<std::int64_t>> points;
    std::vector<std::int64_t> prefix;
    lattice_ball(g.rank(), static_cast<std::int64_t>(radius), prefix, points);
    for (auto& p : points) out.push_back(GroupElement::lattice(g, std::move(p)));
    break;
  }
  case GroupKind::Free: {
    out.push_back(identity(g));
    std::vector<GroupElement> frontier = out;
    const auto gens = standard_generators(g);
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<GroupElement> next;
      for (const auto& w : frontier)
        for (const auto& s : gens) {
          GroupElement y = multiply(w, s);
          if (y.as_word().letters.size() == r) next.push_back(std::move(y));
        }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    break;
  }
  case GroupKind::CyclicZ:
    for (std::int64_t r = 0; r < g.modulus(); ++r) {
      GroupElement x = GroupElement::residue(g, r);
      if (*word_length(x) <= radius) out.push_back(std::move(x));
    }
    break;
  case GroupKind::Heisenberg:
  case GroupKind::LamplighterZ: out = cache_for(g).ball(radius); break;
  }
  sort_canonical(out);
  return out;
}

std::vector<std::size_t> sphere_sizes(const GroupDescriptor& g, std::size_t radius) {
  if (uses_bfs_metric(g)) return cache_for(g).sphere_sizes(radius);
  std::vector<std::size_t> out(radius + 1, 0);
  for (const auto& x : ball(g, radius)) ++out[*word_length(x)];
  return out;
}

} // namespace algrec
