#pragma once

#include "algrec/group.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace algrec {

/// Default radius up to which Heisenberg and LamplighterZ word lengths are
/// computed exactly by breadth-first search.
inline constexpr std::size_t kDefaultWordLengthCap = 12;
/// Largest radius the breadth-first cache will ever be grown to.
inline constexpr std::size_t kMaxBfsRadius = 16;

/// Word length with respect to standard_generators(). ZPower, Free and CyclicZ
/// use closed forms (l1 norm, reduced length, min(r, m - r)) and ignore the cap.
/// For Heisenberg and LamplighterZ the value comes from a shared BFS cache and
/// std::nullopt means "exceeds cap".
std::optional<std::size_t> word_length(const GroupElement& x, std::size_t cap = kDefaultWordLengthCap);

/// True when the group's word length is computed from the BFS cache.
bool uses_bfs_metric(const GroupDescriptor& g);

/// All elements of word length <= radius, in canonical order. Throws
/// std::invalid_argument if a BFS group is asked beyond kMaxBfsRadius.
std::vector<GroupElement> ball(const GroupDescriptor& g, std::size_t radius);

/// Number of elements at each exact word length 0..radius.
std::vector<std::size_t> sphere_sizes(const GroupDescriptor& g, std::size_t radius);

} // namespace algrec
