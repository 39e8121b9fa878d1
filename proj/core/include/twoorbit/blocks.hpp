#pragma once

#include <vector>

#include "twoorbit/group.hpp"

namespace twoorbit {

/// A group-invariant partition of the points into equal-size cells.
struct BlockSystem {
  int block_size = 0;
  std::vector<std::vector<int>> blocks;  // each sorted; ordered by first point

  bool operator==(const BlockSystem&) const = default;
};

/// Smallest invariant partition in which all points of `seed` share a block
/// (union-find closure under the generators). Requires a transitive group.
BlockSystem minimal_block_closure(const PermGroup& G, const std::vector<int>& seed);

/// All minimal nontrivial block systems, one per closure of a pair {0, i},
/// deduplicated. Empty iff G is primitive. Throws on intransitive input.
std::vector<BlockSystem> block_systems(const PermGroup& G);

bool is_primitive(const PermGroup& G);

/// Number of point-stabilizer orbits and their sizes (sorted increasing;
/// they sum to the degree). Throws on intransitive input.
std::pair<int, std::vector<int>> rank_and_subdegrees(const PermGroup& G);

}  // namespace twoorbit
