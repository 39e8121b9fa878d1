#include "twoorbit/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twoorbit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns the representative absorbed (or -1 if already merged)
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

BlockSystem partition_of(UnionFind& uf, int n) {
  std::map<int, std::vector<int>> cells;
  for (int i = 0; i < n; ++i) cells[uf.find(i)].push_back(i);
  BlockSystem sys;
  for (auto& [root, cell] : cells) sys.blocks.push_back(std::move(cell));
  std::sort(sys.blocks.begin(), sys.blocks.end());
  sys.block_size = static_cast<int>(sys.blocks[0].size());
  return sys;
}

}  // namespace

BlockSystem minimal_block_closure(const PermGroup& G, const std::vector<int>& seed) {
  if (!G.is_transitive())
    throw std::invalid_argument("block systems require a transitive group");
  const int n = G.degree();
  UnionFind uf(n);
  // Atkinson-style closure: whenever two points are in one cell, so are
  // their images under every generator; process merges until stable.
  std::vector<std::pair<int, int>> queue;
  for (size_t i = 1; i < seed.size(); ++i)
    if (uf.unite(seed[0], seed[i])) queue.emplace_back(seed[0], seed[i]);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const auto& g : G.generators()) {
      int ga = g(a), gb = g(b);
      if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
    }
  }
  return partition_of(uf, n);
}

std::vector<BlockSystem> block_systems(const PermGroup& G) {
  const int n = G.degree();
  std::vector<BlockSystem> out;
  for (int i = 1; i < n; ++i) {
    BlockSystem sys = minimal_block_closure(G, {0, i});
    if (sys.block_size == n || sys.block_size == 1) continue;  // trivial
    if (std::find(out.begin(), out.end(), sys) == out.end())
      out.push_back(std::move(sys));
  }
  return out;
}

bool is_primitive(const PermGroup& G) { return block_systems(G).empty(); }

std::pair<int, std::vector<int>> rank_and_subdegrees(const PermGroup& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("rank requires a transitive group");
  PermGroup stab = G.point_stabilizer(0);
  auto orbits = stab.orbits();
  std::vector<int> sizes;
  for (const auto& o : orbits) sizes.push_back(static_cast<int>(o.size()));
  std::sort(sizes.begin(), sizes.end());
  return {static_cast<int>(orbits.size()), sizes};
}

}  // namespace twoorbit
