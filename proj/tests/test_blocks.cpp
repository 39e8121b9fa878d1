#include <doctest.h>

#include "twoorbit/blocks.hpp"
#include "twoorbit/catalog.hpp"

using namespace twoorbit;

TEST_CASE("cyclic group of order 4 is imprimitive with one block system") {
  PermGroup C4 = cyclic(4);
  CHECK(!is_primitive(C4));
  auto systems = block_systems(C4);
  CHECK(systems.size() == 1);
  CHECK(systems.front().block_size == 2);
  CHECK(systems.front().blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("dihedral group on 6 points has the three minimal systems") {
  auto systems = block_systems(dihedral(6));
  CHECK(systems.size() == 2);  // block sizes 2 and 3
  std::multiset<int> sizes;
  for (const auto& s : systems) sizes.insert(s.block_size);
  CHECK(sizes == std::multiset<int>{2, 3});
}

TEST_CASE("symmetric and alternating groups are primitive") {
  CHECK(is_primitive(symmetric(5)));
  CHECK(is_primitive(alternating(5)));
  CHECK(is_primitive(parse_group_spec("PGL(2,5)").group));
}

TEST_CASE("minimal block closure from a seed pair") {
  PermGroup C6 = cyclic(6);
  BlockSystem b = minimal_block_closure(C6, {0, 3});
  CHECK(b.block_size == 2);
  CHECK(b.blocks.size() == 3);
  BlockSystem b2 = minimal_block_closure(C6, {0, 2});
  CHECK(b2.block_size == 3);
}

TEST_CASE("rank and subdegrees") {
  auto [r2, sub2] = rank_and_subdegrees(symmetric(5));
  CHECK(r2 == 2);
  CHECK(sub2 == std::vector<int>{1, 4});

  // Sym(5) on unordered 2-subsets of 5 points has rank 3
  auto s5_pairs = parse_group_spec("File(s5_2sets.grp)");
  auto [r3, sub3] = rank_and_subdegrees(s5_pairs.group);
  CHECK(r3 == 3);
  CHECK(sub3 == std::vector<int>{1, 3, 6});

  CHECK_THROWS(rank_and_subdegrees(PermGroup(4, {parse_cycles("(1,2)", 4)})));
}
