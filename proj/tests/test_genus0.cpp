#include <doctest.h>

#include <algorithm>

#include "twoorbit/catalog.hpp"
#include "twoorbit/genus0.hpp"

using namespace twoorbit;

TEST_CASE("tuple types") {
  std::vector<Permutation> tup{parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)};
  TupleType t = TupleType::of(tup);
  CHECK(t.orders == std::vector<int>{2, 4});
  CHECK(t.str() == "(2,4)");
}

TEST_CASE("genus from the index count") {
  // two inverse 3-cycles: genus 0 on 3 points
  CHECK(genus_of_tuple({parse_cycles("(1,2,3)", 3), parse_cycles("(1,3,2)", 3)}) == 0);
  // six transpositions with identity product: genus 1 on 3 points
  std::vector<Permutation> g1;
  for (const char* s : {"(1,2)", "(1,2)", "(1,3)", "(1,3)", "(2,3)", "(2,3)"})
    g1.push_back(parse_cycles(s, 3));
  CHECK(genus_of_tuple(g1) == 1);

  CHECK_THROWS_AS(genus_of_tuple({parse_cycles("(1,2)", 3), parse_cycles("(1,3)", 3)}),
                  std::invalid_argument);  // product not identity
  CHECK_THROWS_AS(genus_of_tuple({parse_cycles("(1,2)", 4), parse_cycles("(1,2)", 4)}),
                  std::invalid_argument);  // intransitive
}

TEST_CASE("class rationality") {
  // all classes of symmetric groups are rational
  PermGroup S5 = symmetric(5);
  for (const auto& c : S5.conjugacy_classes()) CHECK(class_is_rational(S5, c.rep));
  // a 7-cycle generating C7 is conjugate only to itself there
  PermGroup C7 = cyclic(7);
  CHECK(!class_is_rational(C7, parse_cycles("(1,2,3,4,5,6,7)", 7)));
  // the two 7-classes of AGL(3,2) are irrational, the rest rational
  PermGroup A = parse_group_spec("AGL(3,2)").group;
  for (const auto& c : A.conjugacy_classes()) {
    bool expected = c.rep.order() != 7;
    CHECK(class_is_rational(A, c.rep) == expected);
  }
}

TEST_CASE("anchored enumeration invariants on Sym(4)") {
  PermGroup S4 = symmetric(4);
  Permutation anchor = parse_cycles("(1,2)(3,4)", 4);
  auto types = enumerate_genus0_types(S4, anchor);
  CHECK(!types.empty());
  for (const auto& t : types) {
    const auto& sys = t.witness.elements;
    CHECK(sys.back() == anchor);
    CHECK(genus_of_tuple(sys) == 0);
    // reported type matches the witness and the witness generates a group
    // of the reported order
    TupleType w = TupleType::of(sys);
    CHECK(w.orders == t.type.orders);
    PermGroup H(4, sys);
    CHECK(H.order() == t.subgroup_order);
    CHECK(t.all_classes_rational);  // all Sym(4) classes are rational
  }
  // some system generating all of Sym(4) exists for this anchor
  bool has_full = false;
  for (const auto& t : types)
    if (t.subgroup_order == 24) has_full = true;
  CHECK(has_full);
}

TEST_CASE("typed search finds full-group witnesses") {
  PermGroup G = parse_group_spec("PGL(2,5)").group;
  Permutation anchor(6);
  for (const auto& c : G.conjugacy_classes())
    if (c.rep.cycle_type() == CycleType::parse("5-1")) anchor = c.rep;
  REQUIRE(!anchor.is_identity());
  auto systems = search_genus0_systems(G, {2, 4}, anchor, 3);
  CHECK(!systems.empty());
  CHECK(systems.size() <= 3);
  for (const auto& s : systems) {
    CHECK(genus_of_tuple(s.elements) == 0);
    CHECK(PermGroup(6, s.elements).order() == 120);
    CHECK(s.elements.back() == anchor);
  }
}

TEST_CASE("swapping adjacent entries preserves the system invariants") {
  PermGroup S4 = symmetric(4);
  Permutation anchor = parse_cycles("(1,2,3)", 4);
  auto systems = search_genus0_systems(S4, {2, 4}, anchor, 1);
  REQUIRE(!systems.empty());
  GenusSystem sys = systems.front();
  for (int i = 0; i + 1 < static_cast<int>(sys.elements.size()); ++i) {
    GenusSystem swapped = reorder_classes(sys, i);
    CHECK(genus_of_tuple(swapped.elements) == 0);
    TupleType a = TupleType::of(sys.elements);
    TupleType b = TupleType::of(swapped.elements);
    CHECK(a.orders == b.orders);
    CHECK(PermGroup(4, swapped.elements).order() == PermGroup(4, sys.elements).order());
  }
  CHECK_THROWS(reorder_classes(sys, static_cast<int>(sys.elements.size())));
}

TEST_CASE("divisible cycle lengths force a cyclic block quotient") {
  GenusSystem sys;
  sys.elements = {parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,4,3,2)", 4)};
  BlockSystem b = gcd_block_check(sys, 2);
  CHECK(b.blocks.size() == 2);
  CHECK(b.block_size == 2);
  CHECK(b.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  // precondition violated: a cycle length not divisible by d
  GenusSystem bad;
  bad.elements = {parse_cycles("(1,2,3)", 3), parse_cycles("(1,3,2)", 3)};
  CHECK_THROWS_AS(gcd_block_check(bad, 2), std::invalid_argument);
}
