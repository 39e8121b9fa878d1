#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "twoorbit/group.hpp"

using namespace twoorbit;

namespace {

PermGroup sym(int n) {
  std::vector<Permutation> gens;
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  gens.emplace_back(std::move(cyc));
  std::vector<int> tr(n);
  for (int i = 0; i < n; ++i) tr[i] = i;
  std::swap(tr[0], tr[1]);
  gens.emplace_back(std::move(tr));
  return PermGroup(n, std::move(gens));
}

}  // namespace

TEST_CASE("orders of small symmetric groups") {
  CHECK(sym(3).order() == 6);
  CHECK(sym(4).order() == 24);
  CHECK(sym(6).order() == 720);
}

TEST_CASE("membership agrees with the naive closure oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i;
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(std::move(img));
    }
    PermGroup G(n, gens);
    std::vector<Permutation> all = naive_closure(n, gens);
    CHECK(G.order() == bigint(all.size()));
    std::set<Permutation> members(all.begin(), all.end());
    // every closure element is a member; random non-members are rejected
    for (const auto& p : all) CHECK(G.contains(p));
    for (int t = 0; t < 20; ++t) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i;
      std::shuffle(img.begin(), img.end(), rng);
      Permutation p(std::move(img));
      CHECK(G.contains(p) == (members.count(p) > 0));
    }
  }
}

TEST_CASE("element streaming visits each element exactly once") {
  PermGroup G = sym(5);
  std::set<Permutation> seen;
  G.for_each_element([&](const Permutation& p) {
    CHECK(seen.insert(p).second);
    return true;
  });
  CHECK(bigint(seen.size()) == G.order());

  int count = 0;
  G.for_each_element([&](const Permutation&) { return ++count < 10; });
  CHECK(count == 10);
}

TEST_CASE("orbits, transitivity and point stabilizer") {
  PermGroup G = sym(4);
  CHECK(G.is_transitive());
  CHECK(G.orbits().size() == 1);
  PermGroup S = G.point_stabilizer(0);
  CHECK(S.order() == 6);
  for (const auto& g : S.generators()) CHECK(g(0) == 0);

  // intransitive: <(1,2)(3,4)> on 5 points
  PermGroup H(5, {parse_cycles("(1,2)(3,4)", 5)});
  CHECK(!H.is_transitive());
  CHECK(H.orbits().size() == 3);
}

TEST_CASE("conjugacy classes of Sym(4)") {
  auto classes = sym(4).conjugacy_classes();
  CHECK(classes.size() == 5);
  bigint total = 0;
  std::multiset<int> sizes;
  for (const auto& c : classes) {
    total += c.size;
    sizes.insert(static_cast<int>(c.size));
  }
  CHECK(total == 24);
  CHECK(sizes == std::multiset<int>{1, 3, 6, 6, 8});
}

TEST_CASE("class elements and centralizer") {
  PermGroup G = sym(4);
  Permutation t = parse_cycles("(1,2)", 4);
  auto cls = G.class_elements(t);
  CHECK(cls.size() == 6);
  for (const auto& e : cls) CHECK(e.cycle_type() == t.cycle_type());

  PermGroup C = G.centralizer(t);
  CHECK(C.order() == 4);  // <(1,2)> x <(3,4)>
  for (const auto& g : C.generators()) CHECK(g * t == t * g);
}

TEST_CASE("generator file loading verifies the recorded order") {
  const char* path = "test_group_tmp.grp";
  {
    std::ofstream out(path);
    out << "# two generators of Sym(3)\n";
    out << "degree 3\n";
    out << "order 6\n";
    out << "(1,2,3)\n";
    out << "(1,2)\n";
  }
  PermGroup G = PermGroup::from_file(path);
  CHECK(G.degree() == 3);
  CHECK(G.order() == 6);
  {
    std::ofstream out(path);
    out << "degree 3\norder 7\n(1,2,3)\n(1,2)\n";
  }
  CHECK_THROWS(PermGroup::from_file(path));
  std::remove(path);
}

TEST_CASE("elements respects the ceiling") {
  CHECK(sym(4).elements(bigint(100)).size() == 24);
  CHECK_THROWS(sym(6).elements(bigint(100)));
}
