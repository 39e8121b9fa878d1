#include <doctest.h>

#include <random>

#include "twoorbit/perm.hpp"

using namespace twoorbit;

TEST_CASE("cycle notation round trip") {
  Permutation p = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(p(4) == 3);
  CHECK(p(5) == 5);
  CHECK(format_cycles(p) == "(1,2,3)(4,5)");
  CHECK(format_cycles(Permutation(4)) == "()");
  CHECK(parse_cycles("()", 3).is_identity());
}

TEST_CASE("parse rejects malformed cycles") {
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("composition applies the left factor first") {
  Permutation a = parse_cycles("(1,2,3)", 3);
  Permutation b = parse_cycles("(1,2)", 3);
  Permutation ab = a * b;
  for (int i = 0; i < 3; ++i) CHECK(ab(i) == b(a(i)));
  CHECK(format_cycles(ab) == "(2,3)");
}

TEST_CASE("inverse and conjugation") {
  Permutation a = parse_cycles("(1,2,3,4)", 5);
  CHECK((a * a.inverse()).is_identity());
  Permutation b = parse_cycles("(4,5)", 5);
  Permutation c = conjugate(a, b);
  CHECK(c == b.inverse() * a * b);
  CHECK(c.cycle_type() == a.cycle_type());
}

TEST_CASE("order and cycle structure") {
  Permutation p = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p.order() == 6);
  CHECK(p.cycle_count() == 3);
  CHECK(p.fixed_points() == 1);
  CHECK(p.cycle_type().str() == "3-2-1");
  CHECK(CycleType::parse("3-2-1") == p.cycle_type());
  CHECK(index_of(p) == 3);
}

TEST_CASE("the two index formulas agree on random permutations") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 30);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(std::move(img));
    CHECK(index_via_fixed_points(p) == index_of(p));
  }
}
