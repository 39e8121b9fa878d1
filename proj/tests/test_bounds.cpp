#include <doctest.h>

#include "twoorbit/bounds.hpp"

using namespace twoorbit;

TEST_CASE("maximal element orders in Sym(n)") {
  CHECK(landau_max_order(1) == 1);
  CHECK(landau_max_order(2) == 2);
  CHECK(landau_max_order(3) == 3);
  CHECK(landau_max_order(4) == 4);
  CHECK(landau_max_order(5) == 6);
  CHECK(landau_max_order(7) == 12);
  CHECK(landau_max_order(8) == 15);
  CHECK(landau_max_order(10) == 30);
  CHECK(landau_max_order(16) == 140);
  CHECK(landau_max_order(30) == 4620);
  CHECK_THROWS(landau_max_order(0));
  CHECK_THROWS(landau_max_order(201));
}

TEST_CASE("Sym(n) order bounds hold for 1..100, with n = 7 the lone exception") {
  for (int n = 1; n <= 100; ++n) {
    BoundReport r = check_sn_bounds(n);
    if (n == 7) {
      // 12 > (7/2)^sqrt(7/2) ~ 10.42, though 12 <= e^(7/e) ~ 13.13
      CHECK(!r.satisfied);
      CHECK(r.exception);
      CHECK(r.exact == 12);
    } else {
      CHECK(r.satisfied);
      CHECK(!r.exception);
    }
  }
}

TEST_CASE("exact rational power comparison") {
  // 8 <= 2^3, 9 > 2^3
  CHECK(exact_pow_leq(bigint(8), bigint(2), bigint(1), 3, 1));
  CHECK(!exact_pow_leq(bigint(9), bigint(2), bigint(1), 3, 1));
  // 5 <= (9/2)^(3/2) ~ 9.55, 10 > it
  CHECK(exact_pow_leq(bigint(5), bigint(9), bigint(2), 3, 2));
  CHECK(!exact_pow_leq(bigint(10), bigint(9), bigint(2), 3, 2));
}

TEST_CASE("projective linear order bound and its documented exception") {
  for (auto [m, q] : {std::pair{2, 2}, {2, 3}, {2, 5}, {3, 2}}) {
    BoundReport r = check_pgl_order_bound(m, q);
    CHECK(r.satisfied);
    CHECK(!r.exception);
  }
  BoundReport ex = check_pgl_order_bound(2, 4);
  CHECK(ex.exception);
  CHECK(ex.exact == 6);
  CHECK(ex.witness.has_value());
  CHECK(ex.witness->order() == 6);
}

TEST_CASE("affine p-power element order bound") {
  for (auto [m, p] : {std::pair{1, 3}, {2, 2}, {3, 2}, {4, 2}, {2, 3}}) {
    BoundReport r = check_affine_p_bound(m, p);
    CHECK(r.satisfied);
  }
  // AGL_4(2): 2-elements reach order 8 = 2^3, and 2^(3-1) <= 4
  CHECK(check_affine_p_bound(4, 2).exact == 8);
  CHECK(check_affine_p_bound(1, 5).exact == 5);
}
