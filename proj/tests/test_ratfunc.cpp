#include <doctest.h>

#include <complex>

#include "twoorbit/ratfunc.hpp"

using namespace twoorbit;

namespace {
Poly Z() { return Poly::variable(); }
}

TEST_CASE("polynomial arithmetic") {
  Poly p = pow(Z() + Poly::constant(1), 2);
  CHECK(p.c == std::vector<rational>{1, 2, 1});
  CHECK(p.degree() == 2);
  CHECK(p.eval(rational(2)) == 9);
  CHECK(derivative(p).c == std::vector<rational>{2, 2});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK((rational(3) * Z()).c == std::vector<rational>{0, 3});
}

TEST_CASE("division, gcd and squarefree decomposition") {
  Poly a = pow(Z(), 3) - Poly::constant(1);
  Poly b = Z() - Poly::constant(1);
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q * b == a);

  Poly g = gcd_poly(pow(Z(), 2) - Poly::constant(1), b);
  CHECK(g == b);  // monic

  Poly f = pow(Z() - Poly::constant(1), 2) * (Z() + Poly::constant(2));
  auto sqf = squarefree_decomposition(f);
  REQUIRE(sqf.size() == 2);
  CHECK(sqf[0].first == Z() + Poly::constant(2));
  CHECK(sqf[0].second == 1);
  CHECK(sqf[1].first == Z() - Poly::constant(1));
  CHECK(sqf[1].second == 2);
}

TEST_CASE("resultants") {
  // res(Z^2+1, Z^2-1) = prod of (root^2 - 1) over roots +-i = 4
  CHECK(resultant(pow(Z(), 2) + Poly::constant(1), pow(Z(), 2) - Poly::constant(1)) == 4);
  // res(a, b) = 0 iff common root
  CHECK(resultant(pow(Z(), 2) - Poly::constant(1), Z() - Poly::constant(1)) == 0);
  CHECK(resultant(Z() - Poly::constant(2), Z() - Poly::constant(3)) == -1);
}

TEST_CASE("complex evaluation matches rational evaluation") {
  Poly p = pow(Z(), 3) - rational(1, 2) * Z() + Poly::constant(rational(7, 3));
  std::complex<double> v = p.eval_as(std::complex<double>(2.0, 0.0));
  rational exact = p.eval(rational(2));
  double expected = boost::multiprecision::numerator(exact).convert_to<double>() /
                    boost::multiprecision::denominator(exact).convert_to<double>();
  CHECK(std::abs(v.real() - expected) < 1e-12);
  CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("rational function reduction and degree") {
  RationalFunction f(pow(Z(), 3) - Z(), pow(Z(), 2) - Poly::constant(1));
  // (Z^3-Z)/(Z^2-1) = Z
  CHECK(f.num == Z());
  CHECK(f.den == Poly::constant(1));
  CHECK(f.map_degree() == 1);

  RationalFunction g(pow(Z(), 2), pow(Z(), 2) + Poly::constant(1));
  CHECK(g.map_degree() == 2);
  CHECK(g.value_at_infinity() == 1);
  RationalFunction h(Z(), pow(Z(), 2) + Poly::constant(1));
  CHECK(h.value_at_infinity() == 0);
  CHECK_THROWS(RationalFunction(pow(Z(), 2), Poly::constant(1)).value_at_infinity());
}

TEST_CASE("derivative of a quotient") {
  RationalFunction f = parse_ratfunc("Z^2/(Z+1)");
  RationalFunction d = f.derived();
  // (Z^2/(Z+1))' = (Z^2+2Z)/(Z+1)^2
  CHECK(d.num == pow(Z(), 2) + rational(2) * Z());
  CHECK(d.den == pow(Z() + Poly::constant(1), 2));
}

TEST_CASE("expression parsing") {
  RationalFunction f = parse_ratfunc("Z^5*(Z-2)/(Z^2-5)^3");
  CHECK(f.num.degree() == 6);
  CHECK(f.den.degree() == 6);
  CHECK(f.map_degree() == 6);

  RationalFunction g = parse_ratfunc("-(1/16)*Z^2");
  CHECK(g.num == rational(-1, 16) * pow(Z(), 2));

  CHECK(parse_ratfunc("1+2*3").num == Poly::constant(7));
  CHECK(parse_ratfunc("(1+2)*3").num == Poly::constant(9));
  CHECK(parse_ratfunc("-Z^2").num == rational(-1) * pow(Z(), 2));  // ^ binds tighter

  CHECK_THROWS_AS(parse_ratfunc("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("Z^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("(Z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("Z Z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("Z^-2"), std::invalid_argument);
}

TEST_CASE("critical value polynomial") {
  // f = Z^2: the only finite critical value is t = 0
  Poly D = critical_t_polynomial(parse_ratfunc("Z^2"));
  CHECK(D.degree() >= 1);
  CHECK(D.eval(rational(0)) == 0);
  CHECK(D.eval(rational(1)) != 0);

  // f = Z + 1/Z: critical points Z = +-1, critical values +-2
  Poly E = critical_t_polynomial(parse_ratfunc("(Z^2+1)/Z"));
  CHECK(E.eval(rational(2)) == 0);
  CHECK(E.eval(rational(-2)) == 0);
  CHECK(E.eval(rational(0)) != 0);
}
