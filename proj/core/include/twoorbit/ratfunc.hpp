#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twoorbit {

using rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over Q, coefficients from the constant term
/// up; normalized with no trailing zero coefficient (zero = empty vector).
struct Poly {
  std::vector<rational> c;

  Poly() = default;
  explicit Poly(std::vector<rational> coeffs);
  static Poly constant(rational v);
  static Poly variable();  // Z

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const rational& leading() const;
  rational eval(const rational& x) const;

  /// Horner evaluation in any field with conversion from rational via
  /// numerator/denominator division (works for complex<double> and
  /// complex<quad-float> alike).
  template <typename C>
  C eval_as(const C& x) const {
    C acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      using real_t = typename C::value_type;
      real_t num = boost::multiprecision::numerator(*it).template convert_to<real_t>();
      real_t den = boost::multiprecision::denominator(*it).template convert_to<real_t>();
      acc = acc * x + C(num / den);
    }
    return acc;
  }

  void trim();
  bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const rational& s, const Poly& a);
Poly pow(const Poly& a, int e);
Poly derivative(const Poly& a);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean algorithm over Q; gcd(0,0) = 0.
Poly gcd_poly(Poly a, Poly b);

/// Resultant via exact fraction-free-style elimination on the Sylvester
/// matrix (rational Gaussian elimination; sizes here stay below 32x32).
rational resultant(const Poly& a, const Poly& b);

/// Yun decomposition: list of (squarefree factor, multiplicity) with
/// multiplicities strictly increasing; product of factor^mult equals the
/// input up to the leading coefficient (factors are monic).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// A reduced fraction of polynomials: gcd(num, den) = 1, den monic and
/// nonzero. The map degree is max(deg num, deg den).
struct RationalFunction {
  Poly num;
  Poly den;

  RationalFunction() = default;
  RationalFunction(Poly n, Poly d);  // reduces and normalizes

  int map_degree() const { return std::max(num.degree(), den.degree()); }
  /// f' as a reduced rational function.
  RationalFunction derived() const;
  /// Value at infinity when deg num <= deg den: leading ratio (0 if the
  /// numerator degree is strictly smaller). Throws when deg num > deg den.
  rational value_at_infinity() const;
};

/// Parse expressions like "Z^5*(Z-2)/(Z^2-5)^3": integer literals, Z,
/// parentheses, binary + - * /, unary -, and ^ with a nonnegative integer
/// exponent binding tightest. Throws std::invalid_argument on bad syntax.
RationalFunction parse_ratfunc(const std::string& text);

/// Discriminant-style critical-value polynomial: the resultant with respect
/// to Z of num - t*den and its Z-derivative, as a polynomial in t. Computed
/// exactly by evaluation at integer t-nodes and Lagrange interpolation. Its
/// roots are the finite branch-point candidates of the map.
Poly critical_t_polynomial(const RationalFunction& f);

}  // namespace twoorbit
