#include "twoorbit/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twoorbit/catalog.hpp"

namespace twoorbit {

bigint landau_max_order(int n) {
  if (n < 1 || n > 200) throw std::invalid_argument("landau_max_order: n out of range");
  // f[j] = max lcm of a partition of exactly j into distinct prime powers
  // (one power per prime); the answer is the max over j <= n, since unused
  // points sit in fixed points.
  std::vector<bigint> f(n + 1, 1);
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    std::vector<bigint> prev = f;
    for (int j = p; j <= n; ++j) {
      for (long long pk = p; pk <= j; pk *= p) {
        bigint cand = prev[j - pk] * static_cast<int>(pk);
        if (cand > f[j]) f[j] = cand;
      }
    }
  }
  bigint best = 1;
  for (int j = 0; j <= n; ++j)
    if (f[j] > best) best = f[j];
  return best;
}

bool exact_pow_leq(const bigint& value, const bigint& bn, const bigint& bd,
                   long long num, long long den) {
  if (value <= 0 || bn <= 0 || bd <= 0 || num <= 0 || den <= 0)
    throw std::invalid_argument("exact_pow_leq: positive inputs required");
  // value <= (bn/bd)^(num/den)  <=>  value^den * bd^num <= bn^num
  using boost::multiprecision::pow;
  bigint lhs = pow(value, static_cast<unsigned>(den)) * pow(bd, static_cast<unsigned>(num));
  bigint rhs = pow(bn, static_cast<unsigned>(num));
  return lhs <= rhs;
}

namespace {

// Consecutive continued-fraction convergents bracketing e:
// 25946/9545 < e < 49171/18089 (error ~ 3e-10).
constexpr long long kELoN = 25946, kELoD = 9545;
constexpr long long kEHiN = 49171, kEHiD = 18089;

// decide L <= e^{n/e} exactly via the bracketing rationals
bool exact_e_bound_leq(const bigint& L, int n) {
  // sufficient: L <= lo^{n/hi} (smaller base, smaller exponent)
  if (exact_pow_leq(L, bigint(kELoN), bigint(kELoD), n * kEHiD, kEHiN)) return true;
  // necessary: L <= hi^{n/lo}; failing this certifies violation
  if (!exact_pow_leq(L, bigint(kEHiN), bigint(kEHiD), n * kELoD, kELoN)) return false;
  throw std::logic_error("e-bound comparison indeterminate at available precision");
}

// decide L <= (n/2)^{sqrt(n/2)} exactly, n >= 6
bool exact_sqrt_bound_leq(const bigint& L, int n) {
  // rational bracket a/b <= sqrt(n/2) < (a+1)/b with b = 10^6
  const long long b = 1000000;
  bigint target = bigint(n) * b * b;  // compare 2a^2 <= n b^2
  long long a = static_cast<long long>(std::sqrt(static_cast<double>(n) / 2.0) * b);
  while (bigint(2) * a * a > target) --a;
  while (bigint(2) * (a + 1) * (a + 1) <= target) ++a;
  if (exact_pow_leq(L, bigint(n), bigint(2), a, b)) return true;
  if (!exact_pow_leq(L, bigint(n), bigint(2), a + 1, b)) return false;
  throw std::logic_error("sqrt-bound comparison indeterminate at available precision");
}

// exact <= bound, with exact-rational fallback inside the guard band
bool guarded_leq(const bigint& exact, double bound, int n,
                 bool (*fallback)(const bigint&, int)) {
  const double x = static_cast<double>(exact);
  const double guard = 1e-9 * bound;
  if (x <= bound - guard) return true;
  if (x >= bound + guard) return false;
  return fallback(exact, n);
}

}  // namespace

BoundReport check_sn_bounds(int n) {
  bigint L = landau_max_order(n);
  BoundReport r;
  r.exact = L;
  const double e = std::exp(1.0);
  const double b1 = std::exp(static_cast<double>(n) / e);
  bool ok = guarded_leq(L, b1, n, exact_e_bound_leq);
  r.bound = b1;
  std::ostringstream what;
  what << "Sym(" << n << "): max element order vs e^(n/e)";
  if (n >= 6) {
    const double b2 = std::pow(n / 2.0, std::sqrt(n / 2.0));
    bool ok2 = guarded_leq(L, b2, n, exact_sqrt_bound_leq);
    // n = 7 is the one case where the second bound is exceeded
    // (12 > (7/2)^sqrt(7/2) ~ 10.42) while the first still holds.
    r.exception = ok && !ok2;
    ok = ok && ok2;
    r.bound = std::min(b1, b2);
    what << " and (n/2)^sqrt(n/2)";
    if (r.exception) what << " (second bound exceeded)";
  }
  r.what = what.str();
  r.satisfied = ok;
  return r;
}

BoundReport check_pgl_order_bound(int m, int q) {
  PermGroup G = projective_linear(m, q, ProjFlavor::PGammaL);
  if (G.order() > bigint(10000000))
    throw std::runtime_error("PGammaL too large for exhaustive order scan");
  bigint best = 1;
  Permutation witness(G.degree());
  G.for_each_element([&](const Permutation& g) {
    bigint o = g.order();
    if (o > best) {
      best = o;
      witness = g;
    }
    return true;
  });
  bigint bound = 1;
  {
    bigint num = 1;
    for (int i = 0; i < m; ++i) num *= q;
    bound = (num - 1) / (q - 1);
  }
  BoundReport r;
  std::ostringstream what;
  what << "PGammaL_" << m << "(" << q << "): max element order vs (q^m-1)/(q-1)";
  r.what = what.str();
  r.exact = best;
  r.bound = static_cast<double>(bound);
  r.satisfied = best <= bound;
  r.exception = !r.satisfied;
  r.witness = witness;
  return r;
}

BoundReport check_affine_p_bound(int m, int p) {
  long long deg = 1;
  for (int i = 0; i < m; ++i) {
    deg *= p;
    if (deg > 4096) throw std::invalid_argument("p^m over limit");
  }
  PermGroup G = affine(m, p, AffFlavor::AGL);
  if (G.order() > bigint(10000000))
    throw std::runtime_error("AGL too large for exhaustive order scan");
  bigint best = 1;  // largest p-power element order
  Permutation witness(G.degree());
  G.for_each_element([&](const Permutation& g) {
    bigint o = g.order();
    bigint v = o;
    while (v % p == 0) v /= p;
    if (v == 1 && o > best) {
      best = o;
      witness = g;
    }
    return true;
  });
  int r_exp = 0;
  {
    bigint v = best;
    while (v > 1) {
      v /= p;
      ++r_exp;
    }
  }
  bigint lhs = 1;  // p^{r-1}
  for (int i = 0; i + 1 < r_exp; ++i) lhs *= p;
  BoundReport rep;
  std::ostringstream what;
  what << "AGL_" << m << "(" << p << "): max p-power element order p^" << r_exp
       << "; check p^(r-1) <= m";
  rep.what = what.str();
  rep.exact = best;
  rep.bound = static_cast<double>(m);
  rep.satisfied = lhs <= m;
  rep.witness = witness;
  return rep;
}

}  // namespace twoorbit
