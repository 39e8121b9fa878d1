#pragma once

#include <optional>
#include <string>

#include "twoorbit/group.hpp"

namespace twoorbit {

/// Result of checking one exact value against one bound.
struct BoundReport {
  std::string what;          // description of the parameter set
  bigint exact;              // exact value (max element order etc.)
  double bound;              // bound evaluated numerically
  bool satisfied;            // exact <= bound (exact-rational fallback when close)
  bool exception = false;    // a documented exception case was hit
  std::optional<Permutation> witness;  // element attaining `exact`, when enumerated
};

/// Maximal element order in Sym(n) (Landau's function), by dynamic
/// programming over prime powers. 1 <= n <= 200.
bigint landau_max_order(int n);

/// landau_max_order(n) <= e^{n/e}, and for n >= 6 also <= (n/2)^{sqrt(n/2)}.
/// Comparisons within a 1e-9 relative guard band of the numeric bound are
/// re-done with exact rational bracketing of e / sqrt.
/// n = 7 exceeds the second bound (max order 12 > (7/2)^{sqrt(7/2)} ~ 10.42)
/// while satisfying the first; that case is reported with exception = true.
BoundReport check_sn_bounds(int n);

/// Exhaustive max element order in PGammaL_m(q) vs (q^m-1)/(q-1).
/// The (m,q) = (2,4) case exceeds the bound (max order 6); it is reported
/// with exception = true.
BoundReport check_pgl_order_bound(int m, int q);

/// Largest p-power element order p^r in AGL_m(p); checks p^{r-1} <= m.
BoundReport check_affine_p_bound(int m, int p);

/// Exposed for tests: decide exact <= base^(num/den) by integer arithmetic
/// (requires base > 1 expressed as a fraction bn/bd, num, den > 0).
bool exact_pow_leq(const bigint& value, const bigint& bn, const bigint& bd,
                   long long num, long long den);

}  // namespace twoorbit
