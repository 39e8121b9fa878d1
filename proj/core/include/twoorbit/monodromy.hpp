#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoorbit/genus0.hpp"
#include "twoorbit/group.hpp"
#include "twoorbit/ratfunc.hpp"

namespace twoorbit {

/// Thrown when root finding, path tracking, or fiber matching cannot reach
/// the required accuracy even after precision escalation.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MonodromyOptions {
  std::uint64_t seed = 0;           // perturbs the base-point direction
  bool allow_high_precision = true; // escalate to quad floats on failure
};

/// Branch cycle description of a rational map P/Q of degree n: one
/// permutation of the n sheets per branch point, ordered by argument of the
/// branch value around the base point, with the cycle over infinity last.
/// The ordered product is the identity; identity permutations (spurious
/// candidates) are dropped.
struct MonodromyResult {
  int degree = 0;
  std::complex<double> base_point;
  /// Finite branch values, one per nontrivial finite branch cycle, in loop
  /// order; the value over infinity (if its cycle is nontrivial) is not
  /// listed here.
  std::vector<std::complex<double>> branch_values;
  bool nontrivial_at_infinity = false;
  /// Branch cycles in the same order, cycle over infinity last when
  /// nontrivial. Product is the identity.
  std::vector<Permutation> system;
  TupleType type;          // element orders of the system
  bigint group_order;      // order of the group the system generates
  bool transitive = false;
  int genus = -1;          // from the index count; 0 for genuine examples
  bool used_high_precision = false;
};

/// Exact structure of the fiber over infinity: pole orders of the map
/// (roots of the denominator by multiplicity, plus the pole at infinity
/// when the numerator degree is larger).
struct InfinityFiber {
  CycleType multiplicities;  // sorted decreasing, sums to the map degree
  int point_count = 0;       // distinct poles, infinity included
  bool includes_infinity = false;
  bool at_most_two = false;
  /// Meaningful only when there are exactly two finite poles: they are the
  /// roots of one irreducible quadratic factor (conjugate quadratic
  /// irrationals), decided exactly from the denominator.
  bool conjugate_quadratic_pair = false;
  bool all_real = false;  // every pole real (infinity counts as real)
};
InfinityFiber fiber_at_infinity(const RationalFunction& f);

/// One branch point with the multiplicity structure of its fiber.
struct BranchPoint {
  std::complex<double> value{};
  bool at_infinity = false;
  CycleType local_type;  // fiber multiplicities, sorted decreasing, sum n
};

/// Branch points of the map: numerically clustered roots of the exact
/// critical-value polynomial whose fibers are genuinely ramified, plus
/// infinity when its fiber is. Fiber multiplicities are exact at rational
/// branch values and at infinity, and come from root clustering otherwise.
std::vector<BranchPoint> critical_values(const RationalFunction& f);

/// Aberth-Ehrlich simultaneous root refinement for a double-precision
/// coefficient polynomial (exposed for tests). Throws NumericError if the
/// iteration stalls.
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs);

/// Full numerical monodromy computation: exact branch-value candidates from
/// the critical-value polynomial, fibers tracked along keyhole loops with a
/// reciprocal chart for sheets near infinity, the cycle over infinity taken
/// as the inverse ordered product and verified against fiber_at_infinity.
MonodromyResult compute_monodromy(const RationalFunction& f,
                                  const MonodromyOptions& opts = {});

/// One bundled worked example and its verification.
struct ExampleCheck {
  std::string name;
  std::string function;
  std::vector<int> expected_type;  // sorted element orders
  bigint expected_order;
  bool expect_poles_real = true;        // all poles of the map real
  bool expect_conjugate_pair = true;    // two quadratic-conjugate poles
  bool type_ok = false;
  bool order_ok = false;
  bool genus_ok = false;
  bool fiber_ok = false;
  bool ok() const { return type_ok && order_ok && genus_ok && fiber_ok; }
};

/// Fill in the result flags of a check whose expectations are set.
ExampleCheck run_example(ExampleCheck chk, const MonodromyOptions& opts = {});

/// Run one example end to end against its expected type and group order.
ExampleCheck verify_example(const std::string& name, const std::string& function,
                            const std::vector<int>& expected_type,
                            const bigint& expected_order,
                            const MonodromyOptions& opts = {});

/// Load the bundled example manifest (monodromy_examples.json).
std::vector<ExampleCheck> load_example_manifest(const std::string& path);

}  // namespace twoorbit
