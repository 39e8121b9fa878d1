#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twoorbit/perm.hpp"

namespace twoorbit {

/// One conjugacy class: canonical representative plus size.
struct ConjClass {
  Permutation rep;
  bigint size;
};

/// Permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain built eagerly at construction.
/// Base points are chosen as the smallest moved point at each level,
/// optionally forced to start with a prescribed prefix. Immutable after
/// construction and safe to share across threads.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<int> base_prefix = {});

  /// Load from a generator file: `degree <n>` first, then one permutation
  /// per line in 1-based disjoint-cycle notation; `#` comments and blank
  /// lines ignored. An optional `order <N>` line is verified against the
  /// computed order (mismatch throws).
  static PermGroup from_file(const std::string& path);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const bigint& order() const { return order_; }

  bool contains(const Permutation& p) const;

  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  /// Base points actually used by the chain.
  const std::vector<int>& base() const { return base_; }

  /// Generators of the stabilizer of base()[0..k-1] (pointwise).
  std::vector<Permutation> stabilizer_generators(int k) const;

  /// Stabilizer of a single point, as a group on the same point set.
  PermGroup point_stabilizer(int point) const;

  /// Stream every group element exactly once, one composition per element
  /// on average. Stop early by returning false from the callback.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

  /// All elements; throws if order() exceeds `ceiling`.
  std::vector<Permutation> elements(const bigint& ceiling) const;

  /// Complete conjugacy classes by element enumeration; throws a
  /// "too large" error if order() exceeds `ceiling` (default 10^7).
  /// Classes ordered by cycle type then lexicographically least
  /// representative; sizes sum to order().
  std::vector<ConjClass> conjugacy_classes(const bigint& ceiling = bigint(10000000)) const;

  /// Elements of the conjugacy class containing `rep`.
  std::vector<Permutation> class_elements(const Permutation& rep, const bigint& ceiling = bigint(10000000)) const;

  /// Centralizer of `p`, as a generated subgroup (requires enumerable order).
  PermGroup centralizer(const Permutation& p, const bigint& ceiling = bigint(10000000)) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;       // generators fixing earlier base points
    std::vector<int> orbit;              // fundamental orbit, discovery order
    std::vector<std::optional<Permutation>> transversal;  // by point: u with base^u = point
  };

  void build_chain(std::vector<int> base_prefix);
  bool strip(const Permutation& p, Permutation& residue, size_t& level) const;

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<int> base_;
  std::vector<Level> chain_;
  bigint order_;
};

/// Naive closure of a generating set; oracle for small groups.
/// Throws if the closure exceeds `ceiling` elements.
std::vector<Permutation> naive_closure(int degree,
                                       const std::vector<Permutation>& gens,
                                       size_t ceiling = 100000);

}  // namespace twoorbit
