#pragma once

#include <optional>
#include <vector>

#include "twoorbit/blocks.hpp"
#include "twoorbit/group.hpp"

namespace twoorbit {

/// Unordered tuple of element orders of a branch cycle system.
struct TupleType {
  std::vector<int> orders;  // sorted increasing

  static TupleType of(const std::vector<Permutation>& elements);
  std::string str() const;  // e.g. "(2,2,3,4)"
  auto operator<=>(const TupleType&) const = default;
};

/// Ordered tuple (sigma_1, ..., sigma_r) with product identity whose
/// elements generate a transitive group; genus from the Riemann-Hurwitz
/// count 2(n - 1 + g) = sum of ind(sigma_i).
struct GenusSystem {
  std::vector<Permutation> elements;
  int genus = 0;
};

/// Genus of a tuple. Throws std::invalid_argument if the product is not
/// the identity or the generated group is intransitive, std::logic_error
/// if the count comes out negative or non-integral (an input bug: genuine
/// systems always yield a nonnegative integer).
int genus_of_tuple(const std::vector<Permutation>& elements);

/// One genus-0 finding: a type together with the order of the subgroup the
/// witness system actually generates (types are reported per generated
/// subgroup; proper transitive subgroups of the ambient group count too).
/// all_classes_rational records whether every class used by the witness,
/// the anchor included, is a rational class of the ambient group.
struct Genus0Type {
  TupleType type;
  bigint subgroup_order;
  GenusSystem witness;
  bool all_classes_rational = false;
};

/// True when rep is conjugate in G to rep^k for every k coprime to its
/// order (the class is fixed by all power maps).
bool class_is_rational(const PermGroup& G, const Permutation& rep);

/// All tuple types admitting a genus-0 transitive generating system whose
/// last entry lies in `anchor_class` (a class of two-cycle elements).
/// Exhaustive: anchored backtracking over class multisets with exact index
/// budget, the first free element reduced modulo the anchor's centralizer.
std::vector<Genus0Type> enumerate_genus0_types(const PermGroup& G,
                                               const Permutation& anchor_rep,
                                               const bigint& class_ceiling = bigint(10000000));

/// Up to `limit` genus-0 systems of the given type (orders of the r-1 free
/// positions; the anchor supplies position r). Systems are inequivalent
/// modulo simultaneous conjugation by the anchor centralizer acting on the
/// first free position. Requires the full group to be generated.
std::vector<GenusSystem> search_genus0_systems(const PermGroup& G,
                                               const std::vector<int>& type,
                                               const Permutation& anchor_rep,
                                               size_t limit,
                                               const bigint& class_ceiling = bigint(10000000));

/// When every cycle length of the first two elements of the system is
/// divisible by d > 1, the generated group must have a block system of d
/// blocks permuted cyclically; returns it or throws (std::invalid_argument
/// when the precondition fails, std::logic_error when no such system
/// exists, which would falsify the underlying lemma).
BlockSystem gcd_block_check(const GenusSystem& system, int d);

/// Swap positions i, i+1 (0-based i, i+1 < r) by replacing them with
/// (sigma_{i+1}, sigma_{i+1}^{-1} sigma_i sigma_{i+1}); product, genus and
/// generated group are unchanged.
GenusSystem reorder_classes(const GenusSystem& system, int i);

}  // namespace twoorbit
