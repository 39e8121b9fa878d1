#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twoorbit {

using bigint = boost::multiprecision::cpp_int;

/// Multiset of cycle lengths of a permutation, fixed points included.
/// Stored sorted in decreasing order, so "6-6" style selectors and
/// comparisons are canonical.
struct CycleType {
  std::vector<int> lengths;

  int degree() const;
  /// e.g. "6-3-2-1"
  std::string str() const;
  static CycleType parse(const std::string& s);

  auto operator<=>(const CycleType&) const = default;
};

/// A bijection of {0,...,n-1}, stored as the image sequence:
/// images[i] is where i goes. Degree is fixed at construction.
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(int degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycles, including fixed points as singletons; each cycle starts at
  /// its least point, cycles sorted by first point.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  CycleType cycle_type() const;
  bigint order() const;  // lcm of cycle lengths
  int fixed_points() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }

 private:
  std::vector<int> img_;
};

/// Left-to-right composition: (a*b)(i) = b(a(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// b^{-1} a b
Permutation conjugate(const Permutation& a, const Permutation& b);

/// ind(s) = degree - number of cycles (fixed points count as cycles).
int index_of(const Permutation& s);

/// Same value, computed from the fixed-point counts of the powers of s:
/// ind(s) = n - (1/ord) * sum over k | ord of chi(s^k) * phi(ord/k).
int index_via_fixed_points(const Permutation& s);

/// Disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)";
/// identity prints as "()".
std::string format_cycles(const Permutation& p);

/// Parse 1-based disjoint-cycle notation into a permutation of the given
/// degree. Throws std::invalid_argument on malformed input or repeated or
/// out-of-range points.
Permutation parse_cycles(const std::string& s, int degree);

}  // namespace twoorbit
