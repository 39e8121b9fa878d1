#pragma once

#include <vector>

#include "twoorbit/perm.hpp"

namespace twoorbit {

/// The field with p^e elements. Elements are encoded as integers in
/// [0, p^e): the base-p digits of the code are the coefficients of the
/// residue polynomial, constant term first. The modulus is the monic
/// irreducible polynomial of degree e over Z/p with the least code under
/// the same digit encoding — not a Conway polynomial; only the abstract
/// field structure is used here.
class FiniteField {
 public:
  FiniteField(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long k) const;
  /// Frobenius x -> x^p
  int frob(int a) const { return frob_[a]; }

  /// A fixed generator of the (cyclic) multiplicative group: the least
  /// element of multiplicative order q-1.
  int generator() const { return gen_; }
  long long mult_order(int a) const;

 private:
  int p_, e_, q_;
  std::vector<int> modulus_;  // e coefficients of the non-leading part
  std::vector<int> mul_;
  std::vector<int> frob_;
  int gen_;
};

}  // namespace twoorbit
