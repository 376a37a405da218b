#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ustar/group.hpp"
#include "ustar/involution.hpp"
#include "ustar/prime_power.hpp"

namespace ustar {

/// Element of the group algebra F_p[G]: a dense vector of canonical
/// residues mod p, position i holding the coefficient of the group
/// element with mixed-radix index i.  Values are immutable; every
/// operation returns a fresh element.
class AlgebraElement {
 public:
  static AlgebraElement zero(const GroupSpec& g);
  static AlgebraElement one(const GroupSpec& g);
  static AlgebraElement group_element(const GroupSpec& g, const ExponentTuple& c);
  /// Reduces the given coefficients mod p; length must equal |G|.
  static AlgebraElement from_coefficients(const GroupSpec& g,
                                          std::vector<std::int64_t> coeffs);

  const GroupSpec& group() const { return group_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::int64_t index) const;
  std::int64_t coefficient(const ExponentTuple& c) const;

  bool is_zero() const;
  bool is_one() const;

  AlgebraElement scaled(std::int64_t c) const;

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x);
  /// Convolution product extending the group law.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

  bool operator==(const AlgebraElement& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  AlgebraElement(GroupSpec g, std::vector<std::int64_t> reduced);
  GroupSpec group_;
  std::vector<std::int64_t> coeffs_;
};

/// Sum of all coefficients mod p; a ring map onto F_p.
std::int64_t augmentation(const AlgebraElement& x);

/// Inverse of a unit.  FG is local, so x is a unit exactly when
/// augmentation(x) != 0 (AugmentationZero otherwise).  Writes
/// x = c(1 - n) with n nilpotent and evaluates the geometric series
/// for (1-n)^{-1}, truncated at the nilpotency bound.
AlgebraElement inv_unit(const AlgebraElement& x);

/// x^k; negative k goes through inv_unit.
AlgebraElement power(const AlgebraElement& x, std::int64_t k);

/// x^p via the p-power map of a commutative ring of characteristic p:
/// coefficients ride along g -> g^p.
AlgebraElement frobenius(const AlgebraElement& x);

/// x^{p^i}.
AlgebraElement frobenius_power(const AlgebraElement& x, std::int64_t i);

/// Least p^m with x^{p^m} = 1, for a normalized unit (NotNormalized
/// otherwise).  Computed by repeated p-th powering.
PrimePower unit_order(const AlgebraElement& x);

/// Coefficient transport along eta: the coefficient of g moves to eta(g).
AlgebraElement apply_involution(const AlgebraElement& x, const InvolutionSpec& eta);

/// Coefficient transport along an index-level permutation.
AlgebraElement apply_index_permutation(const AlgebraElement& x,
                                       const std::vector<std::int64_t>& perm);

/// Whether every nonzero coefficient sits on an element of G^{p^i},
/// i.e. every exponent component is divisible by min(p^i, q_j).
bool supported_on_power_subgroup(const AlgebraElement& x, std::int64_t i);

/// Pushes x through a group homomorphism given on exponent tuples.
/// Coefficients of merged elements accumulate mod p.
AlgebraElement map_exponents(const AlgebraElement& x, const GroupSpec& target,
                             const std::function<ExponentTuple(const ExponentTuple&)>& f);

}  // namespace ustar
