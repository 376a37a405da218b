#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ustar/zmatrix.hpp"

namespace ustar {

/// Group element written multiplicatively as a tuple of generator
/// exponents (c_1, ..., c_t), each reduced to 0 <= c_i < q_i.
using ExponentTuple = std::vector<std::int64_t>;

/// Finite abelian p-group presented by generator orders (q_1, ..., q_t),
/// every q_i a power of the same odd prime p.
///
/// Elements are identified with positions of a dense coefficient vector
/// through the mixed-radix index with c_1 fastest-varying; this indexing
/// convention is shared by every module that touches coefficient vectors.
class GroupSpec {
 public:
  static constexpr std::int64_t kDefaultSizeGuard = 6561;  // 3^8

  /// Validates p (odd prime), the orders (powers of p) and the size guard.
  /// Throws std::invalid_argument on malformed input and TooLarge when
  /// |G| would exceed the guard.
  GroupSpec(std::int64_t p, std::vector<std::int64_t> orders,
            std::int64_t size_guard = kDefaultSizeGuard);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  std::int64_t size() const { return size_; }
  std::int64_t size_guard() const { return size_guard_; }

  /// max q_i, the exponent of G (1 for the trivial group).
  std::int64_t exponent() const;

  /// s = sum (q_i - 1); the augmentation ideal satisfies I^{s+1} = 0.
  std::int64_t nilpotency_bound() const;

  /// |G^{p^i}| = prod max(q_j / p^i, 1).
  std::int64_t power_subgroup_size(std::int64_t i) const;

  std::int64_t index_of(const ExponentTuple& c) const;
  ExponentTuple element_at(std::int64_t index) const;

  ExponentTuple identity_element() const { return ExponentTuple(orders_.size(), 0); }
  bool is_identity(const ExponentTuple& c) const;

  /// Componentwise reduction mod q_i; accepts arbitrary (also negative) entries.
  ExponentTuple reduce(const ExponentTuple& c) const;

  ExponentTuple mul(const ExponentTuple& a, const ExponentTuple& b) const;
  ExponentTuple inverse(const ExponentTuple& a) const;
  ExponentTuple power(const ExponentTuple& a, std::int64_t k) const;

  /// The unique h with h^2 = a (|G| is odd), namely a^{(e+1)/2}.
  ExponentTuple square_root(const ExponentTuple& a) const;

  std::int64_t element_order(const ExponentTuple& a) const;

  /// Throws GroupMismatch unless `c` is a reduced tuple of this group.
  void check_element(const ExponentTuple& c) const;

  bool operator==(const GroupSpec& o) const {
    return p_ == o.p_ && orders_ == o.orders_;
  }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

  /// "C9 x C3" style label.
  std::string describe() const;

 private:
  std::int64_t p_;
  std::vector<std::int64_t> orders_;
  std::int64_t size_;
  std::int64_t size_guard_;
};

/// Independent cyclic generators of the subgroup generated by `gens`,
/// obtained by Smith reduction of the generator exponent rows stacked
/// over the relation matrix diag(q_1, ..., q_t).  Generators are listed
/// by decreasing order; trivial factors are dropped.
struct SubgroupBasis {
  std::vector<ExponentTuple> generators;
  std::vector<std::int64_t> orders;
};

SubgroupBasis subgroup_basis(const GroupSpec& g, const std::vector<ExponentTuple>& gens);

}  // namespace ustar
