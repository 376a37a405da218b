#pragma once

#include <cstdint>
#include <vector>

#include "ustar/group.hpp"

namespace ustar {

/// An involutory automorphism of G given by generator images.
/// Construction validates that the images extend to an endomorphism
/// (NotWellDefined otherwise) and that the square is the identity
/// (NotInvolutory otherwise); the identity map itself is accepted.
class InvolutionSpec {
 public:
  InvolutionSpec(GroupSpec group, std::vector<ExponentTuple> images);

  static InvolutionSpec identity(const GroupSpec& g);
  /// g -> g^{-1} on every generator.
  static InvolutionSpec canonical(const GroupSpec& g);
  /// Exchanges generators i and j (0-based), fixing the others.
  static InvolutionSpec swap_generators(const GroupSpec& g, int i, int j);

  const GroupSpec& group() const { return group_; }
  const std::vector<ExponentTuple>& images() const { return images_; }

  ExponentTuple apply(const ExponentTuple& g) const;

  /// Index-level permutation: perm[index(g)] = index(eta(g)).
  std::vector<std::int64_t> index_permutation() const;

  bool is_identity_map() const;

  bool operator==(const InvolutionSpec& o) const {
    return group_ == o.group_ && images_ == o.images_;
  }

 private:
  GroupSpec group_;
  std::vector<ExponentTuple> images_;
};

/// g = fixed * inverted with eta(fixed) = fixed and
/// eta(inverted) = inverted^{-1}; unique because |G| is odd.
struct EigenSplit {
  ExponentTuple fixed;
  ExponentTuple inverted;
};

EigenSplit eigensplit(const ExponentTuple& g, const InvolutionSpec& eta);

/// A generator decomposition adapted to eta: the first `inverted_count`
/// generators of the diagonal group are inverted by eta, the rest are
/// fixed.  Carries the change of basis in both directions.
class DiagonalForm {
 public:
  const InvolutionSpec& involution() const { return involution_; }
  const GroupSpec& original_group() const { return involution_.group(); }

  /// The same group presented on the adapted generators.
  const GroupSpec& group() const { return diagonal_group_; }

  int inverted_count() const { return inverted_count_; }  // l
  int rank() const { return diagonal_group_.rank(); }

  /// Row i: diagonal generator b_i as an exponent tuple over the
  /// original generators.
  const std::vector<ExponentTuple>& generators_in_original() const {
    return new_to_old_;
  }
  /// Row j: original generator a_j as an exponent tuple over the b_i.
  const std::vector<ExponentTuple>& original_in_diagonal() const {
    return old_to_new_;
  }

  ExponentTuple to_original(const ExponentTuple& diag) const;
  ExponentTuple to_diagonal(const ExponentTuple& orig) const;

  /// eta in diagonal coordinates: inverts the first l generators.
  InvolutionSpec diagonal_involution() const;

  std::int64_t power_subgroup_size(std::int64_t i) const;        // |G^{p^i}|
  std::int64_t fixed_power_subgroup_size(std::int64_t i) const;  // |G_eta^{p^i}|
  std::int64_t fixed_subgroup_size() const { return fixed_power_subgroup_size(0); }

 private:
  friend DiagonalForm diagonalize(const InvolutionSpec& eta);
  DiagonalForm(InvolutionSpec eta, GroupSpec diag, int l,
               std::vector<ExponentTuple> new_to_old,
               std::vector<ExponentTuple> old_to_new);

  InvolutionSpec involution_;
  GroupSpec diagonal_group_;
  int inverted_count_;
  std::vector<ExponentTuple> new_to_old_;
  std::vector<ExponentTuple> old_to_new_;
};

/// Splits every generator into fixed and inverted parts, extracts a basis
/// of each part via subgroup_basis, and assembles the change of basis.
/// Verifies the diagonal action, the order product and the round trips
/// before returning; a violation raises ConsistencyFailure.
DiagonalForm diagonalize(const InvolutionSpec& eta);

}  // namespace ustar
