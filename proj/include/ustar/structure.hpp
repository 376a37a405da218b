#pragma once

// The subgroup structure of V(FG) under an involution: index classes,
// the generating units u_alpha = 1 + (b_1-1)^{a_1}...(b_t-1)^{a_t},
// the bases of the unitary and symmetric subgroups, and their abelian
// invariants in closed form.

#include <cstdint>
#include <string>
#include <vector>

#include "ustar/algebra.hpp"
#include "ustar/involution.hpp"
#include "ustar/prime_power.hpp"

namespace ustar {

/// Classification of an index tuple by the parity of its head sum
/// (the sum over the inverted generators): L0 head zero, L1 head odd,
/// L2 head even and positive.
enum class IndexLabel { L0, L1, L2 };

const char* label_name(IndexLabel label);

struct IndexClass {
  ExponentTuple alpha;  // diagonal coordinates
  std::int64_t weight;  // sum of all components
  std::int64_t head;    // sum over the first l components
  IndexLabel label;
};

/// True when some component of alpha is not divisible by p.
bool index_in_set(const GroupSpec& g, const ExponentTuple& alpha);

IndexClass classify_index(const DiagonalForm& d, const ExponentTuple& alpha);

/// All index tuples with some component not divisible by p, in
/// mixed-radix order.  The count is |G| - |G^p|.
std::vector<IndexClass> enumerate_indices(const DiagonalForm& d);

/// u_alpha = 1 + prod (b_i - 1)^{alpha_i} over the diagonal generators.
/// Requires some alpha_i not divisible by p.
AlgebraElement basis_unit(const DiagonalForm& d, const ExponentTuple& alpha);

/// x -> x^* x^{-1}; lands in the unitary subgroup.  Requires aug(x) = 1.
AlgebraElement unitarize(const AlgebraElement& x, const InvolutionSpec& eta);

/// x -> x^* x; lands in the symmetric subgroup.  Requires aug(x) = 1.
AlgebraElement symmetrize(const AlgebraElement& x, const InvolutionSpec& eta);

struct BasisElement {
  IndexClass index;
  AlgebraElement element;  // over the diagonal group
  PrimePower order;
};

/// Basis of the unitary subgroup: unitarize(u_alpha) for alpha in L1.
std::vector<BasisElement> unitary_basis(const DiagonalForm& d);

/// Basis of the symmetric subgroup: symmetrize(u_alpha) for alpha in L2
/// together with u_alpha for alpha in L0.
std::vector<BasisElement> symmetric_basis(const DiagonalForm& d);

/// Number of cyclic factors of order exactly p^i (i >= 1).
std::int64_t symmetric_invariant(const DiagonalForm& d, std::int64_t i);
std::int64_t unitary_invariant(const DiagonalForm& d, std::int64_t i);

/// Invariant vectors (f_1, f_2, ...) with trailing zeros trimmed.
std::vector<std::int64_t> symmetric_invariants(const DiagonalForm& d);
std::vector<std::int64_t> unitary_invariants(const DiagonalForm& d);

std::int64_t symmetric_rank(const DiagonalForm& d);
std::int64_t unitary_rank(const DiagonalForm& d);

PrimePower order_V(const DiagonalForm& d);          // p^{|G|-1}
PrimePower order_symmetric(const DiagonalForm& d);  // p^{(|G|+|G_eta|-2)/2}
PrimePower order_unitary(const DiagonalForm& d);    // p^{(|G|-|G_eta|)/2}

/// Least p^m with p^m * alpha_j >= q_j for some j with alpha_j > 0;
/// equals the order of u_alpha.
PrimePower predicted_unit_order(const DiagonalForm& d, const ExponentTuple& alpha);

/// Basis element transported to the original coordinates.
AlgebraElement to_original_coordinates(const DiagonalForm& d, const AlgebraElement& x);

struct StructureReport {
  DiagonalForm diagonal;
  PrimePower order_V;
  PrimePower order_symmetric;
  PrimePower order_unitary;
  std::vector<std::int64_t> f_symmetric;
  std::vector<std::int64_t> f_unitary;
  std::int64_t rank_symmetric = 0;
  std::int64_t rank_unitary = 0;
  std::vector<BasisElement> symmetric_basis;
  std::vector<BasisElement> unitary_basis;
};

/// Assembles orders, invariant vectors, ranks and both bases, and checks
/// the internal identities (order product, rank sums, invariant sums)
/// before returning.
StructureReport structure_report(const DiagonalForm& d);

}  // namespace ustar
