#include "ustar/structure.hpp"

#include <stdexcept>

#include "ustar/errors.hpp"

namespace ustar {

const char* label_name(IndexLabel label) {
  switch (label) {
    case IndexLabel::L0: return "L0";
    case IndexLabel::L1: return "L1";
    case IndexLabel::L2: return "L2";
  }
  return "?";
}

bool index_in_set(const GroupSpec& g, const ExponentTuple& alpha) {
  g.check_element(alpha);
  for (std::int64_t a : alpha)
    if (a % g.p() != 0) return true;
  return false;
}

IndexClass classify_index(const DiagonalForm& d, const ExponentTuple& alpha) {
  if (!index_in_set(d.group(), alpha))
    throw std::invalid_argument("every component of alpha is divisible by p");
  IndexClass ic;
  ic.alpha = alpha;
  ic.weight = 0;
  ic.head = 0;
  for (int i = 0; i < d.rank(); ++i) {
    ic.weight += alpha[static_cast<std::size_t>(i)];
    if (i < d.inverted_count()) ic.head += alpha[static_cast<std::size_t>(i)];
  }
  ic.label = ic.head == 0 ? IndexLabel::L0
             : (ic.head % 2 == 1 ? IndexLabel::L1 : IndexLabel::L2);
  return ic;
}

std::vector<IndexClass> enumerate_indices(const DiagonalForm& d) {
  const GroupSpec& g = d.group();
  std::vector<IndexClass> out;
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    ExponentTuple alpha = g.element_at(idx);
    if (!index_in_set(g, alpha)) continue;
    out.push_back(classify_index(d, alpha));
  }
  return out;
}

AlgebraElement basis_unit(const DiagonalForm& d, const ExponentTuple& alpha) {
  const GroupSpec& g = d.group();
  if (!index_in_set(g, alpha))
    throw std::invalid_argument("every component of alpha is divisible by p");
  const AlgebraElement one = AlgebraElement::one(g);
  AlgebraElement z = one;
  for (int i = 0; i < g.rank(); ++i) {
    const std::int64_t a = alpha[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    ExponentTuple e(g.rank(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    z = z * power(AlgebraElement::group_element(g, e) - one, a);
  }
  return one + z;
}

AlgebraElement unitarize(const AlgebraElement& x, const InvolutionSpec& eta) {
  if (augmentation(x) != 1) throw NotNormalized("unitarize requires augmentation 1");
  return apply_involution(x, eta) * inv_unit(x);
}

AlgebraElement symmetrize(const AlgebraElement& x, const InvolutionSpec& eta) {
  if (augmentation(x) != 1) throw NotNormalized("symmetrize requires augmentation 1");
  return apply_involution(x, eta) * x;
}

std::vector<BasisElement> unitary_basis(const DiagonalForm& d) {
  const InvolutionSpec eta = d.diagonal_involution();
  std::vector<BasisElement> out;
  for (const IndexClass& ic : enumerate_indices(d)) {
    if (ic.label != IndexLabel::L1) continue;
    AlgebraElement e = unitarize(basis_unit(d, ic.alpha), eta);
    PrimePower order = unit_order(e);
    out.push_back({ic, std::move(e), order});
  }
  return out;
}

std::vector<BasisElement> symmetric_basis(const DiagonalForm& d) {
  const InvolutionSpec eta = d.diagonal_involution();
  std::vector<BasisElement> out;
  for (const IndexClass& ic : enumerate_indices(d)) {
    if (ic.label == IndexLabel::L1) continue;
    AlgebraElement u = basis_unit(d, ic.alpha);
    AlgebraElement e = ic.label == IndexLabel::L2 ? symmetrize(u, eta) : u;
    PrimePower order = unit_order(e);
    out.push_back({ic, std::move(e), order});
  }
  return out;
}

namespace {

std::int64_t halved(std::int64_t v, const char* what) {
  if (v < 0 || v % 2 != 0) throw ConsistencyFailure(std::string(what) + " is not an even nonnegative number");
  return v / 2;
}

std::int64_t log_p(std::int64_t v, std::int64_t p) {
  std::int64_t e = 0;
  while (v > 1) {
    if (v % p != 0) throw ConsistencyFailure("value is not a power of p");
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::int64_t symmetric_invariant(const DiagonalForm& d, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("invariant index must be >= 1");
  const std::int64_t gm = d.power_subgroup_size(i - 1), g0 = d.power_subgroup_size(i),
                     gp = d.power_subgroup_size(i + 1);
  const std::int64_t hm = d.fixed_power_subgroup_size(i - 1),
                     h0 = d.fixed_power_subgroup_size(i),
                     hp = d.fixed_power_subgroup_size(i + 1);
  return halved(gm - 2 * g0 + gp + hm - 2 * h0 + hp, "symmetric invariant");
}

std::int64_t unitary_invariant(const DiagonalForm& d, std::int64_t i) {
  if (i < 1) throw std::invalid_argument("invariant index must be >= 1");
  const std::int64_t gm = d.power_subgroup_size(i - 1), g0 = d.power_subgroup_size(i),
                     gp = d.power_subgroup_size(i + 1);
  const std::int64_t hm = d.fixed_power_subgroup_size(i - 1),
                     h0 = d.fixed_power_subgroup_size(i),
                     hp = d.fixed_power_subgroup_size(i + 1);
  return halved(gm - 2 * g0 + gp - hm + 2 * h0 - hp, "unitary invariant");
}

namespace {

std::vector<std::int64_t> trimmed_invariants(const DiagonalForm& d, bool symmetric) {
  std::vector<std::int64_t> f;
  const std::int64_t top = log_p(d.group().exponent(), d.group().p());
  for (std::int64_t i = 1; i <= top; ++i)
    f.push_back(symmetric ? symmetric_invariant(d, i) : unitary_invariant(d, i));
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

std::vector<std::int64_t> symmetric_invariants(const DiagonalForm& d) {
  return trimmed_invariants(d, true);
}

std::vector<std::int64_t> unitary_invariants(const DiagonalForm& d) {
  return trimmed_invariants(d, false);
}

std::int64_t symmetric_rank(const DiagonalForm& d) {
  return halved(d.power_subgroup_size(0) - d.power_subgroup_size(1) +
                    d.fixed_power_subgroup_size(0) - d.fixed_power_subgroup_size(1),
                "symmetric rank");
}

std::int64_t unitary_rank(const DiagonalForm& d) {
  return halved(d.power_subgroup_size(0) - d.power_subgroup_size(1) -
                    d.fixed_power_subgroup_size(0) + d.fixed_power_subgroup_size(1),
                "unitary rank");
}

PrimePower order_V(const DiagonalForm& d) {
  return {d.group().p(), d.group().size() - 1};
}

PrimePower order_symmetric(const DiagonalForm& d) {
  return {d.group().p(),
          halved(d.group().size() + d.fixed_subgroup_size() - 2, "symmetric order")};
}

PrimePower order_unitary(const DiagonalForm& d) {
  return {d.group().p(),
          halved(d.group().size() - d.fixed_subgroup_size(), "unitary order")};
}

PrimePower predicted_unit_order(const DiagonalForm& d, const ExponentTuple& alpha) {
  const GroupSpec& g = d.group();
  if (!index_in_set(g, alpha))
    throw std::invalid_argument("every component of alpha is divisible by p");
  std::int64_t best = -1;
  for (int j = 0; j < g.rank(); ++j) {
    const std::int64_t a = alpha[static_cast<std::size_t>(j)];
    if (a == 0) continue;
    // least m with p^m * a >= q_j, i.e. (b_j - 1)^{a p^m} = 0
    std::int64_t m = 0, v = a;
    while (v < g.orders()[static_cast<std::size_t>(j)]) {
      v *= g.p();
      ++m;
    }
    if (best < 0 || m < best) best = m;
  }
  return {g.p(), best};
}

AlgebraElement to_original_coordinates(const DiagonalForm& d, const AlgebraElement& x) {
  if (x.group() != d.group())
    throw GroupMismatch("element does not live over the diagonal group");
  return map_exponents(x, d.original_group(),
                       [&d](const ExponentTuple& c) { return d.to_original(c); });
}

StructureReport structure_report(const DiagonalForm& d) {
  StructureReport r{d,
                    order_V(d),
                    order_symmetric(d),
                    order_unitary(d),
                    symmetric_invariants(d),
                    unitary_invariants(d),
                    symmetric_rank(d),
                    unitary_rank(d),
                    symmetric_basis(d),
                    unitary_basis(d)};

  if (r.order_V != r.order_symmetric * r.order_unitary)
    throw ConsistencyFailure("orders do not multiply to |V|");

  std::int64_t sum_s = 0, weighted_s = 0;
  for (std::size_t i = 0; i < r.f_symmetric.size(); ++i) {
    sum_s += r.f_symmetric[i];
    weighted_s += static_cast<std::int64_t>(i + 1) * r.f_symmetric[i];
  }
  std::int64_t sum_u = 0, weighted_u = 0;
  for (std::size_t i = 0; i < r.f_unitary.size(); ++i) {
    sum_u += r.f_unitary[i];
    weighted_u += static_cast<std::int64_t>(i + 1) * r.f_unitary[i];
  }
  if (sum_s != r.rank_symmetric || sum_u != r.rank_unitary)
    throw ConsistencyFailure("invariant counts do not sum to the ranks");
  if (weighted_s != r.order_symmetric.exponent || weighted_u != r.order_unitary.exponent)
    throw ConsistencyFailure("invariant weights do not sum to the order exponents");

  // index set bookkeeping: |L| = |G| - |G^p|, |L1| = unitary rank,
  // |L0| + |L2| = symmetric rank
  std::int64_t n_total = 0, n_l1 = 0;
  n_total = static_cast<std::int64_t>(r.symmetric_basis.size() + r.unitary_basis.size());
  n_l1 = static_cast<std::int64_t>(r.unitary_basis.size());
  if (n_total != d.power_subgroup_size(0) - d.power_subgroup_size(1))
    throw ConsistencyFailure("index set size is not |G| - |G^p|");
  if (n_l1 != r.rank_unitary ||
      static_cast<std::int64_t>(r.symmetric_basis.size()) != r.rank_symmetric)
    throw ConsistencyFailure("index class sizes do not match the ranks");

  return r;
}

}  // namespace ustar
