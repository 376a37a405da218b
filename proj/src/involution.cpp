#include "ustar/involution.hpp"

#include <algorithm>
#include <utility>

#include "ustar/errors.hpp"

namespace ustar {

namespace {

ExponentTuple unit_tuple(const GroupSpec& g, int i) {
  ExponentTuple e(g.rank(), 0);
  if (g.orders()[i] > 1) e[i] = 1;
  return e;
}

}  // namespace

InvolutionSpec::InvolutionSpec(GroupSpec group, std::vector<ExponentTuple> images)
    : group_(std::move(group)), images_(std::move(images)) {
  const int t = group_.rank();
  if (static_cast<int>(images_.size()) != t)
    throw NotWellDefined("expected one image per generator");
  for (int i = 0; i < t; ++i) {
    group_.check_element(images_[i]);
    // the image of a_i must have order dividing q_i
    for (int j = 0; j < t; ++j)
      if ((images_[i][j] * group_.orders()[i]) % group_.orders()[j] != 0)
        throw NotWellDefined("image of generator " + std::to_string(i + 1) +
                             " has order not dividing the generator order");
  }
  for (int i = 0; i < t; ++i)
    if (apply(images_[i]) != unit_tuple(group_, i))
      throw NotInvolutory("square of the map does not fix generator " +
                          std::to_string(i + 1));
}

InvolutionSpec InvolutionSpec::identity(const GroupSpec& g) {
  std::vector<ExponentTuple> images;
  for (int i = 0; i < g.rank(); ++i) images.push_back(unit_tuple(g, i));
  return InvolutionSpec(g, std::move(images));
}

InvolutionSpec InvolutionSpec::canonical(const GroupSpec& g) {
  std::vector<ExponentTuple> images;
  for (int i = 0; i < g.rank(); ++i) images.push_back(g.inverse(unit_tuple(g, i)));
  return InvolutionSpec(g, std::move(images));
}

InvolutionSpec InvolutionSpec::swap_generators(const GroupSpec& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.rank() || j >= g.rank() || i == j)
    throw std::invalid_argument("swap indices out of range");
  std::vector<ExponentTuple> images;
  for (int k = 0; k < g.rank(); ++k) images.push_back(unit_tuple(g, k));
  std::swap(images[i], images[j]);
  return InvolutionSpec(g, std::move(images));
}

ExponentTuple InvolutionSpec::apply(const ExponentTuple& g) const {
  group_.check_element(g);
  ExponentTuple acc(group_.rank(), 0);
  for (int i = 0; i < group_.rank(); ++i) {
    if (g[i] == 0) continue;
    for (int j = 0; j < group_.rank(); ++j) acc[j] += g[i] * images_[i][j];
  }
  return group_.reduce(acc);
}

std::vector<std::int64_t> InvolutionSpec::index_permutation() const {
  std::vector<std::int64_t> perm(group_.size());
  for (std::int64_t idx = 0; idx < group_.size(); ++idx)
    perm[idx] = group_.index_of(apply(group_.element_at(idx)));
  return perm;
}

bool InvolutionSpec::is_identity_map() const {
  for (int i = 0; i < group_.rank(); ++i)
    if (images_[i] != unit_tuple(group_, i)) return false;
  return true;
}

EigenSplit eigensplit(const ExponentTuple& g, const InvolutionSpec& eta) {
  const GroupSpec& gr = eta.group();
  const ExponentTuple image = eta.apply(g);
  return {gr.square_root(gr.mul(g, image)),
          gr.square_root(gr.mul(g, gr.inverse(image)))};
}

DiagonalForm::DiagonalForm(InvolutionSpec eta, GroupSpec diag, int l,
                           std::vector<ExponentTuple> new_to_old,
                           std::vector<ExponentTuple> old_to_new)
    : involution_(std::move(eta)),
      diagonal_group_(std::move(diag)),
      inverted_count_(l),
      new_to_old_(std::move(new_to_old)),
      old_to_new_(std::move(old_to_new)) {}

ExponentTuple DiagonalForm::to_original(const ExponentTuple& diag) const {
  diagonal_group_.check_element(diag);
  ExponentTuple acc(original_group().rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    if (diag[i] == 0) continue;
    for (int j = 0; j < original_group().rank(); ++j)
      acc[j] += diag[i] * new_to_old_[i][j];
  }
  return original_group().reduce(acc);
}

ExponentTuple DiagonalForm::to_diagonal(const ExponentTuple& orig) const {
  original_group().check_element(orig);
  ExponentTuple acc(rank(), 0);
  for (int j = 0; j < original_group().rank(); ++j) {
    if (orig[j] == 0) continue;
    for (int i = 0; i < rank(); ++i) acc[i] += orig[j] * old_to_new_[j][i];
  }
  return diagonal_group_.reduce(acc);
}

InvolutionSpec DiagonalForm::diagonal_involution() const {
  std::vector<ExponentTuple> images;
  for (int i = 0; i < rank(); ++i) {
    ExponentTuple e(rank(), 0);
    e[i] = 1;
    if (i < inverted_count_) e = diagonal_group_.inverse(e);
    images.push_back(std::move(e));
  }
  return InvolutionSpec(diagonal_group_, std::move(images));
}

std::int64_t DiagonalForm::power_subgroup_size(std::int64_t i) const {
  return diagonal_group_.power_subgroup_size(i);
}

std::int64_t DiagonalForm::fixed_power_subgroup_size(std::int64_t i) const {
  std::int64_t prod = 1;
  for (int j = inverted_count_; j < rank(); ++j) {
    std::int64_t r = diagonal_group_.orders()[j];
    for (std::int64_t k = 0; k < i && r > 1; ++k) r /= diagonal_group_.p();
    prod *= r;
  }
  return prod;
}

DiagonalForm diagonalize(const InvolutionSpec& eta) {
  const GroupSpec& g = eta.group();
  const int t = g.rank();

  std::vector<ExponentTuple> inverted_parts, fixed_parts;
  for (int i = 0; i < t; ++i) {
    const EigenSplit split = eigensplit(unit_tuple(g, i), eta);
    inverted_parts.push_back(split.inverted);
    fixed_parts.push_back(split.fixed);
  }
  const SubgroupBasis minus = subgroup_basis(g, inverted_parts);
  const SubgroupBasis plus = subgroup_basis(g, fixed_parts);
  const int l = static_cast<int>(minus.generators.size());

  std::vector<ExponentTuple> new_to_old = minus.generators;
  new_to_old.insert(new_to_old.end(), plus.generators.begin(), plus.generators.end());
  std::vector<std::int64_t> new_orders = minus.orders;
  new_orders.insert(new_orders.end(), plus.orders.begin(), plus.orders.end());

  // sanity: the adapted generators present the same group
  std::int64_t prod = 1;
  for (std::int64_t q : new_orders) prod *= q;
  if (prod != g.size())
    throw ConsistencyFailure("diagonal generator orders do not multiply to |G|");
  {
    std::vector<std::int64_t> a, b;
    for (std::int64_t q : g.orders())
      if (q > 1) a.push_back(q);
    b = new_orders;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw ConsistencyFailure("diagonal generator orders are not the invariant factors");
  }

  GroupSpec diag(g.p(), new_orders, g.size_guard());

  // express each original generator in the adapted basis
  std::vector<ExponentTuple> old_to_new;
  for (int j = 0; j < t; ++j) {
    auto sol = solve_left_modular(new_to_old, g.orders(), unit_tuple(g, j));
    if (!sol)
      throw ConsistencyFailure("diagonal generators do not generate the group");
    old_to_new.push_back(diag.reduce(*sol));
  }

  DiagonalForm d(eta, diag, l, std::move(new_to_old), std::move(old_to_new));

  // eta must act diagonally on the new generators
  for (int i = 0; i < d.rank(); ++i) {
    const ExponentTuple& b = d.generators_in_original()[i];
    const ExponentTuple expected = (i < l) ? g.inverse(b) : b;
    if (eta.apply(b) != expected)
      throw ConsistencyFailure("involution does not act diagonally on the new basis");
  }
  // the two coordinate maps must invert each other
  for (int i = 0; i < d.rank(); ++i) {
    ExponentTuple e(d.rank(), 0);
    e[i] = 1;
    if (d.to_diagonal(d.to_original(e)) != e)
      throw ConsistencyFailure("diagonal coordinate round trip failed");
  }
  for (int j = 0; j < t; ++j) {
    const ExponentTuple e = unit_tuple(g, j);
    if (d.to_original(d.to_diagonal(e)) != e)
      throw ConsistencyFailure("original coordinate round trip failed");
  }
  return d;
}

}  // namespace ustar
