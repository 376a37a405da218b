#include "ustar/algebra.hpp"

#include <algorithm>
#include <utility>

#include "ustar/errors.hpp"

namespace ustar {

namespace {

void require_same_group(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.group() != y.group())
    throw GroupMismatch("operands live in different group algebras");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Fermat: a^{p-2} mod p
  std::int64_t result = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

AlgebraElement::AlgebraElement(GroupSpec g, std::vector<std::int64_t> reduced)
    : group_(std::move(g)), coeffs_(std::move(reduced)) {}

AlgebraElement AlgebraElement::zero(const GroupSpec& g) {
  return AlgebraElement(g, std::vector<std::int64_t>(g.size(), 0));
}

AlgebraElement AlgebraElement::one(const GroupSpec& g) {
  std::vector<std::int64_t> c(g.size(), 0);
  c[g.index_of(g.identity_element())] = 1;
  return AlgebraElement(g, std::move(c));
}

AlgebraElement AlgebraElement::group_element(const GroupSpec& g, const ExponentTuple& e) {
  std::vector<std::int64_t> c(g.size(), 0);
  c[g.index_of(e)] = 1;
  return AlgebraElement(g, std::move(c));
}

AlgebraElement AlgebraElement::from_coefficients(const GroupSpec& g,
                                                 std::vector<std::int64_t> coeffs) {
  if (static_cast<std::int64_t>(coeffs.size()) != g.size())
    throw GroupMismatch("coefficient vector length must equal |G|");
  const std::int64_t p = g.p();
  for (auto& v : coeffs) v = ((v % p) + p) % p;
  return AlgebraElement(g, std::move(coeffs));
}

std::int64_t AlgebraElement::coefficient(std::int64_t index) const {
  if (index < 0 || index >= group_.size())
    throw GroupMismatch("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(index)];
}

std::int64_t AlgebraElement::coefficient(const ExponentTuple& c) const {
  return coeffs_[static_cast<std::size_t>(group_.index_of(c))];
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t v) { return v == 0; });
}

bool AlgebraElement::is_one() const {
  const std::int64_t id = group_.index_of(group_.identity_element());
  for (std::int64_t i = 0; i < group_.size(); ++i)
    if (coeffs_[static_cast<std::size_t>(i)] != (i == id ? 1 : 0)) return false;
  return true;
}

AlgebraElement AlgebraElement::scaled(std::int64_t c) const {
  const std::int64_t p = group_.p();
  c = ((c % p) + p) % p;
  std::vector<std::int64_t> out(coeffs_);
  for (auto& v : out) v = (v * c) % p;
  return AlgebraElement(group_, std::move(out));
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_group(x, y);
  const std::int64_t p = x.group().p();
  std::vector<std::int64_t> out(x.coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + y.coeffs_[i]) % p;
  return AlgebraElement(x.group_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_group(x, y);
  const std::int64_t p = x.group().p();
  std::vector<std::int64_t> out(x.coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ((out[i] - y.coeffs_[i]) % p + p) % p;
  return AlgebraElement(x.group_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& x) {
  return AlgebraElement::zero(x.group()) - x;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_group(x, y);
  const GroupSpec& g = x.group();
  const std::int64_t n = g.size();
  const std::int64_t p = g.p();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t xi = x.coeffs_[static_cast<std::size_t>(i)];
    if (xi == 0) continue;
    const ExponentTuple gi = g.element_at(i);
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t yj = y.coeffs_[static_cast<std::size_t>(j)];
      if (yj == 0) continue;
      const std::int64_t k = g.index_of(g.mul(gi, g.element_at(j)));
      out[static_cast<std::size_t>(k)] = (out[static_cast<std::size_t>(k)] + xi * yj) % p;
    }
  }
  return AlgebraElement(x.group_, std::move(out));
}

std::int64_t augmentation(const AlgebraElement& x) {
  std::int64_t s = 0;
  for (std::int64_t v : x.coefficients()) s += v;
  return s % x.group().p();
}

AlgebraElement inv_unit(const AlgebraElement& x) {
  const std::int64_t c = augmentation(x);
  if (c == 0) throw AugmentationZero("element has augmentation 0 and is not a unit");
  const GroupSpec& g = x.group();
  const std::int64_t cinv = mod_inverse(c, g.p());
  const AlgebraElement one = AlgebraElement::one(g);
  const AlgebraElement n = one - x.scaled(cinv);  // nilpotent part
  AlgebraElement acc = one;
  AlgebraElement term = n;
  const std::int64_t bound = g.nilpotency_bound();
  for (std::int64_t k = 1; k <= bound && !term.is_zero(); ++k) {
    acc = acc + term;
    term = term * n;
  }
  if (!term.is_zero())
    throw ConsistencyFailure("nilpotent part did not vanish within the bound");
  return acc.scaled(cinv);
}

AlgebraElement power(const AlgebraElement& x, std::int64_t k) {
  if (k < 0) return power(inv_unit(x), -k);
  AlgebraElement result = AlgebraElement::one(x.group());
  AlgebraElement base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    if (k >>= 1) base = base * base;
  }
  return result;
}

AlgebraElement frobenius(const AlgebraElement& x) {
  const GroupSpec& g = x.group();
  const std::int64_t p = g.p();
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.size()), 0);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    const std::int64_t v = x.coefficients()[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const std::int64_t k = g.index_of(g.power(g.element_at(i), p));
    out[static_cast<std::size_t>(k)] = (out[static_cast<std::size_t>(k)] + v) % p;
  }
  return AlgebraElement::from_coefficients(g, std::move(out));
}

AlgebraElement frobenius_power(const AlgebraElement& x, std::int64_t i) {
  AlgebraElement out = x;
  for (std::int64_t k = 0; k < i; ++k) out = frobenius(out);
  return out;
}

PrimePower unit_order(const AlgebraElement& x) {
  if (augmentation(x) != 1)
    throw NotNormalized("unit_order requires augmentation 1");
  const GroupSpec& g = x.group();
  // x = 1 + n with n^{s+1} = 0, so the order divides the least p^m >= s+1
  std::int64_t limit = 0;
  for (std::int64_t v = 1; v < g.nilpotency_bound() + 1; v *= g.p()) ++limit;
  AlgebraElement y = x;
  std::int64_t m = 0;
  while (!y.is_one()) {
    y = frobenius(y);
    if (++m > limit)
      throw ConsistencyFailure("unit order exceeded the nilpotency bound");
  }
  return PrimePower{g.p(), m};
}

AlgebraElement apply_involution(const AlgebraElement& x, const InvolutionSpec& eta) {
  if (x.group() != eta.group())
    throw GroupMismatch("involution belongs to a different group");
  const GroupSpec& g = x.group();
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.size()), 0);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    const std::int64_t v = x.coefficients()[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    out[static_cast<std::size_t>(g.index_of(eta.apply(g.element_at(i))))] = v;
  }
  return AlgebraElement::from_coefficients(g, std::move(out));
}

AlgebraElement apply_index_permutation(const AlgebraElement& x,
                                       const std::vector<std::int64_t>& perm) {
  const GroupSpec& g = x.group();
  if (static_cast<std::int64_t>(perm.size()) != g.size())
    throw GroupMismatch("permutation length must equal |G|");
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.size()), 0);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    const std::int64_t v = x.coefficients()[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = v;
  }
  return AlgebraElement::from_coefficients(g, std::move(out));
}

bool supported_on_power_subgroup(const AlgebraElement& x, std::int64_t i) {
  const GroupSpec& g = x.group();
  // divisor for component j: min(p^i, q_j)
  std::vector<std::int64_t> divisor(static_cast<std::size_t>(g.rank()), 1);
  for (int j = 0; j < g.rank(); ++j) {
    std::int64_t d = 1;
    for (std::int64_t k = 0; k < i && d < g.orders()[j]; ++k) d *= g.p();
    divisor[static_cast<std::size_t>(j)] = std::min(d, g.orders()[j]);
  }
  for (std::int64_t idx = 0; idx < g.size(); ++idx) {
    if (x.coefficients()[static_cast<std::size_t>(idx)] == 0) continue;
    const ExponentTuple c = g.element_at(idx);
    for (int j = 0; j < g.rank(); ++j)
      if (c[static_cast<std::size_t>(j)] % divisor[static_cast<std::size_t>(j)] != 0)
        return false;
  }
  return true;
}

AlgebraElement map_exponents(const AlgebraElement& x, const GroupSpec& target,
                             const std::function<ExponentTuple(const ExponentTuple&)>& f) {
  if (target.p() != x.group().p())
    throw GroupMismatch("exponent transport requires the same prime");
  const GroupSpec& g = x.group();
  std::vector<std::int64_t> out(static_cast<std::size_t>(target.size()), 0);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    const std::int64_t v = x.coefficients()[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const std::int64_t k = target.index_of(f(g.element_at(i)));
    out[static_cast<std::size_t>(k)] =
        (out[static_cast<std::size_t>(k)] + v) % target.p();
  }
  return AlgebraElement::from_coefficients(target, std::move(out));
}

}  // namespace ustar
