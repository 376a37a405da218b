#include "ustar/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ustar/errors.hpp"

namespace ustar {

namespace {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GroupSpec::GroupSpec(std::int64_t p, std::vector<std::int64_t> orders,
                     std::int64_t size_guard)
    : p_(p), orders_(std::move(orders)), size_(1), size_guard_(size_guard) {
  if (!is_odd_prime(p_)) throw std::invalid_argument("p must be an odd prime");
  if (p_ > (std::int64_t{1} << 31)) throw std::invalid_argument("p out of supported range");
  if (size_guard_ < 1) throw std::invalid_argument("size guard must be positive");
  for (std::int64_t q : orders_) {
    if (q < 1) throw std::invalid_argument("generator orders must be >= 1");
    std::int64_t r = q;
    while (r % p_ == 0) r /= p_;
    if (r != 1) throw std::invalid_argument("generator orders must be powers of p");
    if (q > size_guard_ / size_)
      throw TooLarge("|G| exceeds the size guard (" + std::to_string(size_guard_) + ")");
    size_ *= q;
  }
}

std::int64_t GroupSpec::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t q : orders_) e = std::max(e, q);
  return e;
}

std::int64_t GroupSpec::nilpotency_bound() const {
  std::int64_t s = 0;
  for (std::int64_t q : orders_) s += q - 1;
  return s;
}

std::int64_t GroupSpec::power_subgroup_size(std::int64_t i) const {
  std::int64_t prod = 1;
  for (std::int64_t q : orders_) {
    std::int64_t r = q;
    for (std::int64_t k = 0; k < i && r > 1; ++k) r /= p_;
    prod *= r;
  }
  return prod;
}

std::int64_t GroupSpec::index_of(const ExponentTuple& c) const {
  check_element(c);
  std::int64_t idx = 0;
  for (std::size_t j = orders_.size(); j-- > 0;) idx = idx * orders_[j] + c[j];
  return idx;
}

ExponentTuple GroupSpec::element_at(std::int64_t index) const {
  if (index < 0 || index >= size_) throw GroupMismatch("element index out of range");
  ExponentTuple c(orders_.size(), 0);
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    c[j] = index % orders_[j];
    index /= orders_[j];
  }
  return c;
}

bool GroupSpec::is_identity(const ExponentTuple& c) const {
  check_element(c);
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

ExponentTuple GroupSpec::reduce(const ExponentTuple& c) const {
  if (c.size() != orders_.size()) throw GroupMismatch("exponent tuple has wrong rank");
  ExponentTuple out(c.size(), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::int64_t q = orders_[j];
    out[j] = ((c[j] % q) + q) % q;
  }
  return out;
}

ExponentTuple GroupSpec::mul(const ExponentTuple& a, const ExponentTuple& b) const {
  check_element(a);
  check_element(b);
  ExponentTuple out(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = (a[j] + b[j]) % orders_[j];
  return out;
}

ExponentTuple GroupSpec::inverse(const ExponentTuple& a) const {
  check_element(a);
  ExponentTuple out(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = (orders_[j] - a[j]) % orders_[j];
  return out;
}

ExponentTuple GroupSpec::power(const ExponentTuple& a, std::int64_t k) const {
  check_element(a);
  ExponentTuple out(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::int64_t q = orders_[j];
    out[j] = (((a[j] * (k % q)) % q) + q) % q;
  }
  return out;
}

ExponentTuple GroupSpec::square_root(const ExponentTuple& a) const {
  return power(a, (exponent() + 1) / 2);
}

std::int64_t GroupSpec::element_order(const ExponentTuple& a) const {
  check_element(a);
  std::int64_t o = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::int64_t q = orders_[j];
    o = std::lcm(o, q / std::gcd(q, a[j]));
  }
  return o;
}

void GroupSpec::check_element(const ExponentTuple& c) const {
  if (c.size() != orders_.size()) throw GroupMismatch("exponent tuple has wrong rank");
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] < 0 || c[j] >= orders_[j])
      throw GroupMismatch("exponent tuple component out of range");
}

std::string GroupSpec::describe() const {
  if (orders_.empty()) return "C1";
  std::string s;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (j) s += " x ";
    s += "C" + std::to_string(orders_[j]);
  }
  return s;
}

SubgroupBasis subgroup_basis(const GroupSpec& g, const std::vector<ExponentTuple>& gens) {
  const int t = g.rank();
  SubgroupBasis out;
  if (t == 0) return out;

  ZMat stacked;
  stacked.reserve(gens.size() + static_cast<std::size_t>(t));
  for (const auto& gen : gens) {
    g.check_element(gen);
    stacked.push_back(gen);
  }
  for (int j = 0; j < t; ++j) {
    ZVec rel(t, 0);
    rel[j] = g.orders()[j];
    stacked.push_back(std::move(rel));
  }

  // Lattice L spanned by generators and relations; a basis of L is read off
  // the Smith form as d_i times the rows of col_ops_inv.
  SmithForm s1 = smith_normal_form(std::move(stacked));
  ZMat lattice(t, ZVec(t, 0));
  for (int i = 0; i < t; ++i) {
    const std::int64_t di = s1.diagonal[i][i];
    if (di == 0) throw ConsistencyFailure("subgroup lattice is not full rank");
    for (int j = 0; j < t; ++j) lattice[i][j] = di * s1.col_ops_inv[i][j];
  }

  // Relation lattice expressed in the basis of L: C = diag(q) * V * D^{-1}.
  ZMat c(t, ZVec(t, 0));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const std::int64_t num = g.orders()[i] * s1.col_ops[i][j];
      const std::int64_t dj = s1.diagonal[j][j];
      if (num % dj != 0)
        throw ConsistencyFailure("relation lattice escapes the generator span");
      c[i][j] = num / dj;
    }

  // Second Smith pass diagonalizes the quotient L / relations.
  SmithForm s2 = smith_normal_form(std::move(c));
  const ZMat basis_rows = z_mul(s2.col_ops_inv, lattice);

  std::vector<std::pair<ExponentTuple, std::int64_t>> found;
  for (int i = 0; i < t; ++i) {
    const std::int64_t order = s2.diagonal[i][i];
    if (order <= 1) continue;
    ExponentTuple gen = g.reduce(basis_rows[i]);
    if (g.element_order(gen) != order)
      throw ConsistencyFailure("subgroup basis generator has unexpected order");
    found.emplace_back(std::move(gen), order);
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  for (auto& [gen, order] : found) {
    out.generators.push_back(std::move(gen));
    out.orders.push_back(order);
  }
  return out;
}

}  // namespace ustar
