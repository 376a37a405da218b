#include "ustar/oracle.hpp"

#include <algorithm>
#include <utility>

#include "ustar/errors.hpp"
#include "ustar/structure.hpp"

namespace ustar {

std::size_t UnitSet::CoeffHash::operator()(const std::vector<std::int64_t>& v) const {
  // FNV-1a over the coefficient bytes
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t x : v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::size_t>(x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

UnitSet::UnitSet(GroupSpec g) : group_(std::move(g)) {}

bool UnitSet::insert(const AlgebraElement& x) {
  if (x.group() != group_) throw GroupMismatch("element belongs to a different group algebra");
  if (augmentation(x) != 1) throw NotNormalized("unit sets hold normalized units only");
  if (!index_.insert(x.coefficients()).second) return false;
  elements_.push_back(x);
  return true;
}

bool UnitSet::contains(const AlgebraElement& x) const {
  if (x.group() != group_) throw GroupMismatch("element belongs to a different group algebra");
  return index_.count(x.coefficients()) > 0;
}

bool UnitSet::set_equals(const UnitSet& o) const {
  if (group_ != o.group_ || size() != o.size()) return false;
  for (const AlgebraElement& x : elements_)
    if (!o.contains(x)) return false;
  return true;
}

namespace {

// p^{|G|-1} checked against the cap; throws TooLarge beyond it.
std::int64_t checked_unit_count(const GroupSpec& g, std::int64_t cap) {
  std::int64_t total = 1;
  for (std::int64_t k = 1; k < g.size(); ++k) {
    if (total > cap / g.p())
      throw TooLarge("|V| = " + std::to_string(g.p()) + "^" +
                     std::to_string(g.size() - 1) + " exceeds the enumeration cap " +
                     std::to_string(cap));
    total *= g.p();
  }
  if (total > cap)
    throw TooLarge("|V| exceeds the enumeration cap " + std::to_string(cap));
  return total;
}

}  // namespace

UnitSet enumerate_units(UnitKind kind, const GroupSpec& g, const InvolutionSpec& eta,
                        std::int64_t cap) {
  if (eta.group() != g) throw GroupMismatch("involution belongs to a different group");
  checked_unit_count(g, cap);
  const std::int64_t n = g.size();
  const std::int64_t p = g.p();
  const std::vector<std::int64_t> perm = eta.index_permutation();
  const AlgebraElement one = AlgebraElement::one(g);

  UnitSet out(g);
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::int64_t rest = 0;
    for (std::int64_t i = 1; i < n; ++i) rest += c[static_cast<std::size_t>(i)];
    c[0] = ((1 - rest) % p + p) % p;

    bool keep = true;
    if (kind == UnitKind::Symmetric) {
      for (std::int64_t i = 0; i < n && keep; ++i)
        keep = c[static_cast<std::size_t>(i)] ==
               c[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }
    AlgebraElement x = AlgebraElement::from_coefficients(g, c);
    if (kind == UnitKind::Unitary)
      keep = (x * apply_index_permutation(x, perm)) == one;
    if (keep) out.insert(x);

    // odometer over the free positions 1..n-1
    std::int64_t pos = 1;
    while (pos < n && ++c[static_cast<std::size_t>(pos)] == p) {
      c[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos >= n) break;
  }
  return out;
}

UnitSet closure(const GroupSpec& g, const std::vector<AlgebraElement>& gens,
                std::int64_t cap) {
  for (const AlgebraElement& x : gens) {
    if (x.group() != g) throw GroupMismatch("generator belongs to a different group algebra");
    if (augmentation(x) != 1) throw NotNormalized("closure generators must be normalized");
  }
  UnitSet out(g);
  std::vector<AlgebraElement> frontier{AlgebraElement::one(g)};
  out.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<AlgebraElement> next;
    for (const AlgebraElement& x : frontier)
      for (const AlgebraElement& gen : gens) {
        AlgebraElement y = x * gen;
        if (out.insert(y)) {
          if (out.size() > cap)
            throw TooLarge("closure exceeds the enumeration cap " + std::to_string(cap));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

bool is_group(const UnitSet& t) {
  if (t.size() == 0) return false;
  if (!t.contains(AlgebraElement::one(t.group()))) return false;
  // every normalized vector present means t is all of V
  std::int64_t full = 1;
  bool overflow = false;
  for (std::int64_t k = 1; k < t.group().size() && !overflow; ++k) {
    if (full > t.size()) overflow = true;
    full *= t.group().p();
  }
  if (!overflow && full == t.size()) return true;
  for (const AlgebraElement& x : t.elements())
    for (const AlgebraElement& y : t.elements())
      if (!t.contains(x * y)) return false;
  return true;
}

namespace {

std::int64_t exact_log_p(std::int64_t v, std::int64_t p) {
  std::int64_t e = 0;
  while (v > 1) {
    if (v % p != 0) throw ConsistencyFailure("set size is not a power of p");
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::vector<std::int64_t> abelian_invariants(const UnitSet& t) {
  if (!is_group(t)) throw NotAGroup("element set is not multiplicatively closed");
  const std::int64_t p = t.group().p();
  std::vector<std::int64_t> ranks;
  std::vector<AlgebraElement> current = t.elements();
  std::int64_t log_cur = exact_log_p(t.size(), p);
  while (log_cur > 0) {
    UnitSet next(t.group());
    for (const AlgebraElement& x : current) next.insert(frobenius(x));
    const std::int64_t log_next = exact_log_p(next.size(), p);
    ranks.push_back(log_cur - log_next);
    current = next.elements();
    log_cur = log_next;
  }
  std::vector<std::int64_t> f(ranks.size(), 0);
  for (std::size_t i = 0; i < ranks.size(); ++i)
    f[i] = ranks[i] - (i + 1 < ranks.size() ? ranks[i + 1] : 0);
  return f;
}

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    case CheckResult::Status::Skip: return "skipped";
  }
  return "?";
}

CheckResult verify_basis(const std::string& name,
                         const std::vector<AlgebraElement>& claimed,
                         const UnitSet& target, std::int64_t cap) {
  CheckResult r{name, CheckResult::Status::Fail, ""};
  const UnitSet generated = closure(target.group(), claimed, cap);
  PrimePower product{target.group().p(), 0};
  for (const AlgebraElement& x : claimed) product = product * unit_order(x);
  const std::int64_t target_log = exact_log_p(target.size(), target.group().p());
  if (!generated.set_equals(target)) {
    r.detail = "closure has " + std::to_string(generated.size()) + " elements, target has " +
               std::to_string(target.size());
    return r;
  }
  if (product.exponent != target_log) {
    r.detail = "order product " + product.str() + " differs from |target| = " +
               PrimePower{target.group().p(), target_log}.str();
    return r;
  }
  r.status = CheckResult::Status::Pass;
  r.detail = std::to_string(claimed.size()) + " generators, closure = target (" +
             std::to_string(target.size()) + " elements), order product " + product.str();
  return r;
}

CheckResult verify_decomposition(const DiagonalForm& d, std::int64_t cap) {
  CheckResult r{"decomposition", CheckResult::Status::Fail, ""};
  const GroupSpec& g = d.original_group();
  const InvolutionSpec& eta = d.involution();
  const UnitSet all = enumerate_units(UnitKind::All, g, eta, cap);
  const UnitSet sym = enumerate_units(UnitKind::Symmetric, g, eta, cap);
  const UnitSet uni = enumerate_units(UnitKind::Unitary, g, eta, cap);

  const AlgebraElement one = AlgebraElement::one(g);
  for (const AlgebraElement& x : sym.elements())
    if (uni.contains(x) && x != one) {
      r.detail = "symmetric and unitary subgroups intersect nontrivially";
      return r;
    }
  if (sym.size() * uni.size() != all.size()) {
    r.detail = "|S| * |U| = " + std::to_string(sym.size() * uni.size()) +
               " but |V| = " + std::to_string(all.size());
    return r;
  }
  UnitSet product(g);
  for (const AlgebraElement& s : sym.elements())
    for (const AlgebraElement& u : uni.elements()) product.insert(s * u);
  if (product.size() != all.size()) {
    r.detail = "set product covers only " + std::to_string(product.size()) + " of " +
               std::to_string(all.size()) + " units";
    return r;
  }
  r.status = CheckResult::Status::Pass;
  r.detail = "|S| = " + std::to_string(sym.size()) + ", |U| = " + std::to_string(uni.size()) +
             ", product covers all " + std::to_string(all.size()) +
             " units with trivial intersection";
  return r;
}

CheckResult verify_epimorphisms(const DiagonalForm& d, std::int64_t cap) {
  CheckResult r{"epimorphism-images", CheckResult::Status::Fail, ""};
  const GroupSpec& g = d.original_group();
  const InvolutionSpec& eta = d.involution();
  const UnitSet all = enumerate_units(UnitKind::All, g, eta, cap);
  const UnitSet sym = enumerate_units(UnitKind::Symmetric, g, eta, cap);
  const UnitSet uni = enumerate_units(UnitKind::Unitary, g, eta, cap);
  UnitSet image_uni(g), image_sym(g);
  for (const AlgebraElement& x : all.elements()) {
    image_uni.insert(unitarize(x, eta));
    image_sym.insert(symmetrize(x, eta));
  }
  if (!image_uni.set_equals(uni)) {
    r.detail = "image of x -> x^*x^{-1} has " + std::to_string(image_uni.size()) +
               " elements, unitary subgroup has " + std::to_string(uni.size());
    return r;
  }
  if (!image_sym.set_equals(sym)) {
    r.detail = "image of x -> x^*x has " + std::to_string(image_sym.size()) +
               " elements, symmetric subgroup has " + std::to_string(sym.size());
    return r;
  }
  r.status = CheckResult::Status::Pass;
  r.detail = "both maps are onto: images of sizes " + std::to_string(image_uni.size()) +
             " and " + std::to_string(image_sym.size()) + " match the enumerations";
  return r;
}

CheckResult verify_power_subgroup(const DiagonalForm& d, std::int64_t i, std::int64_t cap) {
  CheckResult r{"power-subgroup-" + std::to_string(i), CheckResult::Status::Fail, ""};
  const GroupSpec& g = d.original_group();
  const InvolutionSpec& eta = d.involution();
  for (const UnitKind kind : {UnitKind::Symmetric, UnitKind::Unitary}) {
    const UnitSet side = enumerate_units(kind, g, eta, cap);
    UnitSet powers(g), supported(g);
    for (const AlgebraElement& x : side.elements()) {
      powers.insert(frobenius_power(x, i));
      if (supported_on_power_subgroup(x, i)) supported.insert(x);
    }
    if (!powers.set_equals(supported)) {
      r.detail = std::string(kind == UnitKind::Symmetric ? "symmetric" : "unitary") +
                 " side: p^" + std::to_string(i) + "-powers (" +
                 std::to_string(powers.size()) + ") differ from units supported on G^{p^" +
                 std::to_string(i) + "} (" + std::to_string(supported.size()) + ")";
      return r;
    }
  }
  r.status = CheckResult::Status::Pass;
  r.detail = "p^" + std::to_string(i) +
             "-powers coincide with the units supported on the power subgroup, both sides";
  return r;
}

namespace {

// DFS over exponent vectors c in {0..p-1}^r reusing partial products.
bool independence_search(const std::vector<AlgebraElement>& claimed, std::size_t depth,
                         const AlgebraElement& partial, bool nontrivial,
                         std::vector<std::int64_t>& c, std::string& witness) {
  if (depth == claimed.size()) {
    if (!nontrivial) return true;
    if (supported_on_power_subgroup(partial, 1)) {
      witness = "(";
      for (std::size_t j = 0; j < c.size(); ++j)
        witness += (j ? "," : "") + std::to_string(c[j]);
      witness += ")";
      return false;
    }
    return true;
  }
  AlgebraElement acc = partial;
  const std::int64_t p = partial.group().p();
  for (std::int64_t k = 0; k < p; ++k) {
    if (k > 0) acc = acc * claimed[depth];
    c[depth] = k;
    if (!independence_search(claimed, depth + 1, acc, nontrivial || k > 0, c, witness))
      return false;
  }
  return true;
}

}  // namespace

CheckResult independence_mod_p(const std::vector<AlgebraElement>& claimed, std::int64_t cap) {
  CheckResult r{"independence-mod-p", CheckResult::Status::Fail, ""};
  if (claimed.empty()) {
    r.status = CheckResult::Status::Pass;
    r.detail = "empty list is independent vacuously";
    return r;
  }
  const GroupSpec& g = claimed.front().group();
  for (const AlgebraElement& x : claimed) {
    if (x.group() != g) throw GroupMismatch("claimed elements live over different groups");
    if (augmentation(x) != 1) throw NotNormalized("claimed elements must be normalized");
  }
  std::int64_t combos = 1;
  for (std::size_t j = 0; j < claimed.size(); ++j) {
    if (combos > cap / g.p())
      throw TooLarge("p^" + std::to_string(claimed.size()) +
                     " products exceed the combinatorial cap " + std::to_string(cap));
    combos *= g.p();
  }
  std::vector<std::int64_t> c(claimed.size(), 0);
  std::string witness;
  if (!independence_search(claimed, 0, AlgebraElement::one(g), false, c, witness)) {
    r.detail = "combination with exponents " + witness + " lies in V^p";
    return r;
  }
  r.status = CheckResult::Status::Pass;
  r.detail = "all " + std::to_string(combos - 1) +
             " nontrivial products stay outside V^p";
  return r;
}

}  // namespace ustar
