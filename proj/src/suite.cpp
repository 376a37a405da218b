#include "ustar/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ustar/errors.hpp"
#include "ustar/structure.hpp"

namespace ustar {

namespace {

std::vector<AlgebraElement> transported(const DiagonalForm& d,
                                        const std::vector<BasisElement>& basis) {
  std::vector<AlgebraElement> out;
  out.reserve(basis.size());
  for (const BasisElement& b : basis)
    out.push_back(to_original_coordinates(d, b.element));
  return out;
}

CheckResult count_check(const std::string& name, const DiagonalForm& d, UnitKind kind,
                        const PrimePower& expected, std::int64_t cap) {
  const UnitSet s = enumerate_units(kind, d.original_group(), d.involution(), cap);
  CheckResult r{name, CheckResult::Status::Fail, ""};
  const auto value = expected.small_value();
  if (value && s.size() == *value) {
    r.status = CheckResult::Status::Pass;
    r.detail = "enumerated " + std::to_string(s.size()) + " = " + expected.str();
  } else {
    r.detail = "enumerated " + std::to_string(s.size()) + ", expected " + expected.str();
  }
  return r;
}

CheckResult order_product_check(const std::string& name,
                                const std::vector<BasisElement>& basis,
                                const PrimePower& expected) {
  PrimePower product{expected.base, 0};
  for (const BasisElement& b : basis) product = product * b.order;
  CheckResult r{name, CheckResult::Status::Fail, ""};
  if (product == expected) {
    r.status = CheckResult::Status::Pass;
    r.detail = "basis orders multiply to " + product.str();
  } else {
    r.detail = "basis orders multiply to " + product.str() + ", expected " + expected.str();
  }
  return r;
}

CheckResult multiset_check(const std::string& name,
                           const std::vector<BasisElement>& basis,
                           const std::vector<std::int64_t>& invariants) {
  std::map<std::int64_t, std::int64_t> from_basis, from_invariants;
  for (const BasisElement& b : basis) ++from_basis[b.order.exponent];
  for (std::size_t i = 0; i < invariants.size(); ++i)
    if (invariants[i] > 0) from_invariants[static_cast<std::int64_t>(i + 1)] = invariants[i];
  CheckResult r{name, CheckResult::Status::Fail, ""};
  if (from_basis == from_invariants) {
    r.status = CheckResult::Status::Pass;
    r.detail = "basis order multiset matches the invariant vector";
  } else {
    r.detail = "basis order multiset disagrees with the invariant vector";
  }
  return r;
}

CheckResult invariant_check(const std::string& name, const UnitSet& enumerated,
                            const std::vector<std::int64_t>& expected) {
  const std::vector<std::int64_t> actual = abelian_invariants(enumerated);
  CheckResult r{name, CheckResult::Status::Fail, ""};
  auto fmt = [](const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  if (actual == expected) {
    r.status = CheckResult::Status::Pass;
    r.detail = "enumerated invariants " + fmt(actual) + " match the closed form";
  } else {
    r.detail = "enumerated invariants " + fmt(actual) + ", closed form " + fmt(expected);
  }
  return r;
}

CheckResult predicted_orders_check(const DiagonalForm& d) {
  CheckResult r{"predicted-orders", CheckResult::Status::Fail, ""};
  std::int64_t checked = 0;
  for (const IndexClass& ic : enumerate_indices(d)) {
    const PrimePower predicted = predicted_unit_order(d, ic.alpha);
    const PrimePower actual = unit_order(basis_unit(d, ic.alpha));
    if (predicted != actual) {
      r.detail = "index with weight " + std::to_string(ic.weight) +
                 ": predicted " + predicted.str() + ", actual " + actual.str();
      return r;
    }
    ++checked;
  }
  r.status = CheckResult::Status::Pass;
  r.detail = "predicted order equals computed order for all " + std::to_string(checked) +
             " generating units";
  return r;
}

}  // namespace

std::vector<CheckResult> verification_suite(const DiagonalForm& d,
                                            const SuiteOptions& options) {
  std::vector<CheckResult> out;
  auto guarded = [&out](const std::string& name, const std::function<CheckResult()>& fn) {
    try {
      out.push_back(fn());
    } catch (const TooLarge& e) {
      out.push_back({name, CheckResult::Status::Skip, e.what()});
    }
  };

  const std::int64_t cap = options.enumeration_cap;
  const GroupSpec& g = d.original_group();
  const InvolutionSpec& eta = d.involution();

  guarded("symmetric-count", [&] {
    return count_check("symmetric-count", d, UnitKind::Symmetric, order_symmetric(d), cap);
  });
  guarded("unitary-count", [&] {
    return count_check("unitary-count", d, UnitKind::Unitary, order_unitary(d), cap);
  });
  guarded("decomposition", [&] { return verify_decomposition(d, cap); });
  guarded("epimorphism-images", [&] { return verify_epimorphisms(d, cap); });
  for (std::int64_t i = 0; i <= options.max_power_index; ++i)
    guarded("power-subgroup-" + std::to_string(i),
            [&, i] { return verify_power_subgroup(d, i, cap); });

  const std::vector<BasisElement> uni_basis = unitary_basis(d);
  const std::vector<BasisElement> sym_basis = symmetric_basis(d);

  guarded("unitary-basis", [&] {
    const UnitSet target = enumerate_units(UnitKind::Unitary, g, eta, cap);
    return verify_basis("unitary-basis", transported(d, uni_basis), target, cap);
  });
  guarded("symmetric-basis", [&] {
    const UnitSet target = enumerate_units(UnitKind::Symmetric, g, eta, cap);
    return verify_basis("symmetric-basis", transported(d, sym_basis), target, cap);
  });
  guarded("generating-set", [&] {
    std::vector<AlgebraElement> units;
    for (const IndexClass& ic : enumerate_indices(d))
      units.push_back(to_original_coordinates(d, basis_unit(d, ic.alpha)));
    const UnitSet target = enumerate_units(UnitKind::All, g, eta, cap);
    return verify_basis("generating-set", units, target, cap);
  });
  guarded("symmetric-invariants", [&] {
    const UnitSet s = enumerate_units(UnitKind::Symmetric, g, eta, cap);
    return invariant_check("symmetric-invariants", s, symmetric_invariants(d));
  });
  guarded("unitary-invariants", [&] {
    const UnitSet u = enumerate_units(UnitKind::Unitary, g, eta, cap);
    return invariant_check("unitary-invariants", u, unitary_invariants(d));
  });
  guarded("predicted-orders", [&] { return predicted_orders_check(d); });
  guarded("unitary-order-product", [&] {
    return order_product_check("unitary-order-product", uni_basis, order_unitary(d));
  });
  guarded("symmetric-order-product", [&] {
    return order_product_check("symmetric-order-product", sym_basis, order_symmetric(d));
  });
  guarded("unitary-independence", [&] {
    CheckResult r = independence_mod_p(transported(d, uni_basis), options.combinatorial_cap);
    r.name = "unitary-independence";
    return r;
  });
  guarded("symmetric-independence", [&] {
    CheckResult r = independence_mod_p(transported(d, sym_basis), options.combinatorial_cap);
    r.name = "symmetric-independence";
    return r;
  });
  guarded("unitary-order-multiset", [&] {
    return multiset_check("unitary-order-multiset", uni_basis, unitary_invariants(d));
  });
  guarded("symmetric-order-multiset", [&] {
    return multiset_check("symmetric-order-multiset", sym_basis, symmetric_invariants(d));
  });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckResult::Status::Fail;
  });
}

}  // namespace ustar
