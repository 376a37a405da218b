#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "ustar/errors.hpp"
#include "ustar/oracle.hpp"
#include "ustar/structure.hpp"

using namespace ustar;

namespace {

const GroupSpec c3(3, {3});
const InvolutionSpec c3_star = InvolutionSpec::canonical(c3);

std::set<std::vector<std::int64_t>> coeff_set(const UnitSet& s) {
  std::set<std::vector<std::int64_t>> out;
  for (const AlgebraElement& x : s.elements()) out.insert(x.coefficients());
  return out;
}

}  // namespace

TEST_CASE("enumerations over F3[C3]") {
  const UnitSet all = enumerate_units(UnitKind::All, c3, c3_star);
  CHECK(all.size() == 9);
  const UnitSet sym = enumerate_units(UnitKind::Symmetric, c3, c3_star);
  CHECK(coeff_set(sym) ==
        std::set<std::vector<std::int64_t>>{{1, 0, 0}, {2, 1, 1}, {0, 2, 2}});
  const UnitSet uni = enumerate_units(UnitKind::Unitary, c3, c3_star);
  CHECK(coeff_set(uni) ==
        std::set<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("enumeration respects the cap") {
  const GroupSpec c27(3, {27});
  CHECK_THROWS_AS(enumerate_units(UnitKind::All, c27, InvolutionSpec::canonical(c27)),
                  TooLarge);
  CHECK_NOTHROW(enumerate_units(UnitKind::All, c3, c3_star, 9));
  CHECK_THROWS_AS(enumerate_units(UnitKind::All, c3, c3_star, 8), TooLarge);
}

TEST_CASE("trivial group enumeration") {
  const GroupSpec t(3, {1});
  const UnitSet all = enumerate_units(UnitKind::All, t, InvolutionSpec::identity(t));
  CHECK(all.size() == 1);
  CHECK(all.contains(AlgebraElement::one(t)));
}

TEST_CASE("closure") {
  const AlgebraElement a = AlgebraElement::group_element(c3, {1});
  CHECK(closure(c3, {a}).size() == 3);
  CHECK(closure(c3, {}).size() == 1);
  const AlgebraElement s = AlgebraElement::from_coefficients(c3, {0, 2, 2});  // 1 + 2 sigma
  CHECK(closure(c3, {s}).size() == 3);
  CHECK_THROWS_AS(closure(c3, {AlgebraElement::zero(c3)}), NotNormalized);
  CHECK_THROWS_AS(closure(c3, {a}, 2), TooLarge);
}

TEST_CASE("unit set semantics") {
  UnitSet s(c3);
  const AlgebraElement a = AlgebraElement::group_element(c3, {1});
  CHECK(s.insert(a));
  CHECK(!s.insert(a));
  CHECK(s.contains(a));
  CHECK(s.size() == 1);
  CHECK_THROWS_AS(s.insert(AlgebraElement::zero(c3)), NotNormalized);
  CHECK_THROWS_AS(s.insert(AlgebraElement::one(GroupSpec(3, {9}))), GroupMismatch);
}

TEST_CASE("is_group") {
  CHECK(is_group(enumerate_units(UnitKind::All, c3, c3_star)));
  CHECK(is_group(enumerate_units(UnitKind::Symmetric, c3, c3_star)));
  UnitSet bad(c3);
  bad.insert(AlgebraElement::one(c3));
  bad.insert(AlgebraElement::group_element(c3, {1}));  // no a^2: not closed
  CHECK(!is_group(bad));
  UnitSet no_identity(c3);
  no_identity.insert(AlgebraElement::group_element(c3, {1}));
  CHECK(!is_group(no_identity));
}

TEST_CASE("abelian invariants from power maps") {
  // V(F3[C3]) is C3 x C3
  CHECK(abelian_invariants(enumerate_units(UnitKind::All, c3, c3_star)) ==
        std::vector<std::int64_t>{2});
  // V_* and S_* of F3[C9] are each C9 x C3 x C3
  const GroupSpec c9(3, {9});
  const InvolutionSpec c9_star = InvolutionSpec::canonical(c9);
  CHECK(abelian_invariants(enumerate_units(UnitKind::Unitary, c9, c9_star)) ==
        std::vector<std::int64_t>{2, 1});
  CHECK(abelian_invariants(enumerate_units(UnitKind::Symmetric, c9, c9_star)) ==
        std::vector<std::int64_t>{2, 1});
  // trivial group
  UnitSet trivial(c3);
  trivial.insert(AlgebraElement::one(c3));
  CHECK(abelian_invariants(trivial).empty());
  // non-groups are rejected
  UnitSet bad(c3);
  bad.insert(AlgebraElement::one(c3));
  bad.insert(AlgebraElement::group_element(c3, {1}));
  CHECK_THROWS_AS(abelian_invariants(bad), NotAGroup);
}

TEST_CASE("verify_basis certifies and rejects") {
  const UnitSet all = enumerate_units(UnitKind::All, c3, c3_star);
  const UnitSet uni = enumerate_units(UnitKind::Unitary, c3, c3_star);
  const AlgebraElement a = AlgebraElement::group_element(c3, {1});
  CHECK(verify_basis("t", {a}, uni).passed());

  const DiagonalForm d = diagonalize(c3_star);
  const AlgebraElement u1 = basis_unit(d, {1});
  const AlgebraElement u2 = basis_unit(d, {2});
  CHECK(verify_basis("t", {u1, u2}, all).passed());

  // 1+sigma and 1+2sigma generate only 3 of the 9 units
  const AlgebraElement s1 = AlgebraElement::from_coefficients(c3, {2, 1, 1});
  const AlgebraElement s2 = AlgebraElement::from_coefficients(c3, {0, 2, 2});
  CHECK(!verify_basis("t", {s1, s2}, all).passed());
}

TEST_CASE("decomposition, epimorphism and power-subgroup identities") {
  for (const GroupSpec& g : {GroupSpec(3, {3}), GroupSpec(3, {9}), GroupSpec(5, {5})}) {
    for (const InvolutionSpec& eta :
         {InvolutionSpec::canonical(g), InvolutionSpec::identity(g)}) {
      const DiagonalForm d = diagonalize(eta);
      CHECK(verify_decomposition(d).passed());
      CHECK(verify_epimorphisms(d).passed());
      for (std::int64_t i : {0, 1, 2}) CHECK(verify_power_subgroup(d, i).passed());
    }
  }
  const GroupSpec g33(3, {3, 3});
  const DiagonalForm swap = diagonalize(InvolutionSpec::swap_generators(g33, 0, 1));
  CHECK(verify_decomposition(swap).passed());
  CHECK(verify_epimorphisms(swap).passed());
  CHECK(verify_power_subgroup(swap, 1).passed());
}

TEST_CASE("identity involution edge cases in the identities") {
  const DiagonalForm d = diagonalize(InvolutionSpec::identity(c3));
  // S = V, unitary subgroup trivial
  CHECK(enumerate_units(UnitKind::Symmetric, c3, d.involution()).size() == 9);
  CHECK(enumerate_units(UnitKind::Unitary, c3, d.involution()).size() == 1);
  CHECK(verify_decomposition(d).passed());
  CHECK(verify_epimorphisms(d).passed());
}

TEST_CASE("independence mod p") {
  const DiagonalForm d = diagonalize(InvolutionSpec::canonical(GroupSpec(3, {9})));
  std::vector<AlgebraElement> basis;
  for (const BasisElement& b : unitary_basis(d)) basis.push_back(b.element);
  REQUIRE(basis.size() == 3);
  CHECK(independence_mod_p(basis).passed());

  // repeated element: c = (1, p-1) yields x * x^{p-1} = x^p, which lies in V^p
  CHECK(!independence_mod_p({basis[0], basis[0]}).passed());
  // empty list passes vacuously
  CHECK(independence_mod_p({}).passed());
  // cap
  CHECK_THROWS_AS(independence_mod_p(basis, 26), TooLarge);
  CHECK_NOTHROW(independence_mod_p(basis, 27));
}

TEST_CASE("verify checks report skipped work as TooLarge upstream") {
  const GroupSpec c27(3, {27});
  const DiagonalForm d = diagonalize(InvolutionSpec::canonical(c27));
  CHECK_THROWS_AS(verify_decomposition(d), TooLarge);
  CHECK_THROWS_AS(verify_epimorphisms(d), TooLarge);
}
