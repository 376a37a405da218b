"""Smoke tests for the ustar python module (built by CMake / scikit-build-core)."""

import json

import pytest

ustar = pytest.importorskip("ustar")


def test_group_basics():
    g = ustar.GroupSpec(3, [9])
    assert g.p == 3
    assert g.size == 9
    assert g.exponent == 9
    assert g.describe() == "C9"
    assert g.mul([7], [4]) == [2]
    assert g.power_subgroup_size(1) == 3


def test_invalid_group_raises():
    with pytest.raises(ValueError):
        ustar.GroupSpec(4, [4])
    with pytest.raises(RuntimeError):
        ustar.GroupSpec(3, [3] * 9)  # exceeds the size guard


def test_c9_canonical_structure():
    g = ustar.GroupSpec(3, [9])
    eta = ustar.InvolutionSpec.canonical(g)
    d = ustar.diagonalize(eta)
    assert d.inverted_count == 1
    assert d.rank == 1
    rep = ustar.structure_report(d)
    assert rep.f_symmetric == [2, 1]
    assert rep.f_unitary == [2, 1]
    assert str(rep.order_V) == "3^8"
    assert str(rep.order_symmetric) == "3^4"
    assert str(rep.order_unitary) == "3^4"
    assert rep.rank_unitary == 3
    assert len(rep.unitary_basis) == 3
    assert [str(b.order) for b in rep.unitary_basis] == ["3^2", "3^1", "3^1"]

    payload = json.loads(rep.to_json())
    assert payload["order_V"] == "3^8"
    assert payload["f_unitary"] == [2, 1]


def test_swap_diagonalization():
    g = ustar.GroupSpec(3, [3, 3])
    eta = ustar.InvolutionSpec.parse(g, "swap(1,2)")
    d = ustar.diagonalize(eta)
    assert d.inverted_count == 1
    assert d.group.orders == [3, 3]
    assert d.fixed_subgroup_size() == 3
    # round trip through the coordinate change
    for idx in range(g.size):
        c = g.element_at(idx)
        assert d.to_original(d.to_diagonal(c)) == c


def test_algebra_operations():
    g = ustar.GroupSpec(3, [3])
    one = ustar.AlgebraElement.one(g)
    sigma = ustar.AlgebraElement.from_coefficients(g, [1, 1, 1])
    x = one + sigma
    y = one + sigma + sigma
    assert (x * y).is_one()
    assert ustar.augmentation(x) == 1
    assert ustar.inv_unit(x) == y
    assert str(ustar.unit_order(x)) == "3^1"
    with pytest.raises(ValueError):
        ustar.inv_unit(sigma)


def test_enumeration_and_oracle():
    g = ustar.GroupSpec(3, [3])
    eta = ustar.InvolutionSpec.canonical(g)
    sym = ustar.enumerate_units(ustar.UnitKind.SYMMETRIC, g, eta)
    assert len(sym) == 3
    uni = ustar.enumerate_units(ustar.UnitKind.UNITARY, g, eta)
    assert ustar.abelian_invariants(uni) == [1]
    a = ustar.AlgebraElement.group_element(g, [1])
    assert ustar.verify_basis("test", [a], uni).passed()
    with pytest.raises(RuntimeError):
        big = ustar.GroupSpec(3, [27])
        ustar.enumerate_units(ustar.UnitKind.ALL, big, ustar.InvolutionSpec.canonical(big))


def test_verification_suite_passes():
    g = ustar.GroupSpec(3, [3, 3])
    eta = ustar.InvolutionSpec.swap_generators(g, 0, 1)
    results = ustar.verification_suite(ustar.diagonalize(eta))
    assert ustar.all_passed(results)
    assert all(r.status != ustar.CheckResult.Status.FAIL for r in results)


def test_midscale_skips_but_certifies():
    g = ustar.GroupSpec(3, [27])
    d = ustar.diagonalize(ustar.InvolutionSpec.canonical(g))
    results = ustar.verification_suite(d)
    assert ustar.all_passed(results)
    by_name = {r.name: r for r in results}
    assert by_name["decomposition"].status == ustar.CheckResult.Status.SKIP
    assert by_name["unitary-independence"].status == ustar.CheckResult.Status.PASS
    assert str(ustar.order_unitary(d)) == "3^13"
