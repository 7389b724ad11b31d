import pytest
from hypothesis import given, settings, strategies as st

from gpwspec.algebra import SizeBoundError, check_ring_axioms, cyclic_group, ring_integers_mod
from gpwspec.graded import (
    GradedRing,
    GradingError,
    HomogeneousElement,
    check_grading_axioms,
    enumerate_graded_ideals,
    enumerate_graded_submodules,
    free_graded_module,
    group_ring,
    homogeneous_elements,
    ideal_product,
    module_self,
    quotient_graded_module,
    quotient_graded_ring,
    submodule_generated,
    trivial_grading,
)

import oracles

Z2 = cyclic_group(2)


def Zn(n, G=Z2):
    return trivial_grading(ring_integers_mod(n), G)


def test_trivial_grading_components():
    R = Zn(6)
    assert R.components == (frozenset(range(6)), frozenset({0}))
    assert check_grading_axioms(R).ok
    assert check_grading_axioms(Zn(2, cyclic_group(3))).ok


def test_trivial_grading_homogeneous_listing():
    pairs = homogeneous_elements(Zn(4))
    assert len(pairs) == 5
    assert HomogeneousElement(1, 0) in pairs


def test_group_ring_two_by_two():
    R = group_ring(2, Z2)
    x = 2                                    # the group element g with coefficient 1
    assert R.size == 4 and R.ring.mul(x, x) == R.one
    assert R.homogeneous == frozenset({0, 1, 2})
    assert check_ring_axioms(R.ring).ok and check_grading_axioms(R).ok


def test_group_ring_over_trivial_group():
    R = group_ring(2, cyclic_group(1))
    assert R.size == 2 and R.components == (frozenset({0, 1}),)


def test_group_ring_four():
    R = group_ring(4, Z2)
    assert R.size == 16
    assert R.components[0] == frozenset(range(4))


def test_group_ring_size_bound():
    with pytest.raises(SizeBoundError):
        group_ring(5, cyclic_group(6), max_size=1000)


def test_overlapping_components_rejected():
    R = ring_integers_mod(4)
    bad = GradedRing(Z2, R, [range(4), [0, 2]])
    report = check_grading_axioms(bad)
    assert not report.ok
    assert any(r.witness is not None for r in report.failures)


def test_quotient_rings():
    R = Zn(4)
    same = quotient_graded_ring(R, R.ideal([0]))
    assert same.size == 4
    half = quotient_graded_ring(R, submodule_generated(R.self_module, [2]))
    assert half.size == 2 and check_ring_axioms(half.ring).ok
    S = group_ring(2, Z2)
    assert quotient_graded_ring(S, S.ideal([0])).size == 4
    with pytest.raises(GradingError):
        quotient_graded_ring(R, R.self_module.full)


def test_self_module_axioms():
    assert check_grading_axioms(module_self(Zn(4))).ok
    M = module_self(group_ring(2, Z2))
    assert M.components == group_ring(2, Z2).components


def test_free_modules():
    R = Zn(2)
    M = free_graded_module(R, [0, 0])
    assert M.size == 4 and M.components[0] == frozenset(range(4))
    one = free_graded_module(Zn(4), [0])
    assert one.action.tolist() == module_self(Zn(4)).action.tolist()
    shifted = free_graded_module(group_ring(2, Z2), [1])
    assert check_grading_axioms(shifted).ok


def test_quotient_modules():
    M = free_graded_module(Zn(2), [0, 0])
    e1 = M.carrier_group.encode((1, 0))
    Q = quotient_graded_module(M, submodule_generated(M, [e1]))
    assert Q.size == 2
    assert quotient_graded_module(M, M.zero_submodule).size == 4
    assert quotient_graded_module(M, M.full).is_zero


def test_submodule_generated():
    M = free_graded_module(Zn(2), [0, 0])
    e1 = M.carrier_group.encode((1, 0))
    assert submodule_generated(M, []).elements == frozenset({0})
    assert submodule_generated(M, [e1]).elements == frozenset({0, e1})
    R = Zn(4)
    assert submodule_generated(R.self_module, [1]).elements == frozenset(range(4))


def test_non_homogeneous_generator_rejected():
    R = group_ring(2, Z2)
    with pytest.raises(GradingError, match="3"):
        submodule_generated(R.self_module, [3])


def test_lattice_examples():
    assert [P.elements for P in enumerate_graded_ideals(Zn(4))] == [
        frozenset({0}), frozenset({0, 2}), frozenset(range(4))]
    assert len(enumerate_graded_ideals(Zn(5))) == 2
    # {0, 1+x} is an ideal of Z2[Z2] but not a graded one
    assert [len(I) for I in enumerate_graded_ideals(group_ring(2, Z2))] == [1, 4]
    assert len(enumerate_graded_submodules(free_graded_module(Zn(2), [0, 0]))) == 5


def test_zero_module_lattice():
    M = module_self(Zn(3))
    Z = quotient_graded_module(M, M.full)
    assert len(enumerate_graded_submodules(Z)) == 1


def test_lattice_matches_oracle_on_catalog(catalog):
    for inst in catalog.values():
        lib = {P.elements for P in enumerate_graded_submodules(inst.module)}
        assert lib == oracles.graded_submodules(inst.module), inst.name


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 6), st.lists(st.integers(0, 1), min_size=1, max_size=2))
def test_free_module_lattice_matches_oracle(n, shifts):
    M = free_graded_module(group_ring(n, Z2) if n <= 3 else Zn(n), shifts)
    if M.size > 64:
        return
    lib = {P.elements for P in enumerate_graded_submodules(M)}
    assert lib == oracles.graded_submodules(M)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), st.integers(1, 3))
def test_ideals_closed_under_sum_meet_product(n, k):
    R = Zn(n, cyclic_group(k))
    ideals = set(enumerate_graded_ideals(R))
    for I in ideals:
        for J in ideals:
            assert I + J in ideals and I & J in ideals
            assert ideal_product(I, J) <= I & J


def test_sum_and_meet_in_lattice(catalog):
    for inst in catalog.values():
        lat = set(enumerate_graded_submodules(inst.module))
        for P in lat:
            for Q in lat:
                assert P + Q in lat and P & Q in lat
