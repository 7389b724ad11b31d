import pytest
from hypothesis import given, settings, strategies as st

from gpwspec.algebra import cyclic_group, ring_integers_mod
from gpwspec.graded import (
    enumerate_graded_ideals,
    free_graded_module,
    group_ring,
    quotient_graded_module,
    submodule_generated,
    trivial_grading,
)
from gpwspec.reports import InconsistencyError
from gpwspec import spectrum as sp

import oracles

Z2 = cyclic_group(2)


def Zn(n, G=Z2):
    return trivial_grading(ring_integers_mod(n), G)


def ideal(R, gens):
    return submodule_generated(R.self_module, gens)


def pair_module():
    """Z2 + Z2 over Z2, everything in degree zero."""
    M = free_graded_module(Zn(2), [0, 0])
    return M, submodule_generated(M, [M.carrier_group.encode((1, 0))])


def zero_module():
    M = Zn(3).self_module
    return quotient_graded_module(M, M.full)


def test_colon_ideals():
    R = Zn(4)
    M = R.self_module
    assert sp.colon_ideal(M.full, M) == M.full
    assert sp.colon_ideal(M.zero_submodule, M) == M.zero_submodule
    F, e1 = pair_module()
    assert sp.colon_ideal(e1, F).elements == frozenset({0})


def test_annihilators():
    assert sp.annihilator(Zn(4).self_module).elements == frozenset({0})
    Z = zero_module()
    assert sp.annihilator(Z).elements == frozenset(range(3))
    M = Zn(6).self_module
    Q = quotient_graded_module(M, submodule_generated(M, [2]))
    assert sp.annihilator(Q).elements == frozenset({0, 2, 4})


def test_graded_radical():
    R = Zn(4)
    assert sp.graded_radical(R.ideal([0])).elements == frozenset({0, 2})
    assert sp.graded_radical(ideal(R, [2])).elements == frozenset({0, 2})
    with pytest.raises(ValueError):
        sp.graded_radical(R.self_module.full)


def test_weakly_prime_ideal_examples():
    R = Zn(4)
    assert sp.is_graded_weakly_prime_ideal(R.ideal([0]))
    assert sp.is_graded_weakly_prime_ideal(ideal(R, [2]))
    assert not sp.is_graded_weakly_prime_ideal(R.self_module.full)
    assert sp.is_graded_weakly_prime_pairs(ideal(Zn(6), [2]))
    assert sp.is_graded_weakly_prime_pairs(Zn(6).ideal([0]))


def test_weakly_prime_but_not_prime():
    R = Zn(4)
    zero = R.ideal([0])
    assert sp.is_graded_weakly_prime_ideal(zero) and not sp.is_graded_prime_ideal(zero)


def test_weakly_prime_witness():
    v = sp.is_graded_weakly_prime_ideal(ideal(Zn(12), [6]))
    assert not v
    a, b = v.witness[:2]
    R = Zn(12)
    assert R.ring.mul(a, b) % 6 == 0 and a % 6 and b % 6


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30))
def test_pair_criterion_matches_elementwise(n):
    for I in enumerate_graded_ideals(Zn(n)):
        assert bool(sp.is_graded_weakly_prime_ideal(I)) == bool(sp.is_graded_weakly_prime_pairs(I))
        assert bool(sp.is_graded_weakly_prime_ideal(I)) == oracles.weakly_prime(I.owner.base, I.elements)


def test_pseudo_weakly_prime_examples():
    M = Zn(4).self_module
    assert sp.is_pseudo_weakly_prime(M.zero_submodule, M)
    assert sp.is_pseudo_weakly_prime(submodule_generated(M, [2]), M)
    assert not sp.is_pseudo_weakly_prime(M.full, M)
    F, e1 = pair_module()
    assert sp.is_pseudo_weakly_prime(e1, F)


def test_spectra():
    S4 = sp.pseudo_spectrum(Zn(4).self_module)
    assert [P.label for P in S4.points] == ["{0}", "{0,2}"]
    assert [P.label for P in sp.pseudo_spectrum(Zn(5).self_module).points] == ["{0}"]
    assert sp.pseudo_spectrum(zero_module()).points == ()


def test_fibers_varieties_radicals():
    M = Zn(4).self_module
    S = sp.pseudo_spectrum(M)
    two = submodule_generated(M, [2])
    assert sp.fiber(S, two) == {two}
    assert sp.variety(S, two) == {two}
    assert sp.gpw_rad(S, two) == two
    assert sp.eta([], M) == M.full
    R6 = Zn(6)
    S6 = sp.pseudo_spectrum(R6.self_module)
    assert sp.is_semiprime(S6, R6.self_module.zero_submodule)


def test_fiber_over_unused_weakly_prime_is_empty():
    F, _ = pair_module()
    S = sp.pseudo_spectrum(F)
    # the only weakly prime ideal of Z2 that is a colon is {0}; (the ring has no others)
    for I in sp.weakly_prime_ideals(F.base):
        assert sp.fiber(S, I) == frozenset(P for P in S.points if S.colon_of[P] == I)


def test_gpw_rad_closure_operator_on_catalog(catalog):
    for inst in catalog.values():
        S = sp.pseudo_spectrum(inst.module)
        live = [P for P in S.lattice if sp.variety(S, P)]
        for P in live:
            r = sp.gpw_rad(S, P)
            assert P <= r and sp.gpw_rad(S, r) == r
            for Q in live:
                if P <= Q:
                    assert r <= sp.gpw_rad(S, Q)


def test_extraordinary_on_z4():
    S = sp.pseudo_spectrum(Zn(4).self_module)
    assert all(sp.is_extraordinary(S, P) for P in S.points)


def test_z6_readings():
    S = sp.pseudo_spectrum(Zn(6).self_module)
    strict = sp.is_weakly_topological(S)
    assert not strict and not strict.by_union_identity
    zero, three, two = S.points
    assert strict.by_definition.witness == (zero, three, two)
    literal = sp.weakly_topological_routes(S, exempt_zero=True)
    # exempting {0} = (2) & (3) makes every point extraordinary, yet the union identity fails
    assert literal.holds and not literal.agree


def test_routes_agree_on_catalog(catalog):
    for inst in catalog.values():
        assert sp.is_weakly_topological(inst.module).agree


def test_weak_topology_of_empty_spectrum():
    assert sp.is_weakly_topological(zero_module())


def test_multiplication_modules():
    assert sp.is_multiplication_module(Zn(6).self_module)
    F, e1 = pair_module()
    v = sp.is_multiplication_module(F)
    assert not v and v.witness is not None
    assert sp.is_multiplication_module(zero_module())


def test_natural_map():
    S = sp.pseudo_spectrum(Zn(4).self_module)
    phi = sp.natural_map(S)
    assert phi.injective and phi.surjective
    assert sp.is_primeful(S)
    with pytest.raises(ValueError):
        sp.natural_map(sp.pseudo_spectrum(zero_module()))


def test_injective_for_multiplication_modules(catalog):
    for inst in catalog.values():
        S = sp.pseudo_spectrum(inst.module)
        if sp.is_multiplication_module(inst.module):
            assert sp.is_pseudo_weakly_injective(S), inst.name
        assert sp.check_corollary_injective_implies_multiplication(S), inst.name


def test_pair_module_is_not_injective():
    F, _ = pair_module()
    S = sp.pseudo_spectrum(F)
    assert not sp.is_pseudo_weakly_injective(S)
    assert sp.check_corollary_injective_implies_multiplication(S).note


def test_radical_colon():
    S = sp.pseudo_spectrum(Zn(4).self_module)
    assert sp.check_lemma_radical_colon(S)
    R = Zn(4)
    two = ideal(R, [2])
    assert sp.colon_ideal(two, R.self_module) == two


def test_gmax():
    M4 = Zn(4).self_module
    assert [P.label for P in sp.gmax_submodules(M4)] == ["{0,2}"]
    M6 = Zn(6).self_module
    assert [P.label for P in sp.gmax_submodules(M6)] == ["{0,3}", "{0,2,4}"]
    assert sp.gmax_submodules(zero_module()) == ()


def test_points_match_oracle_on_catalog(catalog):
    for inst in catalog.values():
        lib = {P.elements for P in sp.pseudo_spectrum(inst.module).points}
        assert lib == oracles.points(inst.module), inst.name


def test_weakly_prime_submodules_are_points(catalog):
    for inst in catalog.values():
        S = sp.pseudo_spectrum(inst.module)
        for P in S.lattice:
            if P.is_proper and sp.is_graded_weakly_prime_submodule(P):
                assert P in S.all_points


def test_group_ring_spectrum():
    S = sp.pseudo_spectrum(group_ring(4, Z2).self_module)
    assert [P.label for P in S.points] == ["{0}", "{0,2,8,10}"]


def test_inconsistent_routes_raise(monkeypatch):
    S = sp.pseudo_spectrum(Zn(6).self_module)
    monkeypatch.setattr(sp, "union_identity", lambda S: sp.Verdict(True))
    with pytest.raises(InconsistencyError):
        sp.is_weakly_topological(S)
