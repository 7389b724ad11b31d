"""Acceptance gate: one test per criterion, with a summary line for each."""

import itertools
import subprocess
import sys
import time

import pytest

from gpwspec import spectrum as sp
from gpwspec import topology as tp
from gpwspec.catalog import catalog_instance, catalog_names
from gpwspec.graded import enumerate_graded_ideals, enumerate_graded_submodules
from gpwspec.reports import Verdict
from gpwspec.theorems import FAIL, verify

import oracles
from acceptance_log import record

NAMES = catalog_names()


@pytest.fixture(scope="module")
def spaces(catalog):
    """(name, spectrum, space) for every catalog instance whose varieties form a topology."""
    out = []
    for name in NAMES:
        S = sp.pseudo_spectrum(catalog[name].module)
        if sp.is_weakly_topological(S):
            out.append((name, S, tp.build_zariski(S)))
    return out


def _finish(criterion, parts):
    for part, ok in parts:
        record(criterion, part, bool(ok))
    bad = [p for p, ok in parts if not ok]
    assert not bad, f"failing: {bad}"


def test_criterion_01_oracle_equivalence(catalog):
    parts = []
    for name in NAMES:
        M = catalog[name].module
        if M.size > 64:
            continue
        lib = {P.elements for P in enumerate_graded_submodules(M)}
        ok = lib == oracles.graded_submodules(M)
        if M.size <= 16:
            ok = ok and lib == oracles.all_submodules_powerset(*oracles.module_data(M))
        parts.append((name, ok))
    _finish(1, parts)


def test_criterion_02_pair_criterion(catalog):
    parts = []
    for name in NAMES:
        R = catalog[name].ring
        disagreements = [I for I in enumerate_graded_ideals(R)
                         if bool(sp.is_graded_weakly_prime_ideal(I)) != bool(sp.is_graded_weakly_prime_pairs(I))]
        parts.append((name, not disagreements))
    _finish(2, parts)


def test_criterion_03_closure_t0_density(spaces):
    assert spaces
    parts = []
    for name, S, T in spaces:
        assert len(S.points) <= tp.EXHAUSTIVE_SUBSET_LIMIT
        exhaustive = all(
            tp.closure(T, W) == sp.variety(S, sp.eta(W, S.module))
            for k in range(len(S.points) + 1) for W in map(frozenset, itertools.combinations(S.points, k)))
        parts.append((f"{name}:closure", exhaustive))
        parts.append((f"{name}:T0", bool(tp.is_T0(T))))
        zero = S.module.zero_submodule
        if zero in S.all_points:
            dense = all(tp.closure(T, W) == T.universe
                        for W in tp.subsets_to_scan(S.points) if zero in W)
            parts.append((f"{name}:dense", dense))
    _finish(3, parts)


def test_criterion_04_closed_points_and_t1(spaces, catalog):
    parts = []
    for name, S, T in spaces:
        parts.append((f"{name}:closed-points", all(tp.check_theorem_closed_point(S, T, C) for C in S.points)))
        parts.append((f"{name}:T1", bool(tp.check_theorem_T1(S, T))))
    by_name = {name: T for name, S, T in spaces}
    parts.append(("z5 is T1", tp.is_T1(by_name["z5_trivial"])))
    parts.append(("z4 is not T1", not tp.is_T1(by_name["z4_trivial"])))
    _finish(4, parts)


def test_criterion_05_irreducibility(spaces):
    parts = []
    for name, S, T in spaces:
        parts.append((f"{name}:eta", bool(tp.check_theorem_irreducible_eta(S, T))))
        for item, v in tp.check_corollary_irreducibility_bundle(S, T).items():
            ok = v.holds if v.applicable else bool(v.note)
            parts.append((f"{name}:{item}", ok))
    _finish(5, parts)


def test_criterion_06_components(spaces):
    parts = []
    for name, S, T in spaces:
        irr = set(tp.irreducible_closed_sets(T))
        parts.append((f"{name}:irreducible-closed", irr == {sp.variety(S, I) for I in S.points}))
        parts.append((f"{name}:bijection", bool(tp.check_components_bijection(S, T))))
        if sp.is_primeful(S):
            parts.append((f"{name}:minimal-weakly-primes", bool(tp.check_components_primeful_form(S, T))))
    _finish(6, parts)


def test_criterion_07_natural_map(spaces):
    parts = []
    for name, S, T in spaces:
        if sp.is_primeful(S) and S.points:
            parts.append((name, bool(tp.check_theorem_connected_transfer(S, T))))
    assert parts
    _finish(7, parts)


def test_criterion_08_irreducibility_equivalences(spaces):
    parts = []
    for name, S, T in spaces:
        if sp.is_primeful(S):
            v = tp.check_irreducibility_equivalences(S, T)
            parts.append((name, v.holds))
    _finish(8, parts)


CRITERION_9 = [
    "weak-topology-union-identity",
    "quotients-stay-weakly-topological",
    "multiplication-implies-weakly-topological",
    "injective-implies-multiplication",
    "radical-colon-criterion",
    "weakly-spectral-space",
    "noetherian-spectral-criterion",
]


@pytest.mark.parametrize("check_id", CRITERION_9)
def test_criterion_09_section_checks(catalog, check_id):
    parts = []
    for name in NAMES:
        status = verify(name, catalog[name].module, checks=[check_id]).results[0].status
        parts.append((f"{check_id}@{name}", status != FAIL))
    _finish(9, parts)


def test_criterion_10_mutant_detected(catalog, monkeypatch):
    original = sp.is_graded_weakly_prime_ideal

    def inverted(I):
        v = original(I)
        return Verdict(not v.holds, v.witness)

    monkeypatch.setattr(sp, "is_graded_weakly_prime_ideal", inverted)
    failures = sum(len(verify(n, catalog_instance(n).module).failures) for n in NAMES)
    _finish(10, [("mutant fails at least one check", failures >= 1)])


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "gpwspec.cli", *args], capture_output=True).stdout


def test_criterion_11_determinism():
    a = _cli("verify", "--all", "--format", "machine")
    b = _cli("verify", "--all", "--format", "machine")
    dots = [_cli("export-dot", name) for name in ("z4_trivial", "free2_z4") for _ in range(2)]
    _finish(11, [
        ("verify output identical", a == b and len(a) > 0),
        ("export-dot identical", dots[0] == dots[1] and dots[2] == dots[3] and dots[0]),
    ])


def test_suite_runtime_budget(catalog):
    start = time.perf_counter()
    for name in NAMES:
        verify(name, catalog[name].module)
    assert time.perf_counter() - start < 60
