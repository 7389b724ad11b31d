import re

import numpy as np

from gpwspec import spectrum as sp
from gpwspec.catalog import catalog_instance, catalog_names
from gpwspec.graded import quotient_graded_module
from gpwspec.reports import Verdict
from gpwspec.theorems import NOT_APPLICABLE, PASS, REGISTRY, render, verify


def inverted(I):
    """Weakly prime test with its decisive branch flipped."""
    v = _original(I)
    return Verdict(not v.holds, v.witness)


_original = sp.is_graded_weakly_prime_ideal


def test_ids_are_unique_and_descriptive():
    assert len(REGISTRY) == len(set(REGISTRY))
    for cid in REGISTRY:
        assert cid == cid.lower() and "-" in cid
        assert not re.search(r"\d\.\d|^(thm|lem|cor|rem)\b", cid)


def test_every_id_once_per_instance(catalog):
    for name, inst in catalog.items():
        rep = verify(name, inst.module)
        assert [r.check_id for r in rep.results] == sorted(REGISTRY)
        assert sum(rep.counts().values()) == len(REGISTRY)


def test_z4_all_pass():
    rep = verify("z4", catalog_instance("z4_trivial").module)
    assert not rep.failures
    assert rep.status_of("irreducibility-domain") == NOT_APPLICABLE


def test_topological_checks_gated_on_z6():
    rep = verify("z6", catalog_instance("z6_trivial").module)
    assert rep.status_of("closure-formula") == NOT_APPLICABLE
    assert rep.status_of("weak-topology-union-identity") == PASS


def test_zero_module_runs():
    M = catalog_instance("z4_trivial").module
    Z = quotient_graded_module(M, M.full)
    rep = verify("zero", Z)
    assert not rep.failures


def test_single_check_selection():
    rep = verify("z4", catalog_instance("z4_trivial").module, checks=["closure-formula"])
    assert [r.check_id for r in rep.results] == ["closure-formula"]


def test_render_is_order_independent(catalog):
    M = catalog["z6_trivial"].module
    S = sp.pseudo_spectrum(M)
    a = render(frozenset(S.points))
    b = render(frozenset(reversed(S.points)))
    assert a == b == ["{0}", "{0,3}", "{0,2,4}"]
    assert render(np.int64(3)) == "3"


def test_mutant_predicate_is_detected(monkeypatch):
    monkeypatch.setattr(sp, "is_graded_weakly_prime_ideal", inverted)
    failures = 0
    for name in catalog_names():
        failures += len(verify(name, catalog_instance(name).module).failures)
    assert failures >= 1
