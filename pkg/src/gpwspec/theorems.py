"""Registry of theorem checks run against a finite instance.

Each check takes an :class:`InstanceContext` and returns a :class:`Verdict`.
Checks about the Zariski space are not applicable when the variety family
is not a topology, since the topological statements assume it is.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import spectrum as sp
from . import topology as tp
from .graded import GradedModule, GradedSubmodule, enumerate_graded_ideals, quotient_graded_module
from .reports import InconsistencyError, Verdict, not_applicable

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


class InstanceContext:
    """Lazily computed spectrum, space and flags shared by all checks."""

    def __init__(self, name: str, module: GradedModule, seed: int = 0):
        self.name = name
        self.module = module
        self.seed = seed

    @cached_property
    def spectrum(self) -> sp.Spectrum:
        return sp.pseudo_spectrum(self.module)

    @cached_property
    def weak_topology(self) -> sp.WeakTopologyReport:
        return sp.is_weakly_topological(self.spectrum)

    @cached_property
    def space(self) -> tp.FiniteTopologySpace | None:
        if not self.weak_topology:
            return None
        return tp.build_zariski(self.spectrum)

    @cached_property
    def primeful(self) -> bool:
        return sp.is_primeful(self.spectrum)


Check = Callable[[InstanceContext], Verdict]
REGISTRY: dict[str, Check] = {}


def register(check_id: str):
    def deco(fn: Check) -> Check:
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = fn
        return fn
    return deco


def _topological(fn):
    def wrapped(ctx: InstanceContext) -> Verdict:
        if ctx.space is None:
            return not_applicable("module is not weakly topological")
        return fn(ctx, ctx.spectrum, ctx.space)
    wrapped.__doc__ = fn.__doc__
    return wrapped


# -- ideals and points ---------------------------------------------------------

@register("weakly-prime-pair-criterion")
def _pair_criterion(ctx):
    """Elementwise and ideal-pair weakly prime tests agree on every graded ideal."""
    for I in enumerate_graded_ideals(ctx.spectrum.ring):
        a = bool(sp.is_graded_weakly_prime_ideal(I))
        b = bool(sp.is_graded_weakly_prime_pairs(I))
        if a != b:
            return Verdict(False, (I, a, b))
    return Verdict(True)


@register("weakly-prime-submodules-are-points")
def _submodule_containment(ctx):
    S = ctx.spectrum
    for P in S.lattice:
        if P.is_proper and sp.is_graded_weakly_prime_submodule(P) and P not in S.all_points:
            return Verdict(False, P)
    return Verdict(True)


@register("colon-ideals-graded")
def _colon_graded(ctx):
    for P in ctx.spectrum.lattice:
        I = sp.colon_ideal(P, ctx.module)      # raises if not graded
        if not I.is_graded():
            return Verdict(False, P)
    return Verdict(True)


@register("radical-closure-operator")
def _closure_operator(ctx):
    """``gpw_rad`` is extensive, monotone and idempotent where the variety is nonempty."""
    S = ctx.spectrum
    live = [P for P in S.lattice if sp.variety(S, P)]
    rad = {P: sp.gpw_rad(S, P) for P in live}
    for P in live:
        if not P <= rad[P] or sp.gpw_rad(S, rad[P]) != rad[P]:
            return Verdict(False, P)
    for P, Q in itertools.permutations(live, 2):
        if P <= Q and not rad[P] <= rad[Q]:
            return Verdict(False, (P, Q))
    return Verdict(True)


# -- weak topology and module classes ------------------------------------------

@register("weak-topology-union-identity")
def _union_identity(ctx):
    """Weakly topological exactly when varieties of semiprime pairs satisfy the union identity."""
    r = sp.weakly_topological_routes(ctx.spectrum)
    if not r.agree:
        return Verdict(False, (bool(r.by_definition), r.by_definition.witness, r.by_union_identity.witness))
    return Verdict(True)


@register("quotients-stay-weakly-topological")
def _quotients(ctx):
    if not ctx.weak_topology:
        return Verdict(True, None, "module is not weakly topological; implication vacuous")
    for P in ctx.spectrum.lattice:
        if P.is_proper and not sp.is_weakly_topological(quotient_graded_module(ctx.module, P)):
            return Verdict(False, P)
    return Verdict(True)


@register("multiplication-implies-weakly-topological")
def _mult_topological(ctx):
    if not sp.is_multiplication_module(ctx.module):
        return Verdict(True, None, "not a multiplication module; implication vacuous")
    w = ctx.weak_topology
    return Verdict(bool(w), w.by_definition.witness)


@register("multiplication-implies-injective")
def _mult_injective(ctx):
    if not sp.is_multiplication_module(ctx.module):
        return Verdict(True, None, "not a multiplication module; implication vacuous")
    return Verdict(sp.is_pseudo_weakly_injective(ctx.spectrum))


@register("injective-implies-multiplication")
def _injective_mult(ctx):
    return sp.check_corollary_injective_implies_multiplication(ctx.spectrum)


@register("radical-colon-criterion")
def _radical_colon(ctx):
    return sp.check_lemma_radical_colon(ctx.spectrum)


# -- the Zariski space ---------------------------------------------------------

@register("variety-family-is-topology")
def _family_topology(ctx):
    if not ctx.weak_topology:
        return not_applicable("module is not weakly topological")
    S = ctx.spectrum
    T = tp.FiniteTopologySpace(S.points, {sp.variety(S, P) for P in S.lattice})
    report = T.check_axioms()
    return Verdict(report.ok, [r.witness for r in report.failures] or None)


@register("natural-map-continuity")
@_topological
def _continuity(ctx, S, T):
    return tp.check_theorem_connected_transfer(S, T)


@register("closure-formula")
@_topological
def _closure(ctx, S, T):
    return tp.check_closure_formula(S, T, ctx.seed)


@register("closed-point-criterion")
@_topological
def _closed_points(ctx, S, T):
    for C in S.points:
        v = tp.check_theorem_closed_point(S, T, C)
        if not v:
            return v
    return Verdict(True)


@register("t1-criterion")
@_topological
def _t1(ctx, S, T):
    return tp.check_theorem_T1(S, T)


@register("point-varieties-irreducible")
@_topological
def _point_varieties(ctx, S, T):
    return tp.check_point_varieties_irreducible(S, T)


@register("irreducible-iff-intersection-is-point")
@_topological
def _irreducible_eta(ctx, S, T):
    return tp.check_theorem_irreducible_eta(S, T, ctx.seed)


_BUNDLE = {
    "irreducibility-variety-radical": "variety irreducible iff radical is a point",
    "irreducibility-space-radical-of-zero": "space irreducible iff radical of zero is a point",
    "irreducibility-fibers": "nonempty fibers irreducible",
    "irreducibility-quasi-local-maximal": "quasi-local: maximal submodules irreducible",
    "irreducibility-zero-point": "zero point gives irreducible space",
    "irreducibility-domain": "domain gives irreducible space",
}


def _bundle_item(key: str):
    @_topological
    def check(ctx, S, T):
        return tp.check_corollary_irreducibility_bundle(S, T)[key]
    return check


for _id, _key in _BUNDLE.items():
    register(_id)(_bundle_item(_key))


@register("irreducible-closed-sets-and-components")
@_topological
def _components(ctx, S, T):
    return tp.check_components_bijection(S, T)


@register("components-from-minimal-weakly-primes")
@_topological
def _components_primeful(ctx, S, T):
    return tp.check_components_primeful_form(S, T)


@register("irreducibility-equivalences")
@_topological
def _equivalences(ctx, S, T):
    return tp.check_irreducibility_equivalences(S, T)


@register("weakly-spectral-space")
@_topological
def _weakly_spectral(ctx, S, T):
    return tp.check_theorem_noetherian_spectral(S, T)


@register("noetherian-spectral-criterion")
@_topological
def _noetherian(ctx, S, T):
    return tp.check_weakly_spectral(T)["noetherian criterion agrees"]


# -- running -------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    witness: object = None
    note: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    instance: str
    results: list[CheckResult] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    def status_of(self, check_id: str) -> str:
        for r in self.results:
            if r.check_id == check_id:
                return r.status
        raise KeyError(check_id)


def render(x) -> object:
    """Witness payload as plain data with a deterministic order."""
    if isinstance(x, GradedSubmodule):
        return x.label
    if isinstance(x, Verdict):
        return render(x.witness)
    if isinstance(x, (set, frozenset)):
        items = [render(v) for v in x]
        return sorted(items, key=lambda v: (len(str(v)), str(v)))
    if isinstance(x, (list, tuple)):
        return [render(v) for v in x]
    if isinstance(x, dict):
        return {str(k): render(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def run_check(check_id: str, ctx: InstanceContext) -> CheckResult:
    start = time.perf_counter()
    try:
        v = REGISTRY[check_id](ctx)
    except InconsistencyError as exc:
        v = Verdict(False, None, f"internal inconsistency: {exc}")
    elapsed = time.perf_counter() - start
    if not v.applicable:
        status = NOT_APPLICABLE
    else:
        status = PASS if v.holds else FAIL
    witness = None if status == PASS else render(v.witness)
    return CheckResult(check_id, status, witness, v.note, elapsed)


def verify(name: str, module: GradedModule, seed: int = 0, checks: list[str] | None = None) -> VerificationReport:
    ctx = InstanceContext(name, module, seed)
    ids = sorted(REGISTRY) if checks is None else sorted(checks)
    return VerificationReport(name, [run_check(c, ctx) for c in ids])
