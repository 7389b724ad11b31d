"""Colon ideals, weakly prime predicates and the pseudo weakly prime spectrum.

Ideals of a graded ring ``R`` are submodules of ``R.self_module``.  Point sets
of a spectrum are ``frozenset``s of :class:`GradedSubmodule`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .graded import (
    GradedModule,
    GradedRing,
    GradedSubmodule,
    enumerate_graded_ideals,
    enumerate_graded_submodules,
    ideal_product,
    ideal_times_module,
    quotient_graded_ring,
)
from .reports import InconsistencyError, Verdict, not_applicable

PointSet = frozenset  # of GradedSubmodule


def _arr(s: Iterable[int]) -> np.ndarray:
    return np.fromiter(s, dtype=np.int64)


def _ring_of(I: GradedSubmodule) -> GradedRing:
    return I.owner.base


def colon_ideal(P: GradedSubmodule, M: GradedModule) -> GradedSubmodule:
    """``(P :_R M)``, the ring elements that push all of ``M`` into ``P``."""
    if P.owner is not M:
        raise ValueError("submodule belongs to a different module")
    if not P.is_submodule():
        raise ValueError(f"{P.label} is not a submodule")
    inside = np.zeros(M.size, dtype=bool)
    inside[_arr(P.elements)] = True
    rows = inside[M.action].all(axis=1)
    I = M.base.ideal(np.flatnonzero(rows).tolist())
    if not I.is_graded():
        raise InconsistencyError(f"colon ideal of {P.label} is not a graded ideal")
    return I


def annihilator(M: GradedModule) -> GradedSubmodule:
    return colon_ideal(M.zero_submodule, M)


def graded_radical(I: GradedSubmodule) -> GradedSubmodule:
    """Elements whose homogeneous components all have a power in ``I``."""
    R = _ring_of(I)
    if not I.is_proper:
        raise ValueError("graded radical is defined for proper ideals")
    mul = R.ring.mul_table
    nilpotent_mod_I = set()
    for x in R.homogeneous:
        y = x
        for _ in range(R.size + 1):
            if y in I.elements:
                nilpotent_mod_I.add(x)
                break
            y = int(mul[y, x])
    parts = R.decomposition
    rad = [x for x in range(R.size) if all(int(c) in nilpotent_mod_I for c in parts[x])]
    J = R.ideal(rad)
    if not J.is_graded():
        raise InconsistencyError(f"graded radical of {I.label} is not a graded ideal")
    return J


def is_graded_weakly_prime_ideal(I: GradedSubmodule) -> Verdict:
    """Proper, and ``0 != ab in I`` with homogeneous ``a, b`` forces ``a`` or ``b`` into ``I``."""
    if not I.is_proper:
        return Verdict(False, None, "not proper")
    if not I.is_graded():
        return Verdict(False, None, "not a graded ideal")
    R = _ring_of(I)
    h = _arr(sorted(R.homogeneous))
    inside = np.zeros(R.size, dtype=bool)
    inside[_arr(I.elements)] = True
    prod = R.ring.mul_table[np.ix_(h, h)]
    bad = (prod != 0) & inside[prod] & ~inside[h][:, None] & ~inside[h][None, :]
    hit = np.argwhere(bad)
    if len(hit):
        a, b = h[hit[0][0]], h[hit[0][1]]
        return Verdict(False, (int(a), int(b)))
    return Verdict(True)


def is_graded_prime_ideal(I: GradedSubmodule) -> Verdict:
    if not I.is_proper or not I.is_graded():
        return Verdict(False, None, "not a proper graded ideal")
    R = _ring_of(I)
    h = _arr(sorted(R.homogeneous))
    inside = np.zeros(R.size, dtype=bool)
    inside[_arr(I.elements)] = True
    prod = R.ring.mul_table[np.ix_(h, h)]
    hit = np.argwhere(inside[prod] & ~inside[h][:, None] & ~inside[h][None, :])
    if len(hit):
        return Verdict(False, (int(h[hit[0][0]]), int(h[hit[0][1]])))
    return Verdict(True)


def is_graded_weakly_prime_pairs(I: GradedSubmodule) -> Verdict:
    """Ideal-pair form: ``{0} != I1 I2 <= I`` forces ``I1 <= I`` or ``I2 <= I``.

    Properness is required here as well, so both forms agree on ``R`` itself.
    """
    if not I.is_proper:
        return Verdict(False, None, "not proper")
    ideals = enumerate_graded_ideals(_ring_of(I))
    for I1, I2 in itertools.combinations_with_replacement(ideals, 2):
        if I1 <= I or I2 <= I:
            continue
        prod = ideal_product(I1, I2)
        if not prod.is_zero and prod <= I:
            return Verdict(False, (I1, I2))
    return Verdict(True)


def is_graded_weakly_prime_submodule(P: GradedSubmodule) -> Verdict:
    M = P.owner
    if not P.is_proper:
        return Verdict(False, None, "not proper")
    colon = colon_ideal(P, M)
    r = _arr(sorted(M.base.homogeneous))
    m = _arr(sorted(M.homogeneous))
    in_p = np.zeros(M.size, dtype=bool)
    in_p[_arr(P.elements)] = True
    in_colon = np.zeros(M.base.size, dtype=bool)
    in_colon[_arr(colon.elements)] = True
    prod = M.action[np.ix_(r, m)]
    bad = (prod != 0) & in_p[prod] & ~in_colon[r][:, None] & ~in_p[m][None, :]
    hit = np.argwhere(bad)
    if len(hit):
        return Verdict(False, (int(r[hit[0][0]]), int(m[hit[0][1]])))
    return Verdict(True)


def is_pseudo_weakly_prime(P: GradedSubmodule, M: GradedModule) -> bool:
    return bool(is_graded_weakly_prime_ideal(colon_ideal(P, M)))


@dataclass(eq=False)
class Spectrum:
    """The pseudo weakly prime points of a module with their colon ideals."""

    module: GradedModule
    points: tuple[GradedSubmodule, ...]
    colon_of: dict[GradedSubmodule, GradedSubmodule] = field(repr=False)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def ring(self) -> GradedRing:
        return self.module.base

    @cached_property
    def lattice(self) -> tuple[GradedSubmodule, ...]:
        return enumerate_graded_submodules(self.module)

    @cached_property
    def all_points(self) -> PointSet:
        return frozenset(self.points)

    def index(self, P: GradedSubmodule) -> int:
        return self.points.index(P)

    @cached_property
    def semiprimes(self) -> tuple[GradedSubmodule, ...]:
        return tuple(P for P in self.lattice if is_semiprime(self, P))

    @cached_property
    def omega(self) -> tuple[GradedSubmodule, ...]:
        """Distinct colon ideals of the points."""
        return tuple(sorted(set(self.colon_of.values()), key=lambda I: I.sort_key))

    def sorted_points(self, W: Iterable[GradedSubmodule]) -> list[GradedSubmodule]:
        return sorted(W, key=self.index)


def pseudo_spectrum(M: GradedModule) -> Spectrum:
    colon_of = {}
    for P in enumerate_graded_submodules(M):
        if is_pseudo_weakly_prime(P, M):
            colon_of[P] = colon_ideal(P, M)
    points = tuple(sorted(colon_of, key=lambda P: P.sort_key))
    return Spectrum(M, points, colon_of)


def fiber(S: Spectrum, I: GradedSubmodule) -> PointSet:
    if not is_graded_weakly_prime_ideal(I):
        raise ValueError(f"{I.label} is not a graded weakly prime ideal")
    return frozenset(P for P in S.points if S.colon_of[P] == I)


def variety(S: Spectrum, P: GradedSubmodule) -> PointSet:
    return frozenset(Q for Q in S.points if P <= Q)


def eta(W: Iterable[GradedSubmodule], M: GradedModule) -> GradedSubmodule:
    """Intersection of a family of submodules; the empty family gives ``M``."""
    out = M.full
    for P in W:
        out = out & P
    return out


def gpw_rad(S: Spectrum, P: GradedSubmodule) -> GradedSubmodule:
    return eta(variety(S, P), S.module)


def is_semiprime(S: Spectrum, P: GradedSubmodule) -> bool:
    return gpw_rad(S, P) == P


def is_extraordinary(S: Spectrum, P: GradedSubmodule, exempt_zero: bool = False) -> Verdict:
    """Semiprime ``I, J`` with ``I & J <= P`` must have ``I <= P`` or ``J <= P``.

    With ``exempt_zero`` the pairs with ``I & J == {0}`` are skipped, which is
    the literal weak form.  The default strict form is the one under which the
    union identity ``chi(I) | chi(J) == chi(I & J)`` is equivalent.
    """
    if P not in S.colon_of:
        raise ValueError(f"{P.label} is not a point of the spectrum")
    semis = S.semiprimes
    for I, J in itertools.combinations_with_replacement(semis, 2):
        meet = I & J
        if exempt_zero and meet.is_zero:
            continue
        if meet <= P and not I <= P and not J <= P:
            return Verdict(False, (I, J))
    return Verdict(True)


@dataclass(frozen=True)
class WeakTopologyReport:
    holds: bool
    by_definition: Verdict
    by_union_identity: Verdict
    exempt_zero: bool

    def __bool__(self) -> bool:
        return self.holds

    @property
    def agree(self) -> bool:
        return bool(self.by_definition) == bool(self.by_union_identity)


def union_identity(S: Spectrum) -> Verdict:
    """``chi(P) | chi(I) == chi(P & I)`` for every pair of semiprime submodules."""
    for P, I in itertools.combinations_with_replacement(S.semiprimes, 2):
        if variety(S, P) | variety(S, I) != variety(S, P & I):
            return Verdict(False, (P, I))
    return Verdict(True)


def weakly_topological_routes(S: Spectrum, exempt_zero: bool = False) -> WeakTopologyReport:
    definitional = Verdict(True)
    for P in S.points:
        v = is_extraordinary(S, P, exempt_zero)
        if not v:
            definitional = Verdict(False, (P, *v.witness))
            break
    identity = union_identity(S)
    return WeakTopologyReport(bool(definitional), definitional, identity, exempt_zero)


def is_weakly_topological(M: GradedModule | Spectrum, exempt_zero: bool = False) -> WeakTopologyReport:
    """Every point extraordinary, cross-checked against the union identity.

    Raises :class:`InconsistencyError` when the two computations disagree.
    """
    S = M if isinstance(M, Spectrum) else pseudo_spectrum(M)
    report = weakly_topological_routes(S, exempt_zero)
    if not report.agree:
        raise InconsistencyError(
            f"extraordinary-point test ({bool(report.by_definition)}) and union identity "
            f"({bool(report.by_union_identity)}) disagree; witnesses "
            f"{report.by_definition.witness} / {report.by_union_identity.witness}")
    return report


def is_multiplication_module(M: GradedModule) -> Verdict:
    """Every graded submodule equals ``IM`` for some graded ideal ``I``."""
    products = {ideal_times_module(I, M) for I in enumerate_graded_ideals(M.base)}
    for P in enumerate_graded_submodules(M):
        if P not in products:
            return Verdict(False, P)
    return Verdict(True)


@dataclass(eq=False)
class NaturalMap:
    domain: Spectrum
    quotient_ring: GradedRing
    codomain: tuple[GradedSubmodule, ...]
    assignment: dict[GradedSubmodule, GradedSubmodule]

    @property
    def surjective(self) -> bool:
        return set(self.assignment.values()) == set(self.codomain)

    @property
    def injective(self) -> bool:
        return len(set(self.assignment.values())) == len(self.assignment)

    def preimage(self, targets: Iterable[GradedSubmodule]) -> PointSet:
        t = set(targets)
        return frozenset(P for P, img in self.assignment.items() if img in t)


def weakly_prime_ideals(R: GradedRing) -> tuple[GradedSubmodule, ...]:
    return tuple(I for I in enumerate_graded_ideals(R) if is_graded_weakly_prime_ideal(I))


def natural_map(S: Spectrum) -> NaturalMap:
    """``P -> (P : M) / Ann(M)`` into the weakly prime ideals of ``R / Ann(M)``."""
    if not S.points:
        raise ValueError("the natural map needs a nonempty spectrum")
    ann = annihilator(S.module)
    Rstar = quotient_graded_ring(S.ring, ann)
    codomain = weakly_prime_ideals(Rstar)
    proj = Rstar.quotient_map
    assignment = {}
    for P in S.points:
        image = Rstar.ideal(proj[_arr(S.colon_of[P].elements)].tolist())
        if image not in codomain:
            raise InconsistencyError(f"image of {P.label} is not weakly prime in R/Ann(M)")
        assignment[P] = image
    return NaturalMap(S, Rstar, codomain, assignment)


def is_primeful(S: Spectrum) -> bool:
    if S.module.is_zero:
        return True
    if not S.points:
        return False
    return natural_map(S).surjective


def is_pseudo_weakly_injective(S: Spectrum) -> bool:
    # the empty map is injective
    return not S.points or natural_map(S).injective


def check_corollary_injective_implies_multiplication(M: GradedModule | Spectrum) -> Verdict:
    S = M if isinstance(M, Spectrum) else pseudo_spectrum(M)
    if not is_pseudo_weakly_injective(S):
        return Verdict(True, None, "not injective; implication vacuous")
    mult = is_multiplication_module(S.module)
    if not mult:
        return Verdict(False, mult.witness, "injective but not a multiplication module")
    return Verdict(True)


def ring_spectrum(R: GradedRing) -> Spectrum:
    return pseudo_spectrum(R.self_module)


def check_lemma_radical_colon(M: GradedModule | Spectrum) -> Verdict:
    """For radical ``P``: ``P == (PM : M)`` exactly when ``Ann(M) <= P``.

    Only meaningful for primeful modules; otherwise reported as vacuous.
    """
    S = M if isinstance(M, Spectrum) else pseudo_spectrum(M)
    if not is_primeful(S):
        return not_applicable("module is not primeful")
    Mod = S.module
    ann = annihilator(Mod)
    failures = []
    for P in enumerate_graded_ideals(Mod.base):
        if not P.is_proper or graded_radical(P) != P:
            continue
        lhs = colon_ideal(ideal_times_module(P, Mod), Mod) == P
        rhs = ann <= P
        if lhs != rhs:
            failures.append(P)
    if failures:
        return Verdict(False, tuple(failures))
    return Verdict(True)


def gmax_submodules(M: GradedModule) -> tuple[GradedSubmodule, ...]:
    proper = [P for P in enumerate_graded_submodules(M) if P.is_proper]
    return tuple(P for P in proper if not any(P < Q for Q in proper))


def minimal_points(S: Spectrum) -> tuple[GradedSubmodule, ...]:
    return tuple(P for P in S.points if not any(Q < P for Q in S.points))
