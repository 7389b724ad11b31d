"""G-graded rings and modules over finite abelian grading groups.

The grading group is written additively: degree ``g + h`` plays the role of
the product ``gh`` and ``0`` is the identity degree ``e``.  Components are
explicit element sets indexed by the code of their degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence, Union

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from .algebra import (
    DEFAULT_MODULE_BOUND,
    DEFAULT_RING_BOUND,
    FiniteAbelianGroup,
    FiniteCommRing,
    additive_span,
    direct_product,
    require_size,
)
from .reports import AxiomReport, AxiomResult


class GradingError(ValueError):
    pass


class _Graded:
    """Shared bookkeeping for anything carrying a degree decomposition."""

    grading_group: FiniteAbelianGroup
    carrier_group: FiniteAbelianGroup
    components: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return self.carrier_group.order

    def _scan_decomposition(self):
        """Return ``(table, None)`` for a direct sum, else ``(None, witness)``."""
        add = self.carrier_group.add_table
        seen: dict[int, tuple[int, ...]] = {}
        comps = [sorted(c) for c in self.components]
        for combo in itertools.product(*comps):
            total = reduce(lambda a, b: int(add[a, b]), combo, 0)
            if total in seen:
                return None, ("non-unique decomposition", total, seen[total], combo)
            seen[total] = combo
        missing = [x for x in range(self.size) if x not in seen]
        if missing:
            return None, ("not decomposable", missing[0])
        table = np.empty((self.size, len(comps)), dtype=np.int64)
        for x, combo in seen.items():
            table[x] = combo
        return table, None

    @cached_property
    def decomposition(self) -> np.ndarray:
        """Row ``x`` holds the homogeneous component of ``x`` in each degree."""
        table, witness = self._scan_decomposition()
        if table is None:
            raise GradingError(f"components do not form a direct sum: {witness}")
        return table

    def component(self, x: int, degree: int) -> int:
        return int(self.decomposition[x, degree])

    @cached_property
    def homogeneous(self) -> frozenset[int]:
        return frozenset().union(*self.components)

    def degrees_of(self, x: int) -> tuple[int, ...]:
        return tuple(g for g, comp in enumerate(self.components) if x in comp)

    def is_graded_subset(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        if not s:
            return True
        parts = self.decomposition[np.fromiter(s, dtype=np.int64)]
        return set(np.unique(parts).tolist()) <= s


class GradedRing(_Graded):
    def __init__(self, grading_group: FiniteAbelianGroup, ring: FiniteCommRing,
                 components: Sequence[Iterable[int]], name: str | None = None):
        if len(components) != grading_group.order:
            raise GradingError(f"need one component per degree ({grading_group.order}), got {len(components)}")
        self.grading_group = grading_group
        self.ring = ring
        self.carrier_group = ring.additive_group
        self.components = tuple(frozenset(int(x) for x in c) for c in components)
        self.name = name or ring.name
        self.parent: GradedRing | None = None
        self.quotient_map: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"GradedRing({self.name}, graded by {self.grading_group!r})"

    @property
    def one(self) -> int:
        return self.ring.one

    @cached_property
    def self_module(self) -> GradedModule:
        return GradedModule(self, self.ring.additive_group, self.components,
                            self.ring.mul_table, name=f"{self.name} over itself")

    def ideal(self, elements: Iterable[int]) -> GradedSubmodule:
        return self.self_module.submodule(elements)


class GradedModule(_Graded):
    def __init__(self, base: GradedRing, group: FiniteAbelianGroup,
                 components: Sequence[Iterable[int]], action, name: str | None = None):
        if len(components) != base.grading_group.order:
            raise GradingError("need one component per degree of the grading group")
        table = np.asarray(action, dtype=np.int64)
        if table.shape != (base.size, group.order):
            raise ValueError(f"action table must be {base.size}x{group.order}")
        self.base = base
        self.grading_group = base.grading_group
        self.carrier_group = group
        self.components = tuple(frozenset(int(x) for x in c) for c in components)
        self.action = table
        self.name = name or f"module of order {group.order}"
        self.parent: GradedModule | None = None
        self.quotient_map: np.ndarray | None = None
        self._lattice: tuple[GradedSubmodule, ...] | None = None

    def __repr__(self) -> str:
        return f"GradedModule({self.name})"

    def act(self, r: int, m: int) -> int:
        return int(self.action[r, m])

    def submodule(self, elements: Iterable[int]) -> GradedSubmodule:
        return GradedSubmodule(self, frozenset(int(x) for x in elements))

    @cached_property
    def zero_submodule(self) -> GradedSubmodule:
        return self.submodule([0])

    @cached_property
    def full(self) -> GradedSubmodule:
        return self.submodule(range(self.size))

    @property
    def is_zero(self) -> bool:
        return self.size == 1


@dataclass(frozen=True, eq=False)
class GradedSubmodule:
    """A subset of a module's carrier; equality is by value within one owner."""

    owner: GradedModule
    elements: frozenset[int]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GradedSubmodule) and other.owner is self.owner
                and other.elements == self.elements)

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"<{self.label}>"

    @cached_property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    @property
    def sort_key(self) -> tuple:
        return (len(self.elements), self.key)

    @property
    def label(self) -> str:
        return "{" + ",".join(map(str, self.key)) + "}"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.key)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __le__(self, other: GradedSubmodule) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: GradedSubmodule) -> bool:
        return self.elements < other.elements

    def __ge__(self, other: GradedSubmodule) -> bool:
        return self.elements >= other.elements

    def __gt__(self, other: GradedSubmodule) -> bool:
        return self.elements > other.elements

    def __and__(self, other: GradedSubmodule) -> GradedSubmodule:
        return GradedSubmodule(self.owner, self.elements & other.elements)

    def __add__(self, other: GradedSubmodule) -> GradedSubmodule:
        a = np.fromiter(self.elements, dtype=np.int64)
        b = np.fromiter(other.elements, dtype=np.int64)
        sums = self.owner.carrier_group.add_table[np.ix_(a, b)]
        return GradedSubmodule(self.owner, frozenset(np.unique(sums).tolist()))

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.owner.size

    @property
    def is_zero(self) -> bool:
        return self.elements == {0}

    def is_submodule(self) -> bool:
        M = self.owner
        s = self.elements
        if 0 not in s:
            return False
        arr = np.fromiter(s, dtype=np.int64)
        sums = M.carrier_group.add_table[np.ix_(arr, arr)]
        if not set(np.unique(sums).tolist()) <= s:
            return False
        return set(np.unique(M.action[:, arr]).tolist()) <= s

    def is_graded(self) -> bool:
        return self.is_submodule() and self.owner.is_graded_subset(self.elements)


GradedIdeal = GradedSubmodule


@dataclass(frozen=True, order=True)
class HomogeneousElement:
    degree: int
    element: int


# -- constructions ---------------------------------------------------------------

def trivial_grading(R: FiniteCommRing, G: FiniteAbelianGroup) -> GradedRing:
    if R.is_zero_ring:
        raise GradingError("the zero ring cannot carry a grading here")
    comps = [frozenset(range(R.size))] + [frozenset({0})] * (G.order - 1)
    return GradedRing(G, R, comps, name=R.name)


def group_ring(n: int, G: FiniteAbelianGroup, max_size: int | None = None) -> GradedRing:
    """``Z_n[G]`` with the element ``sum c_g g`` coded as ``sum c_g n**g``."""
    if n < 2:
        raise ValueError(f"coefficient modulus must be >= 2, got {n}")
    k = G.order
    require_size(n ** k, max_size, DEFAULT_RING_BOUND, "group ring")
    group = FiniteAbelianGroup((n,) * k)
    size = group.order
    codes = np.arange(size)
    powers = n ** np.arange(k)
    coeffs = (codes[:, None] // powers[None, :]) % n          # [x, g]
    conv = np.zeros((size, size, k), dtype=np.int64)
    gadd = G.add_table
    for g in range(k):
        for h in range(k):
            conv[:, :, gadd[g, h]] += coeffs[:, None, g] * coeffs[None, :, h]
    table = (conv % n) @ powers
    ring = FiniteCommRing(group, table, 1, name=f"Z{n}[{_group_name(G)}]")
    comps = [frozenset(c * n ** g for c in range(n)) for g in range(k)]
    return GradedRing(G, ring, comps, name=ring.name)


def _group_name(G: FiniteAbelianGroup) -> str:
    return "x".join(f"Z{n}" for n in G.cyclic_orders)


def _subgroup_generators(G: FiniteAbelianGroup, subset: Iterable[int]) -> list[int]:
    gens: list[int] = []
    span = frozenset({0})
    for x in sorted(subset):
        if x not in span:
            gens.append(x)
            span = additive_span(G, gens)
    return gens


def _quotient_group(G: FiniteAbelianGroup, subgroup: frozenset[int]):
    """Cyclic decomposition of ``G / subgroup`` via Smith normal form.

    Returns ``(Q, project, lift)`` where ``project`` maps codes of ``G`` to codes
    of ``Q`` and ``lift`` picks the smallest preimage of each code of ``Q``.
    """
    k = len(G.cyclic_orders)
    rows = [[n if i == j else 0 for j in range(k)] for i, n in enumerate(G.cyclic_orders)]
    rows += [list(G.decode(x)) for x in _subgroup_generators(G, subgroup)]
    D, _, V = smith_normal_decomp(Matrix(rows))
    d = np.array([abs(int(D[i, i])) for i in range(k)], dtype=np.int64)
    Vn = np.array(V.tolist(), dtype=np.int64)
    keep = [i for i in range(k) if d[i] > 1]
    if keep:
        Q = FiniteAbelianGroup(d[keep].tolist())
        coords = (G.residues @ Vn)[:, keep]
        project = Q._encode_rows(coords)
    else:
        Q = FiniteAbelianGroup((1,))
        project = np.zeros(G.order, dtype=np.int64)
    kernel = frozenset(np.flatnonzero(project == 0).tolist())
    if kernel != subgroup or len(np.unique(project)) != Q.order:
        raise AssertionError("quotient projection is not the expected surjection")
    lift = np.full(Q.order, -1, dtype=np.int64)
    for x in range(G.order - 1, -1, -1):
        lift[project[x]] = x
    return Q, project, lift


def quotient_graded_ring(R: GradedRing, I: GradedSubmodule) -> GradedRing:
    if not I.is_graded():
        raise GradingError(f"{I.label} is not a graded ideal")
    if not I.is_proper:
        raise GradingError("cannot take the quotient by the whole ring")
    Q, project, lift = _quotient_group(R.carrier_group, I.elements)
    mul = project[R.ring.mul_table[np.ix_(lift, lift)]]
    name = f"{R.name}/{I.label}"
    ring = FiniteCommRing(Q, mul, int(project[R.one]), name=name)
    comps = [frozenset(project[list(c)].tolist()) for c in R.components]
    out = GradedRing(R.grading_group, ring, comps, name=name)
    out.parent, out.quotient_map = R, project
    return out


def module_self(R: GradedRing) -> GradedModule:
    return R.self_module


def free_graded_module(R: GradedRing, shifts: Sequence[int], max_size: int | None = None) -> GradedModule:
    """``R^k`` where slot ``i`` is shifted so its basis vector has degree ``shifts[i]``."""
    k = len(shifts)
    if k < 1:
        raise ValueError("free module needs rank >= 1")
    G = R.grading_group
    for s in shifts:
        G._check(s)
    n = R.size
    require_size(n ** k, max_size, DEFAULT_MODULE_BOUND, "free module")
    group = direct_product([R.carrier_group] * k)
    strides = n ** np.arange(k - 1, -1, -1)
    codes = np.arange(group.order)
    slots = (codes[:, None] // strides[None, :]) % n                # [m, i]
    action = (R.ring.mul_table[:, slots] * strides).sum(axis=2)
    comps = []
    for g in range(G.order):
        parts = [sorted(R.components[G.sub(g, s)]) for s in shifts]
        comps.append(frozenset(int(np.dot(t, strides)) for t in itertools.product(*parts)))
    shift_txt = ",".join(map(str, shifts))
    return GradedModule(R, group, comps, action, name=f"{R.name}^{k}({shift_txt})")


def quotient_graded_module(M: GradedModule, P: GradedSubmodule) -> GradedModule:
    if P.owner is not M:
        raise ValueError("submodule belongs to a different module")
    if not P.is_graded():
        raise GradingError(f"{P.label} is not a graded submodule")
    Q, project, lift = _quotient_group(M.carrier_group, P.elements)
    action = project[M.action[:, lift]]
    comps = [frozenset(project[list(c)].tolist()) for c in M.components]
    out = GradedModule(M.base, Q, comps, action, name=f"{M.name}/{P.label}")
    out.parent, out.quotient_map = M, project
    return out


def homogeneous_elements(X: _Graded) -> list[HomogeneousElement]:
    """Every (degree, element) pair with the element in that component.

    Zero appears once per degree; use ``X.homogeneous`` for the plain set.
    """
    return sorted(HomogeneousElement(g, x) for g, comp in enumerate(X.components) for x in comp)


def submodule_generated(M: GradedModule, gens: Iterable[int | HomogeneousElement]) -> GradedSubmodule:
    elems = []
    for gen in gens:
        if isinstance(gen, HomogeneousElement):
            if gen.element not in M.components[gen.degree]:
                raise GradingError(f"{gen.element} is not homogeneous of degree {gen.degree}")
            elems.append(gen.element)
        else:
            if int(gen) not in M.homogeneous:
                raise GradingError(f"generator {gen} is not homogeneous")
            elems.append(int(gen))
    span = frozenset({0})
    for m in elems:
        span = additive_span(M.carrier_group, span | set(M.action[:, m].tolist()))
    P = M.submodule(span)
    if not P.is_graded():
        raise AssertionError("submodule generated by homogeneous elements is not graded")
    return P


def cyclic_submodule(M: GradedModule, m: int) -> GradedSubmodule:
    # R has a unity, so R*m is already closed under addition
    return M.submodule(M.action[:, m].tolist())


def enumerate_graded_submodules(M: GradedModule, max_size: int | None = None) -> tuple[GradedSubmodule, ...]:
    """All graded submodules, as the join-closure of the cyclic ones on h(M)."""
    if M._lattice is not None:
        return M._lattice
    require_size(M.size, max_size, DEFAULT_MODULE_BOUND, "module")
    atoms = {cyclic_submodule(M, m) for m in sorted(M.homogeneous)}
    atoms.add(M.zero_submodule)
    atoms_list = sorted(atoms, key=lambda P: P.sort_key)
    seen = set(atoms)
    frontier = list(atoms_list)
    while frontier:
        nxt = []
        for P in frontier:
            for A in atoms_list:
                if A <= P:
                    continue
                S = P + A
                if S not in seen:
                    seen.add(S)
                    nxt.append(S)
        frontier = nxt
    M._lattice = tuple(sorted(seen, key=lambda P: P.sort_key))
    return M._lattice


def enumerate_graded_ideals(R: GradedRing, max_size: int | None = None) -> tuple[GradedSubmodule, ...]:
    return enumerate_graded_submodules(R.self_module, max_size)


def ideal_times_module(I: GradedSubmodule, M: GradedModule) -> GradedSubmodule:
    """``IM``: additive closure of all products ``r m`` with ``r`` in ``I``."""
    products = np.unique(M.action[np.fromiter(I.elements, dtype=np.int64)])
    return M.submodule(additive_span(M.carrier_group, products.tolist()))


def ideal_product(I: GradedSubmodule, J: GradedSubmodule) -> GradedSubmodule:
    R = I.owner
    a = np.fromiter(I.elements, dtype=np.int64)
    b = np.fromiter(J.elements, dtype=np.int64)
    products = np.unique(R.action[np.ix_(a, b)])
    return R.submodule(additive_span(R.carrier_group, products.tolist()))


# -- axiom scans -------------------------------------------------------------------

def _is_subgroup(G: FiniteAbelianGroup, s: frozenset[int]) -> bool:
    if 0 not in s:
        return False
    arr = np.fromiter(s, dtype=np.int64)
    return set(np.unique(G.add_table[np.ix_(arr, arr)]).tolist()) <= s


def check_grading_axioms(X: Union[GradedRing, GradedModule]) -> AxiomReport:
    G = X.grading_group
    results = []
    bad = [g for g, c in enumerate(X.components) if not _is_subgroup(X.carrier_group, c)]
    results.append(AxiomResult("components are subgroups", not bad, bad[0] if bad else None))
    table, witness = X._scan_decomposition()
    results.append(AxiomResult("direct sum", table is not None, witness))

    if isinstance(X, GradedRing):
        mul = X.ring.mul_table
        acting, target = X.components, X.components
    else:
        mul = X.action
        acting, target = X.base.components, X.components
    closure_witness = None
    for g, h in itertools.product(range(G.order), repeat=2):
        a = np.fromiter(acting[g], dtype=np.int64)
        b = np.fromiter(target[h], dtype=np.int64)
        prods = set(np.unique(mul[np.ix_(a, b)]).tolist())
        extra = prods - target[G.add(g, h)]
        if extra:
            closure_witness = (g, h, min(extra))
            break
    name = "R_g R_h in R_(g+h)" if isinstance(X, GradedRing) else "R_g M_h in M_(g+h)"
    results.append(AxiomResult(name, closure_witness is None, closure_witness))

    if isinstance(X, GradedRing):
        results.append(AxiomResult("unity has degree e", X.one in X.components[0], X.one))
    else:
        results.extend(_module_axioms(X))
    return AxiomReport(repr(X), tuple(results))


def _module_axioms(M: GradedModule) -> list[AxiomResult]:
    A, T = M.action, M.carrier_group.add_table
    Rt = M.base.ring
    RA, RM = Rt.add_table, Rt.mul_table
    n = M.size
    out = []

    def first(mask):
        hit = np.argwhere(mask)
        return tuple(int(v) for v in hit[0]) if len(hit) else None

    w = None
    for r in range(M.base.size):
        # r(m + m') = rm + rm'
        hit = first(A[r][T] != T[A[r][:, None], A[r][None, :]])
        if hit:
            w = (r, *hit)
            break
    out.append(AxiomResult("r(m+n) = rm + rn", w is None, w))
    # (r + s)m = rm + sm, indexed [r, s, m]
    lhs = A[RA]
    rhs = T[A[:, None, :], A[None, :, :]]
    out.append(AxiomResult("(r+s)m = rm + sm", bool((lhs == rhs).all()), first(lhs != rhs)))
    lhs = A[RM]
    rhs = A[np.arange(M.base.size)[:, None, None], A[None, :, :]]
    out.append(AxiomResult("(rs)m = r(sm)", bool((lhs == rhs).all()), first(lhs != rhs)))
    unit = A[Rt.one] != np.arange(n)
    out.append(AxiomResult("1m = m", not unit.any(), first(unit)))
    return out
