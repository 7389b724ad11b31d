"""Finite abelian groups and finite commutative unital rings.

Elements are integer codes in ``range(order)``.  A group element's residue
tuple is mixed-radix encoded big-endian, so the code order matches the
lexicographic order of residue tuples and a direct product of ``G`` and
``H`` encodes ``(g, h)`` as ``g * |H| + h``.  All arithmetic goes through
dense numpy tables indexed by code.
"""

from __future__ import annotations

from functools import cached_property
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .reports import AxiomReport, AxiomResult

DEFAULT_RING_BOUND = 4096
DEFAULT_MODULE_BOUND = 65536


class SizeBoundError(ValueError):
    pass


def require_size(size: int, bound: int | None, default: int, what: str) -> None:
    limit = default if bound is None else bound
    if size > limit:
        raise SizeBoundError(f"{what} has {size} elements, above the bound {limit}")


class FiniteAbelianGroup:
    """Direct product of cyclic groups ``Z_{n_1} x ... x Z_{n_k}``."""

    def __init__(self, cyclic_orders: Sequence[int]):
        orders = tuple(int(n) for n in cyclic_orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        self.cyclic_orders = orders
        self.order = prod(orders)
        strides = []
        acc = 1
        for n in reversed(orders):
            strides.append(acc)
            acc *= n
        self._strides = tuple(reversed(strides))

    zero = 0

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteAbelianGroup) and other.cyclic_orders == self.cyclic_orders

    def __hash__(self) -> int:
        return hash(("FiniteAbelianGroup", self.cyclic_orders))

    def __repr__(self) -> str:
        return "FiniteAbelianGroup(" + " x ".join(f"Z{n}" for n in self.cyclic_orders) + ")"

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.cyclic_orders)

    def encode(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.cyclic_orders):
            raise ValueError(f"expected {len(self.cyclic_orders)} residues, got {len(residues)}")
        code = 0
        for r, n, s in zip(residues, self.cyclic_orders, self._strides):
            if not 0 <= r < n:
                raise ValueError(f"residue {r} out of range for Z{n}")
            code += r * s
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        self._check(code)
        return tuple((code // s) % n for n, s in zip(self.cyclic_orders, self._strides))

    def _check(self, code: int) -> None:
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} is not an element of {self!r}")

    @cached_property
    def residues(self) -> np.ndarray:
        codes = np.arange(self.order)
        cols = [(codes // s) % n for n, s in zip(self.cyclic_orders, self._strides)]
        return np.stack(cols, axis=1)

    def _encode_rows(self, res: np.ndarray) -> np.ndarray:
        return (res % np.array(self.cyclic_orders)) @ np.array(self._strides)

    @cached_property
    def add_table(self) -> np.ndarray:
        res = self.residues
        summed = res[:, None, :] + res[None, :, :]
        return self._encode_rows(summed)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return self._encode_rows(-self.residues)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def multiple(self, k: int, a: int) -> int:
        res = np.array(self.decode(a)) * k
        return int(self._encode_rows(res[None, :])[0])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.add(x, a)
            k += 1
        return k


def cyclic_group(n: int) -> FiniteAbelianGroup:
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    return FiniteAbelianGroup((n,))


def direct_product(factors: Sequence[FiniteAbelianGroup]) -> FiniteAbelianGroup:
    if not factors:
        raise ValueError("direct product of an empty sequence")
    orders: list[int] = []
    for g in factors:
        orders.extend(g.cyclic_orders)
    return FiniteAbelianGroup(orders)


def _first_true(mask: np.ndarray):
    hit = np.argwhere(mask)
    return tuple(int(v) for v in hit[0]) if len(hit) else None


def check_group_axioms(G: FiniteAbelianGroup) -> AxiomReport:
    T, N = G.add_table, G.neg_table
    n = G.order
    results = [AxiomResult("closure", bool(((T >= 0) & (T < n)).all()), _first_true((T < 0) | (T >= n)))]
    assoc_witness = None
    for a in range(n):
        lhs = T[T[a]]              # (a+b)+c, indexed [b, c]
        rhs = T[a][T]              # a+(b+c)
        w = _first_true(lhs != rhs)
        if w is not None:
            assoc_witness = (a, *w)
            break
    results.append(AxiomResult("associativity", assoc_witness is None, assoc_witness))
    results.append(AxiomResult("commutativity", bool((T == T.T).all()), _first_true(T != T.T)))
    ident = T[0] != np.arange(n)
    results.append(AxiomResult("identity", not ident.any(), _first_true(ident)))
    inv = T[np.arange(n), N] != 0
    results.append(AxiomResult("inverses", not inv.any(), _first_true(inv)))
    return AxiomReport(repr(G), tuple(results))


class FiniteCommRing:
    """Commutative unital ring on the carrier of a finite abelian group.

    The constructor does not validate; run :func:`check_ring_axioms`.
    """

    def __init__(self, group: FiniteAbelianGroup, mul_table, one: int, name: str | None = None):
        table = np.asarray(mul_table, dtype=np.int64)
        if table.shape != (group.order, group.order):
            raise ValueError(f"multiplication table must be {group.order}x{group.order}")
        self.additive_group = group
        self.mul_table = table
        self.one = int(one)
        self.name = name or f"ring of order {group.order}"

    zero = 0

    @property
    def size(self) -> int:
        return self.additive_group.order

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteCommRing({self.name})"

    @property
    def add_table(self) -> np.ndarray:
        return self.additive_group.add_table

    def add(self, a: int, b: int) -> int:
        return self.additive_group.add(a, b)

    def neg(self, a: int) -> int:
        return self.additive_group.neg(a)

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def power(self, a: int, k: int) -> int:
        x = self.one
        for _ in range(k):
            x = self.mul(x, a)
        return x

    @property
    def is_zero_ring(self) -> bool:
        return self.size == 1

    def is_domain(self) -> bool:
        """Nonzero ring without nonzero zero divisors."""
        if self.is_zero_ring:
            return False
        nz = self.mul_table[1:, 1:]
        return bool((nz != 0).all())


def ring_integers_mod(n: int) -> FiniteCommRing:
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    a = np.arange(n)
    return FiniteCommRing(cyclic_group(n), np.outer(a, a) % n, 1 % n, name=f"Z{n}")


def ring_product(left: FiniteCommRing, right: FiniteCommRing) -> FiniteCommRing:
    """Componentwise product ring; ``(a, b)`` has code ``a * |right| + b``."""
    m = right.size
    group = direct_product([left.additive_group, right.additive_group])
    codes = np.arange(group.order)
    la, rb = codes // m, codes % m
    table = left.mul_table[la[:, None], la[None, :]] * m + right.mul_table[rb[:, None], rb[None, :]]
    return FiniteCommRing(group, table, left.one * m + right.one, name=f"{left.name}x{right.name}")


def check_ring_axioms(R: FiniteCommRing, max_size: int | None = None) -> AxiomReport:
    """Exhaustive scan of the commutative unital ring axioms."""
    require_size(R.size, max_size, DEFAULT_RING_BOUND, "ring")
    group_report = check_group_axioms(R.additive_group)
    results = [AxiomResult(f"additive {r.name}", r.passed, r.witness) for r in group_report.results]
    T, M = R.add_table, R.mul_table
    n = R.size
    results.append(AxiomResult("multiplicative closure", bool(((M >= 0) & (M < n)).all()),
                               _first_true((M < 0) | (M >= n))))
    results.append(AxiomResult("commutativity", bool((M == M.T).all()), _first_true(M != M.T)))
    assoc = dist = None
    for a in range(n):
        if assoc is None:
            w = _first_true(M[M[a]] != M[a][M])
            if w is not None:
                assoc = (a, *w)
        if dist is None:
            # a(b + c) = ab + ac
            w = _first_true(M[a][T] != T[M[a][:, None], M[a][None, :]])
            if w is not None:
                dist = (a, *w)
        if assoc is not None and dist is not None:
            break
    results.append(AxiomResult("associativity", assoc is None, assoc))
    results.append(AxiomResult("distributivity", dist is None, dist))
    bad_unit = M[R.one] != np.arange(n)
    results.append(AxiomResult("unity", not bad_unit.any(), _first_true(bad_unit)))
    return AxiomReport(repr(R), tuple(results))


def additive_span(group: FiniteAbelianGroup, elements: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing ``elements``."""
    span = {0}
    T = group.add_table
    for x in set(int(e) for e in elements):
        if x in span:
            continue
        current = np.fromiter(span, dtype=np.int64)
        # span + <x>
        multiples = [0]
        y = x
        while y != 0:
            multiples.append(y)
            y = int(T[y, x])
        span = set(np.unique(T[np.ix_(current, np.array(multiples))]).tolist())
    return frozenset(span)
