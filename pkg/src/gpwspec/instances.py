"""Instance definition files: parsing, emitting and building.

Text format, one declaration per line, ``#`` starts a comment::

    name     z6_mod2
    grading  2                     # cyclic orders of the grading group
    ring     A integers_mod 6      # trivially graded Z_6
    ring     B group_ring 4        # Z_4[G]
    ring     C quotient B 2        # B modulo the ideal generated by codes
    module   N self A
    module   F free A 0 1          # A^2, basis vectors of degrees 0 and 1
    module   Q quotient N 2        # N modulo the submodule generated by codes
    target   Q                     # optional; defaults to the last module

Every element reference is a canonical integer code.  A JSON document with
keys ``name``, ``grading``, ``rings``, ``modules`` and ``target`` is accepted
as well, each declaration being ``{"id", "kind", "of", "values"}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .algebra import (
    DEFAULT_MODULE_BOUND,
    DEFAULT_RING_BOUND,
    FiniteAbelianGroup,
    check_ring_axioms,
    require_size,
    ring_integers_mod,
)
from .graded import (
    GradedModule,
    GradedRing,
    check_grading_axioms,
    free_graded_module,
    group_ring,
    quotient_graded_module,
    quotient_graded_ring,
    submodule_generated,
    trivial_grading,
)
from .reports import AxiomError

RING_KINDS = {"integers_mod": False, "group_ring": False, "quotient": True}
MODULE_KINDS = {"self": True, "free": True, "quotient": True}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class InstanceError(ValueError):
    """Malformed or invalid instance definition."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line, self.column = line, column


@dataclass(frozen=True)
class Declaration:
    id: str
    kind: str
    of: str | None = None
    values: tuple[int, ...] = ()


@dataclass(frozen=True)
class InstanceSpec:
    name: str
    grading: tuple[int, ...]
    rings: tuple[Declaration, ...]
    modules: tuple[Declaration, ...]
    target: str | None = None

    @property
    def target_id(self) -> str:
        if self.target is not None:
            return self.target
        if not self.modules:
            raise InstanceError(f"instance {self.name} declares no module")
        return self.modules[-1].id


@dataclass
class Instance:
    spec: InstanceSpec
    grading_group: FiniteAbelianGroup
    rings: dict[str, GradedRing] = field(default_factory=dict)
    modules: dict[str, GradedModule] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def module(self) -> GradedModule:
        return self.modules[self.spec.target_id]

    @property
    def ring(self) -> GradedRing:
        return self.module.base


# -- parsing -------------------------------------------------------------------

def _tokens(line: str):
    for m in re.finditer(r"\S+", line.split("#", 1)[0]):
        yield m.group(), m.start() + 1


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InstanceError(f"expected an integer, got {tok!r}", line, col) from None


def _ident(tok: str, line: int, col: int) -> str:
    if not _IDENT.match(tok):
        raise InstanceError(f"invalid identifier {tok!r}", line, col)
    return tok


def parse_text(text: str) -> InstanceSpec:
    name = grading = target = None
    rings: list[Declaration] = []
    modules: list[Declaration] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = list(_tokens(raw))
        if not toks:
            continue
        (key, kcol), rest = toks[0], toks[1:]
        end_col = len(raw.rstrip()) + 1
        if key == "name":
            if len(rest) != 1:
                raise InstanceError("name takes exactly one identifier", lineno, kcol)
            name = _ident(rest[0][0], lineno, rest[0][1])
        elif key == "grading":
            if not rest:
                raise InstanceError("grading needs at least one cyclic order", lineno, end_col)
            grading = tuple(_int(t, lineno, c) for t, c in rest)
        elif key == "target":
            if len(rest) != 1:
                raise InstanceError("target takes exactly one identifier", lineno, kcol)
            target = _ident(rest[0][0], lineno, rest[0][1])
        elif key in ("ring", "module"):
            kinds = RING_KINDS if key == "ring" else MODULE_KINDS
            if len(rest) < 2:
                raise InstanceError(f"{key} needs an identifier and a kind", lineno, end_col)
            ident = _ident(rest[0][0], lineno, rest[0][1])
            kind, kind_col = rest[1]
            if kind not in kinds:
                raise InstanceError(f"unknown {key} kind {kind!r}", lineno, kind_col)
            args = rest[2:]
            of = None
            if kinds[kind]:
                if not args:
                    raise InstanceError(f"{key} kind {kind} needs a source name", lineno, end_col)
                of = _ident(args[0][0], lineno, args[0][1])
                args = args[1:]
            values = tuple(_int(t, lineno, c) for t, c in args)
            (rings if key == "ring" else modules).append(Declaration(ident, kind, of, values))
        else:
            raise InstanceError(f"unknown keyword {key!r}", lineno, kcol)
    if name is None:
        raise InstanceError("missing 'name' line")
    if grading is None:
        raise InstanceError("missing 'grading' line")
    return InstanceSpec(name, grading, tuple(rings), tuple(modules), target)


def _decl_from_json(obj, where: str) -> Declaration:
    if not isinstance(obj, dict) or "id" not in obj or "kind" not in obj:
        raise InstanceError(f"{where}: declaration needs 'id' and 'kind'")
    values = obj.get("values", [])
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise InstanceError(f"{where}: 'values' must be a list of integers")
    return Declaration(str(obj["id"]), str(obj["kind"]), obj.get("of"), tuple(values))


def parse_json(text: str) -> InstanceSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise InstanceError("top level must be an object")
    for key in ("name", "grading"):
        if key not in doc:
            raise InstanceError(f"missing key {key!r}")
    rings = tuple(_decl_from_json(d, f"rings[{i}]") for i, d in enumerate(doc.get("rings", [])))
    modules = tuple(_decl_from_json(d, f"modules[{i}]") for i, d in enumerate(doc.get("modules", [])))
    for d, kinds in [(d, RING_KINDS) for d in rings] + [(d, MODULE_KINDS) for d in modules]:
        if d.kind not in kinds:
            raise InstanceError(f"unknown kind {d.kind!r} for {d.id}")
        if kinds[d.kind] != (d.of is not None):
            raise InstanceError(f"{d.id}: kind {d.kind} {'needs' if kinds[d.kind] else 'takes no'} 'of'")
    return InstanceSpec(str(doc["name"]), tuple(int(n) for n in doc["grading"]), rings, modules, doc.get("target"))


def parse_instance(text: str) -> InstanceSpec:
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def emit_text(spec: InstanceSpec) -> str:
    lines = [f"name {spec.name}", "grading " + " ".join(map(str, spec.grading))]
    for key, decls in (("ring", spec.rings), ("module", spec.modules)):
        for d in decls:
            parts = [key, d.id, d.kind] + ([d.of] if d.of else []) + [str(v) for v in d.values]
            lines.append(" ".join(parts))
    if spec.target is not None:
        lines.append(f"target {spec.target}")
    return "\n".join(lines) + "\n"


def emit_json(spec: InstanceSpec) -> str:
    def decl(d: Declaration) -> dict:
        out = {"id": d.id, "kind": d.kind}
        if d.of is not None:
            out["of"] = d.of
        out["values"] = list(d.values)
        return out

    doc = {"name": spec.name, "grading": list(spec.grading),
           "rings": [decl(d) for d in spec.rings], "modules": [decl(d) for d in spec.modules]}
    if spec.target is not None:
        doc["target"] = spec.target
    return json.dumps(doc, indent=2) + "\n"


# -- building ------------------------------------------------------------------

def _check(report) -> None:
    if not report.ok:
        raise AxiomError(report)


def _arity(d: Declaration, n: int | None = None, at_least: int = 0) -> None:
    if n is not None and len(d.values) != n:
        raise InstanceError(f"{d.id}: {d.kind} takes {n} value(s), got {len(d.values)}")
    if len(d.values) < at_least:
        raise InstanceError(f"{d.id}: {d.kind} needs at least {at_least} value(s)")


def _generators(X, d: Declaration) -> list[int]:
    for v in d.values:
        if not 0 <= v < X.size:
            raise InstanceError(f"{d.id}: code {v} is not an element of {d.of}")
        if v not in X.homogeneous:
            raise InstanceError(f"{d.id}: generator {v} is not homogeneous")
    return list(d.values)


def build_instance(spec: InstanceSpec, max_size: int | None = None, check_axioms: bool = True) -> Instance:
    """Construct every declared structure; size bounds apply before any table is built."""
    ring_bound = DEFAULT_RING_BOUND if max_size is None else max_size
    module_bound = DEFAULT_MODULE_BOUND if max_size is None else max_size
    try:
        G = FiniteAbelianGroup(spec.grading)
    except ValueError as exc:
        raise InstanceError(f"grading: {exc}") from None
    inst = Instance(spec, G)
    for d in spec.rings:
        if d.id in inst.rings:
            raise InstanceError(f"ring {d.id} declared twice")
        if d.kind == "integers_mod":
            _arity(d, 1)
            n = d.values[0]
            if n < 2:
                raise InstanceError(f"{d.id}: modulus must be >= 2")
            require_size(n, ring_bound, ring_bound, f"ring {d.id}")
            R = trivial_grading(ring_integers_mod(n), G)
        elif d.kind == "group_ring":
            _arity(d, 1)
            if d.values[0] < 2:
                raise InstanceError(f"{d.id}: modulus must be >= 2")
            R = group_ring(d.values[0], G, ring_bound)
        else:
            if d.of not in inst.rings:
                raise InstanceError(f"{d.id}: unknown ring {d.of!r}")
            base = inst.rings[d.of]
            I = submodule_generated(base.self_module, _generators(base, d))
            if not I.is_proper:
                raise InstanceError(f"{d.id}: generators {list(d.values)} give the whole ring")
            R = quotient_graded_ring(base, I)
        if check_axioms:
            _check(check_ring_axioms(R.ring, ring_bound))
            _check(check_grading_axioms(R))
        inst.rings[d.id] = R
    for d in spec.modules:
        if d.id in inst.modules:
            raise InstanceError(f"module {d.id} declared twice")
        if d.kind in ("self", "free"):
            if d.of not in inst.rings:
                raise InstanceError(f"{d.id}: unknown ring {d.of!r}")
            R = inst.rings[d.of]
            if d.kind == "self":
                _arity(d, 0)
                M = R.self_module
            else:
                _arity(d, at_least=1)
                for s in d.values:
                    if not 0 <= s < G.order:
                        raise InstanceError(f"{d.id}: shift {s} is not an element of the grading group")
                M = free_graded_module(R, d.values, module_bound)
        else:
            if d.of not in inst.modules:
                raise InstanceError(f"{d.id}: unknown module {d.of!r}")
            base = inst.modules[d.of]
            M = quotient_graded_module(base, submodule_generated(base, _generators(base, d)))
        require_size(M.size, module_bound, module_bound, f"module {d.id}")
        if check_axioms:
            _check(check_grading_axioms(M))
        inst.modules[d.id] = M
    if spec.target_id not in inst.modules:
        raise InstanceError(f"target {spec.target_id!r} is not a declared module")
    return inst


def load_instance(path: str | Path, max_size: int | None = None) -> Instance:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    return build_instance(parse_instance(text), max_size)


def dump_structure(M: GradedModule) -> str:
    """Canonical text of a module and its ring: tables and components by code."""
    R = M.base

    def rows(a: np.ndarray) -> list[str]:
        return [" ".join(map(str, r)) for r in np.asarray(a).tolist()]

    def comps(X) -> list[str]:
        return [f"  {g}: " + " ".join(map(str, sorted(c))) for g, c in enumerate(X.components)]

    out = [f"grading {' '.join(map(str, R.grading_group.cyclic_orders))}",
           f"ring carrier {' '.join(map(str, R.carrier_group.cyclic_orders))} one {R.one}",
           "ring mul", *rows(R.ring.mul_table), "ring components", *comps(R),
           f"module carrier {' '.join(map(str, M.carrier_group.cyclic_orders))}",
           "module action", *rows(M.action), "module components", *comps(M)]
    return "\n".join(out) + "\n"
