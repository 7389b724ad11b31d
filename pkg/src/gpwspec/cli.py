"""Command-line front end: ``gpwspec analyze|verify|export-dot|catalog``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import spectrum as sp
from . import topology as tp
from .catalog import catalog_instance, catalog_names, catalog_text
from .graded import enumerate_graded_ideals
from .instances import Instance, load_instance
from .reports import InconsistencyError
from .theorems import FAIL, REGISTRY, VerificationReport, verify

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def resolve(source: str, max_size: int | None) -> Instance:
    """A path to an instance file, or the name of a built-in instance."""
    path = Path(source)
    try:
        if path.exists():
            return load_instance(path, max_size)
        if source in catalog_names():
            return catalog_instance(source, max_size)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    raise InputError(f"{source!r} is neither a file nor a catalog instance")


# -- analyze -------------------------------------------------------------------

def analysis(inst: Instance) -> dict:
    M = inst.module
    S = sp.pseudo_spectrum(M)
    R = S.ring
    ideals = enumerate_graded_ideals(R)
    gspec = [I for I in ideals if I.is_proper and sp.is_graded_prime_ideal(I)]
    gwspec = sp.weakly_prime_ideals(R)
    strict = sp.weakly_topological_routes(S, exempt_zero=False)
    literal = sp.weakly_topological_routes(S, exempt_zero=True)
    table = []
    for I in ideals:
        fiber = [P for P in S.points if S.colon_of[P] == I]
        table.append({
            "ideal": I.label,
            "prime": I in gspec,
            "weakly_prime": I in gwspec,
            "fiber": [P.label for P in fiber],
        })
    return {
        "instance": inst.name,
        "ring": R.name,
        "module": M.name,
        "module_size": M.size,
        "points": [{"submodule": P.label, "colon": S.colon_of[P].label} for P in S.points],
        "gspec": [I.label for I in gspec],
        "gwspec": [I.label for I in gwspec],
        "comparison": table,
        "flags": {
            "empty_spectrum": not S.points,
            "multiplication": bool(sp.is_multiplication_module(M)),
            "primeful": sp.is_primeful(S),
            "injective": sp.is_pseudo_weakly_injective(S),
            "weakly_topological": bool(strict),
            "weakly_topological_zero_exempt": bool(literal),
            "union_identity": bool(strict.by_union_identity),
        },
    }


def format_analysis(a: dict) -> str:
    lines = [f"instance {a['instance']}: {a['module']} ({a['module_size']} elements) over {a['ring']}"]
    if a["flags"]["empty_spectrum"]:
        lines.append("spectrum: empty")
    else:
        lines.append(f"spectrum: {len(a['points'])} point(s)")
        for p in a["points"]:
            lines.append(f"  {p['submodule']:<24} colon {p['colon']}")
    lines.append("graded ideals:")
    lines.append(f"  {'ideal':<24} {'prime':<6} {'weakly':<7} fiber")
    for row in a["comparison"]:
        fiber = ", ".join(row["fiber"]) or "-"
        lines.append(f"  {row['ideal']:<24} {'yes' if row['prime'] else 'no':<6} "
                     f"{'yes' if row['weakly_prime'] else 'no':<7} {fiber}")
    lines.append("flags:")
    for k, v in a["flags"].items():
        lines.append(f"  {k}: {'yes' if v else 'no'}")
    return "\n".join(lines) + "\n"


# -- verify --------------------------------------------------------------------

def report_data(reports: list[VerificationReport], timings: bool) -> dict:
    total = {"pass": 0, "fail": 0, "not-applicable": 0}
    out = []
    for rep in sorted(reports, key=lambda r: r.instance):
        counts = rep.counts()
        for k, v in counts.items():
            total[k] += v
        entries = []
        for r in rep.results:
            e = {"id": r.check_id, "status": r.status, "witness": r.witness, "note": r.note}
            if timings:
                e["seconds"] = round(r.seconds, 6)
            entries.append(e)
        out.append({"instance": rep.instance, "checks": entries, "summary": counts})
    return {"reports": out, "summary": total}


def format_reports(data: dict) -> str:
    lines = []
    for rep in data["reports"]:
        lines.append(f"== {rep['instance']}")
        for e in rep["checks"]:
            line = f"  {e['status']:<15} {e['id']}"
            if e["status"] != "pass" and e["witness"] is not None:
                line += f"  witness={json.dumps(e['witness'])}"
            if e["note"]:
                line += f"  ({e['note']})"
            if "seconds" in e:
                line += f"  [{e['seconds']:.3f}s]"
            lines.append(line)
        c = rep["summary"]
        lines.append(f"  -- {c['pass']} pass, {c['fail']} fail, {c['not-applicable']} not applicable")
    s = data["summary"]
    lines.append(f"total: {s['pass']} pass, {s['fail']} fail, {s['not-applicable']} not applicable")
    return "\n".join(lines) + "\n"


# -- entry point ---------------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-size", type=int, default=None, help="override the default size bounds")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for subset sampling on large spectra")
    p.add_argument("-o", "--output", default=None, help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpwspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectrum, ideal comparison table and module flags")
    p.add_argument("instance", help="instance file or catalog name")
    _common(p)

    p = sub.add_parser("verify", help="run the theorem checks")
    p.add_argument("instance", nargs="?", help="instance file or catalog name")
    p.add_argument("--all", action="store_true", help="verify every catalog instance")
    p.add_argument("--check", action="append", choices=sorted(REGISTRY), help="restrict to these checks")
    p.add_argument("--timings", action="store_true", help="include wall time per check")
    _common(p)

    p = sub.add_parser("export-dot", help="DOT graph of the specialization order")
    p.add_argument("instance", help="instance file or catalog name")
    _common(p)

    p = sub.add_parser("catalog", help="built-in instances")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    _common(p)
    return parser


def _cmd_analyze(args) -> int:
    a = analysis(resolve(args.instance, args.max_size))
    _emit(json.dumps(a, indent=2, sort_keys=True) + "\n" if args.format == "machine" else format_analysis(a),
          args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.all == bool(args.instance):
        raise InputError("give either an instance or --all")
    if args.all:
        try:
            insts = [catalog_instance(n, args.max_size) for n in catalog_names()]
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        insts = [resolve(args.instance, args.max_size)]
    reports = [verify(i.name, i.module, args.seed, args.check) for i in insts]
    data = report_data(reports, args.timings)
    text = json.dumps(data, sort_keys=True) + "\n" if args.format == "machine" else format_reports(data)
    _emit(text, args.output)
    return EXIT_FAILED if any(r.status == FAIL for rep in reports for r in rep.results) else EXIT_OK


def _cmd_export_dot(args) -> int:
    inst = resolve(args.instance, args.max_size)
    S = sp.pseudo_spectrum(inst.module)
    if not S.points:
        raise InputError(f"{inst.name} has an empty spectrum")
    T = tp.build_zariski(S, require_topological=False)
    _emit(tp.to_dot(tp.specialization_order(T), inst.name), args.output)
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.action == "list":
        names = catalog_names()
        text = json.dumps(names) + "\n" if args.format == "machine" else "\n".join(names) + "\n"
    else:
        if not args.name:
            raise InputError("catalog show needs a name")
        try:
            text = catalog_text(args.name)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    _emit(text, args.output)
    return EXIT_OK


COMMANDS = {"analyze": _cmd_analyze, "verify": _cmd_verify,
            "export-dot": _cmd_export_dot, "catalog": _cmd_catalog}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
