"""Command-line frontend.

Exit codes: 0 computed (whatever the verdict), 1 catalog mismatch, 2 parse
error, 3 non-isolated singularity or exhausted budget, 4 unsupported input
or out of the implemented range.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .catalog import load_catalog, run_catalog
from .index import TangencyError, UnsupportedIndexError, VectorField, directional_derivative, hamiltonian_field
from .local import Budget, BudgetExceeded
from .milnor import NonIsolatedError, UnsupportedGermError, WeightInconsistencyError
from .obstruction import OutOfRangeError, homotopy_group_u
from .parser import GermFileError, ParseError, format_polynomial, load_germ
from .report import decide_report, dumps, index_report, milnor_report

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NONISOLATED = 3
EXIT_UNSUPPORTED = 4


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        self.code = code
        super().__init__(message)


def _common(parser: argparse.ArgumentParser, germ: bool = True) -> None:
    if germ:
        parser.add_argument("--germ", required=True, metavar="PATH", help="germ file (JSON)")
    parser.add_argument("--json", action="store_true", help="emit the machine-readable report")
    parser.add_argument("--budget-reductions", type=int, default=None, metavar="N")
    parser.add_argument("--budget-staircase", type=int, default=None, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="milnorkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("milnor", help="Milnor number of a germ")
    _common(p)
    p.add_argument("--declared-mu", type=int, default=None, metavar="MU")

    p = sub.add_parser("decide", help="triviality verdicts")
    _common(p)
    p.add_argument("--declared-mu", type=int, default=None, metavar="MU")
    p.add_argument("--declared-gsv", type=int, default=None, metavar="G")

    p = sub.add_parser("index", help="Poincare-Hopf and GSV indices")
    _common(p)
    p.add_argument("--radial", action="store_true", help="also report the radial GSV index")
    p.add_argument("--declared-mu", type=int, default=None, metavar="MU")
    p.add_argument("--declared-gsv", type=int, default=None, metavar="G")

    p = sub.add_parser("hamiltonian", help="Hamiltonian field of a hypersurface in even dimension")
    _common(p)

    p = sub.add_parser("homotopy", help="pi_k(U(n)) in the implemented range")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="list or re-verify the shipped catalog")
    p.add_argument("action", choices=["list", "run"])
    p.add_argument("--catalog", default=None, metavar="PATH", help="alternative catalog file")
    p.add_argument("--workers", type=int, default=1)
    _common(p, germ=False)
    return parser


def _budget(args) -> Budget:
    return Budget.from_env(args.budget_reductions, args.budget_staircase)


def _load(args):
    try:
        return load_germ(args.germ)
    except OSError as exc:
        raise CLIError(f"cannot read {args.germ}: {exc.strerror}", EXIT_PARSE) from exc
    except (GermFileError, ParseError) as exc:
        raise CLIError(f"{args.germ}: {exc}", EXIT_PARSE) from exc


def _human_milnor(rep: dict) -> List[str]:
    m = rep["milnor"]
    lines = [f"mu = {m['mu']}  (method: {m['method']}, isolated: {str(m['isolated']).lower()})"]
    if m.get("notice"):
        lines.append(f"note: {m['notice']}")
    return lines


def _human_verdict(name: str, v: dict) -> str:
    state = "trivial" if v["trivial"] else "nontrivial"
    inputs = ", ".join(f"{k}={val}" for k, val in v["inputs"].items())
    return f"{name}: {state}  (residue {v['residue']} mod {v['modulus']}; {v['criterion']}; {inputs})"


def _human(rep: dict) -> str:
    head = rep["label"] or "germ"
    lines = [f"{head}: k={rep['k']}, n={rep['n']}, ambient C^{rep['ambient_dimension']}"]
    if "milnor" in rep:
        lines += _human_milnor(rep)
    for name, idx in rep.get("indices", {}).items():
        lines.append(f"{name} = {idx['value']}  ({idx['kind']})")
    if "field" in rep:
        f = rep["field"]
        lines.append(
            f"field: tangent={str(f['tangent']).lower()}, tangent_to_fibres={str(f['tangent_to_fibres']).lower()}, "
            f"hamiltonian={str(f['hamiltonian']).lower()}, gsv={f['gsv']['value']} ({f['gsv']['kind']})"
        )
    for name, v in rep.get("verdicts", {}).items():
        lines.append(_human_verdict(name, v))
        for a in v.get("assumptions", []):
            lines.append(f"  assumption: {a}")
    return "\n".join(lines)


def _emit(args, rep: dict, out) -> None:
    out.write((dumps(rep) if args.json else _human(rep)) + "\n")


def cmd_milnor(args, out) -> int:
    germ = _load(args)
    _emit(args, milnor_report(germ, args.declared_mu, _budget(args)), out)
    return EXIT_OK


def cmd_decide(args, out) -> int:
    germ = _load(args)
    _emit(args, decide_report(germ, args.declared_mu, args.declared_gsv, _budget(args)), out)
    return EXIT_OK


def cmd_index(args, out) -> int:
    germ = _load(args)
    rep = index_report(germ, args.radial, args.declared_mu, args.declared_gsv, _budget(args))
    _emit(args, rep, out)
    return EXIT_OK


def cmd_hamiltonian(args, out) -> int:
    germ = _load(args)
    if not germ.is_hypersurface:
        raise CLIError("Hamiltonian fields are defined for hypersurfaces only", EXIT_UNSUPPORTED)
    f = germ.equations[0]
    try:
        v = hamiltonian_field(f)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_UNSUPPORTED) from exc
    rep = {
        "schema": "milnorkit.hamiltonian/1",
        "label": germ.label,
        "variables": list(germ.ring.variables),
        "equation": format_polynomial(f),
        "vector_field": [format_polynomial(c) for c in v.components],
        "df_of_v": format_polynomial(directional_derivative(v, f)),
        "gsv": 0,
    }
    if args.json:
        out.write(dumps(rep) + "\n")
    else:
        out.write(f"v = ({', '.join(rep['vector_field'])})\ndf(v) = {rep['df_of_v']}\ngsv = 0\n")
    return EXIT_OK


def cmd_homotopy(args, out) -> int:
    try:
        g = homotopy_group_u(args.k, args.n)
    except OutOfRangeError as exc:
        raise CLIError(str(exc), EXIT_UNSUPPORTED) from exc
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_UNSUPPORTED) from exc
    if args.json:
        payload = {"k": args.k, "n": args.n, "rank": g.rank, "torsion_order": g.torsion_order, "group": str(g)}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"{g}\n")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    try:
        entries = load_catalog(args.catalog)
    except (OSError, ValueError, KeyError) as exc:
        raise CLIError(f"cannot load catalog: {exc}", EXIT_PARSE) from exc
    if args.action == "list":
        if args.json:
            out.write(json.dumps([{"label": e.label, "expected": e.expected} for e in entries], indent=2, sort_keys=True) + "\n")
        else:
            for e in entries:
                out.write(f"{e.label}\t{e.germ.n}\tmu={e.expected.get('mu')}\t{e.provenance}\n")
        return EXIT_OK
    budget_factory = lambda: _budget(args)  # noqa: E731
    results = run_catalog(entries, workers=args.workers, budget_factory=budget_factory)
    failed = [label for label, mism in results.items() if mism]
    if args.json:
        payload = {
            label: [{"key": k, "expected": exp, "observed": obs} for k, exp, obs in mism]
            for label, mism in results.items()
        }
        out.write(json.dumps({"ok": not failed, "mismatches": payload}, indent=2, sort_keys=True) + "\n")
    else:
        for label, mism in results.items():
            if not mism:
                out.write(f"ok    {label}\n")
            else:
                detail = "; ".join(f"{k}: expected {exp!r}, got {obs!r}" for k, exp, obs in mism)
                out.write(f"FAIL  {label}: {detail}\n")
    return EXIT_MISMATCH if failed else EXIT_OK


COMMANDS = {
    "milnor": cmd_milnor,
    "decide": cmd_decide,
    "index": cmd_index,
    "hamiltonian": cmd_hamiltonian,
    "homotopy": cmd_homotopy,
    "catalog": cmd_catalog,
}


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except CLIError as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except (NonIsolatedError, BudgetExceeded) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NONISOLATED
    except (UnsupportedGermError, UnsupportedIndexError, TangencyError, WeightInconsistencyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
