"""Command-line front end.

Exit codes: 0 success / isomorphic, 1 input or parse error, 2 numerical
consistency failure, 3 not isomorphic.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import algebra, classify, spinor, stabilizer, theta
from .errors import ConsistencyError
from .numerics import DEFAULT_TOL, symmetric_eigenvalues

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONSISTENCY = 2
EXIT_NOT_ISOMORPHIC = 3

_ARITY = {
    "theta": 1, "eigen": 1, "autdim": 1, "roundtrip": 1, "check": 1,
    "classify": 2, "selftest": 0,
}


class UsageError(ValueError):
    pass


def fmt_value(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.12g" % (round(float(v), 12) + 0.0)
    return str(v)


def write_report(path, items) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for key, value in items:
            fh.write(f"{key}={fmt_value(value)}\n")


def _builtin_help() -> str:
    lines = [f"  {name:<24} Table {num}: {desc}" for name, (num, desc) in algebra.BUILTINS.items()]
    lines.append("  unrepaired variants: " + ", ".join(algebra.UNREPAIRED))
    return "builtin tables:\n" + "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintheta",
        description="Classify 8-dimensional alternative-elastic algebras by their controlling spin-tensor.",
        epilog=_builtin_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "theta": "print the controlling spin-tensor",
        "eigen": "print its eigenvalues, descending",
        "classify": "compare two algebras",
        "autdim": "infinitesimal stabilizer dimension",
        "roundtrip": "reconstruct structural constants from theta",
        "check": "axiom and metric diagnostics",
        "selftest": "seed-operator and golden-matrix checks",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text, epilog=_builtin_help(),
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        if _ARITY[name]:
            p.add_argument("files", nargs="*", metavar="TABLE", help="table file")
            p.add_argument("--builtin", action="append", default=[], metavar="NAME",
                           help="use an embedded table (repeatable)")
        p.add_argument("--tol", type=float, default=None, help="tolerance override")
        p.add_argument("--report", metavar="PATH", help="write key=value lines here")
    return parser


def _load_inputs(args):
    tables = [algebra.load_table(f) for f in args.files]
    tables += [algebra.builtin(n) for n in args.builtin]
    want = _ARITY[args.command]
    if len(tables) != want:
        raise UsageError(f"{args.command} takes exactly {want} input(s), got {len(tables)}")
    return tables


def _theta_items(th):
    return [(f"theta.{c}.{d}", th.real[c, d]) for c in range(8) for d in range(8)]


def _eigen_items(eigs, prefix=""):
    return [(f"{prefix}eigenvalue.{k}", v) for k, v in enumerate(eigs)]


def cmd_theta(tables, tol, out):
    th = theta.theta_for_table(tables[0], tol=tol)
    out.write(theta.format_theta(th))
    return EXIT_OK, _theta_items(th) + [("has_identity", th.has_identity)]


def cmd_eigen(tables, tol, out):
    sig = classify.signature(tables[0], tol=tol)
    for v in sig.eigenvalues:
        out.write(f"{round(v, 12) + 0.0:9.4f}\n")
    return EXIT_OK, _eigen_items(sig.eigenvalues) + [("has_identity", sig.has_identity)]


def cmd_classify(tables, tol, out):
    rep = classify.compare(tables[0], tables[1], tol=tol if tol is not None else classify.COMPARE_TOL)
    for label, sig in (("a", rep.first), ("b", rep.second)):
        vals = " ".join(f"{round(v, 12) + 0.0:.4f}" for v in sig.eigenvalues)
        unit = "unital" if sig.has_identity else "non-unital"
        out.write(f"{label}: {sig.name} ({unit}) [{vals}]\n")
    out.write(f"max deviation: {fmt_value(rep.max_deviation)}\n")
    out.write(f"verdict: {rep.verdict}\n")
    items = [("verdict", rep.verdict), ("max_deviation", rep.max_deviation)]
    for label, sig in (("a", rep.first), ("b", rep.second)):
        items.append((f"{label}.has_identity", sig.has_identity))
        items += _eigen_items(sig.eigenvalues, prefix=f"{label}.")
    code = EXIT_OK if rep.isomorphic else EXIT_NOT_ISOMORPHIC
    return code, items


def cmd_autdim(tables, tol, out):
    res = stabilizer.stabilizer_dimension(tables[0], tol=tol)
    items = [
        ("rank.identity", res.rank_identity),
        ("rank.theta", res.rank_theta),
        ("rank.combined", res.rank_combined),
        ("dimension", res.dim),
    ]
    for key, value in items:
        out.write(f"{key}={fmt_value(value)}\n")
    for k, (label, row) in enumerate(res.surviving):
        text = stabilizer.format_constraint(row, tol)
        out.write(f"[{label}] {text}\n")
        items.append((f"constraint.{k}", f"{label}: {text}"))
    return EXIT_OK, items


def cmd_roundtrip(tables, tol, out):
    table = tables[0]
    full = algebra.to_structural_constants(table)
    rec = theta.reconstruct_constants(theta.theta_for_table(table, tol=tol), tol=tol)
    dev = float(np.abs(rec - full).max())
    out.write(f"max deviation: {fmt_value(dev)}\n")
    return EXIT_OK, [("roundtrip.max_deviation", dev)]


def cmd_check(tables, tol, out):
    table = tables[0]
    rep = algebra.check_axioms(table, tol)
    out.write(f"identity element: {'yes' if table.has_identity else 'no'}\n")
    out.write(f"alternative-elastic (polarized) violations: {len(rep.alternative)}\n")
    out.write(f"elastic (polarized) violations: {len(rep.elastic)}\n")
    out.write(f"metric violations: {len(rep.metric)}\n")
    for a, b, c in rep.alternative[:20]:
        out.write(f"  alternative fails at (e{a}, e{b}, e{c})\n")
    for a, b, c in rep.elastic[:20]:
        out.write(f"  elastic fails at (e{a}, e{b}, e{c})\n")
    for i, j in rep.metric:
        out.write(f"  <e{i}, e{j}> is not scalar\n")
    items = [
        ("has_identity", table.has_identity),
        ("axioms.alternative.violations", len(rep.alternative)),
        ("axioms.elastic.violations", len(rep.elastic)),
        ("metric.violations", len(rep.metric)),
    ]
    return EXIT_OK, items


def run_selftest(tol=DEFAULT_TOL):
    """All seed diagnostics as (key, value, passed) triples."""
    results = []
    seed = spinor.build_seed_operators()
    ops = spinor.new_basis_operators()
    cliff = spinor.clifford_diagnostic(ops)
    results.append(("selftest.clifford_residual", cliff, cliff < tol))
    eps = spinor.epsilon_residual()
    results.append(("selftest.epsilon_residual", eps, eps < 1e-12))
    nnz = all(np.count_nonzero(m) == 8 for m in seed.mats)
    results.append(("selftest.seed_entries", "8 per operator" if nnz else "bad", nnz))
    for name, ref in theta.REFERENCE_THETA.items():
        th = theta.theta_for_table(algebra.builtin(name), ops, tol)
        dev = float(np.abs(th.real - ref).max())
        results.append((f"selftest.theta.{name}", dev, dev < tol))
        eig = symmetric_eigenvalues(th.real, tol)
        ref_eig = symmetric_eigenvalues(ref, tol)
        edev = max(abs(x - y) for x, y in zip(eig, ref_eig))
        results.append((f"selftest.eigen.{name}", edev, edev < classify.COMPARE_TOL))
    return results


def cmd_selftest(tables, tol, out):
    results = run_selftest(DEFAULT_TOL if tol is None else tol)
    items = []
    ok = True
    for key, value, passed in results:
        ok &= passed
        out.write(f"{'PASS' if passed else 'FAIL'} {key} = {fmt_value(value)}\n")
        items.append((key, value))
    items.append(("selftest.status", "pass" if ok else "fail"))
    out.write(f"selftest: {'pass' if ok else 'fail'}\n")
    return (EXIT_OK if ok else EXIT_CONSISTENCY), items


_COMMANDS = {
    "theta": cmd_theta, "eigen": cmd_eigen, "classify": cmd_classify,
    "autdim": cmd_autdim, "roundtrip": cmd_roundtrip, "check": cmd_check,
    "selftest": cmd_selftest,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    tol = args.tol
    if tol is not None and tol <= 0:
        err.write("error: --tol must be positive\n")
        return EXIT_INPUT
    try:
        tables = _load_inputs(args) if _ARITY[args.command] else []
        build_tol = DEFAULT_TOL if tol is None or args.command == "classify" else tol
        code, items = _COMMANDS[args.command](tables, tol if args.command == "classify" else build_tol, out)
    except ConsistencyError as exc:
        err.write(f"consistency error: {exc}\n")
        return EXIT_CONSISTENCY
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    if args.report:
        try:
            write_report(args.report, items)
        except OSError as exc:
            err.write(f"error: cannot write report: {exc}\n")
            return EXIT_INPUT
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))
