"""Command-line front end.

Exit codes: 0 success, 1 certification/verification failure (or an
exhausted search budget), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import formulas
from .constructions import GENERATORS, InfeasibleParameters, build_witness, certify
from .graph import FamilySpec, WitnessFormatError, parse_witness
from .search import SearchBudgetExhausted, Status, budget_from_env, ramsey_number, verify_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _family(text: str) -> FamilySpec:
    try:
        return FamilySpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wheelramsey",
        description="Ramsey numbers of wheels: witnesses, formulas and exhaustive search.",
        epilog="Families: C<k> cycle, W<k> wheel on k+1 vertices (hub plus k-cycle; W1=K2, W2=K3), "
        "F<k> fan (k triangles sharing a vertex), S<m> star K_{1,m}, M<n> matching nK_2, K<n> clique.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and certify a lower-bound coloring")
    c.add_argument("--witness", required=True, choices=sorted(GENERATORS))
    c.add_argument("--m", type=_positive, default=1, help="first parameter (vertex count for mindeg-wheel)")
    c.add_argument("--n", type=_positive, required=True, help="wheel/fan/star-side parameter")
    c.add_argument("-o", "--output", type=Path, help="write the witness file here instead of stdout")

    v = sub.add_parser("verify", help="check a witness file against two families")
    v.add_argument("--file", required=True, type=Path)
    v.add_argument("--red", required=True, type=_family)
    v.add_argument("--blue", required=True, type=_family)

    val = sub.add_parser("value", help="evaluate a closed-form value or bound")
    val.add_argument("--pair", required=True, choices=sorted(formulas.PAIRS))
    val.add_argument("--m", type=_positive)
    val.add_argument("--n", type=_positive, required=True)
    val.add_argument("--json", action="store_true")

    t = sub.add_parser("table", help="CSV sweep of a figure curve or of one formula")
    which = t.add_mutually_exclusive_group(required=True)
    which.add_argument("--figure", type=int, choices=(1, 2))
    which.add_argument("--pair", choices=sorted(formulas.PAIRS))
    t.add_argument("--n", type=_positive, required=True)
    t.add_argument("--steps", type=_positive, required=True)

    s = sub.add_parser("search", help="exhaustive Ramsey number search")
    s.add_argument("--red", required=True, type=_family)
    s.add_argument("--blue", required=True, type=_family)
    s.add_argument("--nmax", required=True, type=_positive)
    s.add_argument("--threads", type=_positive, default=1)

    sub.add_parser("selftest", help="run the acceptance checks")
    return p


def _construct(args: argparse.Namespace) -> int:
    try:
        report = build_witness(args.witness, args.m, args.n)
    except InfeasibleParameters as exc:
        raise UsageError(str(exc)) from exc
    report = certify(report, budget=budget_from_env(10**8))
    text = report.to_text()
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {args.output} ({report.coloring.n} vertices, certified={report.certified})")
    if not report.certified:
        print("certification failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    try:
        coloring, _ = parse_witness(args.file.read_text(encoding="utf-8"))
    except (OSError, WitnessFormatError) as exc:
        raise UsageError(str(exc)) from exc
    report = verify_witness(coloring, args.red, args.blue, budget=budget_from_env(10**8))
    print(f"vertices {coloring.n}")
    print(report.render())
    return EXIT_OK if report.passed else EXIT_FAIL


def _value(args: argparse.Namespace) -> int:
    if args.m is None and args.pair not in formulas.SINGLE_PARAMETER_PAIRS:
        raise UsageError(f"--m is required for pair {args.pair}")
    try:
        bound = formulas.PAIRS[args.pair](args.m or 1, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps(bound.to_dict(), indent=2, sort_keys=True))
    else:
        print(bound.render())
        print(f"regime: {bound.regime.case}" + (f" (q={bound.regime.q})" if bound.regime.q else ""))
        print(f"source: {bound.provenance}")
        for note in bound.notes:
            print(f"note: {note}")
    return EXIT_OK


def _table(args: argparse.Namespace) -> int:
    if args.figure is not None:
        sys.stdout.write(formulas.figure_csv(args.figure, args.n, args.steps))
    else:
        sys.stdout.write(formulas.value_table_csv(args.pair, args.n, args.steps))
    return EXIT_OK


def _search(args: argparse.Namespace) -> int:
    try:
        out = ramsey_number(args.red, args.blue, args.nmax, budget=budget_from_env(), threads=args.threads)
    except SearchBudgetExhausted as exc:  # pragma: no cover - ramsey_number reports this itself
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    for line in out.transcript:
        print(line)
    print(
        f"result status={out.status.value} value={out.value} "
        f"nodes={out.stats.nodes} pruned={out.stats.pruned} isomorphs={out.stats.isomorphs}"
    )
    return EXIT_FAIL if out.status is Status.EXHAUSTED_BUDGET else EXIT_OK


def _selftest(args: argparse.Namespace) -> int:
    from .acceptance import run_all

    results = run_all(print)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


HANDLERS = {
    "construct": _construct,
    "verify": _verify,
    "value": _value,
    "table": _table,
    "search": _search,
    "selftest": _selftest,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # e.g. a malformed RAMSEY_NODE_BUDGET
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
