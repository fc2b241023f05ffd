"""Command-line front end.

Subcommands: decide, realize, check, verify, bound, equal-sum.  Exit
codes: 0 yes/pass, 2 no/fail, 1 usage or parse error, 3 resource cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .equalsum import solve_esseq
from .errors import ResourceLimitError
from .formats import FORMATS, detect_format, emit, parse
from .oracle import brute_min_order, brute_zero_sum_min_odd
from .sequences import (
    CheckFailure,
    digraph_imbalance_failure,
    landau_failure,
    tournament_imbalance_failure,
)
from .tis import DEFAULT_ORDER_CAP, decide_tis, order_upper_bound

EXIT_YES = 0
EXIT_USAGE = 1
EXIT_NO = 2
EXIT_RESOURCE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_set(text: str) -> frozenset[int]:
    items = [chunk.strip() for chunk in text.split(",")]
    if any(not chunk for chunk in items):
        raise ValueError(f"cannot parse set literal {text!r}")
    try:
        values = [int(chunk) for chunk in items]
    except ValueError:
        raise ValueError(f"cannot parse set literal {text!r}") from None
    if len(set(values)) != len(values):
        raise ValueError("set literal contains duplicates")
    return frozenset(values)


def _parse_sequence(text: str) -> tuple[int, ...]:
    items = [chunk.strip() for chunk in text.split(",")]
    if any(not chunk for chunk in items):
        raise ValueError(f"cannot parse sequence literal {text!r}")
    try:
        return tuple(int(chunk) for chunk in items)
    except ValueError:
        raise ValueError(f"cannot parse sequence literal {text!r}") from None


def _failure_text(failure: CheckFailure) -> str:
    if failure.kind == "parity":
        return f"parity mismatch at position {failure.index}"
    if failure.kind == "prefix":
        return f"prefix inequality violated at index {failure.index}"
    return "total sum misses its forced value"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imbalanceset")
    sub = parser.add_subparsers(dest="command", required=True)

    decide = sub.add_parser("decide", help="decide realizability of a set")
    decide.add_argument("set_literal", help="comma-separated integers, e.g. '4,2,-2'")
    decide.add_argument("--json", action="store_true", dest="as_json")
    decide.add_argument("--max-n", type=int, default=DEFAULT_ORDER_CAP)
    decide.add_argument(
        "--budget",
        type=int,
        default=None,
        help="also run the brute-force zero-sum oracle up to this length",
    )

    realize = sub.add_parser("realize", help="build a realizing tournament")
    realize.add_argument("set_literal")
    realize.add_argument("--format", choices=FORMATS, default="dot")
    realize.add_argument("--out", default=None, help="output path (default stdout)")
    realize.add_argument("--max-n", type=int, default=DEFAULT_ORDER_CAP)

    check = sub.add_parser("check", help="test a sequence condition")
    check.add_argument("seq_literal")
    check.add_argument(
        "--mode", choices=("landau", "digraph", "tournament"), required=True
    )
    check.add_argument("--json", action="store_true", dest="as_json")

    verify = sub.add_parser("verify", help="verify a tournament file against a set")
    verify.add_argument("graph_path")
    verify.add_argument("set_literal")

    bound = sub.add_parser("bound", help="order bound for a realizable set")
    bound.add_argument("set_literal")
    bound.add_argument("--json", action="store_true", dest="as_json")
    bound.add_argument("--max-n", type=int, default=DEFAULT_ORDER_CAP)
    bound.add_argument(
        "--budget",
        type=int,
        default=None,
        help="also search the exact minimal order up to this bound",
    )

    equal = sub.add_parser("equal-sum", help="equal-sum sequences from two sets")
    equal.add_argument("x_literal")
    equal.add_argument("y_literal")
    equal.add_argument("--k", type=int, required=True, help="per-element repetition cap")
    equal.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _cmd_decide(args: argparse.Namespace) -> int:
    members = _parse_set(args.set_literal)
    decision = decide_tis(members, order_cap=args.max_n)
    extra = {}
    if args.budget is not None:
        extra["brute_zero_sum_min_odd"] = brute_zero_sum_min_odd(members, args.budget)
    if args.as_json:
        doc = {
            "set": sorted(members, reverse=True),
            "verdict": "yes" if decision.verdict else "no",
            "refusal": decision.refusal,
            "order": decision.order,
            **extra,
        }
        print(json.dumps(doc))
    elif decision.verdict:
        print(f"yes: realizable by a tournament of order {decision.order}")
        if "brute_zero_sum_min_odd" in extra:
            print(f"brute-force minimal odd zero-sum length: {extra['brute_zero_sum_min_odd']}")
    else:
        print(f"no: {decision.refusal}")
        if "brute_zero_sum_min_odd" in extra:
            print(f"brute-force minimal odd zero-sum length: {extra['brute_zero_sum_min_odd']}")
    return EXIT_YES if decision.verdict else EXIT_NO


def _cmd_realize(args: argparse.Namespace) -> int:
    members = _parse_set(args.set_literal)
    decision = decide_tis(members, with_certificate=True, order_cap=args.max_n)
    if not decision.verdict:
        print(f"no: {decision.refusal}", file=sys.stderr)
        return EXIT_NO
    graph = decision.certificate
    assert graph is not None
    payload = emit(graph, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    seq = ",".join(str(t) for t in graph.imbalance_sequence())
    print(f"order {graph.n}; imbalance sequence {seq}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_YES


def _cmd_check(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.seq_literal)
    try:
        if args.mode == "landau":
            failure = landau_failure(seq)
        elif args.mode == "digraph":
            failure = digraph_imbalance_failure(seq)
        else:
            failure = tournament_imbalance_failure(seq)
    except ValueError as exc:
        raise ValueError(
            f"{exc} (sort the input: nondecreasing for landau, nonincreasing otherwise)"
        ) from None
    if args.as_json:
        doc = {
            "mode": args.mode,
            "ok": failure is None,
            "failure": None
            if failure is None
            else {"kind": failure.kind, "index": failure.index},
        }
        print(json.dumps(doc))
    else:
        print("pass" if failure is None else f"fail: {_failure_text(failure)}")
    return EXIT_YES if failure is None else EXIT_NO


def _cmd_verify(args: argparse.Namespace) -> int:
    members = _parse_set(args.set_literal)
    try:
        with open(args.graph_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {args.graph_path}: {exc}") from None
    kind = detect_format(text, args.graph_path)
    try:
        graph = parse(text, kind)
    except ValueError as exc:
        if "opposing arcs" in str(exc) or "duplicate arc" in str(exc):
            print(f"structural failure: doubled pair ({exc})")
            return EXIT_NO
        raise
    if not graph.is_tournament():
        pair = graph.non_neighbour_pairs()
        where = f" {pair[0]}" if pair else ""
        print(f"structural failure: missing pair{where}")
        return EXIT_NO
    got = graph.imbalance_set()
    if got != members:
        print(
            "imbalance mismatch: graph has "
            f"{sorted(got, reverse=True)}, stated {sorted(members, reverse=True)}"
        )
        return EXIT_NO
    print(f"ok: tournament of order {graph.n} with the stated imbalance set")
    return EXIT_YES


def _cmd_bound(args: argparse.Namespace) -> int:
    members = _parse_set(args.set_literal)
    decision = decide_tis(members, order_cap=args.max_n)
    if not decision.verdict:
        print(f"no: {decision.refusal}", file=sys.stderr)
        return EXIT_NO
    bound = order_upper_bound(members)
    extra = {}
    if args.budget is not None:
        extra["exact_min_order"] = brute_min_order(members, min(bound, args.budget))
    if args.as_json:
        print(json.dumps({"set": sorted(members, reverse=True), "bound": bound, **extra}))
    else:
        print(bound)
        if "exact_min_order" in extra:
            print(f"exact minimal order (searched): {extra['exact_min_order']}")
    return EXIT_YES


def _cmd_equal_sum(args: argparse.Namespace) -> int:
    xs = _parse_set(args.x_literal)
    ys = _parse_set(args.y_literal)
    if args.k < 1:
        raise ValueError("--k must be at least 1")
    witness = solve_esseq(xs, ys, args.k)
    if args.as_json:
        doc = (
            None
            if witness is None
            else {
                "xs": list(witness.xs),
                "ys": list(witness.ys),
                "common_sum": witness.common_sum,
            }
        )
        print(json.dumps({"witness": doc}))
    elif witness is None:
        print("none")
    else:
        print(
            f"xs={list(witness.xs)} ys={list(witness.ys)} sum={witness.common_sum}"
        )
    return EXIT_YES if witness is not None else EXIT_NO


_DISPATCH = {
    "decide": _cmd_decide,
    "realize": _cmd_realize,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "bound": _cmd_bound,
    "equal-sum": _cmd_equal_sum,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
