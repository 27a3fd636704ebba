"""Command-line entry point.

Subcommands: demo (run a key exchange, optionally writing a replayable
transcript), verify (structural claim suites), attack (recover a demo
transcript's key from public data), element (scriptable group
arithmetic), tree (Sylow subgroup facts for one depth), stats (orbit and
key-space statistics).

Machine-readable output goes to stdout, diagnostics to stderr.  Exit
codes: 0 success, 1 failed claims or failed attack, 2 bad usage or
malformed input, 3 key disagreement in demo.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cryptanalysis, kex, verify
from .errors import ConjKexError, TranscriptError
from .treegroup import tree_group

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_KEY_MISMATCH = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conjkex",
        description="conjugacy key-exchange laboratory over finite non-commutative groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    demo = sub.add_parser("demo", help="run a two-party key exchange")
    _platform_flags(demo)
    demo.add_argument("--base", help="canonical base element (defaults per platform)")
    demo.add_argument("--seed-a", type=int, required=True)
    demo.add_argument("--seed-b", type=int, required=True)
    demo.add_argument("--transcript", help="write the handshake transcript here")
    demo.add_argument(
        "--debug-key",
        action="store_true",
        help="embed the honest shared key in the transcript for self-grading",
    )

    ver = sub.add_parser("verify", help="run structural claim suites")
    ver.add_argument(
        "--suite",
        default="all",
        help="theorems|center|orbit|sylow|growth|all",
    )
    ver.add_argument("--max-order", type=int, default=verify.DEFAULT_MAX_ORDER)
    ver.add_argument("--long", action="store_true", help="include the k=4 closures")

    attack = sub.add_parser("attack", help="break a metacyclic demo transcript")
    attack.add_argument("--transcript", required=True)

    element = sub.add_parser("element", help="arithmetic on canonical element strings")
    op = element.add_mutually_exclusive_group(required=True)
    op.add_argument("--mul", nargs=2, metavar=("G", "H"))
    op.add_argument("--inv", nargs=1, metavar="G")
    op.add_argument("--conj", nargs=2, metavar=("W", "X"))

    tree = sub.add_parser("tree", help="Sylow 2-subgroup facts for one depth")
    tree.add_argument("-k", type=int, required=True)
    tree.add_argument("--long", action="store_true")

    stats = sub.add_parser("stats", help="orbit and key-space statistics")
    _platform_flags(stats)
    stats.add_argument("--cap", type=int, default=10 ** 5)
    return parser


def _platform_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--platform", required=True, choices=("metacyclic", "heisenberg", "tree")
    )
    sub.add_argument("-p", type=int, help="odd prime (metacyclic/heisenberg)")
    sub.add_argument("-m", type=int, help="a-exponent height")
    sub.add_argument("-n", type=int, help="b-exponent height")
    sub.add_argument("-k", type=int, help="tree depth (tree platform)")


def _group_from_args(args) -> object:
    if args.platform == "tree":
        if args.k is None:
            raise ValueError("tree platform needs -k")
        return kex.group_for("tree", k=args.k)
    if args.p is None or args.m is None or args.n is None:
        raise ValueError(f"{args.platform} platform needs -p, -m and -n")
    return kex.group_for(args.platform, p=args.p, m=args.m, n=args.n)


def _cmd_demo(args) -> int:
    try:
        group = _group_from_args(args)
        if args.base is not None:
            base = kex.parse_element(args.base)
            if base.group != group:
                raise ValueError("--base does not match the platform parameters")
        else:
            base = group.default_base()
        result = kex.run_demo(base, args.seed_a, args.seed_b, debug_key=args.debug_key)
    except (ConjKexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.transcript:
        with open(args.transcript, "w", encoding="utf-8") as fh:
            fh.write(result.transcript.to_text())
    print(
        json.dumps(
            {
                "key_alice": result.key_alice.decode("ascii"),
                "key_bob": result.key_bob.decode("ascii"),
                "match": result.agreed,
            },
            separators=(",", ":"),
        )
    )
    if not result.agreed:
        print("keys disagree", file=sys.stderr)
        return EXIT_KEY_MISMATCH
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    try:
        results = verify.run_suites(names, long=args.long, max_order=args.max_order)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for r in results:
        print(r.to_json())
    print(verify.summary_table(results), file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _cmd_attack(args) -> int:
    try:
        with open(args.transcript, encoding="utf-8") as fh:
            transcript = kex.Transcript.from_text(fh.read())
        if transcript.platform() != "metacyclic":
            raise TranscriptError("attack supports metacyclic transcripts only")
        w = transcript.base_element()
        w_x = transcript.public_from("alice")
        w_y = transcript.public_from("bob")
        honest = transcript.debug_key()
        report = cryptanalysis.bsgs_break(w, w_x, w_y)
    except (ConjKexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json())
    if report.recovered_key != honest:
        print("recovered key does not match the honest key", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_element(args) -> int:
    try:
        if args.mul:
            g, h = (kex.parse_element(s) for s in args.mul)
            result = g * h
        elif args.inv:
            result = kex.parse_element(args.inv[0]).inverse()
        else:
            w, x = (kex.parse_element(s) for s in args.conj)
            result = w.conjugate_by(x)
    except (ConjKexError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(result.canonical())
    return EXIT_OK


def _cmd_tree(args) -> int:
    try:
        group = tree_group(args.k)
        facts = {
            "k": str(args.k),
            "s_order": str(group.order("S")),
            "a_order": str(group.order("A")),
            "level_subgroup_orders": [
                str(group.level_subgroup_order(level)) for level in range(args.k)
            ],
        }
        if args.k <= 3 or args.long:
            derived = group.derived_subgroup(group.generators("A"))
            facts["derived_order"] = str(len(derived))
            facts["derived_min_generators"] = str(
                group.minimal_generating_size(derived)
            )
    except (ConjKexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(facts, separators=(",", ":")))
    return EXIT_OK


def _cmd_stats(args) -> int:
    try:
        group = _group_from_args(args)
        histogram = cryptanalysis.orbit_stats(group, cap=args.cap)
        stats: dict = {
            "platform": args.platform,
            "class_sizes": {str(size): count for size, count in sorted(histogram.items())},
        }
        if args.platform in ("metacyclic", "heisenberg"):
            base = group.default_base()
            orbit = len(group.conjugacy_class(base))
            stats["center_order"] = str(group.center_order())
            stats["base_orbit_size"] = str(orbit)
            stats["note"] = (
                "the derived key ranges over the base's conjugation orbit "
                f"({orbit} values), not over the center-sized key space"
            )
    except (ConjKexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(stats, separators=(",", ":")))
    return EXIT_OK


_HANDLERS = {
    "demo": _cmd_demo,
    "verify": _cmd_verify,
    "attack": _cmd_attack,
    "element": _cmd_element,
    "tree": _cmd_tree,
    "stats": _cmd_stats,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
