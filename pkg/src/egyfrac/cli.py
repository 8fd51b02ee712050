"""Command-line front end: ``egyfrac <subcommand> ...``.

Every subcommand builds a :class:`CommandOutcome` and renders it either as
text or, with ``--format json``, as a single JSON document of the form
``{"command": ..., "status": ..., "result": {...}}``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from egyfrac import tables
from egyfrac.expansion import ExpansionTooLarge, enumerate_one_representations, expand_full, greedy_expand
from egyfrac.operators import (
    inequality_chain,
    inequality_chain_check,
    merge_pair,
    odd_preserving_check,
    parity_signature,
    rewrite_match,
    rewrite_pair,
    split_basic,
    split_even,
    split_odd3,
    split_product,
    is_parity_preserving,
)
from egyfrac.rational_core import DomainError, format_rational, parse_rational, parse_repr, repr_sum
from egyfrac.search import SearchConstraints, enumerate_reprs, verify_repr

COMMANDS = ("decompose", "split", "rewrite", "match", "merge", "search", "enumerate-one", "verify")
EXIT_CODES = {"ok": 0, "domain_error": 1, "not_found": 2, "verification_failed": 3}


@dataclass
class CommandOutcome:
    command: str
    status: str
    result: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> str:
        doc = {"command": self.command, "status": self.status, "result": self.result}
        return json.dumps(doc, indent=2)


def _ints(ds) -> str:
    return "[" + ",".join(map(str, ds)) + "]"


def _positive(text: str) -> Fraction:
    v = parse_rational(text)
    if v <= 0:
        raise DomainError(f"target must be positive, got {text}")
    return v


def cmd_decompose(target: str, mode: str = "full") -> CommandOutcome:
    v = _positive(target)
    result: dict = {"target": format_rational(v), "mode": mode}
    lines = []
    if mode == "greedy":
        trace = greedy_expand(v)
        x = trace.result
        result["trace"] = [{"i": s.index, "a": s.a, "b": s.b, "u": s.u} for s in trace.steps]
        lines += [f"step {s.index}: a={s.a} b={s.b} u={s.u}" for s in trace.steps]
    else:
        x = expand_full(v)
    result["representation"] = list(x)
    result["sum"] = format_rational(repr_sum(x))
    lines.append(f"{format_rational(v)} = {x}")
    return CommandOutcome("decompose", "ok", result, lines)


_SPLITTERS: dict[str, Callable] = {"basic": split_basic, "even": split_even, "odd3": split_odd3}


def cmd_split(n: int, rule: str = "basic", factors: Sequence[int] | None = None, form: str = "sum") -> CommandOutcome:
    if rule == "product":
        if not factors:
            raise DomainError("the product rule needs --factors")
        inst = split_product(factors, form=form)
        if inst.consumed[0] != n:
            raise DomainError(f"factors multiply to {inst.consumed[0]}, not {n}")
    elif factors:
        raise DomainError(f"--factors only applies to the product rule")
    else:
        inst = _SPLITTERS[rule](n)
    result = inst.to_dict()
    result["instance"] = str(inst)
    result["parity_preserving"] = is_parity_preserving(inst)
    lines = [
        f"({inst.consumed[0]}) -> ({', '.join(map(str, inst.produced))})",
        str(inst),
    ]
    return CommandOutcome("split", "ok", result, lines)


def cmd_rewrite(q: int, d: int, direction: str = "forward") -> CommandOutcome:
    inst = rewrite_pair(q, d, direction)
    chain = inequality_chain(q, d)
    chain_ok = inequality_chain_check(q, d)
    odd = odd_preserving_check(q, d)
    _, r, s, qr, qs, rs = chain
    parity = parity_signature((r, s, qr, qs, rs))
    result = {
        "q": q,
        "d": d,
        "r": r,
        "s": s,
        "direction": direction,
        "consumed": list(inst.consumed),
        "produced": list(inst.produced),
        "instance": str(inst),
        "parity": {"terms": ["r", "s", "qr", "qs", "rs"], "symbols": list(parity.symbols)},
        "chain": list(chain),
        "chain_holds": chain_ok,
        "odd_preserving": odd,
    }
    chain_text = "<".join(map(str, chain)) if chain_ok else "fails"
    lines = [
        f"{_ints(inst.consumed)} <-> {_ints(inst.produced)}, chain: {chain_text}, "
        f"odd-preserving: {'yes' if odd else 'no'}",
        f"q={q} d={d} r={r} s={s}",
        f"parity (r,s,qr,qs,rs): {parity}",
    ]
    return CommandOutcome("rewrite", "ok", result, lines)


def cmd_match(x: int, y: int) -> CommandOutcome:
    found = rewrite_match(x, y)
    if found is None:
        return CommandOutcome("match", "not_found", {"x": x, "y": y}, [f"no rewrite matches ({x}, {y})"])
    p, direction = found
    result = {"x": x, "y": y, "q": p.q, "d": p.d, "r": p.r, "s": p.s, "direction": direction}
    return CommandOutcome("match", "ok", result, [f"q={p.q} d={p.d} {direction}"])


def cmd_merge(x: int, y: int) -> CommandOutcome:
    n = merge_pair(x, y)
    if n is None:
        return CommandOutcome("merge", "not_found", {"x": x, "y": y}, [f"1/{x} + 1/{y} is not a unit fraction"])
    return CommandOutcome("merge", "ok", {"x": x, "y": y, "n": n}, [f"({x}, {y}) -> ({n})"])


_PARITY_FLAGS = {"any": "any", "odd": "all_odd", "even": "all_even"}


def cmd_search(target: str, max_terms: int, max_denom: int, parity: str = "any") -> CommandOutcome:
    v = _positive(target)
    c = SearchConstraints(max_terms, max_denom, _PARITY_FLAGS[parity])
    found = enumerate_reprs(v, c)
    result = {
        "target": format_rational(v),
        "constraints": c.to_dict(),
        "representations": [list(x) for x in found],
        "count": len(found),
    }
    lines = [str(x) for x in found] + [f"count {len(found)}"]
    return CommandOutcome("search", "ok" if found else "not_found", result, lines)


def cmd_enumerate_one(count: int) -> CommandOutcome:
    reprs = enumerate_one_representations(count)
    result = {"count": count, "representations": [list(x) for x in reprs]}
    return CommandOutcome("enumerate-one", "ok", result, [str(x) for x in reprs])


def cmd_verify(what: str, args: Sequence[str] = ()) -> CommandOutcome:
    if what == "repr":
        if len(args) != 2:
            raise DomainError("usage: verify repr [d1,d2,...] target")
        x = parse_repr(args[0])
        target = _positive(args[1])
        ok = verify_repr(x, target)
        total = format_rational(repr_sum(x))
        result = {"representation": list(x), "target": format_rational(target), "sum": total, "ok": ok}
        line = f"ok: sum = {total}" if ok else f"fail: sum = {total}, expected {format_rational(target)}"
        return CommandOutcome("verify", "ok" if ok else "verification_failed", result, [line])
    if args:
        raise DomainError(f"verify {what} takes no arguments")
    if what == "tables":
        reports = tables.check_tables()
    elif what == "theorems":
        reports = tables.check_theorems()
    else:
        raise DomainError(f"unknown verify target {what!r}")
    ok = all(r["ok"] for r in reports)
    lines = [tables.format_report(r) for r in reports]
    lines.append("ok" if ok else "FAILED")
    return CommandOutcome("verify", "ok" if ok else "verification_failed", {"what": what, "checks": reports}, lines)


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as domain errors and lets "-1/2" through as a value."""

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message: str):
        raise DomainError(message)


def _factor_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad factor list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = _Parser(prog="egyfrac", description="Egyptian fraction toolkit.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", parents=[common], help="expand a positive rational")
    p.add_argument("target")
    p.add_argument("--mode", choices=["greedy", "full"], default="full")

    p = sub.add_parser("split", parents=[common], help="apply a splitter to 1/n")
    p.add_argument("n", type=int)
    p.add_argument("--rule", choices=["basic", "even", "odd3", "product"], default="basic")
    p.add_argument("--factors", type=_factor_list)
    p.add_argument("--form", choices=["sum", "z"], default="sum")

    p = sub.add_parser("rewrite", parents=[common], help="two-for-two rewrite for (q, d)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--direction", choices=["forward", "backward"], default="forward")

    for name, helptext in (("match", "find (q, d) for a pair"), ("merge", "merge two unit fractions")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("x", type=int)
        p.add_argument("y", type=int)

    p = sub.add_parser("search", parents=[common], help="exhaustive bounded search")
    p.add_argument("target")
    p.add_argument("--max-terms", type=int, required=True)
    p.add_argument("--max-denom", type=int, required=True)
    p.add_argument("--parity", choices=["any", "odd", "even"], default="any")

    p = sub.add_parser("enumerate-one", parents=[common], help="distinct expansions of 1")
    p.add_argument("count", type=int)

    p = sub.add_parser("verify", parents=[common], help="check tables, theorems or a representation")
    p.add_argument("what", choices=["tables", "theorems", "repr"])
    p.add_argument("args", nargs="*")
    return parser


def dispatch(ns: argparse.Namespace) -> CommandOutcome:
    cmd = ns.command
    try:
        if cmd == "decompose":
            return cmd_decompose(ns.target, ns.mode)
        if cmd == "split":
            return cmd_split(ns.n, ns.rule, ns.factors, ns.form)
        if cmd == "rewrite":
            return cmd_rewrite(ns.q, ns.d, ns.direction)
        if cmd == "match":
            return cmd_match(ns.x, ns.y)
        if cmd == "merge":
            return cmd_merge(ns.x, ns.y)
        if cmd == "search":
            return cmd_search(ns.target, ns.max_terms, ns.max_denom, ns.parity)
        if cmd == "enumerate-one":
            return cmd_enumerate_one(ns.count)
        if cmd == "verify":
            return cmd_verify(ns.what, ns.args)
    except (DomainError, ExpansionTooLarge) as exc:
        return CommandOutcome(cmd, "domain_error", {"message": str(exc)}, [f"error: {exc}"])
    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = build_parser().parse_args(argv)
    except DomainError as exc:
        json_mode = any(a == "json" and b == "--format" for b, a in zip(argv, argv[1:]))
        command = next((a for a in argv if a in COMMANDS), "")
        ns = argparse.Namespace(format="json" if json_mode else "text")
        outcome = CommandOutcome(command, "domain_error", {"message": str(exc)}, [f"error: {exc}"])
    else:
        outcome = dispatch(ns)
    if getattr(ns, "format", "text") == "json":
        print(outcome.to_json())
    else:
        stream = sys.stderr if outcome.status == "domain_error" else sys.stdout
        for line in outcome.lines:
            print(line, file=stream)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
