"""Parity tables and theorem sweeps, regenerated from the operators.

Each check returns a plain dict so the CLI can emit it as JSON unchanged.
"""

from __future__ import annotations

from egyfrac.operators import (
    RewriteParams,
    inequality_chain_check,
    odd_preserving_check,
    parity_signature,
    rewrite_pair,
    split_even,
    split_basic,
    split_odd3,
)
from egyfrac.search import two_term_odd_split_exists, verify_instance

# Sweep bounds used by ``egyfrac verify`` and the acceptance tests.
BASIC_N = range(2, 201)
ODD_N = range(3, 1000, 2)
REWRITE_Q = range(2, 51)
REWRITE_D = range(1, 51)
TABLE_Q = range(2, 50)
TABLE_D = range(1, 49)

BASIC_SPLIT_TABLE = {
    "columns": ["n", "n+1", "n(n+1)"],
    "rows": [("e", "o", "e"), ("o", "e", "e")],
}
ODD3_TABLE = {
    "columns": ["n", "k", "b", "b+1", "an", "abn", "a(b+1)n"],
    "rows": [("o", "o", "o", "e", "o", "o", "e"), ("o", "e", "e", "o", "o", "e", "o")],
}
REWRITE_TABLE = {
    "columns": ["d", "q", "r", "s", "qr", "qs", "rs"],
    "rows": [
        ("o", "o", "e", "o", "e", "o", "e"),
        ("o", "e", "o", "o", "e", "e", "o"),
        ("e", "o", "o", "o", "o", "o", "o"),
        ("e", "e", "e", "e", "e", "e", "e"),
    ],
}

# (d, q) -> (r, s, qr, qs, rs), the five worked rewrite examples.
REWRITE_EXAMPLES = {
    (1, 2): (3, 5, 6, 10, 15),
    (2, 3): (5, 13, 15, 39, 65),
    (2, 5): (7, 33, 35, 165, 231),
    (4, 3): (7, 17, 21, 51, 119),
    (4, 5): (9, 41, 45, 205, 369),
}


def basic_split_rows() -> list[tuple[str, ...]]:
    rows = []
    for n in BASIC_N:
        inst = split_basic(n)
        rows.append(parity_signature((n,) + inst.produced).symbols)
    return rows


def odd3_rows() -> list[tuple[str, ...]]:
    rows = []
    for n in ODD_N:
        k = (n - 1) // 2
        b = 3 * k + 2
        rows.append(parity_signature((n, k, b, b + 1, 3 * n, 3 * b * n, 3 * (b + 1) * n)).symbols)
    return rows


def rewrite_rows() -> list[tuple[str, ...]]:
    rows = []
    for q in TABLE_Q:
        for d in TABLE_D:
            t = RewriteParams(q, d).terms()
            rows.append(parity_signature((d, q, t["r"], t["s"], t["qr"], t["qs"], t["rs"])).symbols)
    return rows


def _unique(rows: list[tuple[str, ...]]) -> list[tuple[str, ...]]:
    return list(dict.fromkeys(rows))


def _table_report(name: str, expected: dict, observed: list[tuple[str, ...]]) -> dict:
    seen = _unique(observed)
    ordered = [r for r in expected["rows"] if r in seen] + [r for r in seen if r not in expected["rows"]]
    return {
        "name": name,
        "columns": expected["columns"],
        "expected": [list(r) for r in expected["rows"]],
        "observed": [list(r) for r in ordered],
        "bits": [[int(s == "o") for s in r] for r in ordered],
        "ok": set(seen) == set(expected["rows"]),
    }


def check_tables() -> list[dict]:
    return [
        _table_report("basic split parity", BASIC_SPLIT_TABLE, basic_split_rows()),
        _table_report("odd three-way split parity", ODD3_TABLE, odd3_rows()),
        _table_report("rewrite parity", REWRITE_TABLE, rewrite_rows()),
        _examples_report(),
    ]


def _examples_report() -> dict:
    observed = rewrite_example_rows()
    return {
        "name": "rewrite worked examples",
        "columns": ["d", "q", "r", "s", "qr", "qs", "rs"],
        "expected": [list(k + v) for k, v in REWRITE_EXAMPLES.items()],
        "observed": [list(k + v) for k, v in observed.items()],
        "ok": observed == REWRITE_EXAMPLES,
    }


def _sweep(name: str, cases: list, predicate) -> dict:
    bad = [c for c in cases if not predicate(*c)]
    return {"name": name, "cases": len(cases), "counterexamples": len(bad), "first": list(bad[0]) if bad else None, "ok": not bad}


def _all_odd_rewrite(q: int, d: int) -> bool:
    inst = rewrite_pair(q, d)
    return all(t % 2 for t in inst.terms())


def _odd3_ok(n: int) -> bool:
    inst = split_odd3(n)
    p = inst.produced
    return len(set(p)) == 3 and all(t % 2 for t in p) and verify_instance(inst)


def check_theorems() -> list[dict]:
    qd = [(q, d) for q in REWRITE_Q for d in REWRITE_D]
    odd = [(n,) for n in ODD_N]
    return [
        _sweep("rewrite exact sum", qd, lambda q, d: verify_instance(rewrite_pair(q, d))),
        _sweep("rewrite ordering q<r<s<qr<qs<rs", qd, inequality_chain_check),
        _sweep(
            "rewrite all odd iff q odd and d even",
            qd,
            lambda q, d: _all_odd_rewrite(q, d) == odd_preserving_check(q, d),
        ),
        _sweep("odd three-way split", odd, _odd3_ok),
        _sweep("no two-term odd split", odd, lambda n: not two_term_odd_split_exists(n)),
        _sweep(
            "even split is twice the basic split",
            [(n,) for n in BASIC_N],
            lambda n: split_even(2 * n).produced == tuple(2 * t for t in split_basic(n).produced),
        ),
    ]


def rewrite_example_rows() -> dict[tuple[int, int], tuple[int, ...]]:
    out = {}
    for d, q in REWRITE_EXAMPLES:
        t = RewriteParams(q, d).terms()
        out[(d, q)] = (t["r"], t["s"], t["qr"], t["qs"], t["rs"])
    return out


def format_report(report: dict) -> str:
    verdict = "ok" if report["ok"] else "FAILED"
    if "cases" in report:
        return f"{report['name']}: {report['cases']} cases, {report['counterexamples']} counterexamples, {verdict}"
    rows = "; ".join(" ".join(map(str, r)) for r in report["observed"])
    return f"{report['name']} ({', '.join(report['columns'])}): {rows}, {verdict}"
