"""Splitters, the two-for-two rewriter, mergers and parity analysis.

Every identity is materialized as an :class:`OperatorInstance`, which
checks at construction time that both sides have the same exact sum.
Notation follows the usual shorthand where ``(n) = (n+1, n(n+1))`` means
1/n = 1/(n+1) + 1/(n(n+1)).
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import InitVar, dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from egyfrac.rational_core import (
    DomainError,
    EgyptianRepr,
    Parity,
    ParityVector,
    repr_sum,
)

Direction = Literal["forward", "backward"]
Policy = Literal["strict", "resplit"]

RULES = (
    "basic_split",
    "product_split",
    "product_split_z",
    "even_split",
    "odd3_split",
    "rewrite",
    "merge",
)

_INSTANCE_RE = re.compile(r"([a-z0-9_]+)\(([^)]*)\): \[([\d,]*)\] -> \[([\d,]*)\]")


class CollisionError(DomainError):
    """Applying an operator would repeat a denominator."""


class OperatorKind(enum.Enum):
    SPLITTER = "Splitter"
    REWRITER = "Rewriter"
    MERGER = "Merger"


def _check_int(name: str, value: object, minimum: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class OperatorInstance:
    """One applied identity: ``consumed`` terms replaced by ``produced`` terms.

    ``params`` is a tuple of ``(name, value)`` pairs. Pass ``verify=False``
    to build an instance whose sides are not checked; only useful for
    exercising verifiers.
    """

    rule: str
    params: tuple[tuple[str, int], ...]
    consumed: tuple[int, ...]
    produced: tuple[int, ...]
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        object.__setattr__(self, "params", tuple((str(k), int(v)) for k, v in self.params))
        object.__setattr__(self, "consumed", tuple(self.consumed))
        object.__setattr__(self, "produced", tuple(self.produced))
        if not verify:
            return
        if not self.consumed or not self.produced:
            raise DomainError("both sides of an operator must be nonempty")
        if min(self.consumed + self.produced) < 2:
            raise DomainError("operator terms must be >= 2")
        if repr_sum(self.consumed) != repr_sum(self.produced):
            raise DomainError(f"sides of {self} do not have equal sums")

    def param(self, name: str) -> int:
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    @property
    def kind(self) -> OperatorKind:
        return _kind_by_size(len(self.consumed), len(self.produced))

    def reverse(self) -> OperatorInstance:
        return OperatorInstance(self.rule, self.params, self.produced, self.consumed)

    def terms(self) -> tuple[int, ...]:
        return self.consumed + self.produced

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "params": dict(self.params),
            "consumed": list(self.consumed),
            "produced": list(self.produced),
        }

    @classmethod
    def from_dict(cls, data: dict) -> OperatorInstance:
        return cls(data["rule"], tuple(data["params"].items()), data["consumed"], data["produced"])

    def __str__(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params)
        consumed = ",".join(map(str, self.consumed))
        produced = ",".join(map(str, self.produced))
        return f"{self.rule}({params}): [{consumed}] -> [{produced}]"


def parse_instance(text: str) -> OperatorInstance:
    """Inverse of ``str(OperatorInstance)``."""
    m = _INSTANCE_RE.fullmatch(text)
    if m is None:
        raise DomainError(f"cannot parse operator instance {text!r}")
    rule, params, consumed, produced = m.groups()
    pairs = []
    for item in filter(None, params.split(",")):
        k, _, v = item.partition("=")
        pairs.append((k, int(v)))

    def ints(s: str) -> tuple[int, ...]:
        return tuple(int(t) for t in s.split(",")) if s else ()

    return OperatorInstance(rule, tuple(pairs), ints(consumed), ints(produced))


def _kind_by_size(before: int, after: int) -> OperatorKind:
    if before < after:
        return OperatorKind.SPLITTER
    if before == after:
        return OperatorKind.REWRITER
    return OperatorKind.MERGER


# -- splitters ---------------------------------------------------------------


def split_basic(n: int) -> OperatorInstance:
    """(n) = (n+1, n(n+1))."""
    _check_int("n", n, 2)
    return OperatorInstance("basic_split", (("n", n),), (n,), (n + 1, n * (n + 1)))


def split_product(xs: Sequence[int], form: Literal["sum", "z"] = "sum") -> OperatorInstance:
    """Split 1/P, P = prod(xs), into one term per factor.

    With ``form="sum"`` and S = sum(xs) the terms are P*S/x_i, which gives
    (720) = (7200, 4800, 3600, 2880, 2400) for xs = 2..6. With ``form="z"``
    the terms are x_i*z where z = sum_j P/x_j, the shape of the two- and
    three-factor rules (ab) = (a(a+b), b(a+b)) and
    (abc) = (a(ab+bc+ca), b(ab+bc+ca), c(ab+bc+ca)).

    Both are exact: sum_i x_i/(P*S) = 1/P and sum_i 1/(x_i*z) = (z/P)/z.
    """
    xs = list(xs)
    if len(xs) < 2:
        raise DomainError("product split needs at least two factors")
    for i, x in enumerate(xs):
        _check_int(f"factor {i}", x, 1)
    p = math.prod(xs)
    if p < 2:
        raise DomainError("product of factors must be >= 2")
    params = tuple((f"x{i + 1}", x) for i, x in enumerate(xs))
    if form == "sum":
        s = sum(xs)
        return OperatorInstance("product_split", params, (p,), tuple(p * s // x for x in xs))
    if form == "z":
        z = sum(p // x for x in xs)
        return OperatorInstance("product_split_z", params, (p,), tuple(x * z for x in xs))
    raise DomainError(f"unknown product split form {form!r}")


def split_even(two_n: int) -> OperatorInstance:
    """Expand Even Rule: (2n) = (2(n+1), 2n(n+1)) for n >= 2."""
    _check_int("two_n", two_n, 4)
    if two_n % 2:
        raise DomainError(f"even split needs an even denominator, got {two_n}")
    n = two_n // 2
    return OperatorInstance("even_split", (("n", n),), (two_n,), (2 * (n + 1), 2 * n * (n + 1)))


def split_odd3(n: int) -> OperatorInstance:
    """Split an odd 1/n into three odd unit fractions.

    With n = 2k+1 and b = 3k+2: odd k gives (b, 3n, 3bn); even k gives
    (b+1, 3n, (b+1)n), i.e. 1/(3k+3) + 1/(6k+3) + 1/(6k^2+9k+3).
    """
    _check_int("n", n, 3)
    if n % 2 == 0:
        raise DomainError(f"odd split needs an odd denominator, got {n}")
    k = (n - 1) // 2
    b = 3 * k + 2
    if k % 2:
        produced = (b, 3 * n, 3 * b * n)
    else:
        produced = (b + 1, 3 * n, (b + 1) * n)
    return OperatorInstance("odd3_split", (("k", k),), (n,), produced)


# -- rewriter ----------------------------------------------------------------


@dataclass(frozen=True)
class RewriteParams:
    q: int
    d: int

    def __post_init__(self) -> None:
        _check_int("q", self.q, 2)
        _check_int("d", self.d, 1)

    @property
    def r(self) -> int:
        return self.q + self.d

    @property
    def s(self) -> int:
        return self.q * self.r - self.d

    def terms(self) -> dict[str, int]:
        q, r, s = self.q, self.r, self.s
        return {"q": q, "r": r, "s": s, "qr": q * r, "qs": q * s, "rs": r * s}


def rewrite_pair(q: int, d: int, direction: Direction = "forward") -> OperatorInstance:
    """1/(qr) + 1/(qs) = 1/s + 1/(rs) with r = q+d, s = qr-d.

    Forward consumes ``[qr, qs]`` and produces ``[s, rs]``; backward is the
    same identity read right to left.
    """
    p = RewriteParams(q, d)
    t = p.terms()
    inst = OperatorInstance("rewrite", (("q", q), ("d", d)), (t["qr"], t["qs"]), (t["s"], t["rs"]))
    if direction == "forward":
        return inst
    if direction == "backward":
        return inst.reverse()
    raise DomainError(f"unknown direction {direction!r}")


def rewrite_match(x: int, y: int) -> tuple[RewriteParams, Direction] | None:
    """Find (q, d) such that {x, y} is one side of a rewrite identity.

    Forward matches (x, y) = (qr, qs) are tried first, then backward
    matches (s, rs); within each the smallest q wins.
    """
    _check_int("x", x, 2)
    _check_int("y", y, 2)
    if x == y:
        raise DomainError("rewrite_match needs two distinct denominators")
    lo, hi = min(x, y), max(x, y)

    # qr < qs always, so lo = q(q+d) and hi = q(q(q+d) - d).
    q = 2
    while q * q <= hi:
        if lo % q == 0:
            d = lo // q - q
            if d >= 1 and q * (lo - d) == hi:
                return RewriteParams(q, d), "forward"
        q += 1

    # s < rs, so rs/s = r and s = qr - r + q, i.e. q = (s + r)/(r + 1).
    if hi % lo == 0:
        r = hi // lo
        q = 2
        while q * q <= hi and q < r:
            if q * r - (r - q) == lo:
                return RewriteParams(q, r - q), "backward"
            q += 1
    return None


# -- mergers -----------------------------------------------------------------


def merge_pair(x: int, y: int) -> int | None:
    """Return n with 1/x + 1/y = 1/n, or None when no such n >= 2 exists."""
    _check_int("x", x, 2)
    _check_int("y", y, 2)
    if x == y:
        raise DomainError("merge_pair needs two distinct denominators")
    n, rem = divmod(x * y, x + y)
    if rem or n < 2:
        return None
    return n


def merge_instance(x: int, y: int) -> OperatorInstance | None:
    n = merge_pair(x, y)
    if n is None:
        return None
    return OperatorInstance("merge", (), tuple(sorted((x, y))), (n,))


# -- applying operators to representations -----------------------------------


def place_distinct(term: int, taken: set[int]) -> list[int]:
    """Add ``term`` to ``taken``, re-splitting with (t) = (t+1, t(t+1)) on collision.

    Returns the denominators actually added. Terminates because every
    replacement exceeds the colliding term and ``taken`` is finite.
    """
    added = []
    stack = [term]
    while stack:
        t = stack.pop()
        if t in taken:
            stack.append(t * (t + 1))
            stack.append(t + 1)
            continue
        taken.add(t)
        added.append(t)
    return added


def apply_to_repr(x: EgyptianRepr, inst: OperatorInstance, policy: Policy = "strict") -> EgyptianRepr:
    """Replace ``inst.consumed`` in ``x`` with ``inst.produced``."""
    missing = [c for c in inst.consumed if c not in x]
    if missing:
        raise DomainError(f"terms {missing} are not in {x}")
    if len(set(inst.consumed)) != len(inst.consumed):
        raise DomainError("an operator cannot consume the same term twice")
    retained = set(x) - set(inst.consumed)
    if policy == "strict":
        clash = sorted(t for t in inst.produced if t in retained)
        if clash or len(set(inst.produced)) != len(inst.produced):
            raise CollisionError(f"produced terms {clash or list(inst.produced)} collide in {x}")
        return EgyptianRepr(tuple(retained) + inst.produced)
    if policy == "resplit":
        for t in inst.produced:
            place_distinct(t, retained)
        return EgyptianRepr(tuple(retained))
    raise DomainError(f"unknown collision policy {policy!r}")


def classify_operator(x: EgyptianRepr | Iterable[int], x2: EgyptianRepr | Iterable[int]) -> OperatorKind:
    x, x2 = list(x), list(x2)
    if repr_sum(x) != repr_sum(x2):
        raise DomainError("representations have different sums")
    return _kind_by_size(len(x), len(x2))


# -- parity ------------------------------------------------------------------


def parity_signature(terms: Iterable[int]) -> ParityVector:
    terms = list(terms)
    for t in terms:
        _check_int("term", t, 1)
    return ParityVector(tuple(Parity.of(t) for t in terms))


def is_parity_preserving(inst: OperatorInstance) -> bool:
    return len({t & 1 for t in inst.terms()}) == 1


def odd_preserving_check(q: int, d: int) -> bool:
    """Whether the rewrite for (q, d) has only odd terms: q odd and d even."""
    RewriteParams(q, d)
    return q % 2 == 1 and d % 2 == 0


def inequality_chain(q: int, d: int) -> tuple[int, ...]:
    t = RewriteParams(q, d).terms()
    return tuple(t[k] for k in ("q", "r", "s", "qr", "qs", "rs"))


def inequality_chain_check(q: int, d: int) -> bool:
    """q < r < s < qr < qs < rs."""
    chain = inequality_chain(q, d)
    return all(a < b for a, b in zip(chain, chain[1:]))


def rewrite_sum_holds(q: int, d: int) -> bool:
    t = RewriteParams(q, d).terms()
    return Fraction(1, t["qr"]) + Fraction(1, t["qs"]) == Fraction(1, t["s"]) + Fraction(1, t["rs"])
