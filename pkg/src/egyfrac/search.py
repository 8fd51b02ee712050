"""Brute-force enumeration of Egyptian representations.

Nothing here calls into the constructive modules; the search and the
re-summation below are the independent check on them.
"""

from __future__ import annotations

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Literal

from egyfrac.operators import OperatorInstance
from egyfrac.rational_core import DomainError, EgyptianRepr, as_rational

ParityFilter = Literal["any", "all_odd", "all_even"]


@dataclass(frozen=True)
class SearchConstraints:
    """Bounds for :func:`enumerate_reprs`.

    ``min_terms`` defaults to 2, so a target that is itself a unit
    fraction is not reported as a one-term representation of itself.
    """

    max_terms: int
    max_denominator: int
    parity: ParityFilter = "any"
    min_terms: int = 2
    require_distinct: bool = True

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if self.max_denominator < 2:
            raise DomainError("max_denominator must be >= 2")
        if not 1 <= self.min_terms:
            raise DomainError("min_terms must be >= 1")
        if self.parity not in ("any", "all_odd", "all_even"):
            raise DomainError(f"unknown parity filter {self.parity!r}")
        if not self.require_distinct:
            raise DomainError("only distinct-denominator search is supported")

    def to_dict(self) -> dict:
        return {
            "max_terms": self.max_terms,
            "max_denominator": self.max_denominator,
            "parity": self.parity,
            "min_terms": self.min_terms,
        }


def _dfs(rem: Fraction, left: int, lo: int, c: SearchConstraints, chosen: list[int]) -> Iterator[tuple[int, ...]]:
    if rem == 0:
        if len(chosen) >= c.min_terms:
            yield tuple(chosen)
        return
    if left == 0:
        return
    p, q = rem.numerator, rem.denominator
    # 1/d <= rem  and  left/d >= rem
    d_min = max(lo, -(-q // p))
    d_max = min(c.max_denominator, left * q // p)
    step = 1
    if c.parity != "any":
        want = 1 if c.parity == "all_odd" else 0
        if d_min % 2 != want:
            d_min += 1
        step = 2
    for d in range(d_min, d_max + 1, step):
        chosen.append(d)
        yield from _dfs(rem - Fraction(1, d), left - 1, d + 1, c, chosen)
        chosen.pop()


def enumerate_reprs(target: Fraction | int, c: SearchConstraints) -> list[EgyptianRepr]:
    """All representations of ``target`` within the constraints, sorted lexicographically."""
    target = as_rational(target)
    if target <= 0:
        raise DomainError(f"target must be positive, got {target}")
    found = sorted(_dfs(target, c.max_terms, 2, c, []))
    return [EgyptianRepr(ds) for ds in found]


def search_all_odd(target: Fraction | int, c: SearchConstraints) -> list[EgyptianRepr]:
    if c.parity != "all_odd":
        raise DomainError("search_all_odd needs parity='all_odd'")
    return enumerate_reprs(target, c)


def two_term_odd_split_exists(n: int) -> bool:
    """Look for odd a, b > 1 with 1/n = 1/a + 1/b, n odd.

    Every solution has a = n + t and b = n + n*n/t for a divisor t of n*n,
    so scanning the divisors covers all a in (n, n*n + n] in O(n) steps.
    """
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise DomainError(f"n must be an odd integer >= 3, got {n!r}")
    return any(_odd_witness(n, t) for t in _divisors(n * n))


def _divisors(m: int) -> Iterator[int]:
    i = 1
    while i * i <= m:
        if m % i == 0:
            yield i
            if i * i != m:
                yield m // i
        i += 1


def _odd_witness(n: int, t: int) -> bool:
    a, b = n + t, n + n * n // t
    return a % 2 == 1 and b % 2 == 1


def _unit_sum(ds: Iterable[int]) -> tuple[int, int]:
    """sum(1/d) as a reduced integer pair, added pairwise as a balanced tree."""
    pairs = [(1, d) for d in ds]
    if not pairs:
        return 0, 1
    while len(pairs) > 1:
        nxt = [_add(x, y) for x, y in zip(pairs[::2], pairs[1::2])]
        if len(pairs) % 2:
            nxt.append(pairs[-1])
        pairs = nxt
    return pairs[0]


def _add(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    (a, b), (c, d) = x, y
    g = math.gcd(b, d)
    num, den = a * (d // g) + c * (b // g), b // g * d
    h = math.gcd(num, den)
    return num // h, den // h


def verify_instance(inst: OperatorInstance) -> bool:
    """Re-derive both sides of ``inst`` with integer arithmetic and compare."""
    if not inst.consumed or not inst.produced:
        return False
    if min(inst.consumed + inst.produced) < 1:
        return False
    n1, d1 = _unit_sum(inst.consumed)
    n2, d2 = _unit_sum(inst.produced)
    return n1 * d2 == n2 * d1


def verify_repr(x: EgyptianRepr | Iterable[int], target: Fraction | int) -> bool:
    """Whether the unit fractions of ``x`` sum exactly to ``target``."""
    target = as_rational(target)
    num, den = _unit_sum(x)
    return num * target.denominator == target.numerator * den
