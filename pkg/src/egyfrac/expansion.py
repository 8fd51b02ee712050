"""Constructive decompositions of positive rationals into unit fractions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from egyfrac.operators import place_distinct
from egyfrac.rational_core import DomainError, EgyptianRepr, QClass, as_rational, classify_q, format_rational

# Greedy denominators roughly square at every step. Past this many bits a
# greedy proper part aborts and a greedy tail gives way to the binary one.
DEFAULT_MAX_BITS = 1 << 16
# Cap on the size of a full expansion. k distinct unit fractions sum to at
# most H(k+1) - 1, so an integer part v needs roughly e**(v + 0.42) terms.
DEFAULT_MAX_TERMS = 12_000
EULER_GAMMA = 0.5772156649015329


class ExpansionTooLarge(RuntimeError):
    """The requested expansion exceeds the configured size budget."""


@dataclass(frozen=True)
class GreedyStep:
    """One application of the greedy recurrence.

    ``a``/``b`` is the remainder entering the step and ``u = ceil(b/a)``.
    The unreduced successor is ``(a*u - b, b*u)``; the next step starts
    from its reduced form.
    """

    index: int
    a: int
    b: int
    u: int

    @property
    def next_a(self) -> int:
        return self.a * self.u - self.b

    @property
    def next_b(self) -> int:
        return self.b * self.u


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[GreedyStep, ...]
    result: EgyptianRepr

    @property
    def denominators(self) -> tuple[int, ...]:
        """The u_i in order of production."""
        return tuple(s.u for s in self.steps)


@dataclass(frozen=True)
class MixedForm:
    whole: int
    frac: Fraction

    @property
    def value(self) -> Fraction:
        return self.whole + self.frac


def divmod_split(v: Fraction | int) -> MixedForm:
    """Write v = q + r/b with 0 <= r/b < 1."""
    v = as_rational(v)
    if v <= 0:
        raise DomainError(f"expected a positive rational, got {v}")
    q, r = divmod(v.numerator, v.denominator)
    return MixedForm(q, Fraction(r, v.denominator))


def greedy_expand(v: Fraction | int, *, max_bits: int | None = None) -> GreedyTrace:
    """Fibonacci-Sylvester greedy expansion of a proper fraction.

    Each step takes the largest unit fraction 1/u not exceeding the
    remainder. The reduced numerator strictly decreases, so the number of
    terms is at most the numerator of ``v``.
    """
    v = as_rational(v)
    if v <= 0 or classify_q(v) is not QClass.Q_LESS:
        raise DomainError(f"greedy expansion needs 0 < v < 1, got {v}")
    steps = []
    a, b = v.numerator, v.denominator
    while a:
        u = -(-b // a)
        if max_bits is not None and u.bit_length() > max_bits:
            raise ExpansionTooLarge(f"greedy denominator exceeds {max_bits} bits")
        step = GreedyStep(len(steps), a, b, u)
        steps.append(step)
        rest = Fraction(step.next_a, step.next_b)
        a, b = rest.numerator, rest.denominator
    return GreedyTrace(tuple(steps), EgyptianRepr(tuple(s.u for s in steps)))


def binary_remainder_expand(v: Fraction) -> EgyptianRepr:
    """Expansion of a proper fraction a/b with denominators below 2*b**2.

    With 2**k <= b < 2**(k+1), write a * 2**k = c*b + s. Then
    a/b = c/2**k + s/(b * 2**k), and the binary digits of c and s give
    distinct unit fractions 1/2**(k-i) and 1/(b * 2**(k-j)). The two groups
    can only meet when b is a power of two, and then s = 0.
    """
    v = as_rational(v)
    if v <= 0 or classify_q(v) is not QClass.Q_LESS:
        raise DomainError(f"expected 0 < v < 1, got {v}")
    a, b = v.numerator, v.denominator
    k = b.bit_length() - 1
    c, s = divmod(a << k, b)
    terms = [1 << (k - i) for i in range(c.bit_length()) if c >> i & 1]
    terms += [b << (k - j) for j in range(s.bit_length()) if s >> j & 1]
    return EgyptianRepr(tuple(terms))


def _tail(rem: Fraction, max_bits: int | None) -> EgyptianRepr:
    """Greedy expansion of ``rem``, or the binary one if greedy outgrows the budget."""
    try:
        return greedy_expand(rem, max_bits=max_bits).result
    except ExpansionTooLarge:
        return binary_remainder_expand(rem)


def _expand_one(
    floor: int, avoid: frozenset[int] | set[int], max_bits: int | None, max_terms: int | None = None
) -> tuple[int, list[int]]:
    """Expansion of 1 using consecutive denominators from ``floor`` upward.

    Denominators in ``avoid`` are skipped. Returns the last denominator of
    the consecutive run and the full list of terms (run, then tail).
    The tail terms exceed the run because the remainder is below 1/m.
    """
    # rem = num/den with den the lcm of the run so far; updating it costs one
    # small multiply per term instead of a big gcd.
    num, den = 1, 1
    terms = []
    m = floor
    while num:
        if m in avoid:
            m += 1
            continue
        if num * m < den:
            break
        g = math.gcd(den, m)
        num, den = num * (m // g) - den // g, den * (m // g)
        terms.append(m)
        m += 1
        if max_terms is not None and len(terms) > max_terms:
            raise ExpansionTooLarge(f"an expansion of 1 from {floor} needs more than {max_terms} terms")
    top = terms[-1] if terms else floor - 1
    if num:
        terms.extend(_tail(Fraction(num, den), max_bits))
    return top, terms


def expand_one_from(floor: int, *, max_bits: int | None = DEFAULT_MAX_BITS) -> EgyptianRepr:
    """An expansion of 1 whose largest unit fraction is 1/floor.

    Takes 1/floor, 1/(floor+1), ... while the remainder allows, then
    finishes the remainder greedily. When a greedy denominator would pass
    ``max_bits`` bits the remainder goes to :func:`binary_remainder_expand`
    instead; from floor 38 on, the pure greedy tail reaches tens of
    millions of bits.
    """
    if not isinstance(floor, int) or floor < 2:
        raise DomainError(f"floor must be an integer >= 2, got {floor!r}")
    _, terms = _expand_one(floor, frozenset(), max_bits)
    return EgyptianRepr(tuple(terms))


def expand_full(
    v: Fraction | int, *, max_bits: int | None = DEFAULT_MAX_BITS, max_terms: int | None = DEFAULT_MAX_TERMS
) -> EgyptianRepr:
    """Decompose any positive rational into distinct unit fractions.

    The proper part is expanded greedily. Each unit of the integer part
    then gets its own expansion of 1: the first starts at 2, each later one
    just above the consecutive run of the previous block, and every
    denominator already used is skipped.
    A tail term that happens to collide is re-split with
    (t) = (t+1, t(t+1)).

    Raises :class:`ExpansionTooLarge` when the greedy proper part passes
    ``max_bits`` bits or the result would pass ``max_terms`` terms. Large
    integer parts are out of reach of any method: k distinct unit
    fractions sum to at most H(k+1) - 1.
    """
    mixed = divmod_split(v)
    if max_terms is not None and math.exp(mixed.whole + 1 - EULER_GAMMA) > max_terms + 2:
        raise ExpansionTooLarge(f"an integer part of {mixed.whole} needs more than {max_terms} terms")
    used: set[int] = set()
    if mixed.frac:
        used.update(greedy_expand(mixed.frac, max_bits=max_bits).result)
    # Not above the proper part: 4/17 ends in 1/3039345, which would force a
    # run of millions of terms. Skipping used terms keeps distinctness.
    top = 1
    for _ in range(mixed.whole):
        budget = None if max_terms is None else max_terms - len(used)
        top, terms = _expand_one(top + 1, used, max_bits, budget)
        for t in terms:
            place_distinct(t, used)
        if max_terms is not None and len(used) > max_terms:
            raise ExpansionTooLarge(f"expansion of {format_rational(as_rational(v))} needs more than {max_terms} terms")
    return EgyptianRepr(tuple(used))


def enumerate_one_representations(count: int) -> list[EgyptianRepr]:
    """``count`` different expansions of 1, with smallest denominators 2, 3, ..."""
    if not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    return [expand_one_from(floor) for floor in range(2, count + 2)]


def are_pairwise_distinct(reprs: Iterable[EgyptianRepr]) -> bool:
    reprs = list(reprs)
    return len(set(reprs)) == len(reprs)
