"""Exact rationals and the Egyptian-fraction data model.

Rationals are plain :class:`fractions.Fraction` values; every other module
works with them directly. A representation is stored as its set of
denominators, kept sorted so that equal sets compare equal.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

Rational = Fraction

_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(-?\d+))?")
_REPR_RE = re.compile(r"\[(\d+(?:,\d+)*)?\]")


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def make_rational(num: int, den: int) -> Fraction:
    """Build a reduced rational ``num/den``.

    A zero numerator is accepted (algorithms use it as a remainder
    sentinel); negative values and nonpositive denominators are not.
    """
    if not isinstance(num, int) or not isinstance(den, int):
        raise DomainError("numerator and denominator must be integers")
    if den < 1:
        raise DomainError(f"denominator must be >= 1, got {den}")
    if num < 0:
        raise DomainError(f"numerator must be >= 0, got {num}")
    return Fraction(num, den)


def as_rational(value: Fraction | int) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``. Whitespace anywhere is rejected."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise DomainError(f"cannot parse rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    if num < 0 or den < 0:
        raise DomainError(f"negative rational {text!r} is out of domain")
    return Fraction(num, den)


def format_rational(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


class QClass(enum.Enum):
    """Which half of the positive rationals a value falls in."""

    Q_LESS = "Q_less"
    Q_GEQ = "Q_geq"


def classify_q(v: Fraction | int) -> QClass:
    v = as_rational(v)
    if v <= 0:
        raise DomainError(f"expected a positive rational, got {v}")
    return QClass.Q_LESS if v.numerator < v.denominator else QClass.Q_GEQ


@dataclass(frozen=True)
class UnitFraction:
    denominator: int

    def __post_init__(self) -> None:
        if not isinstance(self.denominator, int) or self.denominator < 2:
            raise DomainError(f"unit fraction denominator must be >= 2, got {self.denominator!r}")

    @property
    def value(self) -> Fraction:
        return Fraction(1, self.denominator)

    def __str__(self) -> str:
        return f"1/{self.denominator}"


@dataclass(frozen=True)
class EgyptianRepr:
    """A finite set of distinct unit fractions, held as sorted denominators.

    Any iterable of integers is accepted and sorted; a repeated denominator
    raises :class:`DomainError` instead of being merged.
    """

    denominators: tuple[int, ...]

    def __post_init__(self) -> None:
        ds = tuple(sorted(self.denominators))
        if not ds:
            raise DomainError("a representation needs at least one term")
        for d in ds:
            if not isinstance(d, int) or isinstance(d, bool):
                raise DomainError(f"denominators must be integers, got {d!r}")
        if ds[0] < 2:
            raise DomainError(f"denominators must be >= 2, got {ds[0]}")
        for lo, hi in zip(ds, ds[1:]):
            if lo == hi:
                raise DomainError(f"duplicate denominator {lo}")
        object.__setattr__(self, "denominators", ds)

    def __len__(self) -> int:
        return len(self.denominators)

    def __iter__(self) -> Iterator[int]:
        return iter(self.denominators)

    def __contains__(self, d: object) -> bool:
        return d in self.denominators

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.denominators)) + "]"

    @property
    def smallest_term(self) -> int:
        """Denominator of the smallest unit fraction, i.e. the largest denominator."""
        return self.denominators[-1]

    def units(self) -> list[UnitFraction]:
        return [UnitFraction(d) for d in self.denominators]

    def union(self, other: Iterable[int]) -> EgyptianRepr:
        return EgyptianRepr(self.denominators + tuple(other))


def parse_repr(text: str) -> EgyptianRepr:
    """Parse the interchange form ``"[d1,d2,...]"`` (no whitespace)."""
    m = _REPR_RE.fullmatch(text)
    if m is None or m.group(1) is None:
        raise DomainError(f"cannot parse representation {text!r}")
    return EgyptianRepr(tuple(int(t) for t in m.group(1).split(",")))


def repr_sum(x: EgyptianRepr | Iterable[int]) -> Fraction:
    """Exact value of the sum of 1/d over the denominators of ``x``."""
    ds = list(x)
    if not ds:
        raise DomainError("cannot sum an empty representation")
    return sum((Fraction(1, d) for d in ds), Fraction(0))


def is_strict_egyptian(x: EgyptianRepr) -> bool:
    """True when ``x`` has at least two terms."""
    return len(x) >= 2


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    @property
    def symbol(self) -> str:
        return "o" if self else "e"

    @classmethod
    def of(cls, n: int) -> Parity:
        return cls(n & 1)

    @classmethod
    def from_symbol(cls, s: str) -> Parity:
        try:
            return {"e": cls.EVEN, "o": cls.ODD}[s]
        except KeyError:
            raise DomainError(f"unknown parity symbol {s!r}") from None


@dataclass(frozen=True)
class ParityVector:
    parities: tuple[Parity, ...]

    def __len__(self) -> int:
        return len(self.parities)

    def __iter__(self) -> Iterator[Parity]:
        return iter(self.parities)

    @property
    def bits(self) -> tuple[int, ...]:
        """Boolean encoding with e=0 and o=1."""
        return tuple(int(p) for p in self.parities)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(p.symbol for p in self.parities)

    def all(self, parity: Parity) -> bool:
        return all(p is parity for p in self.parities)

    def __str__(self) -> str:
        return " ".join(self.symbols)
