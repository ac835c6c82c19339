"""Exact max-plus scalars.

A :class:`TropScalar` is either bottom (the tropical zero, ``-inf``) or an exact
:class:`~fractions.Fraction`. Tropical addition is ``max`` and tropical
multiplication is ordinary ``+``; the dunder methods ``+``, ``*`` and ``**``
are the tropical operations, so ordinary arithmetic on the underlying value
goes through :attr:`TropScalar.value`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Union

from tropconics.core.exceptions import ScalarFormatError

ScalarLike = Union["TropScalar", Fraction, int, str]

_SCALAR_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")
BOTTOM_TOKEN = "-inf"


@total_ordering
@dataclass(frozen=True)
class TropScalar:
    value: Optional[Fraction] = None

    def __post_init__(self):
        v = self.value
        if v is None or type(v) is Fraction:
            return
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise TypeError(f"TropScalar needs an exact int or Fraction, got {type(v).__name__}")
        object.__setattr__(self, "value", Fraction(v))

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def finite(self) -> Fraction:
        if self.value is None:
            raise ValueError("bottom has no finite value")
        return self.value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, TropScalar):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __add__(self, other: ScalarLike) -> "TropScalar":
        return t_add(self, scalar(other))

    __radd__ = __add__

    def __mul__(self, other: ScalarLike) -> "TropScalar":
        return t_mul(self, scalar(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TropScalar":
        return t_pow(self, n)

    def inverse(self) -> "TropScalar":
        """Tropical inverse; only finite scalars have one."""
        return TropScalar(-self.finite)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"TropScalar({format_scalar(self)})"


BOTTOM = TropScalar(None)
ZERO = TropScalar(Fraction(0))


def scalar(x: ScalarLike) -> TropScalar:
    if isinstance(x, TropScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return TropScalar(x)


def t_add(a: TropScalar, b: TropScalar) -> TropScalar:
    """a ⊕ b = max(a, b), bottom being the least element."""
    if a.value is None:
        return b
    if b.value is None:
        return a
    return a if a.value >= b.value else b


def t_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    """a ⊙ b = a + b; bottom absorbs."""
    if a.value is None or b.value is None:
        return BOTTOM
    return TropScalar(a.value + b.value)


def t_pow(a: TropScalar, n: int) -> TropScalar:
    if n < 0:
        raise ValueError(f"tropical power needs a nonnegative exponent, got {n}")
    if n == 0:
        return ZERO
    if a.value is None:
        return BOTTOM
    return TropScalar(n * a.value)


def nonneg_part(a: TropScalar) -> TropScalar:
    """a⁺ = a ⊕ 0."""
    return t_add(a, ZERO)


def t_sum(xs: Iterable[TropScalar]) -> TropScalar:
    total = BOTTOM
    for x in xs:
        total = t_add(total, x)
    return total


def t_prod(xs: Iterable[TropScalar]) -> TropScalar:
    total = ZERO
    for x in xs:
        total = t_mul(total, x)
    return total


def parse_scalar(text: str) -> TropScalar:
    stripped = text.strip()
    if stripped == BOTTOM_TOKEN:
        return BOTTOM
    match = _SCALAR_RE.fullmatch(stripped)
    if match is None:
        raise ScalarFormatError(text)
    numerator, denominator = match.groups()
    if denominator is None:
        return TropScalar(Fraction(int(numerator)))
    if int(denominator) == 0:
        raise ScalarFormatError(text)
    return TropScalar(Fraction(int(numerator), int(denominator)))


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: TropScalar) -> str:
    if x.value is None:
        return BOTTOM_TOKEN
    return format_rational(x.value)
