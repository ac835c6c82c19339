from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from tropconics.core.exceptions import DegreeError
from tropconics.models.semiring import BOTTOM, ZERO, ScalarLike, TropScalar, scalar

Exponent = Tuple[int, int, int]
Matrix3 = List[List[TropScalar]]


class Monomial(Enum):
    """The six degree-two monomials, in canonical order X², Y², Z², XY, YZ, XZ."""

    XX = ((2, 0, 0), (1, 1), "X^2")
    YY = ((0, 2, 0), (2, 2), "Y^2")
    ZZ = ((0, 0, 2), (3, 3), "Z^2")
    XY = ((1, 1, 0), (2, 1), "X*Y")
    YZ = ((0, 1, 1), (3, 2), "Y*Z")
    XZ = ((1, 0, 1), (3, 1), "X*Z")

    def __init__(self, exponent: Exponent, index: Tuple[int, int], label: str):
        self.exponent = exponent
        self.index = index
        self.label = label

    @property
    def key(self) -> str:
        return f"a{self.index[0]}{self.index[1]}"

    @property
    def is_square(self) -> bool:
        return self.index[0] == self.index[1]

    @classmethod
    def from_exponent(cls, exponent: Exponent) -> "Monomial":
        for mono in cls:
            if mono.exponent == tuple(exponent):
                return mono
        raise DegreeError(f"Exponent {tuple(exponent)} is not a degree-two monomial")

    @classmethod
    def from_index(cls, i: int, j: int) -> "Monomial":
        pair = (max(i, j), min(i, j))
        for mono in cls:
            if mono.index == pair:
                return mono
        raise IndexError(f"No monomial for index pair {(i, j)}")

    @classmethod
    def from_label(cls, label: str) -> "Monomial":
        for mono in cls:
            if mono.label == label:
                return mono
        raise KeyError(label)


MONOMIALS: Tuple[Monomial, ...] = tuple(Monomial)
OFF_DIAGONAL: Tuple[Monomial, ...] = (Monomial.XY, Monomial.YZ, Monomial.XZ)


def _require_finite_diagonal(values: Dict[Monomial, TropScalar]) -> None:
    for mono in (Monomial.XX, Monomial.YY, Monomial.ZZ):
        if values[mono].is_bottom:
            raise DegreeError(
                f"{mono.label} coefficient is -inf: a degree-two polynomial needs finite "
                f"{Monomial.XX.label}, {Monomial.YY.label} and {Monomial.ZZ.label} coefficients"
            )


@dataclass(frozen=True)
class SymMatrix3:
    """Symmetric 3×3 tropical matrix with finite diagonal; lower triangle stored."""

    a11: TropScalar
    a22: TropScalar
    a33: TropScalar
    a21: TropScalar = BOTTOM
    a32: TropScalar = BOTTOM
    a31: TropScalar = BOTTOM

    def __post_init__(self):
        for name in ("a11", "a22", "a33", "a21", "a32", "a31"):
            object.__setattr__(self, name, scalar(getattr(self, name)))
        _require_finite_diagonal({m: getattr(self, m.key) for m in MONOMIALS})

    @classmethod
    def of(cls, a11: ScalarLike, a22: ScalarLike, a33: ScalarLike,
           a21: ScalarLike = BOTTOM, a32: ScalarLike = BOTTOM, a31: ScalarLike = BOTTOM) -> "SymMatrix3":
        return cls(scalar(a11), scalar(a22), scalar(a33), scalar(a21), scalar(a32), scalar(a31))

    @classmethod
    def shape_of(cls, s21: ScalarLike, s32: ScalarLike, s31: ScalarLike) -> "SymMatrix3":
        """Zero-diagonal matrix with the given off-diagonal entries."""
        return cls(ZERO, ZERO, ZERO, scalar(s21), scalar(s32), scalar(s31))

    def entry(self, i: int, j: int) -> TropScalar:
        return getattr(self, Monomial.from_index(i, j).key)

    def rows(self) -> Matrix3:
        return [[self.entry(i, j) for j in (1, 2, 3)] for i in (1, 2, 3)]

    @property
    def diagonal(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a11.finite, self.a22.finite, self.a33.finite)

    @property
    def off_diagonal(self) -> Tuple[TropScalar, TropScalar, TropScalar]:
        return (self.a21, self.a32, self.a31)

    @property
    def has_zero_diagonal(self) -> bool:
        return all(v == 0 for v in self.diagonal)


@dataclass(frozen=True)
class QuadPoly:
    """Degree-two homogeneous tropical polynomial; coefficients in Monomial order."""

    coefficients: Tuple[TropScalar, ...]

    def __post_init__(self):
        coeffs = tuple(scalar(c) for c in self.coefficients)
        if len(coeffs) != len(MONOMIALS):
            raise DegreeError(f"Expected {len(MONOMIALS)} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)
        _require_finite_diagonal(dict(zip(MONOMIALS, coeffs)))

    @classmethod
    def from_mapping(cls, values: Dict[Monomial, ScalarLike]) -> "QuadPoly":
        return cls(tuple(scalar(values.get(m, BOTTOM)) for m in MONOMIALS))

    def coefficient(self, mono: Monomial) -> TropScalar:
        return self.coefficients[MONOMIALS.index(mono)]

    def items(self) -> Iterator[Tuple[Monomial, TropScalar]]:
        return iter(zip(MONOMIALS, self.coefficients))

    def support(self) -> Tuple[Monomial, ...]:
        return tuple(m for m, c in self.items() if c.is_finite)


@dataclass(frozen=True)
class DiagTranslation:
    """Tropical diagonal matrix D = diag(t1, t2, t3): [X,Y,Z] ↦ [X+t1, Y+t2, Z+t3]."""

    t1: Fraction
    t2: Fraction
    t3: Fraction

    def __post_init__(self):
        for name in ("t1", "t2", "t3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def entries(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.t1, self.t2, self.t3)

    def inverse(self) -> "DiagTranslation":
        return DiagTranslation(-self.t1, -self.t2, -self.t3)

    def as_matrix(self) -> Matrix3:
        t = self.entries
        return [[TropScalar(t[i]) if i == j else BOTTOM for j in range(3)] for i in range(3)]


@dataclass(frozen=True)
class LinForm:
    """Tropical linear form x⊙X ⊕ y⊙Y ⊕ z⊙Z."""

    x: TropScalar
    y: TropScalar
    z: TropScalar

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, scalar(getattr(self, name)))
        if self.x.is_bottom and self.y.is_bottom and self.z.is_bottom:
            raise DegreeError("A linear form needs at least one finite coefficient")

    @property
    def coefficients(self) -> Tuple[TropScalar, TropScalar, TropScalar]:
        return (self.x, self.y, self.z)

    def shifted(self, t: DiagTranslation) -> "LinForm":
        """Coefficient of variable i gains t_i."""
        return LinForm(*(c * TropScalar(ti) for c, ti in zip(self.coefficients, t.entries)))

    def permuted(self, perm: Tuple[int, int, int]) -> "LinForm":
        """Coefficient of variable perm[k] becomes the coefficient of variable k."""
        c = self.coefficients
        return LinForm(*(c[perm[k] - 1] for k in range(3)))


@dataclass(frozen=True)
class DetResult:
    """Tropical determinant value and how many permutations attain it."""

    value: TropScalar
    attained: int

    @property
    def singular(self) -> bool:
        return self.attained >= 2


@dataclass(frozen=True)
class Evaluation:
    value: TropScalar
    maximizers: frozenset
