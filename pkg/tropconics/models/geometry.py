from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from tropconics.core.exceptions import ChartError
from tropconics.models.quadratic import Monomial
from tropconics.models.semiring import BOTTOM, ScalarLike, TropScalar, scalar

Point2 = Tuple[Fraction, Fraction]
Direction = Tuple[int, int]
Permutation = Tuple[int, int, int]

IDENTITY: Permutation = (1, 2, 3)

WEST: Direction = (-1, 0)
SOUTH: Direction = (0, -1)
NORTH_EAST: Direction = (1, 1)
PENDANT_DIRECTIONS: Tuple[Direction, ...] = (WEST, SOUTH, NORTH_EAST)


def point2(x: ScalarLike, y: ScalarLike) -> Point2:
    return (scalar(x).finite, scalar(y).finite)


class Chart(str, Enum):
    """Affine chart named by the homogeneous coordinate fixed to zero."""

    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def index(self) -> int:
        return "XYZ".index(self.value) + 1

    @property
    def affine_indices(self) -> Tuple[int, int]:
        """Projective coordinates (1-based) read as the chart's (first, second) affine coordinate."""
        return tuple(i for i in (1, 2, 3) if i != self.index)

    @property
    def to_chart_z(self) -> Permutation:
        """Variable permutation that moves this chart's variable into the Z slot."""
        first, second = self.affine_indices
        return (first, second, self.index)

    @classmethod
    def parse(cls, text: str) -> "Chart":
        token = text.strip().upper()
        if token.endswith("=0"):
            token = token[:-2]
        try:
            return cls(token)
        except ValueError:
            raise ChartError(f"Unknown chart '{text}': expected X, Y or Z")


@dataclass(frozen=True)
class ProjPoint:
    """Point of the tropical projective plane, stored with maximum coordinate 0."""

    x: TropScalar
    y: TropScalar
    z: TropScalar

    def __post_init__(self):
        coords = [scalar(c) for c in (self.x, self.y, self.z)]
        finite = [c.finite for c in coords if c.is_finite]
        if not finite:
            raise ChartError("[-inf, -inf, -inf] is not a point of the projective plane")
        top = max(finite)
        for name, c in zip(("x", "y", "z"), coords):
            object.__setattr__(self, name, BOTTOM if c.is_bottom else TropScalar(c.finite - top))

    @classmethod
    def of(cls, x: ScalarLike, y: ScalarLike, z: ScalarLike) -> "ProjPoint":
        return cls(scalar(x), scalar(y), scalar(z))

    @property
    def coords(self) -> Tuple[TropScalar, TropScalar, TropScalar]:
        return (self.x, self.y, self.z)

    @property
    def is_interior(self) -> bool:
        return all(c.is_finite for c in self.coords)

    def coordinate(self, i: int) -> TropScalar:
        return self.coords[i - 1]

    def times(self, other: "ProjPoint") -> "ProjPoint":
        """Coordinatewise tropical product, e.g. v + t in the usual notation."""
        return ProjPoint(*(a * b for a, b in zip(self.coords, other.coords)))

    def permuted(self, perm: Permutation) -> "ProjPoint":
        c = self.coords
        return ProjPoint(*(c[perm[k] - 1] for k in range(3)))


@dataclass(frozen=True)
class Invariants:
    """Non-negative shape entries s⁺ and the alternating sums d."""

    s21p: Fraction
    s32p: Fraction
    s31p: Fraction
    d1: Fraction
    d2: Fraction
    d3: Fraction

    @classmethod
    def from_s_plus(cls, s21p: Fraction, s32p: Fraction, s31p: Fraction) -> "Invariants":
        s21p, s32p, s31p = Fraction(s21p), Fraction(s32p), Fraction(s31p)
        return cls(
            s21p, s32p, s31p,
            d1=s21p - s32p + s31p,
            d2=s21p + s32p - s31p,
            d3=-s21p + s32p + s31p,
        )

    @property
    def s_plus(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.s21p, self.s32p, self.s31p)

    @property
    def d(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.d1, self.d2, self.d3)

    def s(self, i: int, j: int) -> Fraction:
        return {(2, 1): self.s21p, (3, 2): self.s32p, (3, 1): self.s31p}[(max(i, j), min(i, j))]

    def permuted(self, perm: Permutation) -> "Invariants":
        """Invariants of the polynomial whose variable k is the old variable perm[k]."""
        return Invariants.from_s_plus(
            self.s(perm[1], perm[0]), self.s(perm[2], perm[1]), self.s(perm[2], perm[0])
        )


class ConicTag(str, Enum):
    ONE_POINT_CENTRAL = "OnePointCentral"
    TWO_POINT_CENTRAL = "TwoPointCentral"
    DEGENERATE_1 = "Degenerate1"
    DEGENERATE_2 = "Degenerate2"
    DOUBLE_LINE = "DoubleLine"
    PAIR_OF_LINES_ONE_ZERO = "PairOfLinesOneZero"
    PAIR_OF_LINES_TWO_ZEROS = "PairOfLinesTwoZeros"


NON_DEGENERATE_TAGS = frozenset({ConicTag.ONE_POINT_CENTRAL, ConicTag.TWO_POINT_CENTRAL})
LINE_PAIR_TAGS = frozenset({
    ConicTag.PAIR_OF_LINES_ONE_ZERO, ConicTag.PAIR_OF_LINES_TWO_ZEROS, ConicTag.DOUBLE_LINE,
})

EXPECTED_VERTEX_COUNT = {
    ConicTag.ONE_POINT_CENTRAL: 4,
    ConicTag.TWO_POINT_CENTRAL: 4,
    ConicTag.DEGENERATE_1: 3,
    ConicTag.DEGENERATE_2: 2,
    ConicTag.PAIR_OF_LINES_ONE_ZERO: 3,
    ConicTag.PAIR_OF_LINES_TWO_ZEROS: 2,
    ConicTag.DOUBLE_LINE: 1,
}


@dataclass(frozen=True)
class ConicClass:
    """Class tag plus perm: canonical index k corresponds to actual index perm[k-1]."""

    tag: ConicTag
    perm: Permutation = IDENTITY


@dataclass(frozen=True)
class SketchVertex:
    point: Point2
    maximizers: FrozenSet[Monomial]


@dataclass(frozen=True)
class SketchEdge:
    u: int
    v: int
    weight: int


@dataclass(frozen=True)
class SketchRay:
    vertex: int
    direction: Direction
    weight: int


@dataclass(frozen=True)
class Sketch:
    chart: Chart
    vertices: Tuple[SketchVertex, ...]
    edges: Tuple[SketchEdge, ...] = ()
    rays: Tuple[SketchRay, ...] = ()

    @property
    def points(self) -> Tuple[Point2, ...]:
        return tuple(v.point for v in self.vertices)


@dataclass(frozen=True)
class TreeVertex:
    id: str
    point: Point2


@dataclass(frozen=True)
class TreeSpec:
    chart: Chart
    vertices: Tuple[TreeVertex, ...]
    edges: Tuple[SketchEdge, ...] = ()
    rays: Tuple[SketchRay, ...] = ()

    @property
    def points(self) -> Tuple[Point2, ...]:
        return tuple(v.point for v in self.vertices)


@dataclass(frozen=True)
class BalanceDefect:
    vertex: int
    point: Point2
    total: Direction


@dataclass(frozen=True)
class BalanceReport:
    defects: Tuple[BalanceDefect, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.defects


@dataclass(frozen=True)
class Separations:
    """Exact displacements between parallel pendant rays in chart Z."""

    ne_displacement: Tuple[Fraction, Fraction]
    west_gap: Fraction
    south_gap: Fraction


@dataclass(frozen=True)
class VertexLabel:
    name: str
    point: Point2
