from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator

from tropconics.core.exceptions import DocumentError
from tropconics.models.geometry import (
    Chart, Point2, Sketch, SketchEdge, SketchRay, SketchVertex, TreeSpec, TreeVertex,
)
from tropconics.models.quadratic import Monomial
from tropconics.models.semiring import format_rational, parse_scalar
from tropconics.schemas.common import ChartText, ScalarText

VertexRef = Union[int, str]


def _finite(text: str) -> str:
    if parse_scalar(text).is_bottom:
        raise ValueError("vertex coordinates must be finite")
    return text


class EdgeDocument(BaseModel):
    u: VertexRef
    v: VertexRef
    weight: int


class RayDocument(BaseModel):
    v: VertexRef
    dir: List[int] = Field(min_length=2, max_length=2)
    weight: int


class SketchVertexDocument(BaseModel):
    x: ScalarText
    y: ScalarText
    maximizers: List[str]
    label: Optional[str] = None

    @field_validator("x", "y")
    @classmethod
    def finite(cls, value: str) -> str:
        return _finite(value)


class SketchDocument(BaseModel):
    format: Literal[1] = 1
    chart: ChartText
    vertices: List[SketchVertexDocument]
    edges: List[EdgeDocument] = []
    rays: List[RayDocument] = []

    @classmethod
    def from_domain(cls, sk: Sketch, labels: Optional[Dict[Point2, str]] = None) -> "SketchDocument":
        labels = labels or {}
        return cls(
            chart=sk.chart.value,
            vertices=[
                SketchVertexDocument(
                    x=format_rational(v.point[0]),
                    y=format_rational(v.point[1]),
                    maximizers=[m.label for m in Monomial if m in v.maximizers],
                    label=labels.get(v.point),
                )
                for v in sk.vertices
            ],
            edges=[EdgeDocument(u=e.u, v=e.v, weight=e.weight) for e in sk.edges],
            rays=[RayDocument(v=r.vertex, dir=list(r.direction), weight=r.weight) for r in sk.rays],
        )

    def to_domain(self) -> Sketch:
        vertices = tuple(
            SketchVertex(
                point=(parse_scalar(v.x).finite, parse_scalar(v.y).finite),
                maximizers=frozenset(_monomial(label) for label in v.maximizers),
            )
            for v in self.vertices
        )
        ids = {i: i for i in range(len(vertices))}
        return Sketch(
            chart=Chart.parse(self.chart),
            vertices=vertices,
            edges=tuple(SketchEdge(_resolve(e.u, ids), _resolve(e.v, ids), e.weight) for e in self.edges),
            rays=tuple(SketchRay(_resolve(r.v, ids), tuple(r.dir), r.weight) for r in self.rays),
        )


class TreeVertexDocument(BaseModel):
    id: str
    x: ScalarText
    y: ScalarText

    @field_validator("x", "y")
    @classmethod
    def finite(cls, value: str) -> str:
        return _finite(value)


class TreeDocument(BaseModel):
    """Weighted tree; edges and rays name vertices by id or by position."""

    format: Literal[1] = 1
    chart: ChartText = "Z"
    vertices: List[TreeVertexDocument]
    edges: List[EdgeDocument] = []
    rays: List[RayDocument] = []

    @classmethod
    def from_domain(cls, t: TreeSpec) -> "TreeDocument":
        return cls(
            chart=t.chart.value,
            vertices=[
                TreeVertexDocument(id=v.id, x=format_rational(v.point[0]), y=format_rational(v.point[1]))
                for v in t.vertices
            ],
            edges=[EdgeDocument(u=t.vertices[e.u].id, v=t.vertices[e.v].id, weight=e.weight) for e in t.edges],
            rays=[RayDocument(v=t.vertices[r.vertex].id, dir=list(r.direction), weight=r.weight) for r in t.rays],
        )

    def to_domain(self) -> TreeSpec:
        ids: Dict[VertexRef, int] = {}
        for i, v in enumerate(self.vertices):
            if v.id in ids:
                raise DocumentError("tree", detail=f"Invalid tree document: duplicate vertex id '{v.id}'")
            ids[v.id] = i
        ids.update({i: i for i in range(len(self.vertices))})
        return TreeSpec(
            chart=Chart.parse(self.chart),
            vertices=tuple(
                TreeVertex(id=v.id, point=(parse_scalar(v.x).finite, parse_scalar(v.y).finite))
                for v in self.vertices
            ),
            edges=tuple(SketchEdge(_resolve(e.u, ids), _resolve(e.v, ids), e.weight) for e in self.edges),
            rays=tuple(SketchRay(_resolve(r.v, ids), tuple(r.dir), r.weight) for r in self.rays),
        )


def _resolve(ref: VertexRef, ids: Dict[VertexRef, int]) -> int:
    if ref not in ids:
        raise DocumentError("tree", detail=f"Invalid document: unknown vertex '{ref}'")
    return ids[ref]


def _monomial(label: str) -> Monomial:
    try:
        return Monomial.from_label(label)
    except KeyError:
        raise DocumentError("sketch", detail=f"Invalid sketch document: unknown monomial '{label}'")
