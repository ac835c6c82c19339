from typing import List, Literal

from pydantic import BaseModel

from tropconics.models.geometry import Invariants
from tropconics.models.semiring import format_rational
from tropconics.schemas.common import ChartText, ScalarText
from tropconics.schemas.sketch import SketchVertexDocument


class InvariantsDocument(BaseModel):
    s21: ScalarText
    s32: ScalarText
    s31: ScalarText
    d1: ScalarText
    d2: ScalarText
    d3: ScalarText

    @classmethod
    def from_domain(cls, inv: Invariants) -> "InvariantsDocument":
        names = ("s21", "s32", "s31", "d1", "d2", "d3")
        return cls(**{name: format_rational(v) for name, v in zip(names, inv.s_plus + inv.d)})


class ClassificationDocument(BaseModel):
    format: Literal[1] = 1
    polynomial: str
    chart: ChartText
    tag: str
    perm: List[int]
    invariants: InvariantsDocument
    pair_of_lines: bool
    degenerate: bool
    shape_singular: bool
    vertices: List[SketchVertexDocument]
