from typing import List, Literal, Optional

from pydantic import BaseModel, field_validator

from tropconics.models.quadratic import LinForm, QuadPoly, SymMatrix3
from tropconics.models.semiring import BOTTOM_TOKEN, TropScalar, format_scalar, parse_scalar
from tropconics.schemas.common import ScalarText
from tropconics.services.quadratic_service import QuadraticService

MATRIX_KEYS = ("a11", "a22", "a33", "a21", "a32", "a31")


class MatrixEntries(BaseModel):
    a11: ScalarText
    a22: ScalarText
    a33: ScalarText
    a21: ScalarText = BOTTOM_TOKEN
    a32: ScalarText = BOTTOM_TOKEN
    a31: ScalarText = BOTTOM_TOKEN

    @classmethod
    def from_domain(cls, a: SymMatrix3) -> "MatrixEntries":
        return cls(**{name: format_scalar(getattr(a, name)) for name in MATRIX_KEYS})

    def to_domain(self) -> SymMatrix3:
        return SymMatrix3(**{name: parse_scalar(getattr(self, name)) for name in MATRIX_KEYS})


class PolynomialDocument(BaseModel):
    format: Literal[1] = 1
    polynomial: str
    matrix: MatrixEntries


class LinFormDocument(BaseModel):
    x: ScalarText
    y: ScalarText
    z: ScalarText

    @classmethod
    def from_domain(cls, f: LinForm) -> "LinFormDocument":
        return cls(x=format_scalar(f.x), y=format_scalar(f.y), z=format_scalar(f.z))

    def to_domain(self) -> LinForm:
        return LinForm(parse_scalar(self.x), parse_scalar(self.y), parse_scalar(self.z))


class FactorizationDocument(BaseModel):
    format: Literal[1] = 1
    polynomial: str
    reducible: bool
    conic_is_reducible: bool
    factors: Optional[List[LinFormDocument]] = None
    text: str


class DetRowsDocument(BaseModel):
    format: Literal[1] = 1
    rows: List[List[ScalarText]]

    @field_validator("rows")
    @classmethod
    def three_by_three(cls, rows: List[List[str]]) -> List[List[str]]:
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("rows must be a 3x3 array of scalars")
        return rows

    def to_domain(self) -> List[List[TropScalar]]:
        return [[parse_scalar(c) for c in row] for row in self.rows]


class DetSymmetricDocument(MatrixEntries):
    """Symmetric matrix given by its lower triangle; the diagonal must be finite."""

    format: Literal[1] = 1


class DetResultDocument(BaseModel):
    format: Literal[1] = 1
    value: ScalarText
    attained: int
    singular: bool


def polynomial_document(p: QuadPoly, text: str) -> PolynomialDocument:
    return PolynomialDocument(polynomial=text, matrix=MatrixEntries.from_domain(QuadraticService.matrix_of(p)))
