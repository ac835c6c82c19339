import json
from typing import Any, Dict, Type, TypeVar, Union

from pydantic import AfterValidator, BaseModel, ValidationError
from typing_extensions import Annotated

from tropconics.core.exceptions import ChartError, DocumentError, ScalarFormatError
from tropconics.models.geometry import Chart
from tropconics.models.semiring import format_scalar, parse_scalar

FORMAT_VERSION = 1

Model = TypeVar("Model", bound=BaseModel)


def _canonical_scalar(text: str) -> str:
    try:
        return format_scalar(parse_scalar(text))
    except ScalarFormatError as exc:
        raise ValueError(exc.detail)


def _canonical_chart(text: str) -> str:
    try:
        return Chart.parse(text).value
    except ChartError as exc:
        raise ValueError(exc.detail)


# Scalars travel as strings so rationals stay exact.
ScalarText = Annotated[str, AfterValidator(_canonical_scalar)]
ChartText = Annotated[str, AfterValidator(_canonical_chart)]


def decode_json(raw: Union[str, bytes], kind: str) -> Any:
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DocumentError(kind, detail=f"Invalid {kind} document: not JSON ({exc.msg} at line {exc.lineno})")


def load_document(model: Type[Model], raw: Union[str, bytes, Dict[str, Any]], kind: str) -> Model:
    if isinstance(raw, (str, bytes)):
        raw = decode_json(raw, kind)
    try:
        return model.model_validate(raw)
    except ValidationError as exc:
        raise DocumentError(kind, errors=exc.errors())
