import pytest

from tropconics.models.geometry import Chart, SketchEdge, SketchRay, TreeSpec, TreeVertex, point2
from tropconics.utils.expression import parse_poly
from tests.polys import CENTRAL_TEXT, DOUBLE_LINE_TEXT, EX1_TEXT, EX2_TEXT, TWO_POINT_TEXT


@pytest.fixture
def ex1_poly():
    return parse_poly(EX1_TEXT)


@pytest.fixture
def ex2_poly():
    return parse_poly(EX2_TEXT)


@pytest.fixture
def central_poly():
    return parse_poly(CENTRAL_TEXT)


@pytest.fixture
def two_point_poly():
    return parse_poly(TWO_POINT_TEXT)


@pytest.fixture
def double_line_poly():
    return parse_poly(DOUBLE_LINE_TEXT)


@pytest.fixture
def ex1_tree():
    return TreeSpec(
        chart=Chart.Z,
        vertices=(TreeVertex("a", point2(0, 0)), TreeVertex("b", point2(4, 2))),
        edges=(SketchEdge(0, 1, 1),),
        rays=(
            SketchRay(0, (-1, 0), 2),
            SketchRay(0, (0, -1), 1),
            SketchRay(1, (0, -1), 1),
            SketchRay(1, (1, 1), 2),
        ),
    )


@pytest.fixture
def ex1_tree_json():
    return """{
      "format": 1,
      "chart": "Z",
      "vertices": [{"id": "a", "x": "0", "y": "0"}, {"id": "b", "x": "4", "y": "2"}],
      "edges": [{"u": "a", "v": "b", "weight": 1}],
      "rays": [
        {"v": "a", "dir": [-1, 0], "weight": 2},
        {"v": "a", "dir": [0, -1], "weight": 1},
        {"v": "b", "dir": [0, -1], "weight": 1},
        {"v": "b", "dir": [1, 1], "weight": 2}
      ]
    }"""
