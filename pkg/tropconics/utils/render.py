from fractions import Fraction
from typing import Dict, List, Optional, Tuple
import logging

import drawsvg as draw

from tropconics.core.config import settings
from tropconics.models.geometry import Direction, Point2, Sketch
from tropconics.models.semiring import format_rational

logger = logging.getLogger(__name__)

Box = Tuple[Fraction, Fraction, Fraction, Fraction]
Segment = Tuple[Point2, Point2, Direction, int]

MIN_PADDING = Fraction(2)


def _direction_of(start: Point2, end: Point2) -> Direction:
    dx, dy = end[0] - start[0], end[1] - start[1]
    return ((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))


def bounding_box(sk: Sketch) -> Box:
    """Vertex bounding box padded by max(2, half its larger side)."""
    xs = [p[0] for p in sk.points]
    ys = [p[1] for p in sk.points]
    diameter = max(max(xs) - min(xs), max(ys) - min(ys))
    pad = max(MIN_PADDING, diameter / 2)
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def clip_ray(start: Point2, direction: Direction, box: Box) -> Point2:
    xmin, ymin, xmax, ymax = box
    limits = []
    if direction[0]:
        limits.append(((xmax if direction[0] > 0 else xmin) - start[0]) / direction[0])
    if direction[1]:
        limits.append(((ymax if direction[1] > 0 else ymin) - start[1]) / direction[1])
    t = min(limits)
    return (start[0] + t * direction[0], start[1] + t * direction[1])


def segments(sk: Sketch, box: Box) -> List[Segment]:
    points = sk.points
    result: List[Segment] = []
    for e in sk.edges:
        start, end = points[e.u], points[e.v]
        result.append((start, end, _direction_of(start, end), e.weight))
    for r in sk.rays:
        start = points[r.vertex]
        result.append((start, clip_ray(start, r.direction, box), r.direction, r.weight))
    return result


def default_labels(sk: Sketch) -> Dict[Point2, str]:
    return {v.point: f"n{i}" for i, v in enumerate(sk.vertices)}


def render_svg(sk: Sketch, labels: Optional[Dict[Point2, str]] = None) -> str:
    labels = labels or default_labels(sk)
    box = bounding_box(sk)
    xmin, ymin, xmax, ymax = box
    scale = Fraction(settings.svg_scale).limit_denominator(1000)

    def at(p: Point2) -> Tuple[float, float]:
        return float((p[0] - xmin) * scale), float((ymax - p[1]) * scale)

    width, height = float((xmax - xmin) * scale), float((ymax - ymin) * scale)
    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill="white"))
    for start, end, _, weight in segments(sk, box):
        (x1, y1), (x2, y2) = at(start), at(end)
        stroke = settings.svg_thick_stroke if weight >= 2 else settings.svg_thin_stroke
        d.append(draw.Line(x1, y1, x2, y2, stroke="black", stroke_width=stroke, stroke_linecap="round"))
    for vertex in sk.vertices:
        cx, cy = at(vertex.point)
        d.append(draw.Circle(cx, cy, 4, fill="black"))
        d.append(draw.Text(labels.get(vertex.point, ""), 12, cx + 6, cy - 6, font_family="monospace"))
    logger.debug(f"render_svg: {len(sk.vertices)} vertices, box {[str(v) for v in box]}")
    return d.as_svg()


def _stroke_char(direction: Direction, weight: int) -> str:
    if weight >= 2:
        return "#"
    dx, dy = direction
    if dy == 0:
        return "-"
    if dx == 0:
        return "|"
    return "/" if dx * dy > 0 else "."


def render_ascii(sk: Sketch, labels: Optional[Dict[Point2, str]] = None,
                 width: Optional[int] = None, height: Optional[int] = None) -> str:
    labels = labels or default_labels(sk)
    width = width or settings.ascii_width
    height = height or settings.ascii_height
    box = bounding_box(sk)
    xmin, ymin, xmax, ymax = box
    grid = [[" "] * width for _ in range(height)]

    def cell(p: Point2) -> Tuple[int, int]:
        col = round((p[0] - xmin) / (xmax - xmin) * (width - 1))
        row = round((ymax - p[1]) / (ymax - ymin) * (height - 1))
        return row, col

    steps = 2 * max(width, height)
    for start, end, direction, weight in segments(sk, box):
        char = _stroke_char(direction, weight)
        for k in range(steps + 1):
            t = Fraction(k, steps)
            row, col = cell((start[0] + t * (end[0] - start[0]), start[1] + t * (end[1] - start[1])))
            if grid[row][col] != "#":
                grid[row][col] = char
    for vertex in sk.vertices:
        row, col = cell(vertex.point)
        grid[row][col] = "o"

    lines = ["".join(row).rstrip() for row in grid]
    lines.append("")
    for vertex in sk.vertices:
        x, y = vertex.point
        lines.append(f"o {labels.get(vertex.point, '')} ({format_rational(x)}, {format_rational(y)})")
    lines.append("- | / . weight 1   # weight 2")
    return "\n".join(lines) + "\n"
