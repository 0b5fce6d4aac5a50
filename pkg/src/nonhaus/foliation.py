"""Leaf spaces of the horizontal foliation of the plane minus vertical obstacles."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .exactnum import (
    NEG_INF,
    POS_INF,
    ExtendedRational,
    Interval,
    IntervalSet,
    PartialAffine,
    format_ext,
    to_ext,
    to_rational,
)
from .presentation import Chart, GluingGenerator, Presentation


@dataclass(frozen=True)
class VSegment:
    """The closed set ``{x} x [ylo, yhi]``; an infinite end makes it a ray or a full line."""

    x: Fraction
    ylo: ExtendedRational
    yhi: ExtendedRational

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "ylo", to_ext(self.ylo))
        object.__setattr__(self, "yhi", to_ext(self.yhi))
        if self.ylo > self.yhi:
            raise ParseError(f"segment at x={self.x} has ylo > yhi")
        if self.ylo == POS_INF or self.yhi == NEG_INF:
            raise ParseError(f"segment at x={self.x} is empty")

    @property
    def shadow(self) -> Interval:
        return Interval(self.ylo, self.yhi, self.ylo != NEG_INF, self.yhi != POS_INF)


@dataclass(frozen=True)
class ObstacleSet:
    points: tuple[tuple[Fraction, Fraction], ...] = ()
    vsegments: tuple[VSegment, ...] = field(default=())

    def __post_init__(self):
        pts = tuple((to_rational(x), to_rational(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "vsegments", tuple(self.vsegments))

    def xs(self) -> list[Fraction]:
        return sorted({x for x, _ in self.points} | {s.x for s in self.vsegments})

    def shadow_at(self, x: Fraction) -> IntervalSet:
        """Closed y-shadow of everything standing at abscissa ``x``."""
        parts = [Interval.closed(y, y) for px, y in self.points if px == x]
        parts += [s.shadow for s in self.vsegments if s.x == x]
        return IntervalSet(parts)


def sample_columns(q: ObstacleSet) -> list[Fraction]:
    xs = q.xs()
    if not xs:
        return [Fraction(0)]
    cols = [xs[0] - 1]
    cols += [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    cols.append(xs[-1] + 1)
    return cols


def compile_obstacles(q: ObstacleSet) -> Presentation:
    """One chart (parametrised by height) per sample column between obstacles.

    Consecutive columns are glued by the identity wherever the horizontal
    line between them is not blocked.
    """
    xs = q.xs()
    charts = [Chart(f"c{j + 1}", Interval.real_line()) for j in range(len(xs) + 1)]
    gluings = []
    for j, x in enumerate(xs):
        dom = q.shadow_at(x).complement()
        if dom:
            gluings.append(GluingGenerator(charts[j].id, charts[j + 1].id, PartialAffine.identity(dom)))
    return Presentation(charts, gluings)


def leaf_count(q: ObstacleSet, y: Fraction) -> int:
    """Leaves at height ``y``: one more than the number of blocking columns."""
    return 1 + sum(1 for x in q.xs() if q.shadow_at(x).contains(y))


# -- document format ---------------------------------------------------------

def _num(v: Any, where: str):
    if isinstance(v, float):
        raise ParseError(f"{where}: floats are not exact")
    try:
        return to_ext(v)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def obstacles_from_dict(doc: Any) -> ObstacleSet:
    if not isinstance(doc, dict):
        raise ParseError("obstacle document must be an object")
    unknown = set(doc) - {"points", "vsegments"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    points = []
    for i, pt in enumerate(doc.get("points", [])):
        if not (isinstance(pt, list) and len(pt) == 2):
            raise ParseError(f"points[{i}]: expected [x, y]")
        x, y = _num(pt[0], f"points[{i}]"), _num(pt[1], f"points[{i}]")
        if not all(isinstance(v, Fraction) for v in (x, y)):
            raise ParseError(f"points[{i}]: coordinates must be finite")
        points.append((x, y))
    segs = []
    for i, s in enumerate(doc.get("vsegments", [])):
        where = f"vsegments[{i}]"
        if not isinstance(s, dict) or set(s) - {"x", "ylo", "yhi"} or "x" not in s:
            raise ParseError(f"{where}: expected {{x, ylo, yhi}}")
        x = _num(s["x"], where)
        if not isinstance(x, Fraction):
            raise ParseError(f"{where}: x must be finite")
        segs.append(VSegment(x, _num(s.get("ylo", "-inf"), where), _num(s.get("yhi", "inf"), where)))
    return ObstacleSet(tuple(points), tuple(segs))


def parse_obstacles(text: str) -> ObstacleSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc}") from None
    return obstacles_from_dict(doc)


def obstacles_to_dict(q: ObstacleSet) -> dict:
    return {
        "points": [[format_ext(x), format_ext(y)] for x, y in q.points],
        "vsegments": [
            {"x": format_ext(s.x), "ylo": format_ext(s.ylo), "yhi": format_ext(s.yhi)}
            for s in q.vsegments
        ],
    }


def dump_obstacles(q: ObstacleSet) -> str:
    return json.dumps(obstacles_to_dict(q), indent=2) + "\n"
