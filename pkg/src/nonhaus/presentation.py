"""Input model of a non-Hausdorff 1-manifold: charts glued by partial affine maps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Mapping

from .errors import ParseError
from .exactnum import (
    Interval,
    IntervalSet,
    PartialAffine,
    affine_invert,
    format_ext,
    to_ext,
    to_rational,
)

if TYPE_CHECKING:
    from .groupoid import TransitionGroupoid


@dataclass(frozen=True)
class Chart:
    """A maximal coordinate patch.  Closed ends of ``extent`` are boundary points."""

    id: str
    extent: Interval

    def __post_init__(self):
        if self.extent.is_singleton:
            raise ParseError(f"chart {self.id!r} has a singleton extent")

    @property
    def interior(self) -> IntervalSet:
        return IntervalSet.of(self.extent.interior())

    def boundary_params(self) -> list[Fraction]:
        out = []
        if self.extent.lo_closed:
            out.append(self.extent.lo)
        if self.extent.hi_closed:
            out.append(self.extent.hi)
        return out


@dataclass(frozen=True)
class GluingGenerator:
    source: str
    target: str
    map: PartialAffine

    def inverse(self) -> "GluingGenerator":
        return GluingGenerator(self.target, self.source, affine_invert(self.map))


@dataclass(frozen=True, order=True)
class PointRef:
    """A representative ``(chart, param)`` of a point of the manifold."""

    chart: str
    param: Fraction

    def __post_init__(self):
        object.__setattr__(self, "param", to_rational(self.param))

    def __str__(self):
        return f"{self.chart}:{format_ext(self.param)}"

    @classmethod
    def parse(cls, text: str) -> "PointRef":
        chart, sep, param = text.rpartition(":")
        if not sep or not chart:
            raise ParseError(f"point must look like CHART:PARAM, got {text!r}")
        try:
            return cls(chart, to_rational(param))
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc)) from exc

    def to_dict(self) -> dict:
        return {"chart": self.chart, "param": format_ext(self.param)}


@dataclass(frozen=True)
class Presentation:
    charts: tuple[Chart, ...] = ()
    gluings: tuple[GluingGenerator, ...] = ()
    _by_id: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "charts", tuple(self.charts))
        object.__setattr__(self, "gluings", tuple(self.gluings))
        by_id = {}
        for c in self.charts:
            if c.id in by_id:
                raise ParseError(f"duplicate chart id {c.id!r}")
            by_id[c.id] = c
        object.__setattr__(self, "_by_id", by_id)
        for g in self.gluings:
            _check_gluing(g, by_id)

    def chart(self, chart_id: str) -> Chart:
        try:
            return self._by_id[chart_id]
        except KeyError:
            raise ParseError(f"unknown chart id {chart_id!r}") from None

    @property
    def chart_ids(self) -> list[str]:
        return [c.id for c in self.charts]

    def check_point(self, a: PointRef) -> PointRef:
        if not self.chart(a.chart).extent.contains(a.param):
            raise ValueError(f"{a} lies outside the extent of chart {a.chart!r}")
        return a


def _check_gluing(g: GluingGenerator, by_id: Mapping[str, Chart]) -> None:
    for cid in (g.source, g.target):
        if cid not in by_id:
            raise ParseError(f"gluing references unknown chart id {cid!r}")
    dom = g.map.domain
    if not dom.is_open:
        raise ParseError(f"gluing domain must be open, got {dom}")
    if not dom.issubset(by_id[g.source].interior):
        raise ParseError(f"gluing domain {dom} is not inside the interior of chart {g.source!r}")
    if not g.map.image().issubset(by_id[g.target].interior):
        raise ParseError(
            f"gluing image {g.map.image()} is not inside the interior of chart {g.target!r}"
        )


def symmetrize(p: Presentation) -> Presentation:
    """Add the inverse of every generator that lacks one.  Idempotent."""
    gluings = list(p.gluings)
    seen = set(gluings)
    for g in p.gluings:
        inv = g.inverse()
        if inv not in seen:
            seen.add(inv)
            gluings.append(inv)
    if len(gluings) == len(p.gluings):
        return p
    return Presentation(p.charts, gluings)


def same_point(p: Presentation, g: "TransitionGroupoid", a: PointRef, b: PointRef) -> bool:
    p.check_point(a)
    p.check_point(b)
    return g.same_point(a, b)


# -- document format ---------------------------------------------------------

_CHART_KEYS = {"id", "lo", "hi", "lo_closed", "hi_closed"}
_GLUING_KEYS = {"from", "to", "slope", "offset", "domain"}
_TOP_KEYS = {"charts", "gluings"}


def _num(value: Any, where: str):
    if isinstance(value, float):
        raise ParseError(f"{where}: floats are not exact, write {value!r} as a string 'p/q'")
    try:
        return to_ext(value)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def _flag(value: Any, where: str) -> bool:
    if not isinstance(value, bool):
        raise ParseError(f"{where}: expected true/false, got {value!r}")
    return value


def _keys(obj: Any, allowed: set, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)}")
    return obj


def presentation_from_dict(doc: Any) -> Presentation:
    doc = _keys(doc, _TOP_KEYS, "document")
    charts = []
    for i, c in enumerate(doc.get("charts", [])):
        where = f"charts[{i}]"
        c = _keys(c, _CHART_KEYS, where)
        if "id" not in c:
            raise ParseError(f"{where}: missing id")
        try:
            extent = Interval(
                _num(c.get("lo", "-inf"), where + ".lo"),
                _num(c.get("hi", "inf"), where + ".hi"),
                _flag(c.get("lo_closed", False), where + ".lo_closed"),
                _flag(c.get("hi_closed", False), where + ".hi_closed"),
            )
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
        charts.append(Chart(str(c["id"]), extent))
    gluings = []
    for i, g in enumerate(doc.get("gluings", [])):
        where = f"gluings[{i}]"
        g = _keys(g, _GLUING_KEYS, where)
        for k in ("from", "to"):
            if k not in g:
                raise ParseError(f"{where}: missing {k!r}")
        parts = []
        for j, iv in enumerate(g.get("domain", [])):
            if not (isinstance(iv, list) and len(iv) == 2):
                raise ParseError(f"{where}.domain[{j}]: expected [lo, hi]")
            try:
                parts.append(Interval.open(_num(iv[0], where), _num(iv[1], where)))
            except ValueError as exc:
                raise ParseError(f"{where}.domain[{j}]: {exc}") from None
        slope = _num(g.get("slope", "1"), where + ".slope")
        offset = _num(g.get("offset", "0"), where + ".offset")
        try:
            amap = PartialAffine(slope, offset, IntervalSet(parts))
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
        gluings.append(GluingGenerator(str(g["from"]), str(g["to"]), amap))
    return Presentation(charts, gluings)


def parse_presentation(text: str) -> Presentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc}") from None
    return presentation_from_dict(doc)


def presentation_to_dict(p: Presentation) -> dict:
    charts = [
        {
            "id": c.id,
            "lo": format_ext(c.extent.lo),
            "hi": format_ext(c.extent.hi),
            "lo_closed": c.extent.lo_closed,
            "hi_closed": c.extent.hi_closed,
        }
        for c in p.charts
    ]
    gluings = [
        {
            "from": g.source,
            "to": g.target,
            "slope": format_ext(g.map.slope),
            "offset": format_ext(g.map.offset),
            "domain": [[format_ext(iv.lo), format_ext(iv.hi)] for iv in g.map.domain],
        }
        for g in p.gluings
    ]
    return {"charts": charts, "gluings": gluings}


def dump_presentation(p: Presentation) -> str:
    return json.dumps(presentation_to_dict(p), indent=2) + "\n"
