"""Factoring a continuous map on the manifold through the quotient graph."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InternalError, NotContinuous
from .exactnum import (
    Formula,
    Interval,
    apply_formula,
    compose_formula,
    format_ext,
    invert_formula,
    is_finite,
    map_interval,
    to_rational,
)
from .groupoid import TransitionGroupoid
from .presentation import PointRef, Presentation
from .quotient import QuotientGraph, QuotientPoint


@dataclass(frozen=True)
class PiecewiseAffine:
    """Real function with rational breakpoints ``b_1 < ... < b_n``.

    ``pieces[i]`` applies on ``(b_i, b_{i+1})`` (with ``b_0 = -inf`` and
    ``b_{n+1} = +inf``).  At a breakpoint the right-hand piece is used, so a
    jump there is visible to :meth:`jumps`.
    """

    breaks: tuple[Fraction, ...]
    pieces: tuple[Formula, ...]

    def __post_init__(self):
        breaks = tuple(to_rational(b) for b in self.breaks)
        pieces = tuple((to_rational(s), to_rational(o)) for s, o in self.pieces)
        if len(pieces) != len(breaks) + 1:
            raise ValueError("need one more piece than breakpoints")
        if list(breaks) != sorted(set(breaks)):
            raise ValueError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def affine(cls, slope=1, offset=0) -> "PiecewiseAffine":
        return cls((), ((slope, offset),))

    @classmethod
    def from_knots(cls, knots: Sequence[tuple], left_slope=0, right_slope=0) -> "PiecewiseAffine":
        """Continuous interpolant of ``(t, value)`` knots, extended by the given end slopes."""
        knots = sorted((to_rational(t), to_rational(v)) for t, v in knots)
        if not knots:
            return cls.affine(0, 0)
        left_slope, right_slope = to_rational(left_slope), to_rational(right_slope)
        t0, v0 = knots[0]
        pieces = [(left_slope, v0 - left_slope * t0)]
        for (a, va), (b, vb) in zip(knots, knots[1:]):
            s = (vb - va) / (b - a)
            pieces.append((s, va - s * a))
        tn, vn = knots[-1]
        pieces.append((right_slope, vn - right_slope * tn))
        return cls(tuple(t for t, _ in knots), tuple(pieces))

    def piece_index(self, x: Fraction) -> int:
        return bisect.bisect_right(self.breaks, x)

    def __call__(self, x) -> Fraction:
        return apply_formula(self.pieces[self.piece_index(to_rational(x))], to_rational(x))

    def left_limit(self, x: Fraction) -> Fraction:
        return apply_formula(self.pieces[bisect.bisect_left(self.breaks, x)], x)

    def jumps(self) -> list[Fraction]:
        return [b for b in self.breaks if self.left_limit(b) != self(b)]

    def shifted(self, delta) -> "PiecewiseAffine":
        d = to_rational(delta)
        return PiecewiseAffine(self.breaks, tuple((s, o + d) for s, o in self.pieces))

    def pullback(self, f: Formula) -> "PiecewiseAffine":
        """``self o f`` for an affine ``f``."""
        inv = invert_formula(f)
        pts = [apply_formula(inv, b) for b in self.breaks]
        pieces = [compose_formula(pc, f) for pc in self.pieces]
        if f[0] < 0:
            pts, pieces = pts[::-1], pieces[::-1]
        return PiecewiseAffine(tuple(pts), tuple(pieces))


TestMap = Mapping[str, PiecewiseAffine]


def _probe_points(lo, hi, cuts: list[Fraction]) -> list[Fraction]:
    """Points of the open interval ``(lo, hi)`` that pin down two affine
    functions agreeing piecewise between ``cuts``: every cut, and two points
    strictly inside every gap."""
    inner = sorted({c for c in cuts if lo < c < hi})
    bounds = [lo, *inner, hi]
    out = list(inner)
    for a, b in zip(bounds, bounds[1:]):
        if is_finite(a) and is_finite(b):
            out += [a + (b - a) / 3, a + 2 * (b - a) / 3]
        elif is_finite(a):
            out += [a + 1, a + 2]
        elif is_finite(b):
            out += [b - 1, b - 2]
        else:
            out += [Fraction(0), Fraction(1)]
    return sorted(out)


def check_continuity(p: Presentation, g: TransitionGroupoid, testmap: TestMap) -> None:
    """Raise :class:`NotContinuous` unless ``testmap`` is a continuous map on the manifold."""
    for c in p.charts:
        if c.id not in testmap:
            raise NotContinuous(f"test map is undefined on chart {c.id!r}")
        f = testmap[c.id]
        for b in f.jumps():
            if c.extent.contains(b):
                raise NotContinuous(f"test map jumps at {c.id}:{format_ext(b)}",
                                    witness=PointRef(c.id, b))
    for s, t, m in g:
        fs, ft = testmap[s], testmap[t]
        cuts = list(fs.breaks) + [apply_formula(invert_formula(m.formula), b) for b in ft.breaks]
        for comp in m.domain:
            for x in _probe_points(comp.lo, comp.hi, cuts):
                if fs(x) != ft(m(x)):
                    w = PointRef(s, x)
                    raise NotContinuous(
                        f"test map disagrees on glued points {w} and {t}:{format_ext(m(x))}: "
                        f"{format_ext(fs(x))} != {format_ext(ft(m(x)))}",
                        witness=w,
                    )


@dataclass
class FactoredMap:
    """The induced map on the quotient graph."""

    vertex_values: dict[str, Fraction]
    edge_maps: dict[str, list[tuple[Interval, PiecewiseAffine]]]
    testmap: TestMap

    def __call__(self, q: QuotientPoint) -> Fraction:
        if q.kind == "vertex":
            return self.vertex_values[q.id]
        if q.kind == "circle":
            x: PointRef = q.coord
            return self.testmap[x.chart](x.param)
        for span, f in self.edge_maps[q.id]:
            if span.contains(q.coord):
                return f(q.coord)
        raise KeyError(q)


def universal_factor(p: Presentation, g: TransitionGroupoid, qg: QuotientGraph,
                     testmap: TestMap) -> FactoredMap:
    """Factor ``testmap`` through the quotient map.

    The map must agree on glued points (and be continuous on each chart);
    then it is automatically constant on every chain class, which is
    asserted, and the induced map is determined pointwise.
    """
    check_continuity(p, g, testmap)
    vertex_values = {}
    for v in qg.vertices:
        vals = {testmap[m.chart](m.param) for m in v.members}
        if len(vals) != 1:
            raise InternalError(f"continuous test map takes several values on vertex {v.id}: {vals}")
        vertex_values[v.id] = vals.pop()
    edge_maps = {}
    for e in qg.edges:
        if e.circle:
            continue
        edge_maps[e.id] = [
            (map_interval(e.coords[pc], pc.span), testmap[pc.chart].pullback(invert_formula(e.coords[pc])))
            for pc in e.pieces
        ]
    return FactoredMap(vertex_values, edge_maps, testmap)
