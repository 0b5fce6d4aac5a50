"""The minimal Hausdorff quotient as an open one-dimensional CW complex.

Charts are cut at vertex-candidate parameters into *pieces*.  Pieces that
overlap through some transition belong to the same edge.  Each edge gets
an exact affine coordinate (that of its least piece); its two ends attach
to the chain class of whatever vertex candidates the edge approaches, or
stay open.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from scipy.cluster.hierarchy import DisjointSet

from .errors import InternalError
from .exactnum import (
    IDENTITY,
    Formula,
    Interval,
    IntervalSet,
    apply_formula,
    compose_formula,
    invert_formula,
    is_finite,
    map_interval,
)
from .groupoid import DEFAULT_DEPTH_LIMIT, TransitionGroupoid, saturate
from .presentation import PointRef, Presentation, symmetrize
from .separation import (
    ChainPartition,
    InseparablePair,
    VertexCandidates,
    chain_partition,
    check_graph_like,
    inseparable_pairs,
    vertex_candidates,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Piece:
    """A maximal open sub-interval of a chart free of vertex candidates."""

    chart: str
    span: Interval

    def sort_key(self):
        return (self.chart, self.span.sort_key())

    def __str__(self):
        return f"{self.chart}{self.span}"


@dataclass(frozen=True)
class EdgeEnd:
    vertex: Optional[int]  # index into QuotientGraph.vertices; None for an open end
    limit_points: tuple[PointRef, ...] = ()

    @property
    def is_open(self) -> bool:
        return self.vertex is None


OPEN = EdgeEnd(None, ())


@dataclass(frozen=True)
class TracedEdge:
    pieces: tuple[Piece, ...]
    coords: dict  # Piece -> Formula taking chart parameters to the edge coordinate
    circle: bool = False

    @property
    def span(self) -> Interval | None:
        if self.circle:
            return None
        s = IntervalSet(map_interval(self.coords[pc], pc.span) for pc in self.pieces)
        if len(s) != 1:
            raise InternalError(f"edge {self.pieces[0]} does not cover a single interval: {s}")
        return s.parts[0]


@dataclass(frozen=True)
class Edge:
    id: str
    pieces: tuple[Piece, ...]
    coords: dict = field(compare=False, hash=False)
    end0: EdgeEnd = OPEN
    end1: EdgeEnd = OPEN
    circle: bool = False

    @property
    def ends(self) -> tuple[EdgeEnd, ...]:
        return () if self.circle else (self.end0, self.end1)

    @property
    def span(self) -> Interval | None:
        return TracedEdge(self.pieces, self.coords, self.circle).span

    def piece_at(self, x: PointRef) -> Piece | None:
        for pc in self.pieces:
            if pc.chart == x.chart and pc.span.contains(x.param):
                return pc
        return None


@dataclass(frozen=True)
class Vertex:
    id: str
    members: tuple[PointRef, ...]


@dataclass(frozen=True)
class Component:
    kind: str  # "graph" or "circle"
    charts: tuple[str, ...]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


class QuotientPoint(NamedTuple):
    kind: str  # "vertex", "edge" or "circle"
    id: str
    coord: object = None


@dataclass
class QuotientGraph:
    vertices: list[Vertex]
    edges: list[Edge]
    components: list[Component] = field(default_factory=list)
    presentation: Presentation | None = field(default=None, repr=False)
    groupoid: TransitionGroupoid | None = field(default=None, repr=False)
    pairs: list[InseparablePair] = field(default_factory=list, repr=False)
    candidates: VertexCandidates | None = field(default=None, repr=False)
    partition: ChainPartition | None = field(default=None, repr=False)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges for end in e.ends if end.vertex == v)

    @property
    def open_end_count(self) -> int:
        return sum(1 for e in self.edges for end in e.ends if end.is_open)

    def project(self, x: PointRef) -> QuotientPoint:
        """Image of ``x`` under the quotient map."""
        g = self.groupoid
        if x in self.candidates:
            return QuotientPoint("vertex", self.vertices[self.partition.class_of(g.canonical(x))].id)
        for e in self.edges:
            pc = e.piece_at(x)
            if pc is None:
                continue
            if e.circle:
                return QuotientPoint("circle", e.id, g.canonical(x))
            return QuotientPoint("edge", e.id, apply_formula(e.coords[pc], x.param))
        raise InternalError(f"point {x} is neither a vertex candidate nor in any piece")


def split_pieces(p: Presentation, candidates: VertexCandidates) -> list[Piece]:
    out = []
    for c in p.charts:
        cuts = [c.extent.lo, *candidates.params.get(c.id, ()), c.extent.hi]
        for lo, hi in zip(cuts, cuts[1:]):
            if lo < hi:
                out.append(Piece(c.id, Interval.open(lo, hi)))
    return out


def _piece_adjacency(pieces: list[Piece], g: TransitionGroupoid):
    """Yield ``(P, Q, formula)`` whenever a transition sends part of ``P`` into ``Q``."""
    by_chart: dict[str, list[Piece]] = {}
    for pc in pieces:
        by_chart.setdefault(pc.chart, []).append(pc)
    for pc in pieces:
        for t, m in g.outgoing(pc.chart):
            for comp in m.domain:
                part = pc.span.intersect(comp)
                if part is None:
                    continue
                x = map_interval(m.formula, part).sample()
                targets = [q for q in by_chart.get(t, ()) if q.span.contains(x)]
                if len(targets) != 1:
                    raise InternalError(f"transition image of {pc} at {x} hits {len(targets)} pieces")
                yield pc, targets[0], m.formula


def trace_edges(pieces: list[Piece], g: TransitionGroupoid) -> list[TracedEdge]:
    """Group pieces into edges and develop each edge onto one coordinate line.

    The coordinate of a piece is forced along any chain of overlaps; when two
    chains disagree the edge closes up on itself and is flagged as a circle.
    """
    adj: dict[Piece, list[tuple[Piece, Formula]]] = {pc: [] for pc in pieces}
    ds = DisjointSet(pieces)
    for a, b, f in _piece_adjacency(pieces, g):
        adj[a].append((b, f))
        ds.merge(a, b)
    edges = []
    for cls in ds.subsets():
        members = sorted(cls, key=Piece.sort_key)
        root = members[0]
        coords: dict[Piece, Formula] = {root: IDENTITY}
        circle = False
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, f in adj[a]:
                # coordinate of b: go back through f, then along a's coordinate
                fb = compose_formula(coords[a], invert_formula(f))
                if b not in coords:
                    coords[b] = fb
                    queue.append(b)
                elif coords[b] != fb:
                    circle = True
        edges.append(TracedEdge(tuple(members), coords, circle))
    edges.sort(key=lambda e: e.pieces[0].sort_key())
    return edges


def attach_ends(edge: TracedEdge, p: Presentation, g: TransitionGroupoid,
                candidates: VertexCandidates, partition: ChainPartition) -> tuple[EdgeEnd, EdgeEnd]:
    if edge.circle:
        return OPEN, OPEN
    span = edge.span
    ends = []
    for which, bound in ((0, span.lo), (1, span.hi)):
        limits: set[PointRef] = set()
        if is_finite(bound):
            for pc in edge.pieces:
                f = edge.coords[pc]
                img = map_interval(f, pc.span)
                if (img.lo if which == 0 else img.hi) != bound:
                    continue
                c = apply_formula(invert_formula(f), bound)
                limits.update(_limit_points_at(p, g, candidates, pc.chart, c))
        classes = {partition.class_of(x) for x in limits}
        if len(classes) > 1:
            raise InternalError(
                f"edge end {edge.pieces[0]}#{which} approaches several vertex classes",
                limits=sorted(limits),
            )
        if classes:
            ends.append(EdgeEnd(classes.pop(), tuple(sorted(limits))))
        else:
            ends.append(OPEN)
    return ends[0], ends[1]


def _limit_points_at(p, g, candidates, chart: str, c: Fraction) -> set[PointRef]:
    """Vertex candidates a piece of ``chart`` approaches at its end ``c``."""
    out = set()
    if c in candidates.params.get(chart, ()):
        out.add(g.canonical(PointRef(chart, c)))
    for t, m in g.outgoing(chart):
        for comp in m.domain:
            if c in (comp.lo, comp.hi):
                s = m(c)
                if p.chart(t).extent.contains(s) and s in candidates.params.get(t, ()):
                    out.add(g.canonical(PointRef(t, s)))
    return out


@dataclass
class _Stages:
    presentation: Presentation
    groupoid: TransitionGroupoid
    pairs: list[InseparablePair]
    candidates: VertexCandidates
    partition: ChainPartition


def analyse(p: Presentation, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> _Stages:
    """Run the stages up to the chain partition."""
    p = symmetrize(p)
    g = saturate(p, depth_limit)
    pairs = inseparable_pairs(p, g)
    cands = vertex_candidates(p, g, pairs)
    report = check_graph_like(p, g, cands)
    if not report.graph_like:
        raise InternalError("vertex candidates are not locally finite")
    return _Stages(p, g, pairs, cands, chain_partition(pairs, cands))


def build_quotient(p: Presentation, depth_limit: int = DEFAULT_DEPTH_LIMIT,
                   verify: bool = True) -> QuotientGraph:
    st = analyse(p, depth_limit)
    p, g = st.presentation, st.groupoid
    vertices = [Vertex(f"v{i}", tuple(cls)) for i, cls in enumerate(st.partition.classes)]
    edges = []
    for i, te in enumerate(trace_edges(split_pieces(p, st.candidates), g)):
        e0, e1 = attach_ends(te, p, g, st.candidates, st.partition)
        edges.append(Edge(f"e{i}", te.pieces, te.coords, e0, e1, te.circle))

    comp_of = {}
    chart_groups = g.components()
    for k, charts in enumerate(chart_groups):
        for cid in charts:
            comp_of[cid] = k
    vs = [[] for _ in chart_groups]
    es = [[] for _ in chart_groups]
    for i, v in enumerate(vertices):
        vs[comp_of[v.members[0].chart]].append(i)
    for i, e in enumerate(edges):
        es[comp_of[e.pieces[0].chart]].append(i)
    components = []
    for k, charts in enumerate(chart_groups):
        circle = any(edges[i].circle for i in es[k])
        if circle and (vs[k] or len(es[k]) != 1):
            raise InternalError(f"circle component {charts} has vertices or several edges")
        components.append(Component("circle" if circle else "graph", tuple(charts),
                                    tuple(vs[k]), tuple(es[k])))

    qg = QuotientGraph(vertices, edges, components, p, g, st.pairs, st.candidates, st.partition)
    if verify:
        from .atlas import verify_atlas

        report = verify_atlas(qg, p, g)
        if not report.ok:
            raise InternalError("atlas verification failed: " + "; ".join(report.failures))
    log.info("quotient: %d vertices, %d edges", len(vertices), len(edges))
    return qg
