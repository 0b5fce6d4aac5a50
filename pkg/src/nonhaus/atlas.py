"""Checks that a quotient graph really is an open topological graph, and the
classification of Hausdorff components."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import NotApplicable
from .exactnum import IDENTITY, IntervalSet, compose_formula, invert_formula, map_interval, map_set
from .groupoid import TransitionGroupoid
from .presentation import PointRef, Presentation
from .quotient import QuotientGraph
from .separation import inseparable_pairs


@dataclass
class AtlasReport:
    failures: list[str] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _check(self, name: str, problems: list[str]) -> None:
        self.checked.append(name)
        self.failures.extend(f"{name}: {msg}" for msg in problems)


def _vertex_edge_disjoint(qg: QuotientGraph, g: TransitionGroupoid) -> list[str]:
    problems = []
    for v in qg.vertices:
        for m in v.members:
            for x in g.orbit(m):
                for e in qg.edges:
                    pc = e.piece_at(x)
                    if pc is not None:
                        problems.append(f"vertex {v.id} member {x} lies inside edge {e.id} piece {pc}")
    return problems


def _edges_injective(qg: QuotientGraph, g: TransitionGroupoid) -> list[str]:
    problems = []
    owner = {}
    for e in qg.edges:
        for pc in e.pieces:
            if pc in owner:
                problems.append(f"piece {pc} belongs to edges {owner[pc].id} and {e.id}")
            owner[pc] = e
    # glued points of two pieces must land in one edge at one coordinate
    for e in qg.edges:
        for pc in e.pieces:
            for t, m in g.outgoing(pc.chart):
                for comp in m.domain:
                    part = pc.span.intersect(comp)
                    if part is None:
                        continue
                    x = PointRef(t, map_interval(m.formula, part).sample())
                    other = next((f for f in qg.edges if f.piece_at(x) is not None), None)
                    if other is None or other.id != e.id:
                        problems.append(f"{pc} is glued into a different edge at {x}")
                        continue
                    qc = other.piece_at(x)
                    if not e.circle and compose_formula(e.coords[qc], m.formula) != e.coords[pc]:
                        problems.append(f"edge {e.id}: coordinates of {pc} and {qc} disagree")
    # distinct points of one edge must have distinct coordinates
    for e in qg.edges:
        if e.circle:
            continue
        for i, pc in enumerate(e.pieces):
            for qc in e.pieces[i + 1:]:
                a = map_interval(e.coords[pc], pc.span)
                b = map_interval(e.coords[qc], qc.span)
                overlap = a.intersect(b)
                if overlap is None or overlap.is_singleton:
                    continue
                # overlap pulled back into pc must be glued onto qc
                back = map_set(invert_formula(e.coords[pc]), IntervalSet.of(overlap))
                want = compose_formula(invert_formula(e.coords[qc]), e.coords[pc])
                covered = IntervalSet()
                if pc.chart == qc.chart and want == IDENTITY:
                    covered = IntervalSet.real_line()
                for m in g.between(pc.chart, qc.chart):
                    if m.formula == want:
                        covered = covered.union(m.domain)
                if not back.issubset(covered):
                    problems.append(f"edge {e.id}: {pc} and {qc} overlap in coordinates but are not glued")
    return problems


def _vertices_hit(qg: QuotientGraph, p: Presentation) -> list[str]:
    hit = {end.vertex for e in qg.edges for end in e.ends if not end.is_open}
    problems = []
    for i, v in enumerate(qg.vertices):
        if i in hit:
            continue
        isolated_boundary = all(
            m.param in p.chart(m.chart).boundary_params() for m in v.members
        )
        if not isolated_boundary:
            problems.append(f"vertex {v.id} is attached to no edge end")
    return problems


def _finite_vertices(qg: QuotientGraph) -> list[str]:
    seen = {}
    problems = []
    for v in qg.vertices:
        if not v.members:
            problems.append(f"vertex {v.id} has no members")
        for m in v.members:
            if m in seen:
                problems.append(f"{m} is a member of both {seen[m]} and {v.id}")
            seen[m] = v.id
    return problems


def _hausdorff(qg: QuotientGraph, p: Presentation, g: TransitionGroupoid) -> list[str]:
    cls = {g.canonical(m): v.id for v in qg.vertices for m in v.members}
    problems = []
    for pr in inseparable_pairs(p, g):
        va, vb = cls.get(pr.a), cls.get(pr.b)
        if va is None or vb is None:
            problems.append(f"inseparable pair {pr.a}, {pr.b} is not collapsed into a vertex")
        elif va != vb:
            problems.append(f"inseparable pair {pr.a}, {pr.b} splits across {va} and {vb}")
    for e in qg.edges:
        for end in e.ends:
            if end.is_open:
                continue
            vid = qg.vertices[end.vertex].id
            stray = [x for x in end.limit_points if cls.get(g.canonical(x)) != vid]
            if stray:
                problems.append(f"edge {e.id} end at {vid} has limit points elsewhere: {stray}")
    return problems


def verify_atlas(qg: QuotientGraph, p: Presentation, g: TransitionGroupoid) -> AtlasReport:
    """Verify the characterisation of an atlas of an open topological graph.

    (i) vertex images and edge interiors are disjoint; (ii) edge interiors
    are embedded injectively; (iii) every vertex is reached by an edge end or
    is an isolated boundary vertex; (iv) the vertex set is finite, hence
    closed and strongly discrete; (v) the result is Hausdorff: no inseparable
    pair survives outside a single vertex.
    """
    report = AtlasReport()
    report._check("vertex/edge disjointness", _vertex_edge_disjoint(qg, g))
    report._check("edge injectivity", _edges_injective(qg, g))
    report._check("vertices attached", _vertices_hit(qg, p))
    report._check("finite vertex set", _finite_vertices(qg))
    report._check("hausdorff", _hausdorff(qg, p, g))
    return report


class HausdorffType(enum.Enum):
    CLOSED_INTERVAL = "[0,1]"
    HALF_OPEN = "[0,1)"
    OPEN_INTERVAL = "(0,1)"
    CIRCLE = "S1"


def classify_hausdorff(qg: QuotientGraph, component: int = 0) -> HausdorffType:
    comp = qg.components[component]
    if comp.kind == "circle":
        return HausdorffType.CIRCLE
    if any(len(qg.vertices[v].members) > 1 for v in comp.vertices):
        raise NotApplicable(f"component {component} has branch points")
    n = len(comp.vertices)
    if len(comp.edges) != 1 or n > 2:
        raise NotApplicable(f"component {component} is not a single segment")
    return {0: HausdorffType.OPEN_INTERVAL, 1: HausdorffType.HALF_OPEN,
            2: HausdorffType.CLOSED_INTERVAL}[n]
