"""Inseparable pairs, Hausdorff closures, vertex candidates and chain classes."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.cluster.hierarchy import DisjointSet

from .exactnum import Interval, PartialAffine, is_finite
from .groupoid import TransitionGroupoid
from .presentation import PointRef, Presentation


@dataclass(frozen=True)
class Witness:
    source: str
    target: str
    map: PartialAffine
    component: Interval
    side: str  # "lo" or "hi": which end of the domain component approaches the point


@dataclass(frozen=True)
class InseparablePair:
    """Two distinct points (canonical representatives, ``a < b``)."""

    a: PointRef
    b: PointRef
    witness: Witness = field(compare=False, hash=False)

    def partner(self, x: PointRef) -> PointRef:
        return self.b if x == self.a else self.a


def inseparable_pairs(p: Presentation, g: TransitionGroupoid) -> list[InseparablePair]:
    """Limits of glued points that are not themselves glued.

    For a transition ``m`` and a finite end ``c`` of a domain component, the
    affine extension ``s = m(c)`` is the only possible partner of ``c``.
    """
    found: dict[tuple[PointRef, PointRef], InseparablePair] = {}
    for s, t, m in g:
        src, dst = p.chart(s).extent, p.chart(t).extent
        for comp in m.domain:
            for side, c in (("lo", comp.lo), ("hi", comp.hi)):
                if not is_finite(c) or not src.contains(c):
                    continue
                img = m(c)
                if not dst.contains(img):
                    continue
                x, y = PointRef(s, c), PointRef(t, img)
                if g.same_point(x, y):
                    continue
                a, b = sorted((g.canonical(x), g.canonical(y)))
                if (a, b) not in found:
                    found[(a, b)] = InseparablePair(a, b, Witness(s, t, m, comp, side))
    return [found[k] for k in sorted(found)]


def hausdorff_closure(p: Presentation, g: TransitionGroupoid, x: PointRef,
                      pairs: list[InseparablePair] | None = None) -> set[PointRef]:
    """``x`` together with every point inseparable from it, as canonical representatives."""
    p.check_point(x)
    if pairs is None:
        pairs = inseparable_pairs(p, g)
    cx = g.canonical(x)
    out = {cx}
    for pr in pairs:
        if cx in (pr.a, pr.b):
            out.add(pr.partner(cx))
    return out


def is_branch_point(p, g, x, pairs=None) -> bool:
    return len(hausdorff_closure(p, g, x, pairs)) > 1


@dataclass(frozen=True)
class VertexCandidates:
    """Branch points and boundary points, one canonical representative per point."""

    points: frozenset[PointRef]
    params: dict[str, tuple[Fraction, ...]] = field(compare=False, hash=False)

    def __contains__(self, x: PointRef) -> bool:
        return x.param in self.params.get(x.chart, ())

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))


def vertex_candidates(p: Presentation, g: TransitionGroupoid,
                      pairs: list[InseparablePair]) -> VertexCandidates:
    pts = set()
    for pr in pairs:
        pts.update((pr.a, pr.b))
    for c in p.charts:
        for t in c.boundary_params():
            pts.add(g.canonical(PointRef(c.id, t)))
    params = defaultdict(set)
    for x in pts:
        for y in g.orbit(x):
            params[y.chart].add(y.param)
    return VertexCandidates(frozenset(pts), {k: tuple(sorted(v)) for k, v in params.items()})


@dataclass
class ChainPartition:
    """Chain-inseparability classes of the vertex candidates."""

    classes: list[list[PointRef]]
    index: dict[PointRef, int]

    def class_of(self, x: PointRef) -> int:
        return self.index[x]

    def __len__(self):
        return len(self.classes)


def chain_partition(pairs: list[InseparablePair], candidates: VertexCandidates) -> ChainPartition:
    ds = DisjointSet(sorted(candidates.points))
    for pr in pairs:
        ds.merge(pr.a, pr.b)
    classes = sorted(sorted(s) for s in ds.subsets())
    index = {x: i for i, cls in enumerate(classes) for x in cls}
    return ChainPartition(classes, index)


@dataclass
class GraphLikeReport:
    graph_like: bool
    candidate_count: int
    per_chart: dict[str, int]
    notes: list[str]


def check_graph_like(p: Presentation, g: TransitionGroupoid,
                     candidates: VertexCandidates) -> GraphLikeReport:
    """Confirm local finiteness of the vertex candidates.

    For a finite presentation every chart carries finitely many candidate
    parameters, so they cannot accumulate, and the complement of the
    candidates has finitely many chart pieces, so each of its components has
    a countable base.  The check asserts the first fact and reports counts.
    """
    per_chart = {c.id: len(candidates.params.get(c.id, ())) for c in p.charts}
    notes = [
        "finite presentation: candidate parameters per chart are finite, hence locally finite",
        "edge components are finite unions of chart intervals, hence second countable",
    ]
    ok = all(
        all(is_finite(t) for t in ts) and list(ts) == sorted(set(ts))
        for ts in candidates.params.values()
    )
    return GraphLikeReport(ok, len(candidates), per_chart, notes)
