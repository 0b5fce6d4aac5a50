"""Transition groupoid: all composite partial affine maps between charts."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from scipy.cluster.hierarchy import DisjointSet

from .errors import NotInjective, NotTame
from .exactnum import Formula, IntervalSet, PartialAffine, affine_compose, format_ext
from .presentation import GluingGenerator, PointRef, Presentation, symmetrize

log = logging.getLogger(__name__)

DEFAULT_DEPTH_LIMIT = 16

Pair = tuple[str, str]


def _add_map(table: dict[Pair, dict[Formula, IntervalSet]], source: str, target: str,
             m: PartialAffine) -> bool:
    """Merge ``m`` into ``table``; return True when the table grew.

    Identity self-maps are dropped (they are implicit).  A non-identity
    self-map, or two different formulas on overlapping domains, means some
    chart would be glued to itself at distinct points.
    """
    if m.is_empty:
        return False
    if source == target:
        if m.is_identity:
            return False
        x = m.domain.parts[0].sample()
        raise NotInjective(
            f"chart {source!r} is glued to itself: {format_ext(x)} ~ {format_ext(m(x))}",
            chart=source, map=m,
        )
    slot = table[(source, target)]
    for formula, dom in slot.items():
        if formula == m.formula:
            continue
        clash = dom.intersection(m.domain)
        if clash:
            x = clash.parts[0].sample()
            raise NotInjective(
                f"two transitions {source!r}->{target!r} disagree at {format_ext(x)}",
                chart=source, point=format_ext(x),
            )
    old = slot.get(m.formula)
    if old is None:
        slot[m.formula] = m.domain
        return True
    merged = old.union(m.domain)
    if merged == old:
        return False
    slot[m.formula] = merged
    return True


@dataclass(frozen=True)
class TransitionGroupoid:
    """Saturated transition maps, keyed by ordered chart pair.

    Identity maps on whole charts are implicit and never stored.  Maps of
    one pair have pairwise disjoint domains.
    """

    maps: dict[Pair, tuple[PartialAffine, ...]]
    chart_ids: tuple[str, ...] = ()
    rounds: int = 0
    _outgoing: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        out = defaultdict(list)
        for (s, t), ms in sorted(self.maps.items()):
            for m in ms:
                out[s].append((t, m))
        object.__setattr__(self, "_outgoing", dict(out))

    def outgoing(self, chart: str) -> list[tuple[str, PartialAffine]]:
        return self._outgoing.get(chart, [])

    def between(self, source: str, target: str) -> tuple[PartialAffine, ...]:
        return self.maps.get((source, target), ())

    def __iter__(self) -> Iterator[tuple[str, str, PartialAffine]]:
        for (s, t), ms in sorted(self.maps.items()):
            for m in ms:
                yield s, t, m

    @property
    def map_count(self) -> int:
        return sum(len(ms) for ms in self.maps.values())

    def counts(self) -> dict[Pair, int]:
        return {k: len(v) for k, v in sorted(self.maps.items())}

    def orbit(self, a: PointRef) -> set[PointRef]:
        out = {a}
        for t, m in self.outgoing(a.chart):
            if m.domain.contains(a.param):
                out.add(PointRef(t, m(a.param)))
        return out

    def canonical(self, a: PointRef) -> PointRef:
        """Lexicographically least representative of the point ``a``."""
        return min(self.orbit(a))

    def same_point(self, a: PointRef, b: PointRef) -> bool:
        if a.chart == b.chart:
            return a.param == b.param
        return any(m.domain.contains(a.param) and m(a.param) == b.param
                   for m in self.between(a.chart, b.chart))

    def components(self) -> list[list[str]]:
        """Chart ids grouped into connected components, ordered by least id."""
        ds = DisjointSet(self.chart_ids)
        for s, t, _ in self:
            ds.merge(s, t)
        return sorted(sorted(c) for c in ds.subsets())


def _table_to_maps(table) -> dict[Pair, tuple[PartialAffine, ...]]:
    out = {}
    for pair, slot in table.items():
        ms = [PartialAffine(f[0], f[1], dom) for f, dom in slot.items() if dom]
        if ms:
            out[pair] = tuple(sorted(ms, key=lambda m: m.domain.parts[0].sort_key()))
    return out


def saturate(p: Presentation, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> TransitionGroupoid:
    """Close the gluing generators under composition.

    Each round extends every known map by one generator.  A fixpoint is
    expected within ``depth_limit`` rounds; otherwise :class:`NotTame`.
    """
    if depth_limit < 1:
        raise ValueError("depth_limit must be positive")
    p = symmetrize(p)
    gens: dict[str, list[GluingGenerator]] = defaultdict(list)
    table: dict[Pair, dict[Formula, IntervalSet]] = defaultdict(dict)
    for g in p.gluings:
        gens[g.source].append(g)
        _add_map(table, g.source, g.target, g.map)

    history = [sum(len(s) for s in table.values())]
    rounds = 0
    while True:
        rounds += 1
        if rounds > depth_limit:
            raise NotTame(
                f"no fixpoint within {depth_limit} rounds; map counts per round: {history}",
                history=history,
            )
        current = [(s, t, PartialAffine(f[0], f[1], dom))
                   for (s, t), slot in sorted(table.items()) for f, dom in list(slot.items())]
        grew = False
        for s, t, m in current:
            for g in gens.get(t, ()):
                c = affine_compose(g.map, m)
                if _add_map(table, s, g.target, c):
                    grew = True
        history.append(sum(len(s) for s in table.values()))
        log.debug("saturation round %d: %d maps", rounds, history[-1])
        if not grew:
            break
    return TransitionGroupoid(_table_to_maps(table), tuple(p.chart_ids), rounds)


def point_orbit(g: TransitionGroupoid, a: PointRef) -> set[PointRef]:
    return g.orbit(a)


def as_presentation(p: Presentation, g: TransitionGroupoid) -> Presentation:
    """The charts of ``p`` with every transition of ``g`` as a generator."""
    return Presentation(p.charts, [GluingGenerator(s, t, m) for s, t, m in g])
