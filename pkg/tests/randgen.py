"""Random tame presentations and random points for property tests.

Every chart carries an affine placement on one global line and every gluing
is the transition between two placements, restricted to a random open part
of their overlap.  Composites therefore never glue a chart to itself at
distinct points, so each generated presentation is valid and tame.
"""

from __future__ import annotations

import random
from fractions import Fraction as F

from nonhaus.exactnum import (
    NEG_INF,
    POS_INF,
    Interval,
    IntervalSet,
    PartialAffine,
    compose_formula,
    invert_formula,
    is_finite,
    map_set,
)
from nonhaus.foliation import ObstacleSet, VSegment, compile_obstacles
from nonhaus.presentation import Chart, GluingGenerator, PointRef, Presentation

SLOPES = [F(1), F(-1), F(2), F(1, 2), F(-2)]


def random_chart(rng: random.Random, cid: str) -> Chart:
    lo = NEG_INF if rng.random() < 0.3 else F(rng.randint(-6, 4), 2)
    if rng.random() < 0.3:
        hi = POS_INF
    else:
        hi = (lo if is_finite(lo) else F(rng.randint(-6, 4), 2)) + F(rng.randint(1, 8), 2)
    lo_closed = is_finite(lo) and rng.random() < 0.3
    hi_closed = is_finite(hi) and rng.random() < 0.3
    return Chart(cid, Interval(lo, hi, lo_closed, hi_closed))


def _random_open_subset(rng: random.Random, s: IntervalSet) -> IntervalSet:
    """Cut ``s`` at a few half-integers and keep a random nonempty subset of the pieces."""
    cuts = IntervalSet([Interval.closed(c, c) for c in
                        rng.sample([F(k, 2) for k in range(-8, 9)], rng.randint(0, 3))])
    parts = list(s.difference(cuts).parts)
    keep = [pt for pt in parts if rng.random() < 0.7] or parts[:1]
    return IntervalSet(keep)


def random_presentation(rng: random.Random, max_charts: int = 6) -> Presentation:
    n = rng.randint(1, max_charts)
    charts = [random_chart(rng, f"k{i}") for i in range(n)]
    place = {c.id: (rng.choice(SLOPES), F(rng.randint(-2, 2))) for c in charts}
    glob = {c.id: map_set(place[c.id], c.interior) for c in charts}
    gluings = []
    for _ in range(rng.randint(n - 1 if n > 1 else 0, n + 2)):
        if n < 2:
            break
        a, b = rng.sample(charts, 2)
        overlap = glob[a.id].intersection(glob[b.id])
        if not overlap:
            continue
        sub = _random_open_subset(rng, overlap)
        if not sub:
            continue
        dom = map_set(invert_formula(place[a.id]), sub)
        f = compose_formula(invert_formula(place[b.id]), place[a.id])
        gluings.append(GluingGenerator(a.id, b.id, PartialAffine(f[0], f[1], dom)))
    return Presentation(charts, gluings)


def random_circle_presentation(rng: random.Random, max_charts: int = 6,
                               length: int = 4) -> Presentation:
    """Charts of length < ``length`` placed on the circle of that length by translations."""
    n = rng.randint(1, max_charts)
    charts = []
    for i in range(n):
        lo = F(rng.randint(-4, 4), 2)
        hi = lo + F(rng.randint(1, 2 * length - 2), 2)
        charts.append(Chart(f"k{i}", Interval(lo, hi, rng.random() < 0.2, rng.random() < 0.2)))
    shift = {c.id: F(rng.randint(0, 2 * length - 1), 2) for c in charts}
    gluings = []
    for a in charts:
        for b in charts:
            if a.id >= b.id or rng.random() < 0.3:
                continue
            for turns in range(-3, 4):
                off = shift[a.id] - shift[b.id] + length * turns
                dom = map_set((F(1), -off), b.interior).intersection(a.interior)
                if not dom:
                    continue
                sub = _random_open_subset(rng, dom)
                if sub:
                    gluings.append(GluingGenerator(a.id, b.id, PartialAffine(F(1), off, sub)))
    return Presentation(charts, gluings)


def random_obstacles(rng: random.Random, max_columns: int = 5) -> ObstacleSet:
    xs = rng.sample(range(-4, 5), rng.randint(1, max_columns))
    points, segs = [], []
    for x in xs:
        for _ in range(rng.randint(1, 2)):
            r = rng.random()
            if r < 0.4:
                points.append((F(x), F(rng.randint(-3, 3))))
            else:
                lo = NEG_INF if rng.random() < 0.3 else F(rng.randint(-3, 2))
                hi = POS_INF if rng.random() < 0.3 else (F(rng.randint(-2, 3)) if lo == NEG_INF
                                                        else lo + rng.randint(0, 3))
                segs.append(VSegment(F(x), lo, hi))
    return ObstacleSet(tuple(points), tuple(segs))


def corpus(seed: int, count: int) -> list[Presentation]:
    """Charts placed on a line, charts placed on a circle, and compiled obstacle sets, in turn."""
    rng = random.Random(seed)
    makers = [random_presentation, random_circle_presentation,
              lambda r: compile_obstacles(random_obstacles(r))]
    return [makers[i % 3](rng) for i in range(count)]


def random_point(rng: random.Random, p: Presentation, candidates=None) -> PointRef:
    c = rng.choice(p.charts)
    ext = c.extent
    pool = []
    if candidates is not None:
        pool += list(candidates.params.get(c.id, ()))
    pool += [F(k, 4) for k in range(-16, 17) if ext.contains(F(k, 4))]
    if not pool:
        pool = [ext.sample()]
    return PointRef(c.id, rng.choice(pool))
