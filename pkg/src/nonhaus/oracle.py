"""Brute-force semi-decision of inseparability by shrinking neighbourhoods.

Independent of the endpoint analysis in :mod:`nonhaus.separation`: it only
pushes basic neighbourhoods through the transitions and intersects them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Interval, IntervalSet
from .groupoid import TransitionGroupoid
from .presentation import PointRef, Presentation

DEFAULT_DEPTH = 12


@dataclass(frozen=True)
class Verdict:
    separated: bool
    k: int

    def __str__(self):
        return f"SEPARATED({self.k})" if self.separated else f"UNRESOLVED({self.k})"


def neighbourhood(p: Presentation, g: TransitionGroupoid, a: PointRef,
                  eps: Fraction) -> dict[str, IntervalSet]:
    """The chart ball of radius ``eps`` around ``a``, seen in every chart."""
    ball = IntervalSet.of(Interval.open(a.param - eps, a.param + eps))
    ball = ball.intersection(IntervalSet.of(p.chart(a.chart).extent))
    out = {a.chart: ball}
    for t, m in g.outgoing(a.chart):
        img = m.restrict(ball).image()
        if img:
            out[t] = out.get(t, IntervalSet()).union(img)
    return out


def insep_semidecide(p: Presentation, g: TransitionGroupoid, a: PointRef, b: PointRef,
                     depth: int = DEFAULT_DEPTH) -> Verdict:
    p.check_point(a)
    p.check_point(b)
    if g.same_point(a, b):
        raise ValueError(f"{a} and {b} are the same point")
    for k in range(1, depth + 1):
        eps = Fraction(1, 2 ** k)
        na, nb = neighbourhood(p, g, a, eps), neighbourhood(p, g, b, eps)
        if not any(na[c].intersection(nb[c]) for c in na.keys() & nb.keys()):
            return Verdict(True, k)
    return Verdict(False, depth)


def oracle_disagreements(qg, depth: int = DEFAULT_DEPTH) -> list[tuple]:
    """Candidate pairs on which the oracle and the endpoint analysis differ."""
    p, g = qg.presentation, qg.groupoid
    insep = {(pr.a, pr.b) for pr in qg.pairs}
    cands = sorted(qg.candidates.points)
    bad = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            verdict = insep_semidecide(p, g, a, b, depth)
            if verdict.separated == ((a, b) in insep):
                bad.append((a, b, verdict))
    return bad
