from fractions import Fraction as F

from conftest import line_with_doubled_origin, sample, segment
from nonhaus.groupoid import saturate
from nonhaus.presentation import PointRef
from nonhaus.separation import (
    chain_partition,
    check_graph_like,
    hausdorff_closure,
    inseparable_pairs,
    is_branch_point,
    vertex_candidates,
)


def stages(p):
    g = saturate(p)
    pairs = inseparable_pairs(p, g)
    cands = vertex_candidates(p, g, pairs)
    return g, pairs, cands, chain_partition(pairs, cands)


def pt(text):
    return PointRef.parse(text)


def test_doubled_origin_pair():
    p = line_with_doubled_origin()
    g, pairs, cands, part = stages(p)
    assert [(pr.a, pr.b) for pr in pairs] == [(pt("A:0"), pt("B:0"))]
    w = pairs[0].witness
    assert w.component.hi == 0 or w.component.lo == 0
    assert hausdorff_closure(p, g, pt("A:0")) == {pt("A:0"), pt("B:0")}
    assert hausdorff_closure(p, g, pt("A:1")) == {pt("A:1")}
    assert is_branch_point(p, g, pt("B:0"))
    assert not is_branch_point(p, g, pt("B:1/2"))


def test_three_column_pairs_exclude_a_c():
    p = sample("X.obs")
    g, pairs, cands, part = stages(p)
    got = {(pr.a, pr.b) for pr in pairs}
    assert got == {(pt("c1:0"), pt("c2:0")), (pt("c1:1"), pt("c3:1")), (pt("c2:0"), pt("c4:0"))}
    assert (pt("c1:0"), pt("c4:0")) not in got


def test_three_column_closure_and_classes():
    p = sample("X.obs")
    g, pairs, cands, part = stages(p)
    # c2:0 sees both neighbours, c1:0 only one of them
    assert hausdorff_closure(p, g, pt("c2:0"), pairs) == {pt("c1:0"), pt("c2:0"), pt("c4:0")}
    assert hausdorff_closure(p, g, pt("c1:0"), pairs) == {pt("c1:0"), pt("c2:0")}
    sizes = sorted(len(c) for c in part.classes)
    assert sizes == [2, 3]
    assert part.class_of(pt("c1:0")) == part.class_of(pt("c4:0"))
    assert part.class_of(pt("c1:0")) != part.class_of(pt("c3:1"))


def test_closed_chart_end_is_singleton_class():
    p = segment(True, False)
    g, pairs, cands, part = stages(p)
    assert pairs == []
    assert part.classes == [[pt("A:0")]]


def test_open_segment_has_no_candidates():
    g, pairs, cands, part = stages(segment(False, False))
    assert len(cands) == 0 and len(part) == 0


def test_graph_like_counts():
    p = sample("X.obs")
    g, pairs, cands, _ = stages(p)
    rep = check_graph_like(p, g, cands)
    assert rep.graph_like and rep.candidate_count == 5
    p = line_with_doubled_origin()
    g, pairs, cands, _ = stages(p)
    rep = check_graph_like(p, g, cands)
    assert rep.graph_like and rep.candidate_count == 2
    assert rep.per_chart == {"A": 1, "B": 1}


def test_pairs_are_canonical_and_symmetric():
    for name in ("X.obs", "Y.obs", "circle.mfd"):
        p = sample(name)
        g, pairs, _, _ = stages(p)
        for pr in pairs:
            assert pr.a < pr.b
            assert g.canonical(pr.a) == pr.a and g.canonical(pr.b) == pr.b
            assert pr.a in hausdorff_closure(p, g, pr.b, pairs)
            assert pr.b in hausdorff_closure(p, g, pr.a, pairs)
            assert pr.partner(pr.a) == pr.b


def test_circle_has_no_pairs():
    g, pairs, cands, _ = stages(sample("circle.mfd"))
    assert pairs == [] and len(cands) == 0


def test_half_open_overlap_end():
    # B glued onto the right half of A: the end of the overlap is a limit in A only
    from nonhaus.exactnum import Interval, IntervalSet, PartialAffine
    from nonhaus.presentation import Chart, GluingGenerator, Presentation
    p = Presentation([Chart("A", Interval.open(0, 2)), Chart("B", Interval.open(1, 3))],
                     [GluingGenerator("A", "B", PartialAffine.identity(
                         IntervalSet.of(Interval.open(1, 2))))])
    g, pairs, cands, _ = stages(p)
    assert pairs == []
    assert F(1) not in cands.params.get("A", ())
