import json
from fractions import Fraction as F

import pytest

from conftest import SAMPLES, line_with_doubled_origin
from nonhaus.errors import ParseError
from nonhaus.exactnum import Interval, IntervalSet, PartialAffine
from nonhaus.groupoid import saturate
from nonhaus.presentation import (
    Chart,
    GluingGenerator,
    PointRef,
    Presentation,
    dump_presentation,
    parse_presentation,
    presentation_to_dict,
    same_point,
    symmetrize,
)


def doc(**over):
    base = {
        "charts": [{"id": "A"}, {"id": "B"}],
        "gluings": [{"from": "A", "to": "B", "slope": "1", "offset": "0",
                     "domain": [["-inf", "0"], ["0", "inf"]]}],
    }
    base.update(over)
    return json.dumps(base)


def test_parse_doubled_origin():
    p = parse_presentation((SAMPLES / "L.mfd").read_text())
    assert p.chart_ids == ["A", "B"]
    assert len(p.gluings) == 1
    assert p.chart("A").extent == Interval.real_line()


def test_empty_presentation():
    p = parse_presentation("{}")
    assert p.charts == () and p.gluings == ()


@pytest.mark.parametrize("text,needle", [
    ("not json", "not a JSON document"),
    (doc(extra=1), "unknown keys"),
    (doc(charts=[{"id": "A"}, {"id": "A"}]), "duplicate chart id"),
    (doc(gluings=[{"from": "A", "to": "C", "domain": [["0", "1"]]}]), "unknown chart id"),
    (doc(gluings=[{"from": "A", "to": "B", "slope": 0.5, "domain": [["0", "1"]]}]), "floats"),
    (doc(gluings=[{"from": "A", "to": "B", "slope": "0", "domain": [["0", "1"]]}]), "slope"),
    (doc(charts=[{"id": "A", "lo": "1", "hi": "0"}, {"id": "B"}]), "charts[0]"),
])
def test_parse_rejects(text, needle):
    with pytest.raises(ParseError, match=needle.replace("[", r"\[")):
        parse_presentation(text)


def test_gluing_domain_must_be_open():
    a = Chart("A", Interval.real_line())
    dom = IntervalSet.of(Interval.closed(0, 1))
    with pytest.raises(ParseError, match="gluing domain must be open"):
        Presentation([a, Chart("B", Interval.real_line())],
                     [GluingGenerator("A", "B", PartialAffine(1, 0, dom))])


def test_gluing_must_land_in_interior():
    a = Chart("A", Interval(F(0), F(1), True, True))
    b = Chart("B", Interval(F(0), F(1), True, True))
    dom = IntervalSet.of(Interval.open(0, 1))
    with pytest.raises(ParseError, match="interior of chart 'B'"):
        Presentation([a, b], [GluingGenerator("A", "B", PartialAffine(1, F(1, 2), dom))])


def test_symmetrize_adds_inverses_once():
    p = line_with_doubled_origin()
    s = symmetrize(p)
    assert len(s.gluings) == 2
    assert s.gluings[1] == p.gluings[0].inverse()
    assert symmetrize(s) is s


def test_same_point_on_doubled_origin():
    p = line_with_doubled_origin()
    g = saturate(p)
    assert same_point(p, g, PointRef("A", F(1)), PointRef("B", F(1)))
    assert not same_point(p, g, PointRef("A", F(0)), PointRef("B", F(0)))
    assert not same_point(p, g, PointRef("A", F(1)), PointRef("B", F(2)))
    with pytest.raises(ParseError):
        same_point(p, g, PointRef("A", F(1)), PointRef("Z", F(1)))
    with pytest.raises(ValueError):
        same_point(p, g, PointRef("A", F(1)), PointRef("B", "inf"))


def test_point_ref_parse():
    assert PointRef.parse("c1:-1/2") == PointRef("c1", F(-1, 2))
    with pytest.raises(ParseError):
        PointRef.parse("c1")


@pytest.mark.parametrize("name", sorted(f.name for f in SAMPLES.glob("*.mfd")))
def test_round_trip(name):
    p = parse_presentation((SAMPLES / name).read_text())
    q = parse_presentation(dump_presentation(p))
    assert presentation_to_dict(q) == presentation_to_dict(p)
    assert q == p
