import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nonhaus.cli import load_presentation  # noqa: E402
from nonhaus.exactnum import Interval, IntervalSet, PartialAffine  # noqa: E402
from nonhaus.foliation import ObstacleSet, VSegment  # noqa: E402
from nonhaus.presentation import Chart, GluingGenerator, Presentation  # noqa: E402

SAMPLES = Path(__file__).resolve().parent.parent / "samples"

# the three obstacle sets of the worked examples
OBSTACLES = {
    "L": ObstacleSet(points=((F(0), F(0)),)),
    "Y": ObstacleSet(vsegments=(VSegment(F(0), F(0), "inf"),)),
    "X": ObstacleSet(points=((F(0), F(1)),),
                     vsegments=(VSegment(F(-1), "-inf", F(0)), VSegment(F(1), F(0), "inf"))),
}


def sample(name: str) -> Presentation:
    return load_presentation(str(SAMPLES / name))


def segment(closed_lo: bool, closed_hi: bool) -> Presentation:
    return Presentation([Chart("A", Interval(F(0), F(1), closed_lo, closed_hi))])


def line_with_doubled_origin() -> Presentation:
    dom = IntervalSet.real_line().difference(IntervalSet.of(Interval.closed(0, 0)))
    return Presentation(
        [Chart("A", Interval.real_line()), Chart("B", Interval.real_line())],
        [GluingGenerator("A", "B", PartialAffine.identity(dom))],
    )


@pytest.fixture
def samples_dir() -> Path:
    return SAMPLES


# -- one PASS/FAIL line per acceptance criterion ------------------------------

_criteria: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n, title = mark.args
    entry = _criteria.setdefault(n, [title, True])
    entry[1] = entry[1] and not rep.failed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
