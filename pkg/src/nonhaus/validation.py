"""Input coercion helpers shared by the estimator and the CLI."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterable

from .errors import ParseError
from .exactnum import to_rational
from .presentation import PointRef, Presentation, parse_presentation, presentation_from_dict


def check_presentation(X) -> Presentation:
    """Accept a Presentation, a parsed document, JSON text or a path to a ``.mfd`` file."""
    if isinstance(X, Presentation):
        return X
    if isinstance(X, dict):
        return presentation_from_dict(X)
    if isinstance(X, Path) or (isinstance(X, str) and X.endswith(".mfd") and os.path.exists(X)):
        return parse_presentation(Path(X).read_text(encoding="utf-8"))
    if isinstance(X, str):
        return parse_presentation(X)
    raise TypeError(f"cannot interpret {type(X).__name__} as a presentation")


def check_point(p: Presentation, x) -> PointRef:
    if isinstance(x, str):
        x = PointRef.parse(x)
    elif not isinstance(x, PointRef):
        try:
            chart, param = x
        except (TypeError, ValueError):
            raise ParseError(f"expected a (chart, param) pair, got {x!r}") from None
        x = PointRef(str(chart), to_rational(param))
    try:
        return p.check_point(x)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def check_points(p: Presentation, points: Iterable) -> list[PointRef]:
    return [check_point(p, x) for x in points]
