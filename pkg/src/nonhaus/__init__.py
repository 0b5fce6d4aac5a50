"""Minimal Hausdorff quotients of finitely presented non-Hausdorff 1-manifolds."""

from .errors import (
    InternalError,
    NonHausError,
    NotApplicable,
    NotContinuous,
    NotInjective,
    NotTame,
    ParseError,
)
from .exactnum import NEG_INF, POS_INF, Interval, IntervalSet, PartialAffine
from .presentation import Chart, GluingGenerator, PointRef, Presentation, parse_presentation
from .groupoid import TransitionGroupoid, saturate
from .separation import chain_partition, hausdorff_closure, inseparable_pairs
from .quotient import QuotientGraph, build_quotient
from .atlas import HausdorffType, classify_hausdorff, verify_atlas
from .factor import PiecewiseAffine, universal_factor
from .foliation import ObstacleSet, VSegment, compile_obstacles
from .oracle import insep_semidecide

__version__ = "0.1.0"

__all__ = [
    "NEG_INF", "POS_INF", "Chart", "GluingGenerator", "HausdorffQuotient", "HausdorffType",
    "InternalError", "Interval", "IntervalSet", "NonHausError", "NotApplicable",
    "NotContinuous", "NotInjective", "NotTame", "ObstacleSet", "ParseError", "PartialAffine",
    "PiecewiseAffine", "PointRef", "Presentation", "QuotientGraph", "TransitionGroupoid",
    "VSegment", "build_quotient", "chain_partition", "classify_hausdorff", "compile_obstacles",
    "hausdorff_closure", "insep_semidecide", "inseparable_pairs", "parse_presentation",
    "saturate", "universal_factor", "verify_atlas",
]


def __getattr__(name):
    # the estimator pulls in scikit-learn; load it on first use only
    if name == "HausdorffQuotient":
        from .estimator import HausdorffQuotient

        return HausdorffQuotient
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
