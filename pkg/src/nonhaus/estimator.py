"""scikit-learn style front end.

``HausdorffQuotient().fit(presentation)`` runs the whole pipeline;
``transform(points)`` sends points of the manifold to the quotient graph.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .errors import InternalError
from .groupoid import DEFAULT_DEPTH_LIMIT
from .oracle import DEFAULT_DEPTH, oracle_disagreements
from .quotient import QuotientPoint, build_quotient
from .validation import check_point, check_points, check_presentation


class HausdorffQuotient(BaseEstimator):
    """Minimal Hausdorff quotient of a finitely presented 1-manifold.

    Parameters
    ----------
    depth_limit : int
        Saturation rounds allowed before the presentation is declared not tame.
    oracle_check : bool
        Cross-check every candidate pair against the neighbourhood oracle
        during ``fit``; disagreement raises :class:`InternalError`.
    oracle_depth : int
        Refinement depth of that cross-check.

    Attributes
    ----------
    presentation_, groupoid_, pairs_, partition_, graph_
    """

    def __init__(self, depth_limit: int = DEFAULT_DEPTH_LIMIT, oracle_check: bool = False,
                 oracle_depth: int = DEFAULT_DEPTH):
        self.depth_limit = depth_limit
        self.oracle_check = oracle_check
        self.oracle_depth = oracle_depth

    def fit(self, X, y=None):
        qg = build_quotient(check_presentation(X), depth_limit=self.depth_limit)
        self.graph_ = qg
        self.presentation_ = qg.presentation
        self.groupoid_ = qg.groupoid
        self.pairs_ = qg.pairs
        self.partition_ = qg.partition
        self.n_rounds_ = qg.groupoid.rounds
        if self.oracle_check:
            disagreements = oracle_disagreements(qg, self.oracle_depth)
            if disagreements:
                raise InternalError(f"oracle disagrees on {len(disagreements)} pairs",
                                    pairs=disagreements)
        return self

    def transform(self, X) -> list[QuotientPoint]:
        check_is_fitted(self, "graph_")
        return [self.graph_.project(x) for x in check_points(self.presentation_, X)]

    def fit_transform(self, X, y=None, points=()):
        return self.fit(X).transform(points)

    def same_class(self, a, b) -> bool:
        """True when ``a`` and ``b`` are chain inseparable (or equal)."""
        check_is_fitted(self, "graph_")
        p = self.presentation_
        return self.graph_.project(check_point(p, a)) == self.graph_.project(check_point(p, b))

