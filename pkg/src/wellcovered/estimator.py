"""scikit-learn style front end for the classification pipeline."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .circulant import ConnectionSet, build_circulant
from .classify import ClassificationRecord, classify
from .decomp import DEFAULT_BUDGET
from .validation import check_field, check_positive_int, check_specs

FEATURES = ("n", "alpha", "omega", "connected", "well_covered", "buchsbaum",
            "cohen_macaulay", "shellable", "vertex_decomposable", "one_well_covered", "cis")


def _run(args):
    spec, field, budget = args
    return classify(build_circulant(spec), field, budget)


class CirculantComplexClassifier(TransformerMixin, BaseEstimator):
    """Label circulant graphs by the structure of their independence complexes.

    Parameters
    ----------
    field : int or str, default=0
        Homology coefficients: 0 / "QQ" for the rationals, or a prime p.
    budget : int
        Node budget for the shelling search.
    n_jobs : int, default=1
        Worker processes used by :meth:`fit`.

    Attributes
    ----------
    records_ : list of ClassificationRecord
        One record per graph passed to :meth:`fit`, in input order.
    specs_ : list of ConnectionSet
    """

    def __init__(self, field=0, budget=DEFAULT_BUDGET, n_jobs=1):
        self.field = field
        self.budget = budget
        self.n_jobs = n_jobs

    def _classify_all(self, specs: list[ConnectionSet]) -> list[ClassificationRecord]:
        field = check_field(self.field)
        budget = check_positive_int(self.budget, "budget")
        jobs = check_positive_int(self.n_jobs, "n_jobs")
        cache = getattr(self, "_memo", {})
        todo = [s for s in dict.fromkeys(specs) if (s, field) not in cache]
        work = [(s, field, budget) for s in todo]
        if jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run, work))
        else:
            results = [_run(w) for w in work]
        cache.update({(s, field): r for s, r in zip(todo, results)})
        self._memo = cache
        return [cache[(s, field)] for s in specs]

    def fit(self, X, y=None):
        """Classify every graph in X (strings ``"n:a1,..."``, ``(n, S)`` pairs or ConnectionSets)."""
        self._memo = {}
        self.specs_ = check_specs(X)
        self.records_ = self._classify_all(self.specs_)
        self.n_features_out_ = len(FEATURES)
        return self

    def records(self, X) -> list[ClassificationRecord]:
        check_is_fitted(self, "records_")
        return self._classify_all(check_specs(X))

    def predict(self, X) -> np.ndarray:
        """Strongest structure label per graph: V, S, CM, B, N or not-well-covered."""
        return np.array([r.label for r in self.records(X)], dtype=object)

    def transform(self, X) -> np.ndarray:
        """Integer feature matrix with columns :data:`FEATURES`."""
        rows = []
        for r in self.records(X):
            rows.append([r.spec.n, r.alpha, r.omega, r.connected, r.well_covered, r.buchsbaum,
                         r.cohen_macaulay, r.shellable, r.vertex_decomposable,
                         r.one_well_covered, r.cis])
        return np.asarray(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        return np.asarray(FEATURES, dtype=object)
