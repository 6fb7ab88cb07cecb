"""Input validation helpers for the estimator API."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .circulant import CirculantGraph, ConnectionSet, OnePairedSpec, SpecError


def check_spec(x) -> ConnectionSet:
    """Coerce one graph description to a :class:`ConnectionSet`.

    Accepts ``"n:a1,...,at"`` strings, ``(n, S)`` pairs, connection sets,
    built graphs and one-paired specs.
    """
    if isinstance(x, ConnectionSet):
        return x
    if isinstance(x, CirculantGraph):
        return x.spec
    if isinstance(x, OnePairedSpec):
        return x.connection_set()
    if isinstance(x, (str, np.str_)):
        return ConnectionSet.parse(str(x))
    if isinstance(x, (tuple, list)) and len(x) == 2 and not isinstance(x[1], (str, bytes)):
        n, S = x
        return ConnectionSet(int(n), tuple(int(s) for s in S))
    raise SpecError(f"cannot interpret {x!r} as a circulant graph")


def check_specs(X) -> list[ConnectionSet]:
    """Validate a 1-d collection of graph descriptions."""
    if isinstance(X, (str, ConnectionSet, CirculantGraph, OnePairedSpec)):
        raise SpecError("expected a collection of graphs, got a single graph; wrap it in a list")
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise SpecError(f"expected a 1-d array of graph specs, got shape {X.shape}")
    specs = [check_spec(x) for x in X]
    if not specs:
        raise SpecError("empty input: at least one graph is required")
    return specs


def check_field(field) -> int:
    from .homology import parse_field
    return parse_field(field)


def check_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def iter_strings(specs: Iterable[ConnectionSet]) -> np.ndarray:
    return np.array([str(s) for s in specs], dtype=object)
