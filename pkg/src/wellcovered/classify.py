"""Per-graph classification pipeline and closed-form predictions for the studied families."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, gcd
from typing import Sequence

from .circulant import (CirculantGraph, ConnectionSet, OnePairedSpec, SpecError, bits,
                        build_circulant, complement_power, connected_components,
                        enumerate_connection_sets, remove_one)
from .decomp import DEFAULT_BUDGET, BudgetExceeded, find_shelling, is_vertex_decomposable
from .homology import (RATIONALS, circulant_symmetry, field_name, is_buchsbaum,
                       is_cohen_macaulay)
from .simplex import (SimplicialComplex, deletion, f_vector, h_vector, independence_complex,
                      is_pure, maximal_cliques)

log = logging.getLogger(__name__)

LABELS = ("V", "S", "CM", "B", "N", "not-well-covered")
# strength order used by the hierarchy invariants
RANK = {"V": 4, "S": 3, "CM": 2, "B": 1, "N": 0}


class NotWellCovered(ValueError):
    pass


@dataclass(frozen=True)
class ClassificationRecord:
    spec: ConnectionSet
    connected: bool
    well_covered: bool
    alpha: int
    omega: int
    label: str
    one_well_covered: bool
    cis: bool
    f: tuple[int, ...]
    h: tuple[int, ...]
    field: int = RATIONALS
    status: str = "ok"  # "unknown" when the shelling search ran out of budget

    @property
    def buchsbaum(self) -> bool:
        return self.label in RANK and RANK[self.label] >= RANK["B"]

    @property
    def cohen_macaulay(self) -> bool:
        return self.label in RANK and RANK[self.label] >= RANK["CM"]

    @property
    def shellable(self) -> bool:
        return self.label in ("V", "S")

    @property
    def vertex_decomposable(self) -> bool:
        return self.label == "V"

    def to_dict(self) -> dict:
        return {"n": self.spec.n, "s": list(self.spec.S), "connected": self.connected,
                "well_covered": self.well_covered, "alpha": self.alpha, "omega": self.omega,
                "label": self.label, "one_wc": self.one_well_covered, "cis": self.cis,
                "f": list(self.f), "h": list(self.h), "field": field_name(self.field),
                "status": self.status}

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationRecord":
        fld = d["field"]
        return cls(spec=ConnectionSet(int(d["n"]), tuple(d["s"])), connected=bool(d["connected"]),
                   well_covered=bool(d["well_covered"]), alpha=int(d["alpha"]), omega=int(d["omega"]),
                   label=d["label"], one_well_covered=bool(d["one_wc"]), cis=bool(d["cis"]),
                   f=tuple(d["f"]), h=tuple(d["h"]),
                   field=0 if fld == "QQ" else int(str(fld)[3:-1]), status=d.get("status", "ok"))


def _graph(g) -> CirculantGraph:
    if isinstance(g, CirculantGraph):
        return g
    return build_circulant(g)


def is_one_well_covered(g, complex_: SimplicialComplex | None = None) -> bool:
    """Well-covered after deleting a vertex; vertex 0 stands for all by rotation."""
    g = _graph(g)
    c = complex_ if complex_ is not None else independence_complex(g)
    if not is_pure(c):
        raise NotWellCovered(f"{g.spec} is not well-covered")
    return is_pure(deletion(c, 0))


def cis_by_definition(g, mis: Sequence[int] | None = None, cliques: Sequence[int] | None = None) -> bool:
    g = _graph(g)
    mis = mis if mis is not None else independence_complex(g).facets
    cliques = cliques if cliques is not None else maximal_cliques(g)
    return all(c & i for c in cliques for i in mis)


def cis_by_sizes(g, mis: Sequence[int] | None = None, cliques: Sequence[int] | None = None) -> bool:
    """Boros-Gurvich-Milanic: uniform independent sets and cliques with alpha * omega = n."""
    g = _graph(g)
    mis = mis if mis is not None else independence_complex(g).facets
    cliques = cliques if cliques is not None else maximal_cliques(g)
    a = {m.bit_count() for m in mis}
    w = {c.bit_count() for c in cliques}
    return len(a) == 1 and len(w) == 1 and a.pop() * w.pop() == g.n


def is_cis(g, mis: Sequence[int] | None = None, cliques: Sequence[int] | None = None) -> bool:
    g = _graph(g)
    mis = mis if mis is not None else independence_complex(g).facets
    cliques = cliques if cliques is not None else maximal_cliques(g)
    direct = cis_by_definition(g, mis, cliques)
    if direct != cis_by_sizes(g, mis, cliques):
        raise RuntimeError(f"CIS characterisations disagree on {g.spec}")
    return direct


def classify(g, field: int = RATIONALS, budget: int = DEFAULT_BUDGET) -> ClassificationRecord:
    g = _graph(g)
    c = independence_complex(g)
    cliques = maximal_cliques(g)
    connected = len(connected_components(g)) == 1
    alpha = c.dim + 1
    omega = max(m.bit_count() for m in cliques)
    f = f_vector(c)
    h = h_vector(f)
    cis = is_cis(g, c.facets, cliques)
    base = dict(spec=g.spec, connected=connected, alpha=alpha, omega=omega, cis=cis, f=f, h=h, field=field)
    if not is_pure(c):
        return ClassificationRecord(well_covered=False, label="not-well-covered",
                                    one_well_covered=False, **base)
    one_wc = is_pure(deletion(c, 0))
    status = "ok"
    if not is_buchsbaum(c, field, circulant_symmetry=True):
        label = "N"
    elif any(x < 0 for x in h) or not is_cohen_macaulay(c, field, symmetry=circulant_symmetry(g.spec)):
        label = "B"
    elif is_vertex_decomposable(c):
        label = "V"
    else:
        try:
            label = "S" if find_shelling(c, budget) is not None else "CM"
        except BudgetExceeded:
            label, status = "CM", "unknown"
        if label == "CM" and status == "ok":
            log.warning("%s is Cohen-Macaulay but not shellable", g.spec)
    if label in ("V", "S", "CM") and not one_wc:
        log.warning("%s is %s but not 1-well-covered", g.spec, label)
    return ClassificationRecord(well_covered=True, label=label, one_well_covered=one_wc,
                                status=status, **base)


def census(n_min: int, n_max: int, field: int = RATIONALS, well_covered_only: bool = False,
           budget: int = DEFAULT_BUDGET) -> list[ClassificationRecord]:
    out = []
    for n in range(n_min, n_max + 1):
        for spec in enumerate_connection_sets(n):
            rec = classify(build_circulant(spec), field, budget)
            if rec.well_covered or not well_covered_only:
                out.append(rec)
    return sorted(out, key=sort_key)


def sort_key(rec: ClassificationRecord):
    return rec.spec.n, len(rec.spec.S), rec.spec.S


@dataclass(frozen=True)
class Prediction:
    """The part of a classification record a closed-form result pins down."""

    spec: ConnectionSet
    well_covered: bool
    label: str
    buchsbaum: bool | None = None
    alpha: int | None = None
    omega: int | None = None
    cis: bool | None = None
    f: tuple[int, ...] | None = None
    h: tuple[int, ...] | None = None
    facets: tuple[int, ...] | None = None

    def mismatches(self, rec: ClassificationRecord) -> list[str]:
        """Fields where ``rec`` disagrees with the prediction."""
        bad = []
        for name in ("well_covered", "label", "alpha", "omega", "cis", "f", "h"):
            want = getattr(self, name)
            if want is not None and getattr(rec, name) != want:
                bad.append(f"{name}: predicted {want}, got {getattr(rec, name)}")
        if self.buchsbaum is not None and rec.buchsbaum != self.buchsbaum:
            bad.append(f"buchsbaum: predicted {self.buchsbaum}, got {rec.buchsbaum}")
        return bad


def family_complement_power(n: int, d: int) -> Prediction:
    """C_n(d+1, ..., floor(n/2)) for n >= 2d+2, d >= 1."""
    if d < 1 or n < 2 * d + 2:
        raise SpecError(f"need d >= 1 and n >= 2d+2, got n={n}, d={d}")
    spec = complement_power(n, d)
    wc = n > 3 * d or n == 2 * d + 2
    if not wc:
        return Prediction(spec, False, "not-well-covered", buchsbaum=False)
    label = "V" if n == 2 * d + 2 or (d == 1 and n > 3) else "B"
    f = h = None
    if n > 3 * d:
        f = (1, n) + tuple(comb(d, k) * n for k in range(1, d + 1))
        h = (1, n - (d + 1)) + tuple((-1) ** k * comb(d + 1, k) for k in range(2, d + 2))
    return Prediction(spec, True, label, buchsbaum=True, alpha=d + 1, f=f, h=h)


def family_remove_one(n: int, i: int) -> Prediction:
    """C_n(1, ..., i-hat, ..., floor(n/2)) for 1 <= i <= floor(n/2)."""
    spec = remove_one(n, i)
    third = 3 * i == n
    facets = tuple(sorted(bits((j, j + i, j + 2 * i)) for j in range(i))) if third else None
    return Prediction(spec, True, "V" if gcd(i, n) == 1 else "B", buchsbaum=True,
                      alpha=3 if third else 2, facets=facets)


def family_one_paired(spec: OnePairedSpec) -> Prediction:
    n, a, b, m = spec.n, spec.a, spec.b, spec.m
    cs = spec.connection_set()
    if b == 1:
        # empty connection set: edgeless graph, Ind(G) is the full simplex
        return Prediction(cs, True, "V", buchsbaum=True, alpha=n, omega=1, cis=True,
                          f=tuple(comb(n, k) for k in range(n + 1)))
    if n == a * b:
        label = "V"
    elif a == 1:
        label = "B"
    else:
        label = "N"
    f = None
    if a == 1:
        f = (1,) + tuple(comb(m, k) * b for k in range(1, m + 1))
    return Prediction(cs, True, label, buchsbaum=label != "N", alpha=n // b, omega=b, cis=True, f=f)


def one_paired_specs(n_max: int, n_min: int = 1) -> list[OnePairedSpec]:
    return [OnePairedSpec(n, a, b) for n in range(n_min, n_max + 1)
            for a in range(1, n + 1) for b in range(1, n + 1) if n % (a * b) == 0]


def cubic_census(cap: int = 16, field: int = RATIONALS) -> list[ClassificationRecord]:
    """Well-covered connected cubic circulants on at most ``cap`` vertices."""
    out = []
    for n in range(4, cap + 1, 2):
        for spec in enumerate_connection_sets(n):
            g = build_circulant(spec)
            if g.degree() != 3 or len(connected_components(g)) != 1:
                continue
            rec = classify(g, field)
            if rec.well_covered:
                out.append(rec)
    return sorted(out, key=sort_key)
