"""Golden-file comparison against the published table of well-covered circulants (n <= 16).

Golden rows are ``n:S<TAB>conn<TAB>label<TAB>1wc`` with ``*``/``-`` for
disconnected/connected and ``1``/``-`` for the 1-well-covered flag.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from .circulant import ConnectionSet, build_circulant, members
from .classify import ClassificationRecord, sort_key

GOLDEN_NAME = "table1.tsv"


def golden_path() -> Path:
    return Path(str(resources.files("wellcovered") / "data" / GOLDEN_NAME))


def row_for(rec: ClassificationRecord) -> str:
    return "\t".join((str(rec.spec), "-" if rec.connected else "*", rec.label,
                      "1" if rec.one_well_covered else "-"))


def _row_sort(line: str):
    spec = ConnectionSet.parse(line.split("\t", 1)[0])
    return spec.n, len(spec.S), spec.S


def load_golden(path: Path | str | None = None, n_max: int | None = None) -> list[str]:
    path = Path(path) if path is not None else golden_path()
    rows = []
    for line in path.read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise ValueError(f"malformed golden row {line!r}")
        if n_max is None or ConnectionSet.parse(cols[0]).n <= n_max:
            rows.append(line)
    return sorted(rows, key=_row_sort)


def _nx_graph(spec: ConnectionSet, complement: bool = False) -> nx.Graph:
    g = build_circulant(spec)
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return nx.complement(out) if complement else out


def spectrum(spec: ConnectionSet) -> np.ndarray:
    """Sorted adjacency eigenvalues: lambda_j = sum over the neighbours of 0 of cos(2 pi j v / n)."""
    n = spec.n
    nbrs = members(build_circulant(spec).adjacency[0])
    j = np.arange(n)[:, None]
    return np.sort(np.cos(2 * np.pi * j * np.asarray(nbrs, dtype=float)[None, :] / n).sum(axis=1))


def isomorphic(a: ConnectionSet, b: ConnectionSet) -> bool:
    if a.n != b.n or len(a.S) != len(b.S):
        return False
    if not np.allclose(spectrum(a), spectrum(b), atol=1e-9):
        return False
    dense = build_circulant(a).degree() > (a.n - 1) / 2
    return nx.is_isomorphic(_nx_graph(a, dense), _nx_graph(b, dense))


@dataclass
class Merge:
    kept: ClassificationRecord
    dropped: ClassificationRecord

    def __str__(self) -> str:
        agree = "labels agree" if row_for(self.kept).split("\t")[1:] == row_for(self.dropped).split("\t")[1:] \
            else "LABELS DISAGREE"
        return (f"merged {self.dropped.spec.pretty()} into {self.kept.spec.pretty()}: "
                f"isomorphic but not multiplier-equivalent ({agree})")


def merge_isomorphic(records: Sequence[ClassificationRecord]) -> tuple[list[ClassificationRecord], list[Merge]]:
    """Keep the first record (in sort order) of each isomorphism class.

    Records are only compared when n, |S| and the f-vector coincide.
    """
    kept: list[ClassificationRecord] = []
    merges: list[Merge] = []
    for rec in sorted(records, key=sort_key):
        twin = next((k for k in kept if k.spec.n == rec.spec.n and k.f == rec.f
                     and isomorphic(k.spec, rec.spec)), None)
        if twin is None:
            kept.append(rec)
        else:
            merges.append(Merge(twin, rec))
    return kept, merges


@dataclass
class TableReport:
    compared: int
    diff: list[str]
    merges: list[Merge] = field(default_factory=list)

    @property
    def differences(self) -> int:
        """Number of graphs whose row was added, removed or changed."""
        return len({line[1:].split("\t", 1)[0] for line in self.diff
                    if line[:1] in "+-" and not line.startswith(("+++", "---"))})


def compare(records: Iterable[ClassificationRecord], golden: Sequence[str]) -> TableReport:
    wc = [r for r in records if r.well_covered]
    kept, merges = merge_isomorphic(wc)
    ours = [row_for(r) for r in sorted(kept, key=sort_key)]
    diff = list(difflib.unified_diff(list(golden), ours, "golden", "computed", lineterm="", n=0))
    return TableReport(compared=max(len(golden), len(ours)), diff=diff, merges=merges)
