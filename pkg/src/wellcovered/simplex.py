"""Facet-list simplicial complexes over bitset vertex sets.

A complex is stored by its facets (maximal faces), each an int bitset over
``range(ground)``.  The complex {emptyset} is the single facet ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from .circulant import CirculantGraph, bits, members


class ComplexError(ValueError):
    pass


def maximal_only(sets: Iterable[int]) -> tuple[int, ...]:
    """Drop every set contained in another; result sorted, deduplicated."""
    uniq = sorted(set(sets), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    facets: tuple[int, ...]

    def __post_init__(self):
        limit = 1 << self.ground
        for f in self.facets:
            if f < 0 or f >= limit:
                raise ComplexError(f"facet {members(f)} uses a vertex outside range({self.ground})")

    @classmethod
    def from_faces(cls, ground: int, faces: Iterable[int | Iterable[int]]) -> "SimplicialComplex":
        masks = [f if isinstance(f, int) else bits(f) for f in faces]
        if not masks:
            masks = [0]
        return cls(ground, maximal_only(masks))

    @classmethod
    def simplex(cls, vertices: Iterable[int], ground: int | None = None) -> "SimplicialComplex":
        m = bits(vertices)
        return cls(ground if ground is not None else m.bit_length(), (m,))

    @cached_property
    def vertex_set(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def vertices(self) -> list[int]:
        return members(self.vertex_set)

    @cached_property
    def dim(self) -> int:
        return max((f.bit_count() for f in self.facets), default=0) - 1

    def facet_lists(self) -> list[list[int]]:
        return [members(f) for f in self.facets]

    def contains(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def relabel(self, mapping: Sequence[int], ground: int | None = None) -> "SimplicialComplex":
        """Apply the vertex map ``v -> mapping[v]``."""
        new = [bits(mapping[v] for v in members(f)) for f in self.facets]
        return SimplicialComplex(ground if ground is not None else max(mapping, default=-1) + 1,
                                 maximal_only(new))

    def key(self) -> tuple[int, ...]:
        """Relabel vertices by first occurrence over sorted facets; cheap, not a full canonical form."""
        order: dict[int, int] = {}
        for f in self.facets:
            for v in members(f):
                if v not in order:
                    order[v] = len(order)
        return tuple(sorted(bits(order[v] for v in members(f)) for f in self.facets))

    def __str__(self) -> str:
        return "<" + ", ".join("{" + ",".join(map(str, members(f))) + "}" for f in self.facets) + ">"


def _bron_kerbosch(adj: Sequence[int], candidates: int) -> list[int]:
    """All maximal cliques of the graph induced on ``candidates`` (pivoting, bitsets)."""
    out: list[int] = []
    stack = [(0, candidates, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                out.append(r)
            continue
        pux = p | x
        pivot, best = -1, -1
        for u in members(pux):
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in members(p & ~adj[pivot]):
            bit = 1 << v
            stack.append((r | bit, p & adj[v], x & adj[v]))
            p &= ~bit
            x |= bit
    return out


def maximal_cliques(g: CirculantGraph) -> list[int]:
    return sorted(_bron_kerbosch(g.adjacency, g.full))


def maximal_independent_sets(adjacency: Sequence[int], vertices: int) -> list[int]:
    """Maximal independent sets of the graph induced on the bitset ``vertices``."""
    full = vertices
    comp = [(full & ~row & ~(1 << v)) if (vertices >> v) & 1 else 0
            for v, row in enumerate(adjacency)]
    return sorted(_bron_kerbosch(comp, vertices))


def independence_complex(g: CirculantGraph) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g.adjacency, g.full)))


def is_pure(c: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in c.facets}) <= 1


def _submasks(m: int):
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def faces(c: SimplicialComplex) -> set[int]:
    seen: set[int] = set()
    for f in c.facets:
        if f in seen:
            continue
        for s in _submasks(f):
            seen.add(s)
    return seen


def faces_by_dim(c: SimplicialComplex) -> list[list[int]]:
    """Faces grouped by dimension; index i holds the (i-1)-faces, each list sorted."""
    out: list[list[int]] = [[] for _ in range(c.dim + 2)]
    for s in faces(c):
        out[s.bit_count()].append(s)
    for lst in out:
        lst.sort()
    return out


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(level) for level in faces_by_dim(c))


def h_vector(f: Sequence[int]) -> tuple[int, ...]:
    """h_i = sum_{j<=i} (-1)^(i-j) C(d+1-j, i-j) f_{j-1}, with d = len(f) - 2."""
    d = len(f) - 2
    return tuple(sum((-1) ** (i - j) * comb(d + 1 - j, i - j) * f[j] for j in range(i + 1))
                 for i in range(d + 2))


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`h_vector`: f_{j-1} = sum_{i<=j} C(d+1-i, j-i) h_i."""
    d = len(h) - 2
    return tuple(sum(comb(d + 1 - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 2))


def _as_mask(face) -> int:
    return face if isinstance(face, int) else bits(face)


def link(c: SimplicialComplex, face) -> SimplicialComplex:
    face = _as_mask(face)
    containing = [f & ~face for f in c.facets if f & face == face]
    if not containing:
        raise ComplexError(f"{members(face)} is not a face of the complex")
    return SimplicialComplex(c.ground, maximal_only(containing))


def deletion(c: SimplicialComplex, v: int) -> SimplicialComplex:
    """Remove vertex v and every face containing it."""
    if not 0 <= v < c.ground:
        raise ComplexError(f"vertex {v} outside range({c.ground})")
    bit = 1 << v
    return SimplicialComplex(c.ground, maximal_only(f & ~bit for f in c.facets))


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """Join with c2's vertices shifted up by ``c1.ground``."""
    shift = c1.ground
    return SimplicialComplex(c1.ground + c2.ground,
                             tuple(sorted(a | (b << shift) for a in c1.facets for b in c2.facets)))


def components(c: SimplicialComplex) -> list[int]:
    """Vertex sets of the connected components (of the 1-skeleton)."""
    comps: list[int] = []
    for f in c.facets:
        if not f:
            continue
        merged = f
        rest = []
        for comp in comps:
            if comp & merged:
                merged |= comp
            else:
                rest.append(comp)
        rest.append(merged)
        comps = rest
    return sorted(comps)


def is_connected(c: SimplicialComplex) -> bool:
    return len(components(c)) == 1


def read_facets(text: str) -> list[list[int]]:
    """Parse the one-facet-per-line format."""
    return [[int(tok) for tok in line.split()] for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]


def write_facets(c: SimplicialComplex) -> str:
    return "".join(" ".join(map(str, members(f))) + "\n" for f in c.facets)
