"""Reduced simplicial homology ranks and the Reisner / Buchsbaum checks.

Fields are given as an int: ``0`` for the rationals, a prime ``p`` for GF(p).
Rational ranks use exact fraction-free column reduction over Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .circulant import ConnectionSet, members, units
from .simplex import (ComplexError, SimplicialComplex, components, faces, faces_by_dim,
                      is_pure, link)

RATIONALS = 0


def field_name(field: int) -> str:
    return "QQ" if field == RATIONALS else f"GF({field})"


def parse_field(text: str | int) -> int:
    if isinstance(text, int):
        value = text
    else:
        t = text.strip().upper()
        if t in {"Q", "QQ", "0", "RATIONALS"}:
            return RATIONALS
        if t.startswith("GF(") and t.endswith(")"):
            t = t[3:-1]
        value = int(t)
    if value != RATIONALS and (value < 2 or any(value % q == 0 for q in range(2, int(value ** 0.5) + 1))):
        raise ValueError(f"{text!r} is not 0 (rationals) or a prime")
    return value


@dataclass(frozen=True)
class BettiTable:
    field: int
    betti: tuple[int, ...]  # index i holds reduced beta_{i-1}

    def __getitem__(self, i: int) -> int:
        """Reduced Betti number in dimension ``i`` (i >= -1)."""
        return self.betti[i + 1]

    def __str__(self) -> str:
        return f"{field_name(self.field)} {self.betti}"


def _index(level: Sequence[int]) -> dict[int, int]:
    return {f: k for k, f in enumerate(level)}


def _boundary_columns(lower: Sequence[int], upper: Sequence[int]) -> list[dict[int, int]]:
    """Sparse columns of the boundary map from ``upper`` faces to ``lower`` faces."""
    idx = _index(lower)
    cols = []
    for face in upper:
        col = {}
        for pos, v in enumerate(members(face)):
            col[idx[face & ~(1 << v)]] = -1 if pos % 2 else 1
        cols.append(col)
    return cols


def boundary_matrix(c: SimplicialComplex, i: int) -> np.ndarray:
    """Boundary map from i-faces to (i-1)-faces, faces in ascending bitset order.

    ``i = 0`` is the augmentation onto the empty face.
    """
    if not -1 <= i <= c.dim:
        raise ComplexError(f"boundary index {i} outside -1..{c.dim}")
    levels = faces_by_dim(c)
    if i == -1:
        return np.zeros((0, 1), dtype=np.int64)
    lower, upper = levels[i], levels[i + 1]
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, col in enumerate(_boundary_columns(lower, upper)):
        for r, val in col.items():
            mat[r, j] = val
    return mat


def _rank_gf2(cols: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, int] = {}
    for col in cols:
        v = 0
        for r, val in col.items():
            if val & 1:
                v ^= 1 << r
        while v:
            low = v.bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                break
            v ^= p
    return len(pivots)


def _rank_mod_p(cols: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        v = {r: val % p for r, val in col.items() if val % p}
        while v:
            low = max(v)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(v[low], -1, p)
                pivots[low] = {r: val * inv % p for r, val in v.items()}
                break
            factor = v[low]
            for r, val in piv.items():
                nv = (v.get(r, 0) - factor * val) % p
                if nv:
                    v[r] = nv
                else:
                    v.pop(r, None)
    return len(pivots)


def _rank_rational(cols: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        v = dict(col)
        while v:
            low = max(v)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                break
            a, b = piv[low], v[low]
            g = gcd(a, b)
            a, b = a // g, b // g
            nv = {r: a * val for r, val in v.items()}
            for r, val in piv.items():
                x = nv.get(r, 0) - b * val
                if x:
                    nv[r] = x
                else:
                    nv.pop(r, None)
            content = 0
            for val in nv.values():
                content = gcd(content, val)
                if content == 1:
                    break
            v = {r: val // content for r, val in nv.items()} if content > 1 else nv
    return len(pivots)


def rank(cols: Sequence[dict[int, int]], field: int = RATIONALS) -> int:
    if field == RATIONALS:
        return _rank_rational(cols)
    if field == 2:
        return _rank_gf2(cols)
    return _rank_mod_p(cols, field)


def matrix_rank(mat, field: int = RATIONALS) -> int:
    """Exact rank of a dense integer matrix."""
    arr = np.asarray(mat, dtype=object)
    if arr.size == 0:
        return 0
    cols = [{r: int(arr[r, j]) for r in range(arr.shape[0]) if arr[r, j]} for j in range(arr.shape[1])]
    return rank(cols, field)


def reduced_betti(c: SimplicialComplex, field: int = RATIONALS) -> BettiTable:
    levels = faces_by_dim(c)
    d = c.dim
    ranks = [0] * (d + 3)  # ranks[i + 1] = rank of boundary from i-faces
    if d >= 0:
        ranks[1] = 1
    if d >= 1:
        ranks[2] = len(levels[1]) - len(components(c))
    for i in range(2, d + 1):
        ranks[i + 1] = rank(_boundary_columns(levels[i], levels[i + 1]), field)
    betti = tuple(len(levels[i + 1]) - ranks[i + 1] - ranks[i + 2] for i in range(-1, d + 1))
    return BettiTable(field, betti)


def acyclic_below_top(c: SimplicialComplex, field: int = RATIONALS) -> bool:
    """True iff every reduced Betti number below dim c vanishes."""
    d = c.dim
    if d <= 0 or len(c.facets) == 1:  # a simplex is a cone
        return True
    if len(components(c)) != 1:
        return False
    if d == 1:
        return True
    levels = faces_by_dim(c)
    prev = len(levels[1]) - 1  # rank of the boundary from edges
    for i in range(1, d):
        nxt = rank(_boundary_columns(levels[i + 1], levels[i + 2]), field)
        if len(levels[i + 1]) - prev - nxt:
            return False
        prev = nxt
    return True


def circulant_symmetry(spec: ConnectionSet) -> list[tuple[int, ...]]:
    """Vertex permutations v -> u*v + k (mod n) that are automorphisms of C_n(S).

    Includes every rotation, the reflection u = -1, and each multiplier fixing S.
    """
    n = spec.n
    S = set(spec.S)
    mults = [u for u in units(n) if {min(u * s % n, n - u * s % n) for s in S} == S]
    if n == 1:
        mults = [1]
    return sorted({tuple((u * v + k) % n for v in range(n)) for u in mults for k in range(n)})


def _image(face: int, perm: Sequence[int]) -> int:
    out = 0
    for v in members(face):
        out |= 1 << perm[v]
    return out


def orbit_representatives(masks: Iterable[int], group: Sequence[Sequence[int]] | None) -> list[int]:
    masks = list(masks)
    if not group:
        return masks
    return [m for m in masks if all(m <= _image(m, g) for g in group)]


class _Reisner:
    def __init__(self, field: int):
        self.field = field
        self.memo: dict[tuple[int, ...], bool] = {}

    def cm(self, c: SimplicialComplex, vertex_reps: Iterable[int] | None = None) -> bool:
        if len(c.facets) == 1:
            return True
        key = c.key()
        hit = self.memo.get(key)
        if hit is not None and vertex_reps is None:
            return hit
        ok = acyclic_below_top(c, self.field)
        if ok and c.dim >= 1:
            verts = c.vertices if vertex_reps is None else vertex_reps
            ok = all(self.cm(link(c, 1 << v)) for v in verts)
        self.memo[key] = ok
        return ok


def is_cohen_macaulay(c: SimplicialComplex, field: int = RATIONALS,
                      symmetry: Sequence[Sequence[int]] | None = None,
                      exhaustive: bool = False) -> bool:
    """Reisner's criterion.

    The default walk recurses through vertex links with memoisation (every
    face's link is an iterated vertex link).  ``exhaustive=True`` tests the
    link of every face (or every orbit representative under ``symmetry``).
    """
    if not is_pure(c):
        raise ComplexError("Cohen-Macaulay check requires a pure complex")
    if exhaustive:
        cache: dict[tuple[int, ...], bool] = {}
        for face in orbit_representatives(sorted(faces(c)), symmetry):
            lk = link(c, face)
            key = lk.key()
            if key not in cache:
                cache[key] = acyclic_below_top(lk, field)
            if not cache[key]:
                return False
        return True
    reps = orbit_representatives((1 << v for v in c.vertices), symmetry) if symmetry else None
    return _Reisner(field).cm(c, None if reps is None else [m.bit_length() - 1 for m in reps])


def is_buchsbaum(c: SimplicialComplex, field: int = RATIONALS,
                 circulant_symmetry: bool | Sequence[Sequence[int]] = False) -> bool:
    """Every vertex link is Cohen-Macaulay.

    With ``circulant_symmetry=True`` the complex is assumed vertex-transitive
    under rotation, so only the link of vertex 0 is tested.  A permutation
    group may be passed instead to test one vertex per orbit.
    """
    if not is_pure(c):
        raise ComplexError("Buchsbaum check requires a pure complex")
    checker = _Reisner(field)
    if circulant_symmetry is True:
        verts = [0]
    elif circulant_symmetry:
        verts = [m.bit_length() - 1 for m in
                 orbit_representatives((1 << v for v in c.vertices), circulant_symmetry)]
    else:
        verts = c.vertices
    return all(checker.cm(link(c, 1 << v)) for v in verts)
