"""Vertex decomposability and shellability of pure complexes."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .circulant import bits, members
from .homology import acyclic_below_top
from .simplex import (ComplexError, SimplicialComplex, deletion, f_vector, h_vector,
                      is_connected, is_pure, link)

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    """The search hit its node budget before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search aborted after {nodes} nodes")
        self.nodes = nodes


class ShellingError(ValueError):
    pass


@dataclass(frozen=True)
class DecompVerdict:
    value: bool
    witness: tuple[tuple[int, int], ...] | None = None  # preorder (hash(key), shedding vertex)

    def __bool__(self) -> bool:
        return self.value


@dataclass(frozen=True)
class ShellingCertificate:
    order: tuple[int, ...]

    def facet_lists(self) -> list[list[int]]:
        return [members(f) for f in self.order]


def _negative_h(c: SimplicialComplex) -> bool:
    return any(x < 0 for x in h_vector(f_vector(c)))


class _VD:
    def __init__(self, prune: bool):
        self.prune = prune
        self.memo: dict[tuple[int, ...], bool] = {}

    def shedding_vertex(self, c: SimplicialComplex) -> int | None:
        for x in c.vertices:
            lk, dl = link(c, 1 << x), deletion(c, x)
            if is_pure(lk) and is_pure(dl) and self.vd(lk) and self.vd(dl):
                return x
        return None

    def vd(self, c: SimplicialComplex) -> bool:
        if len(c.facets) == 1:
            return True
        key = c.key()
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if self.prune and c.dim == 0:
            result = True
        elif self.prune and c.dim == 1:
            result = is_connected(c)
        elif self.prune and (not is_connected(c) or _negative_h(c)):
            result = False
        else:
            result = self.shedding_vertex(c) is not None
        self.memo[key] = result
        return result

    def witness(self, c: SimplicialComplex) -> list[tuple[int, int]]:
        if len(c.facets) == 1:
            return []
        x = self.shedding_vertex(c)
        if x is None:
            raise ComplexError("no shedding vertex; complex is not vertex decomposable")
        return [(hash(c.key()), x)] + self.witness(link(c, 1 << x)) + self.witness(deletion(c, x))


def is_vertex_decomposable(c: SimplicialComplex, prune: bool = True,
                           with_witness: bool = False) -> DecompVerdict:
    """Recursive shedding-vertex search, memoised on a relabelling-invariant key.

    With ``prune`` the search short-circuits on dimension 0 and 1, on
    disconnected complexes and on negative h-vectors.
    """
    if not is_pure(c):
        raise ComplexError("vertex decomposability is defined for pure complexes")
    search = _VD(prune)
    value = search.vd(c)
    witness = tuple(search.witness(c)) if value and with_witness else None
    return DecompVerdict(value, witness)


def replay_witness(c: SimplicialComplex, witness: Sequence[tuple[int, int]]) -> bool:
    """Re-run the decomposition the witness records; True iff every step checks out."""
    steps = iter(witness)

    def walk(k: SimplicialComplex) -> bool:
        if len(k.facets) == 1:
            return True
        step = next(steps, None)
        if step is None or step[0] != hash(k.key()):
            return False
        x = step[1]
        if not (k.vertex_set >> x) & 1:
            return False
        lk, dl = link(k, 1 << x), deletion(k, x)
        return is_pure(lk) and is_pure(dl) and walk(lk) and walk(dl)

    return walk(c) and next(steps, None) is None


def _check_permutation(c: SimplicialComplex, order: Sequence[int]) -> None:
    given, expected = list(order), set(c.facets)
    if len(given) != len(expected):
        raise ShellingError(f"{len(given)} facets given, {len(expected)} expected")
    missing = expected - set(given)
    extra = [members(f) for f in given if f not in expected]
    if missing or extra or len(set(given)) != len(given):
        raise ShellingError(f"not a permutation of the facets: missing {[members(f) for f in sorted(missing)]}, "
                            f"unexpected {extra}")


def shelling_violation(c: SimplicialComplex, cert: ShellingCertificate | Sequence[int]) -> tuple[int, int] | None:
    """First pair (i, j), 1-based with j < i, breaking the exchange condition, or None."""
    order = cert.order if isinstance(cert, ShellingCertificate) else tuple(
        f if isinstance(f, int) else bits(f) for f in cert)
    _check_permutation(c, order)
    for i in range(1, len(order)):
        fi = order[i]
        shed = 0
        for k in range(i):
            diff = fi & ~order[k]
            if diff.bit_count() == 1:
                shed |= diff
        for j in range(i):
            if not shed & ~order[j]:
                return i + 1, j + 1
    return None


def verify_shelling(c: SimplicialComplex, cert: ShellingCertificate | Sequence[int]) -> bool:
    return shelling_violation(c, cert) is None


def find_shelling(c: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> ShellingCertificate | None:
    """Backtracking search for a shelling order.

    Returns None when no order exists, raises :class:`BudgetExceeded` when the
    node budget runs out first.  Failed prefixes are memoised as facet sets,
    since which facets may come next depends only on the set already placed.

    Refuted up front: disconnected complexes of dimension >= 1, negative
    h-vectors, and reduced homology below the top dimension (a shellable
    complex is a wedge of top-dimensional spheres).  During the search, at
    most h_i facets may enter with a restriction of size i.
    """
    if not is_pure(c):
        raise ComplexError("shelling search requires a pure complex")
    F = list(c.facets)
    t = len(F)
    if t == 1:
        return ShellingCertificate(tuple(F))
    if (c.dim >= 1 and not is_connected(c)) or _negative_h(c) or not acyclic_below_top(c):
        return None
    h = h_vector(f_vector(c))
    used = [0] * len(h)  # facets placed so far, by restriction size

    # shed_with[a][b]: the single vertex of F[a] missing from F[b], if |F[a] \ F[b]| = 1
    shed_with = [[0] * t for _ in range(t)]
    for a in range(t):
        for b in range(t):
            diff = F[a] & ~F[b]
            if diff.bit_count() == 1:
                shed_with[a][b] = diff
    degree = [sum(1 for x in row if x) for row in shed_with]

    dead: set[int] = set()
    nodes = 0
    order: list[int] = []
    shed = [0] * t  # union of single-vertex differences with placed facets

    def feasible(a: int) -> bool:
        u = shed[a]
        return bool(u) and all(u & ~F[g] for g in order)

    def extend(placed: int) -> bool:
        nonlocal nodes
        if len(order) == t:
            return True
        if placed in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes)
        cands = [a for a in range(t) if not (placed >> a) & 1 and feasible(a)]
        # most constrained first: most codimension-one contacts with the prefix
        cands.sort(key=lambda a: (-shed[a].bit_count(), -degree[a], a))
        for a in cands:
            r = shed[a].bit_count()
            if used[r] >= h[r]:
                continue
            used[r] += 1
            saved = shed[:]
            for b in range(t):
                if shed_with[b][a]:
                    shed[b] |= shed_with[b][a]
            order.append(a)
            if extend(placed | (1 << a)):
                return True
            order.pop()
            shed[:] = saved
            used[r] -= 1
        dead.add(placed)
        return False

    seeds = sorted(range(t), key=lambda a: (-degree[a], a))
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * t + 100))
    try:
        for s in seeds:
            for b in range(t):
                shed[b] = shed_with[b][s]
            order[:] = [s]
            used[:] = [1] + [0] * (len(h) - 1)
            if extend(1 << s):
                return ShellingCertificate(tuple(F[a] for a in order))
            nodes += 1
    finally:
        sys.setrecursionlimit(limit)
    return None


def parse_certificate(text: str, facet_size: int) -> list[int]:
    """Whitespace-separated labels read left to right, grouped ``facet_size`` at a time."""
    nums = [int(tok) for tok in text.split()]
    if facet_size <= 0:
        raise ShellingError("facet size must be positive")
    if len(nums) % facet_size:
        raise ShellingError(f"{len(nums)} labels do not split into facets of size {facet_size}")
    return [bits(nums[k:k + facet_size]) for k in range(0, len(nums), facet_size)]


def format_certificate(cert: ShellingCertificate, per_line: int = 7) -> str:
    groups = [" ".join(map(str, members(f))) for f in cert.order]
    return "".join("   ".join(groups[k:k + per_line]) + "\n" for k in range(0, len(groups), per_line))


def facets_of(cert: Iterable[Iterable[int]]) -> list[int]:
    return [bits(f) for f in cert]
