"""Circulant graphs C_n(S), connection-set enumeration and the one-paired family.

Vertex sets are Python ints used as bitsets (bit v set <=> vertex v present).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

MAX_VERTICES = 64


class SpecError(ValueError):
    """Invalid circulant specification. ``token`` and ``position`` locate the offence."""

    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        super().__init__(message)
        self.token = token
        self.position = position


def bits(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, order=True)
class ConnectionSet:
    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise SpecError(f"n must be a positive integer, got {self.n!r}")
        if self.n > MAX_VERTICES:
            raise SpecError(f"n = {self.n} exceeds the supported maximum {MAX_VERTICES}")
        half = self.n // 2
        for s in self.S:
            if s < 1 or s > half:
                raise SpecError(f"generator {s} exceeds floor({self.n}/2)" if s > half
                                else f"generator {s} must be positive", token=str(s))
        object.__setattr__(self, "S", tuple(sorted(set(self.S))))

    @classmethod
    def parse(cls, text: str) -> "ConnectionSet":
        """Parse ``"n:a1,a2,...,at"``; an empty generator list is allowed (``"5:"``)."""
        text = text.strip()
        if ":" not in text:
            raise SpecError(f"expected 'n:a1,...,at', got {text!r}", token=text, position=0)
        head, _, tail = text.partition(":")
        if not re.fullmatch(r"\s*\d+\s*", head):
            raise SpecError(f"bad vertex count {head!r}", token=head, position=0)
        n = int(head)
        if not 1 <= n <= MAX_VERTICES:
            raise SpecError(f"vertex count {n} outside 1..{MAX_VERTICES}", token=head, position=0)
        gens = []
        pos = len(head) + 1
        for tok in tail.split(",") if tail.strip() else []:
            if not re.fullmatch(r"\s*\d+\s*", tok):
                raise SpecError(f"bad generator {tok!r}", token=tok, position=pos)
            s = int(tok)
            if s < 1:
                raise SpecError(f"generator {s} must be positive", token=tok.strip(), position=pos)
            if s > n // 2:
                raise SpecError(f"generator {s} exceeds floor({n}/2)", token=tok.strip(), position=pos)
            gens.append(s)
            pos += len(tok) + 1
        return cls(n, tuple(gens))

    def __str__(self) -> str:
        return f"{self.n}:{','.join(map(str, self.S))}"

    def pretty(self) -> str:
        return f"C_{self.n}({', '.join(map(str, self.S))})"


@dataclass(frozen=True)
class OnePairedSpec:
    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.n < 1:
            raise SpecError(f"one-paired parameters must be positive: {self}")
        if self.n % (self.a * self.b):
            raise SpecError(f"ab = {self.a * self.b} does not divide n = {self.n}")

    @property
    def m(self) -> int:
        """Size of each independent coset block, n / (ab)."""
        return self.n // (self.a * self.b)

    def connection_set(self) -> ConnectionSet:
        ab = self.a * self.b
        return ConnectionSet(self.n, tuple(d for d in range(1, self.n // 2 + 1)
                                           if d % self.a == 0 and d % ab))


@dataclass(frozen=True)
class CirculantGraph:
    spec: ConnectionSet
    adjacency: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.spec.n

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adjacency[u]) if u < v]

    def degree(self, v: int = 0) -> int:
        return self.adjacency[v].bit_count()

    def complement_adjacency(self) -> tuple[int, ...]:
        full = self.full
        return tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adjacency))

    def __str__(self) -> str:
        return str(self.spec)


def rotate(mask: int, k: int, n: int) -> int:
    """Cyclic shift of an n-bit vertex set by k (v -> v + k mod n)."""
    k %= n
    full = (1 << n) - 1
    return ((mask << k) | (mask >> (n - k))) & full


def build_circulant(spec: ConnectionSet | str) -> CirculantGraph:
    if isinstance(spec, str):
        spec = ConnectionSet.parse(spec)
    n = spec.n
    row0 = 0
    for s in spec.S:
        row0 |= 1 << (s % n)
        row0 |= 1 << ((n - s) % n)
    row0 &= ~1
    return CirculantGraph(spec, tuple(rotate(row0, v, n) for v in range(n)))


def one_paired(spec: OnePairedSpec) -> CirculantGraph:
    return build_circulant(spec.connection_set())


def units(n: int) -> list[int]:
    return [u for u in range(1, max(n, 2)) if gcd(u, n) == 1]


def _scale(n: int, S: Sequence[int], u: int) -> tuple[int, ...]:
    return tuple(sorted({min(u * s % n, n - u * s % n) for s in S}))


def _as_tuple(S) -> tuple[int, ...]:
    return S.S if isinstance(S, ConnectionSet) else tuple(sorted(set(S)))


def multiplier_equivalent(n: int, S1, S2) -> bool:
    a, b = _as_tuple(S1), _as_tuple(S2)
    if len(a) != len(b):
        return False
    return any(_scale(n, a, u) == b for u in units(n))


def multiplier_orbit(n: int, S) -> set[tuple[int, ...]]:
    S = _as_tuple(S)
    return {_scale(n, S, u) for u in units(n)}


def canonical_connection_set(n: int, S) -> ConnectionSet:
    """Lexicographically smallest member of the multiplier class of S."""
    return ConnectionSet(n, min(multiplier_orbit(n, S)))


def enumerate_connection_sets(n: int) -> Iterator[ConnectionSet]:
    """One representative (lexicographically least) per multiplier class of nonempty S.

    Ordered by (|S|, S).
    """
    half = n // 2
    for size in range(1, half + 1):
        for S in combinations(range(1, half + 1), size):
            if min(multiplier_orbit(n, S)) == S:
                yield ConnectionSet(n, S)


def connected_components(g: CirculantGraph) -> list[int]:
    remaining = g.full
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adjacency[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected_graph(g: CirculantGraph) -> bool:
    return len(connected_components(g)) == 1


def complement_power(n: int, d: int) -> ConnectionSet:
    """C_n(d+1, ..., floor(n/2))."""
    return ConnectionSet(n, tuple(range(d + 1, n // 2 + 1)))


def remove_one(n: int, i: int) -> ConnectionSet:
    """C_n(1, ..., i-hat, ..., floor(n/2))."""
    if not 1 <= i <= n // 2:
        raise SpecError(f"i = {i} outside 1..{n // 2}")
    return ConnectionSet(n, tuple(s for s in range(1, n // 2 + 1) if s != i))


def cycle_power(n: int, d: int) -> ConnectionSet:
    """C_n(1, ..., d)."""
    return ConnectionSet(n, tuple(range(1, d + 1)))
