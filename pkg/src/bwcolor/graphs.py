"""Simple undirected graphs, partial two-colorings, and feasibility profiles.

Vertices are dense integer ids 0..n-1.  The edge set (normalized unordered
pairs) is authoritative; an adjacency-set view and a bitmask view are
derived at construction for O(1) membership tests and for the bitset
kernels.  All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1."""

    __slots__ = ("n", "edges", "adj", "_nbr_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(s) for s in adj)
        self._nbr_bits: np.ndarray | None = None

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def closed_nbr_bits(self) -> np.ndarray:
        """uint64 bitmask of N[v] per vertex; valid for n <= 64."""
        if self._nbr_bits is None:
            if self.n > 64:
                raise ValueError("bitset view limited to 64 vertices")
            bits = np.zeros(self.n, dtype=np.uint64)
            for v in range(self.n):
                m = 1 << v
                for u in self.adj[v]:
                    m |= 1 << u
                bits[v] = m
            self._nbr_bits = bits
        return self._nbr_bits

    def subgraph(self, vs: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is vs[i]."""
        idx = {v: i for i, v in enumerate(vs)}
        es = [
            (idx[u], idx[v])
            for u, v in self.edges
            if u in idx and v in idx
        ]
        return Graph(len(vs), es)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex id {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Coloring:
    """Disjoint black and white vertex sets (a partial 2-coloring)."""

    black: frozenset[int]
    white: frozenset[int]

    def __init__(self, black: Iterable[int], white: Iterable[int]):
        object.__setattr__(self, "black", frozenset(black))
        object.__setattr__(self, "white", frozenset(white))
        if self.black & self.white:
            raise ValueError("black and white sets must be disjoint")

    @property
    def b(self) -> int:
        return len(self.black)

    @property
    def w(self) -> int:
        return len(self.white)


@dataclass(frozen=True)
class BWProfile:
    """f[b] = maximum white count over all colorings with exactly b blacks.

    Length n+1.  For 0 <= b <= n the value is always >= 0 (b blacks with no
    whites is always feasible); -1 would mark an impossible black count and
    never occurs in range.  The boolean question "is (b, w) feasible" is
    exactly w <= f[b].
    """

    f: tuple[int, ...]

    def __init__(self, f: Iterable[int]):
        object.__setattr__(self, "f", tuple(int(x) for x in f))

    @property
    def n(self) -> int:
        return len(self.f) - 1

    def __getitem__(self, b: int) -> int:
        return self.f[b]

    def __len__(self) -> int:
        return len(self.f)

    def feasible(self, b: int, w: int) -> bool:
        if b < 0 or w < 0:
            raise ValueError("counts must be nonnegative")
        return b <= self.n and w <= self.f[b]

    def validate(self) -> None:
        """Raise unless the four structural profile invariants hold."""
        n = self.n
        if self.f[0] != n:
            raise AssertionError(f"f[0]={self.f[0]} != n={n}")
        for b in range(n + 1):
            if self.f[b] < 0:
                raise AssertionError(f"f[{b}] negative")
            if self.f[b] > n - b:
                raise AssertionError(f"f[{b}]={self.f[b]} exceeds budget {n - b}")
            if b < n and self.f[b + 1] > self.f[b]:
                raise AssertionError(f"profile not monotone at b={b}")
        for b in range(n + 1):
            for w in range(n + 1):
                if (w <= self.f[b]) != (b <= self.f[w]):
                    raise AssertionError(f"color-swap symmetry broken at ({b},{w})")


def complement(g: Graph) -> Graph:
    """Complement graph: same vertices, edge iff not an edge of g."""
    es = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in g.adj[u]
    ]
    return Graph(g.n, es)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> set[int]:
    """s together with every neighbor of s; empty for empty s."""
    out: set[int] = set()
    for v in s:
        g._check_vertex(v)
        out.add(v)
        out.update(g.adj[v])
    return out


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def verify_coloring(g: Graph, c: Coloring) -> bool:
    """True iff no edge of g joins a black vertex to a white vertex."""
    for v in c.black | c.white:
        g._check_vertex(v)
    for v in c.black:
        if g.adj[v] & c.white:
            return False
    return True
