"""Core graph and degree-sequence types with exact close-pair counting.

Two vertices form a *close pair* for a threshold k when their degrees differ
by less than k.  The count of close pairs, h_k, depends only on the degree
multiset, which is why most of this package works on degree sequences rather
than on graphs.  Everything here is immutable and safe to share between
workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


class InternalInvariantError(RuntimeError):
    """A mathematically guaranteed condition failed; never swallow this."""


def comb2(m: int) -> int:
    """m choose 2 as the polynomial m(m-1)/2; 0 for m in {0, 1}."""
    return m * (m - 1) // 2


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph; adjacency stored as one bitmask per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int], *, max_vertices: int = MAX_VERTICES):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        if n > max_vertices:
            raise ValueError(f"n={n} exceeds the vertex cap {max_vertices}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...],
                 *, max_vertices: int = MAX_VERTICES) -> "Graph":
        # fast path for builders whose output is symmetric and loop-free by
        # construction; skips the per-edge validation scans
        if not 1 <= n <= max_vertices or len(rows) != n:
            raise ValueError(f"bad trusted graph shape: n={n}, rows={len(rows)}")
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", rows)
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   *, max_vertices: int = MAX_VERTICES) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, max_vertices=max_vertices)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _iter_bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        rows = [0] * self.n
        for u in range(self.n):
            for v in _iter_bits(self.adj[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph(self.n, rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


class DegreeSequence:
    """Canonical nonincreasing degree vector with entries in [0, n-1]."""

    __slots__ = ("degs",)

    def __init__(self, values: Iterable[int]):
        degs = tuple(sorted(values, reverse=True))
        n = len(degs)
        if n == 0:
            raise ValueError("degree sequence must be nonempty")
        if degs[0] > n - 1 or degs[-1] < 0:
            raise ValueError(f"entries must lie in [0, {n - 1}]: {degs}")
        object.__setattr__(self, "degs", degs)

    def __setattr__(self, name, value):
        raise AttributeError("DegreeSequence is immutable")

    @property
    def n(self) -> int:
        return len(self.degs)

    def total(self) -> int:
        return sum(self.degs)

    def __len__(self) -> int:
        return len(self.degs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degs)

    def __getitem__(self, idx):
        return self.degs[idx]

    def __eq__(self, other) -> bool:
        if isinstance(other, DegreeSequence):
            return self.degs == other.degs
        return NotImplemented

    def __lt__(self, other: "DegreeSequence") -> bool:
        return self.degs < other.degs

    def __hash__(self) -> int:
        return hash(self.degs)

    def __repr__(self) -> str:
        return f"DegreeSequence({list(self.degs)})"


@dataclass(frozen=True, slots=True)
class SpreadParams:
    """The split n = k*i + t with 1 <= t <= k; i+1 is the number of degree groups."""

    n: int
    k: int
    i: int
    t: int

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        if self.n != self.k * self.i + self.t or not 1 <= self.t <= self.k:
            raise ValueError(f"inconsistent split {self.n} != {self.k}*{self.i}+{self.t}")
        if self.i < 1:
            raise ValueError("i must be at least 1")

    @classmethod
    def from_nk(cls, n: int, k: int) -> "SpreadParams":
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
        i = -(-n // k) - 1
        return cls(n=n, k=k, i=i, t=n - k * i)


@dataclass(frozen=True, slots=True)
class ClosePair:
    """Unordered vertex pair with degree gap below the threshold in force."""

    u: int
    v: int
    gap: int

    def __post_init__(self):
        if not 0 <= self.u < self.v:
            raise ValueError(f"need 0 <= u < v, got ({self.u}, {self.v})")
        if self.gap < 0:
            raise ValueError("gap cannot be negative")


def _count_close_sorted(asc: Sequence[int], k: int) -> int:
    # Two-pointer sweep over ascending values; pairs differing by < k.
    count = 0
    left = 0
    for right in range(len(asc)):
        while asc[right] - asc[left] >= k:
            left += 1
        count += right - left
    return count


def _check_threshold(k: int) -> None:
    if k < 1:
        raise ValueError(f"threshold k must be >= 1, got {k}")


def h_k_graph(g: Graph, k: int) -> int:
    """Number of unordered vertex pairs whose degrees differ by less than k."""
    _check_threshold(k)
    return _count_close_sorted(sorted(g.degrees()), k)


def h_k_sequence(d: DegreeSequence | Sequence[int], k: int) -> int:
    """h_k evaluated on a nonincreasing degree sequence (same value as on any realization)."""
    _check_threshold(k)
    degs = d.degs if isinstance(d, DegreeSequence) else tuple(d)
    if any(degs[j] < degs[j + 1] for j in range(len(degs) - 1)):
        raise ValueError("sequence must be nonincreasing")
    return _count_close_sorted(degs[::-1], k)


def close_pairs(g: Graph, k: int) -> list[ClosePair]:
    """All close pairs of g, sorted lexicographically by (u, v)."""
    _check_threshold(k)
    degs = g.degrees()
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            gap = abs(degs[u] - degs[v])
            if gap < k:
                out.append(ClosePair(u, v, gap))
    return out


def find_close_clique(g: Graph, k: int) -> list[int]:
    """k+1 vertices whose degrees differ pairwise by less than k.

    Sorts vertices by (degree, index) and returns the first window of k+1
    consecutive vertices whose degree span is below k.  Such a window always
    exists when n > k; failing to find one indicates a bug and aborts.
    """
    _check_threshold(k)
    if g.n <= k:
        raise ValueError(f"need n > k, got n={g.n}, k={k}")
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    degs = [g.degree(v) for v in order]
    for j in range(g.n - k):
        if degs[j + k] - degs[j] < k:
            return sorted(order[j:j + k + 1])
    raise InternalInvariantError(
        f"no {k + 1} vertices with pairwise degree gaps < {k} in a graph on {g.n} "
        "vertices; this contradicts a guaranteed property"
    )


def degree_sequence_of(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees())
