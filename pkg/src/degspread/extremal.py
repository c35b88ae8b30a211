"""Closed-form minimum close-pair count and the layered graph that attains it.

For n = k*i + t (1 <= t <= k) the graph is built from i+1 vertex groups
V_0..V_i sized t-1, k, ..., k+1, ..., k (the k+1 sits at index floor((i+1)/2)),
with an edge between two distinct vertices exactly when their group indices
sum to more than i.  Every vertex of V_j then has degree k*j, so the close
pairs are precisely the within-group pairs and their count is f0(n, k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphcore import Graph, SpreadParams, comb2


def f0(n: int, k: int) -> int:
    """Conjectured minimum of the close-pair count over all n-vertex graphs.

    f0(n,k) = (ceil(n/k) - 2) * C(k,2) + C(k+1,2) + C(n - k*(ceil(n/k) - 1) - 1, 2).
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    ceil_nk = -(-n // k)
    return (ceil_nk - 2) * comb2(k) + comb2(k + 1) + comb2(n - k * (ceil_nk - 1) - 1)


@dataclass(frozen=True, slots=True)
class ExtremalBlueprint:
    """Group sizes of the extremal construction: [t-1, k, ..., k+1, ..., k]."""

    params: SpreadParams
    group_sizes: tuple[int, ...]
    special_index: int

    def __post_init__(self):
        p = self.params
        if sum(self.group_sizes) != p.n:
            raise ValueError("group sizes must sum to n")
        if len(self.group_sizes) != p.i + 1:
            raise ValueError("expected i+1 groups")

    def within_group_pairs(self) -> int:
        """Sum of C(size, 2) over the groups; equals f0(n, k)."""
        return sum(comb2(x) for x in self.group_sizes)

    def vertex_ranges(self) -> list[tuple[int, int]]:
        """Half-open vertex index range [start, stop) of each group, V_0 first."""
        ranges = []
        start = 0
        for size in self.group_sizes:
            ranges.append((start, start + size))
            start += size
        return ranges

    def to_json_dict(self) -> dict:
        p = self.params
        return {
            "n": p.n,
            "k": p.k,
            "i": p.i,
            "t": p.t,
            "group_sizes": list(self.group_sizes),
            "f0": f0(p.n, p.k),
        }


def blueprint(n: int, k: int) -> ExtremalBlueprint:
    p = SpreadParams.from_nk(n, k)
    special = (p.i + 1) // 2
    sizes = [k] * (p.i + 1)
    sizes[0] = p.t - 1
    sizes[special] = k + 1
    return ExtremalBlueprint(params=p, group_sizes=tuple(sizes), special_index=special)


def construct_extremal(n: int, k: int) -> Graph:
    """Build the layered extremal graph; h_k of the result equals f0(n, k)."""
    bp = blueprint(n, k)
    i = bp.params.i
    ranges = bp.vertex_ranges()

    # group_mask[j] = bitmask of the vertices of group j
    group_mask = []
    for start, stop in ranges:
        group_mask.append(((1 << (stop - start)) - 1) << start if stop > start else 0)

    # suffix_mask[j] = vertices in groups j..i (edge rule: g + j > i  <=>  g >= i - j + 1)
    suffix_mask = [0] * (i + 2)
    for j in range(i, -1, -1):
        suffix_mask[j] = suffix_mask[j + 1] | group_mask[j]

    rows = [0] * n
    for j, (start, stop) in enumerate(ranges):
        lowest_partner = max(i - j + 1, 0)
        base = suffix_mask[lowest_partner] if lowest_partner <= i else 0
        for v in range(start, stop):
            rows[v] = base & ~(1 << v)
    return Graph._trusted(n, tuple(rows))
