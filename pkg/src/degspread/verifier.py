"""Sweep orchestration, interval-count certificates, and the five-block family search."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .degseq import EnumerationConfig, SearchOutcome, minimize_hk
from .extremal import f0
from .graphcore import DegreeSequence, Graph, h_k_sequence
from .lemmas import GroupProfile, profile_from_graph


@dataclass(slots=True)
class VerificationEntry:
    n: int
    k: int
    f0: int
    min_h: int | None
    conjecture_holds: bool
    exhausted: bool
    refuted: bool
    num_minimizers: int
    nodes_visited: int
    wall_time_ms: float
    witness: DegreeSequence | None

    @classmethod
    def from_outcome(cls, outcome: SearchOutcome) -> "VerificationEntry":
        return cls(
            n=outcome.n,
            k=outcome.k,
            f0=f0(outcome.n, outcome.k),
            min_h=outcome.min_h,
            conjecture_holds=outcome.conjecture_holds,
            exhausted=outcome.exhausted,
            refuted=outcome.refuted,
            num_minimizers=outcome.num_minimizers,
            nodes_visited=outcome.nodes_visited,
            wall_time_ms=outcome.wall_time_ms,
            witness=outcome.witnesses[0] if outcome.witnesses else None,
        )

    @property
    def holds_label(self) -> str:
        """true / false / unknown; false only for a verified counterexample."""
        if self.refuted:
            return "false"
        return "true" if self.conjecture_holds else "unknown"

    def csv_row(self) -> str:
        min_h = "" if self.min_h is None else self.min_h
        return (f"{self.n},{self.k},{self.f0},{min_h},{self.holds_label},"
                f"{self.nodes_visited},{self.wall_time_ms:.0f}")

    def to_json_dict(self, *, include_timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "f0": self.f0,
            "min_h": self.min_h,
            "conjecture_holds": self.conjecture_holds,
            "exhausted": self.exhausted,
            "witness": list(self.witness.degs) if self.witness else None,
            "nodes_visited": self.nodes_visited,
        }
        if include_timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out


CSV_HEADER = "n,k,f0,min_h,holds,nodes,ms"


@dataclass(slots=True)
class VerificationReport:
    n_max: int
    k_filter: int | None
    entries: list[VerificationEntry] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return all(e.exhausted for e in self.entries)

    @property
    def all_hold(self) -> bool:
        return self.complete and all(e.conjecture_holds for e in self.entries)

    @property
    def any_refuted(self) -> bool:
        return any(e.refuted for e in self.entries)

    def totals(self) -> dict:
        return {
            "pairs": len(self.entries),
            "verified": sum(e.conjecture_holds for e in self.entries),
            "refuted": sum(e.refuted for e in self.entries),
            "inconclusive": sum(not e.exhausted for e in self.entries),
            "nodes_visited": sum(e.nodes_visited for e in self.entries),
            "wall_time_ms": sum(e.wall_time_ms for e in self.entries),
        }

    def to_json_dict(self, *, include_timing: bool = False) -> dict:
        totals = self.totals()
        if not include_timing:
            totals.pop("wall_time_ms")
        return {
            "n_max": self.n_max,
            "k": self.k_filter,
            "entries": [e.to_json_dict(include_timing=include_timing) for e in self.entries],
            "totals": totals,
        }

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER] + [e.csv_row() for e in self.entries]) + "\n"


def verify_range(
    n_max: int,
    *,
    k: int | None = None,
    node_limit: int | None = None,
    parallel_width: int = 1,
    witness_limit: int = 32,
    on_entry: Callable[[VerificationEntry], None] | None = None,
    skip: Callable[[int, int], bool] | None = None,
) -> VerificationReport:
    """Run the minimum-h_k search for every pair 1 <= k < n <= n_max.

    Each search is pruned against the attainable bound f0(n, k); the entry is
    conclusive only when the search exhausted its space.  on_entry fires after
    each pair so long sweeps can stream results to disk; skip(n, k) -> True
    omits a pair (used to resume an interrupted sweep).
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    report = VerificationReport(n_max=n_max, k_filter=k)
    for n in range(2, n_max + 1):
        ks = [k] if k is not None else range(1, n)
        for kk in ks:
            if not 1 <= kk < n:
                continue
            if skip is not None and skip(n, kk):
                continue
            cfg = EnumerationConfig(
                n=n, k=kk, bound=f0(n, kk), node_limit=node_limit,
                parallel_width=parallel_width, witness_limit=witness_limit,
            )
            entry = VerificationEntry.from_outcome(minimize_hk(cfg))
            report.entries.append(entry)
            if on_entry is not None:
                on_entry(entry)
    return report


def check_lemma_l2_profile(g: Graph, k: int,
                           interval_sizes: Sequence[int] | None = None) -> GroupProfile:
    """Count vertices per degree interval (default layout: i intervals of k
    degrees, then one of t).

    The returned profile's all_groups_at_least_t flag tells whether every
    interval holds at least t vertices; any graph beating f0 would have to,
    so False certifies the graph is not a counterexample candidate."""
    return profile_from_graph(g, k, interval_sizes)


# ---------------------------------------------------------------------------
# Five-block candidate-counterexample family
# ---------------------------------------------------------------------------

FREE_PARTS = ("b3_inside", "b2_b4", "b4_b5", "b1_b5")

# (block, block) -> fixed relation; blocks are 1-based B1..B5
_FIXED_INSIDE = {1: "complete", 2: "complete", 4: "empty", 5: "empty"}
_FIXED_PAIRS = {
    (1, 2): "complete", (1, 3): "complete", (1, 4): "complete", (2, 3): "complete",
    (3, 5): "empty", (2, 5): "empty", (3, 4): "empty",
}
_FREE_PAIR_OF = {"b2_b4": (2, 4), "b4_b5": (4, 5), "b1_b5": (1, 5)}


class FamilyGridTooLarge(ValueError):
    """The requested block-family grid exceeds the configured graph budget."""


@dataclass(frozen=True)
class BlockFamilySpec:
    """One concrete member of the five-block family.

    sizes are (b1..b5); free_parts maps each unspecified slot to "empty",
    "complete", or, for b3_inside only, ("threshold", bits) where bits[j] = 1
    makes the j-th added vertex dominate the earlier ones.
    """

    sizes: tuple[int, int, int, int, int]
    free_parts: Mapping[str, object]

    def __post_init__(self):
        if len(self.sizes) != 5 or any(b < 0 for b in self.sizes):
            raise ValueError("sizes must be five nonnegative integers")
        unknown = set(self.free_parts) - set(FREE_PARTS)
        if unknown:
            raise ValueError(f"unknown free parts: {sorted(unknown)}")
        for part in FREE_PARTS:
            choice = self.free_parts.get(part, "empty")
            if choice in ("empty", "complete"):
                continue
            if (part == "b3_inside" and isinstance(choice, tuple)
                    and choice[0] == "threshold" and len(choice) == 2
                    and len(choice[1]) == self.sizes[2]):
                continue
            raise ValueError(f"bad choice for {part}: {choice!r}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def build_graph(self) -> Graph:
        n = self.n
        if n < 1:
            raise ValueError("empty vertex set")
        starts = []
        acc = 0
        for b in self.sizes:
            starts.append(acc)
            acc += b
        members = [range(starts[j], starts[j] + self.sizes[j]) for j in range(5)]
        edges = []
        for j in range(5):
            rel = self._inside_relation(j + 1)
            verts = list(members[j])
            if rel == "complete":
                edges.extend(itertools.combinations(verts, 2))
            elif isinstance(rel, tuple):
                bits = rel[1]
                for idx, v in enumerate(verts):
                    if bits[idx]:
                        edges.extend((u, v) for u in verts[:idx])
        for (bi, bj), rel in self._pair_relations().items():
            if rel == "complete":
                edges.extend((u, v) for u in members[bi - 1] for v in members[bj - 1])
        return Graph.from_edges(n, edges)

    def _inside_relation(self, block: int):
        if block in _FIXED_INSIDE:
            return _FIXED_INSIDE[block]
        return self.free_parts.get("b3_inside", "empty")

    def _pair_relations(self) -> dict[tuple[int, int], str]:
        rel = dict(_FIXED_PAIRS)
        for part, pair in _FREE_PAIR_OF.items():
            choice = self.free_parts.get(part, "empty")
            rel[pair] = choice  # only empty/complete are legal here
        return rel


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _threshold_bit_choices(b3: int) -> list[tuple[int, ...]]:
    if b3 <= 1:
        return [(0,) * b3]
    # first added vertex has no predecessors; its bit is immaterial
    return [(0,) + bits for bits in itertools.product((0, 1), repeat=b3 - 1)]


def search_block_family(
    n: int,
    k: int,
    *,
    choices: Sequence[str] = ("empty", "complete"),
    threshold_interior: bool = False,
    limit: int = 2_000_000,
    witness_limit: int = 32,
) -> SearchOutcome:
    """Exhaust the five-block family on n vertices: all size compositions and
    all configured choices for the unspecified parts; returns the family
    minimum of h_k with minimizing degree sequences as witnesses.

    threshold_interior additionally sweeps every threshold graph on B3 (an
    extension beyond the fixed empty/complete choices).  Raises
    FamilyGridTooLarge when the grid would exceed `limit` graphs.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    for c in choices:
        if c not in ("empty", "complete"):
            raise ValueError(f"choices must be empty/complete, got {c!r}")
    t0 = time.perf_counter()

    comps = list(_compositions(n, 5))
    per_pair = len(choices) ** 3
    total = 0
    for sizes in comps:
        inside = len(choices) + (len(_threshold_bit_choices(sizes[2])) if threshold_interior else 0)
        total += per_pair * inside
    if total > limit:
        raise FamilyGridTooLarge(
            f"family grid for n={n} needs {total} graphs (> limit {limit}); "
            "restrict choices or raise the limit")

    best: int | None = None
    count = 0
    wits: list[tuple[int, ...]] = []
    seen_at_best: set[tuple[int, ...]] = set()
    evaluated = 0
    for sizes in comps:
        inside_choices: list[object] = list(choices)
        if threshold_interior:
            inside_choices += [("threshold", bits) for bits in _threshold_bit_choices(sizes[2])]
        for inside in inside_choices:
            for c24 in choices:
                for c45 in choices:
                    for c15 in choices:
                        spec = BlockFamilySpec(
                            sizes=sizes,
                            free_parts={"b3_inside": inside, "b2_b4": c24,
                                        "b4_b5": c45, "b1_b5": c15},
                        )
                        g = spec.build_graph()
                        evaluated += 1
                        degs = tuple(sorted(g.degrees(), reverse=True))
                        h = h_k_sequence(degs, k)
                        if best is None or h < best:
                            best = h
                            count = 1
                            wits = [degs] if witness_limit > 0 else []
                            seen_at_best = {degs}
                        elif h == best and degs not in seen_at_best:
                            count += 1
                            seen_at_best.add(degs)
                            if len(wits) < witness_limit:
                                wits.append(degs)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    return SearchOutcome(
        n=n,
        k=k,
        min_h=best,
        witnesses=tuple(DegreeSequence(w) for w in wits),
        num_minimizers=count,
        nodes_visited=evaluated,
        exhausted=True,
        bound=None,
        wall_time_ms=wall_ms,
    )
