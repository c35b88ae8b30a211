"""Graphicality testing, realization, and the pruned minimum-h_k search.

The search minimizes the close-pair count h_k over all graphical degree
sequences of length n.  This is equivalent to minimizing over all n-vertex
graphs because h_k depends only on the degree multiset, every graph has a
graphical degree sequence, and every graphical sequence has a realization.

Enumeration is a depth-first walk over nonincreasing sequences in ascending
lexicographic order, with two sound prunings per node:

  * a lower bound on the close pairs of any completion (pairs already placed,
    plus pairs forced between placed low-degree entries and the tail, plus a
    balanced-occupancy bound on pairs within the tail) exceeding the current
    best, and
  * a relaxed graphicality test (the standard r-indexed inequalities with the
    unknown tail entries replaced by their maximum possible value).

Cuts are strictly-greater-than cuts, so every minimizing sequence is visited:
the search reports the exact minimum, the exact number of minimizers, and a
deterministic lexicographic prefix of the witness list.

Parallel runs split the tree at depth two into independent subtrees with no
shared best bound, so the merged outcome (including node counts) is identical
for every worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Sequence

from .extremal import f0
from .graphcore import DegreeSequence, Graph, InternalInvariantError, comb2

_INF = 1 << 60


def _as_nonincreasing(d: DegreeSequence | Sequence[int]) -> tuple[int, ...]:
    degs = d.degs if isinstance(d, DegreeSequence) else tuple(d)
    if not degs:
        raise ValueError("degree sequence must be nonempty")
    if any(degs[j] < degs[j + 1] for j in range(len(degs) - 1)):
        raise ValueError(f"sequence must be nonincreasing: {degs}")
    n = len(degs)
    if degs[0] > n - 1 or degs[-1] < 0:
        raise ValueError(f"entries must lie in [0, {n - 1}]: {degs}")
    return degs


def is_graphical(d: DegreeSequence | Sequence[int]) -> bool:
    """Erdos-Gallai test: even sum and the r-indexed prefix inequalities."""
    degs = _as_nonincreasing(d)
    n = len(degs)
    if sum(degs) % 2:
        return False
    prefix = [0] * (n + 1)
    for idx, x in enumerate(degs):
        prefix[idx + 1] = prefix[idx] + x
    big = n  # entries with value > r form a prefix of the sorted sequence
    for r in range(1, n + 1):
        while big > 0 and degs[big - 1] <= r:
            big -= 1
        cut = big if big > r else r
        rhs = r * (r - 1) + r * (big - r if big > r else 0) + (prefix[n] - prefix[cut])
        if prefix[r] > rhs:
            return False
    return True


def try_realize(d: DegreeSequence | Sequence[int]) -> Graph | None:
    """Havel-Hakimi construction; None when the sequence is not realizable.

    Deterministic: the highest remaining degree (ties by lowest vertex index)
    is satisfied first, connecting to the next-highest remaining vertices.
    """
    degs = _as_nonincreasing(d)
    n = len(degs)
    work = [(deg, v) for v, deg in enumerate(degs)]
    rows = [0] * n
    for _ in range(n):
        work.sort(key=lambda p: (-p[0], p[1]))
        deg, v = work[0]
        if deg == 0:
            break
        work[0] = (0, v)
        for j in range(1, deg + 1):
            dj, u = work[j]
            if dj <= 0:
                return None
            rows[v] |= 1 << u
            rows[u] |= 1 << v
            work[j] = (dj - 1, u)
    return Graph._trusted(n, tuple(rows))


def realize(d: DegreeSequence | Sequence[int]) -> Graph:
    """A graph whose degree sequence is d; rejects non-graphical input."""
    degs = _as_nonincreasing(d)
    if not is_graphical(degs):
        raise ValueError(f"sequence is not graphical: {list(degs)}")
    g = try_realize(degs)
    if g is None:
        raise InternalInvariantError(
            f"realization failed for a sequence that passed the graphicality test: {list(degs)}"
        )
    return g


def enumerate_sequences(
    n: int,
    prefix_filter: Callable[[tuple[int, ...]], bool] | None = None,
) -> Iterator[tuple[int, ...]]:
    """All nonincreasing sequences of length n over [0, n-1], ascending lexicographic.

    When prefix_filter is given it is consulted on every prefix (including
    complete sequences); returning False prunes that subtree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    prefix: list[int] = []

    def rec(remaining: int, hi: int) -> Iterator[tuple[int, ...]]:
        for v in range(hi + 1):
            prefix.append(v)
            if prefix_filter is None or prefix_filter(tuple(prefix)):
                if remaining == 1:
                    yield tuple(prefix)
                else:
                    yield from rec(remaining - 1, v)
            prefix.pop()

    return rec(n, n - 1)


@dataclass(frozen=True, slots=True)
class EnumerationConfig:
    """Search parameters.

    bound, when given, must be attainable (e.g. f0(n, k), which always is);
    it seeds the prune cut.  If no graphical sequence has h_k <= bound the
    search reports min_h None, meaning "minimum exceeds bound".
    node_limit caps admitted search nodes and forces sequential execution so
    the budget is accounted deterministically.
    """

    n: int
    k: int
    bound: int | None = None
    node_limit: int | None = None
    parallel_width: int = 1
    witness_limit: int = 32

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        if self.bound is not None and self.bound < 0:
            raise ValueError("bound must be nonnegative")
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be nonnegative")
        if self.parallel_width < 1:
            raise ValueError("parallel_width must be at least 1")
        if self.witness_limit < 0:
            raise ValueError("witness_limit must be nonnegative")


@dataclass(slots=True)
class SearchOutcome:
    """Result of minimize_hk.

    exhausted means the whole space was covered: min_h is then the true
    minimum of h_k over graphical sequences of length n (or, if min_h is
    None, every graphical sequence has h_k above the configured bound).
    witnesses is a lexicographic prefix of the minimizing sequences, capped
    at the configured witness_limit; num_minimizers is the exact count.
    """

    n: int
    k: int
    min_h: int | None
    witnesses: tuple[DegreeSequence, ...]
    num_minimizers: int
    nodes_visited: int
    exhausted: bool
    bound: int | None
    wall_time_ms: float

    @property
    def conjecture_holds(self) -> bool:
        target = f0(self.n, self.k)
        if not self.exhausted:
            return False
        if self.min_h is not None:
            return self.min_h >= target
        return self.bound is not None and self.bound >= target

    @property
    def refuted(self) -> bool:
        """True when a graphical sequence with h_k below f0 was found."""
        return self.min_h is not None and self.min_h < f0(self.n, self.k)

    def to_json_dict(self, *, include_timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "f0": f0(self.n, self.k),
            "min_h": self.min_h,
            "conjecture_holds": self.conjecture_holds,
            "witnesses": [list(w.degs) for w in self.witnesses],
            "nodes_visited": self.nodes_visited,
            "exhausted": self.exhausted,
        }
        if include_timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out

    def to_json(self, *, include_timing: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timing=include_timing),
                          sort_keys=True, separators=(",", ":"))


def _min_forced_pairs(remaining: int, vmax: int, k: int) -> int:
    """Least close-pair count among `remaining` values drawn from [0, vmax].

    Values in the same width-k block differ by less than k, so distributing
    the entries over the ceil((vmax+1)/k) blocks as evenly as possible gives
    a valid lower bound.
    """
    if remaining < 2:
        return 0
    blocks = (vmax + k) // k
    q, r = divmod(remaining, blocks)
    return r * comb2(q + 1) + (blocks - r) * comb2(q)


def _eg_prefix_ok(vals: list[int], S: list[int], n: int, m: int) -> bool:
    """Relaxed graphicality of the length-m prefix: unknown tail entries are
    assumed equal to the last placed value, which maximizes the right-hand
    sides, so a failure here rules out every completion."""
    v_last = vals[m - 1]
    rest = n - m
    big = m
    total_m = S[m]
    for r in range(1, m + 1):
        while big > 0 and vals[big - 1] <= r:
            big -= 1
        if big > r:
            rhs = r * (r - 1) + r * (big - r) + (total_m - S[big])
        else:
            rhs = r * (r - 1) + (total_m - S[r])
        rhs += rest * (v_last if v_last < r else r)
        if S[r] > rhs:
            return False
    return True


class _BudgetStop(Exception):
    pass


class _SubtreeResult(NamedTuple):
    best: int            # _INF when no completion found
    count: int
    wits: list[tuple[int, ...]]
    nodes: int
    completed: bool
    tasks: list[tuple[int, ...]] | None


def _search_subtree(
    n: int,
    k: int,
    bound: int | None,
    witness_limit: int,
    prefix: tuple[int, ...],
    node_budget: int | None = None,
    split_depth: int | None = None,
) -> _SubtreeResult:
    bound_eff = bound if bound is not None else _INF

    vals = list(prefix)
    cnt = [0] * n
    S = [0] * (n + 1)
    P = 0
    L = 0
    for idx, v in enumerate(vals):
        hi = min(v + k - 1, n - 1)
        for w in range(v, hi + 1):
            P += cnt[w]
        cnt[v] += 1
        S[idx + 1] = S[idx] + v
        if v < k:
            L += 1

    best = _INF
    count = 0
    wits: list[tuple[int, ...]] = []
    nodes = 0
    tasks: list[tuple[int, ...]] | None = [] if split_depth is not None else None

    def rec(m: int, v_prev: int, P_here: int, L_here: int) -> None:
        nonlocal best, count, nodes
        rest_after = n - m - 1
        s_here = S[m]
        for v in range(v_prev + 1):
            hi = min(v + k - 1, n - 1)
            c_inc = 0
            for w in range(v, hi + 1):
                c_inc += cnt[w]
            p_new = P_here + c_inc
            l_new = L_here + 1 if v < k else L_here
            cut = best if best < bound_eff else bound_eff
            if p_new + rest_after * l_new + _min_forced_pairs(rest_after, v, k) > cut:
                continue
            if v == 0 and s_here & 1:
                continue  # tail is forced to zeros; parity cannot recover
            if rest_after == 0 and (s_here + v) & 1:
                continue
            vals.append(v)
            S[m + 1] = s_here + v
            if not _eg_prefix_ok(vals, S, n, m + 1):
                vals.pop()
                continue
            if node_budget is not None and nodes >= node_budget:
                vals.pop()
                raise _BudgetStop
            nodes += 1
            if tasks is not None and m + 1 == split_depth:
                tasks.append(tuple(vals))
                vals.pop()
                continue
            if rest_after == 0:
                h = p_new
                if h < best:
                    best = h
                    count = 1
                    wits.clear()
                    if witness_limit > 0:
                        wits.append(tuple(vals))
                elif h == best:
                    count += 1
                    if len(wits) < witness_limit:
                        wits.append(tuple(vals))
            else:
                cnt[v] += 1
                rec(m + 1, v, p_new, l_new)
                cnt[v] -= 1
            vals.pop()

    completed = True
    m0 = len(prefix)
    if m0 == n:
        raise ValueError("prefix already complete")
    try:
        rec(m0, vals[m0 - 1] if m0 else n - 1, P, L)
    except _BudgetStop:
        completed = False
    return _SubtreeResult(best, count, wits, nodes, completed, tasks)


def _run_task(args: tuple) -> tuple:
    n, k, bound, witness_limit, prefix = args
    r = _search_subtree(n, k, bound, witness_limit, prefix)
    return r.best, r.count, r.wits, r.nodes


class _Merge:
    __slots__ = ("best", "count", "wits", "limit")

    def __init__(self, limit: int):
        self.best = _INF
        self.count = 0
        self.wits: list[tuple[int, ...]] = []
        self.limit = limit

    def add(self, best: int, count: int, wits: list[tuple[int, ...]]) -> None:
        if best >= _INF:
            return
        if best < self.best:
            self.best = best
            self.count = count
            self.wits = list(wits[: self.limit])
        elif best == self.best:
            self.count += count
            room = self.limit - len(self.wits)
            if room > 0:
                self.wits.extend(wits[:room])


def minimize_hk(cfg: EnumerationConfig) -> SearchOutcome:
    """Exact minimum of h_k over graphical sequences of length n (see module doc)."""
    t0 = time.perf_counter()
    n, k = cfg.n, cfg.k
    sequential = cfg.parallel_width == 1 or cfg.node_limit is not None

    merge = _Merge(cfg.witness_limit)
    exhausted = True
    total_nodes = 0

    if n > 2:
        budget = cfg.node_limit
        driver = _search_subtree(n, k, cfg.bound, cfg.witness_limit, (),
                                 node_budget=budget, split_depth=2)
        total_nodes += driver.nodes
        tasks = driver.tasks or []
        if not driver.completed:
            exhausted = False
            tasks = []
    else:
        tasks = [()]

    if exhausted:
        if sequential:
            remaining = None if cfg.node_limit is None else cfg.node_limit - total_nodes
            for prefix in tasks:
                if remaining is not None and remaining <= 0:
                    exhausted = False
                    break
                r = _search_subtree(n, k, cfg.bound, cfg.witness_limit, prefix,
                                    node_budget=remaining)
                total_nodes += r.nodes
                if remaining is not None:
                    remaining -= r.nodes
                merge.add(r.best, r.count, r.wits)
                if not r.completed:
                    exhausted = False
                    break
        else:
            args = [(n, k, cfg.bound, cfg.witness_limit, p) for p in tasks]
            chunk = max(1, len(args) // (cfg.parallel_width * 4))
            with ProcessPoolExecutor(max_workers=cfg.parallel_width) as pool:
                for best, cnt_res, wits, nodes in pool.map(_run_task, args, chunksize=chunk):
                    total_nodes += nodes
                    merge.add(best, cnt_res, wits)

    wall_ms = (time.perf_counter() - t0) * 1000.0
    found = merge.best < _INF
    return SearchOutcome(
        n=n,
        k=k,
        min_h=merge.best if found else None,
        witnesses=tuple(DegreeSequence(w) for w in merge.wits),
        num_minimizers=merge.count,
        nodes_visited=total_nodes,
        exhausted=exhausted,
        bound=cfg.bound,
        wall_time_ms=wall_ms,
    )
