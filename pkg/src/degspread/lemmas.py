"""Exact-arithmetic checkers for the inequality toolkit behind the verification.

Every check_* function evaluates one standalone inequality on a concrete
instance and returns True when it holds.  The inequalities are theorems on
their stated domains, so a False return (or a nonempty violation list from
the grid checker) means a transcription or implementation bug; tests treat
that as a hard failure.  All arithmetic is integer or Fraction, never float.

The polynomial coefficients live in one table (POLYNOMIALS) shared by the
checkers, the grid sweep, and the version checksum, so there is a single
copy to audit.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .degseq import is_graphical, realize
from .extremal import f0
from .graphcore import Graph, SpreadParams, comb2

Number = int | Fraction


class LemmaPreconditionError(ValueError):
    """The instance does not satisfy the hypotheses of the inequality."""


# ---------------------------------------------------------------------------
# Polynomial coefficient tables, keyed by (e_k, e_t, e_p1, e_p2) exponents.
#
# two_deficit_low / two_deficit_high: twice the deficit subtracted from the
#   within-group floor f0 in the two branches (low: p1+p2 <= k-t,
#   high: p1+p2 >= k-t) of the same-group pair bound.
# main_cubic: the positivity target for the branch p1+p2 >= k-t.
# second_cubic: the positivity target for the branch p1+p2 <= k-t.
# main_cubic_dk: d(main_cubic)/dk, checked negative at k = t+p1 and
#   k = t+p1+p2.
# ---------------------------------------------------------------------------

POLYNOMIALS: dict[str, dict[tuple[int, int, int, int], int]] = {
    "two_deficit_low": {
        (2, 0, 0, 0): -1, (1, 0, 1, 0): 2, (1, 0, 0, 1): 2, (1, 1, 0, 0): 2,
        (1, 0, 0, 0): 1, (0, 0, 2, 0): -1, (0, 1, 1, 0): -2, (0, 0, 1, 0): 1,
        (0, 0, 0, 2): -1, (0, 1, 0, 1): -2, (0, 0, 0, 1): 1, (0, 2, 0, 0): -1,
        (0, 1, 0, 0): -1, (0, 0, 0, 0): 2,
    },
    "two_deficit_high": {
        (2, 0, 0, 0): -1, (1, 0, 1, 0): 2, (1, 0, 0, 1): 2, (1, 1, 0, 0): 2,
        (1, 0, 0, 0): 3, (0, 0, 2, 0): -1, (0, 1, 1, 0): -2, (0, 0, 1, 0): -1,
        (0, 0, 0, 2): -1, (0, 1, 0, 1): -2, (0, 0, 0, 1): -1, (0, 2, 0, 0): -1,
        (0, 1, 0, 0): -3, (0, 0, 0, 0): 2,
    },
    "main_cubic": {
        (3, 0, 0, 0): 2, (2, 1, 0, 0): -4, (2, 0, 1, 0): -4, (2, 0, 0, 1): -5,
        (2, 0, 0, 0): -9, (1, 2, 0, 0): 2, (1, 1, 1, 0): 4, (1, 1, 0, 1): 6,
        (1, 1, 0, 0): 12, (1, 0, 2, 0): 2, (1, 0, 1, 1): 2, (1, 0, 1, 0): 8,
        (1, 0, 0, 2): 4, (1, 0, 0, 1): 11, (1, 0, 0, 0): 9, (0, 2, 0, 1): 1,
        (0, 2, 0, 0): -1, (0, 1, 1, 0): -4, (0, 1, 0, 1): -7, (0, 1, 0, 0): -9,
        (0, 0, 2, 1): -1, (0, 0, 2, 0): -3, (0, 0, 1, 2): 2, (0, 0, 1, 1): 1,
        (0, 0, 1, 0): -3, (0, 0, 0, 3): -1, (0, 0, 0, 2): -4, (0, 0, 0, 1): -3,
    },
    "second_cubic": {
        (3, 0, 0, 0): 2, (2, 1, 0, 0): -4, (2, 0, 1, 0): -4, (2, 0, 0, 1): -5,
        (2, 0, 0, 0): -5, (1, 2, 0, 0): 2, (1, 1, 1, 0): 4, (1, 1, 0, 1): 6,
        (1, 1, 0, 0): 8, (1, 0, 2, 0): 2, (1, 0, 1, 1): 2, (1, 0, 1, 0): 4,
        (1, 0, 0, 2): 4, (1, 0, 0, 1): 5, (1, 0, 0, 0): 3, (0, 2, 0, 1): 1,
        (0, 2, 0, 0): -1, (0, 1, 1, 0): -4, (0, 1, 0, 1): -5, (0, 1, 0, 0): -3,
        (0, 0, 2, 1): -1, (0, 0, 2, 0): -3, (0, 0, 1, 2): 2, (0, 0, 1, 1): 3,
        (0, 0, 1, 0): 3, (0, 0, 0, 3): -1, (0, 0, 0, 2): -2, (0, 0, 0, 1): 3,
    },
    "main_cubic_dk": {
        (2, 0, 0, 0): 6, (1, 0, 1, 0): -8, (1, 0, 0, 1): -10, (1, 1, 0, 0): -8,
        (1, 0, 0, 0): -18, (0, 2, 0, 0): 2, (0, 1, 1, 0): 4, (0, 1, 0, 1): 6,
        (0, 1, 0, 0): 12, (0, 0, 2, 0): 2, (0, 0, 1, 1): 2, (0, 0, 1, 0): 8,
        (0, 0, 0, 2): 4, (0, 0, 0, 1): 11, (0, 0, 0, 0): 9,
    },
}


def poly_eval(name: str, k: int, t: int, p1: int, p2: int) -> int:
    table = POLYNOMIALS[name]
    return sum(c * k**ek * t**et * p1**e1 * p2**e2
               for (ek, et, e1, e2), c in table.items())


def formula_table_checksum() -> str:
    """Stable digest of the polynomial tables, embedded in --version output."""
    canon = repr(sorted((name, sorted(tbl.items())) for name, tbl in POLYNOMIALS.items()))
    return hashlib.sha256(canon.encode()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# Chain inequality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainSplit:
    """Vectors a_0..a_i and b_0..b_i with the boundary zeros a_0 = b_i = 0."""

    a: tuple[Number, ...]
    b: tuple[Number, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have equal length")
        if len(self.a) < 3:
            raise ValueError("need i >= 2, i.e. vectors of length >= 3")
        if self.a[0] != 0:
            raise ValueError("a_0 must be 0")
        if self.b[-1] != 0:
            raise ValueError("b_i must be 0")
        if any(x < 0 for x in self.a) or any(x < 0 for x in self.b):
            raise ValueError("entries must be nonnegative")

    @property
    def i(self) -> int:
        return len(self.a) - 1


def check_chain_inequality(s: ChainSplit) -> bool:
    """sum_j b_j * a_{j+1}  >=  min_j (b_j + a_j)(b_{j+1} + a_{j+1})."""
    i = s.i
    lhs = sum(s.b[j] * s.a[j + 1] for j in range(i))
    rhs = min((s.b[j] + s.a[j]) * (s.b[j + 1] + s.a[j + 1]) for j in range(i))
    return lhs >= rhs


# ---------------------------------------------------------------------------
# Convex rearrangement inequality
# ---------------------------------------------------------------------------

def _theta_from_table(table: Mapping[int, Number],
                      needed: Iterable[int]) -> Callable[[int], Number]:
    keys = sorted(table)
    if keys != list(range(keys[0], keys[-1] + 1)):
        raise ValueError("theta table domain must be a contiguous integer range")
    for x in range(keys[0] + 2, keys[-1] + 1):
        if table[x] - table[x - 1] < table[x - 1] - table[x - 2]:
            raise ValueError(f"theta table is not convex at x={x}")
    missing = [x for x in needed if x not in table]
    if missing:
        raise ValueError(f"theta table does not cover required points {missing}")
    return lambda x: table[x]


def check_convex_rearrangement(
    xs: Sequence[int],
    A: int,
    B: int,
    k: int,
    theta: Callable[[int], Number] | Mapping[int, Number] | None = None,
) -> bool:
    """sum theta(x_i) >= A*theta(k) + B*theta(k+1) under A+B = len(xs) and
    A*k + B*(k+1) = sum(xs); theta convex (difference theta(x)-theta(x-1)
    increasing).  A or B may be negative.  Default theta is x(x-1)/2."""
    xs = list(xs)
    if A + B != len(xs):
        raise ValueError(f"constraint A+B=len(xs) violated: {A}+{B} != {len(xs)}")
    if A * k + B * (k + 1) != sum(xs):
        raise ValueError(
            f"constraint A*k+B*(k+1)=sum(xs) violated: {A * k + B * (k + 1)} != {sum(xs)}")
    needed = list(xs)
    if A != 0:
        needed.append(k)
    if B != 0:
        needed.append(k + 1)
    if theta is None:
        fn: Callable[[int], Number] = comb2
    elif callable(theta):
        fn = theta
    else:
        fn = _theta_from_table(theta, needed)
    lhs = sum(fn(x) for x in xs)
    rhs = (A * fn(k) if A != 0 else 0) + (B * fn(k + 1) if B != 0 else 0)
    return lhs >= rhs


# ---------------------------------------------------------------------------
# Degree-interval group profiles
# ---------------------------------------------------------------------------

def default_interval_sizes(params: SpreadParams) -> tuple[int, ...]:
    """The fixed layout: i intervals of k possible degrees, then one of t."""
    return (params.k,) * params.i + (params.t,)


def degree_intervals(params: SpreadParams,
                     sizes: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """Inclusive (lo, hi) degree ranges of the i+1 groups, lowest degrees first."""
    sizes = tuple(sizes) if sizes is not None else default_interval_sizes(params)
    if len(sizes) != params.i + 1:
        raise ValueError(f"expected {params.i + 1} intervals, got {len(sizes)}")
    if any(not 1 <= s <= params.k for s in sizes):
        raise ValueError(f"interval sizes must lie in 1..{params.k}: {sizes}")
    if sum(sizes) != params.n:
        raise ValueError("interval sizes must cover 0..n-1 exactly")
    out = []
    lo = 0
    for s in sizes:
        out.append((lo, lo + s - 1))
        lo += s
    return out


@dataclass(frozen=True)
class GroupProfile:
    """Vertex counts per degree interval; p2/p1 are the two smallest counts minus t."""

    params: SpreadParams
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.params.i + 1:
            raise ValueError(f"expected {self.params.i + 1} counts")
        if sum(self.counts) != self.params.n:
            raise ValueError("counts must sum to n")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def p2(self) -> int:
        return min(self.counts) - self.params.t

    @property
    def p1(self) -> int:
        return sorted(self.counts)[1] - self.params.t

    @property
    def min_count(self) -> int:
        return min(self.counts)

    @property
    def all_groups_at_least_t(self) -> bool:
        """Every degree interval holds at least t vertices.

        Any graph with fewer close pairs than f0 must satisfy this for every
        interval partition, so False certifies the graph is not a
        counterexample candidate."""
        return self.p2 >= 0


def profile_from_graph(g: Graph, k: int,
                       interval_sizes: Sequence[int] | None = None) -> GroupProfile:
    params = SpreadParams.from_nk(g.n, k)
    intervals = degree_intervals(params, interval_sizes)
    counts = [0] * len(intervals)
    for d in g.degrees():
        for j, (lo, hi) in enumerate(intervals):
            if lo <= d <= hi:
                counts[j] += 1
                break
    return GroupProfile(params=params, counts=tuple(counts))


def check_group_pair_bound(profile: GroupProfile) -> bool:
    """Same-group pair count >= f0 minus the branch-dependent deficit polynomial.

    Preconditions: every group has at least t+p2 vertices with p2 >= 0 (p2 and
    p1 are read off the profile, so only p2 >= 0 needs checking)."""
    p = profile.params
    p1, p2 = profile.p1, profile.p2
    if p2 < 0:
        raise LemmaPreconditionError(
            f"smallest group has {profile.min_count} < t={p.t} vertices")
    name = "two_deficit_low" if p1 + p2 <= p.k - p.t else "two_deficit_high"
    deficit = Fraction(poly_eval(name, p.k, p.t, p1, p2), 2)
    same_pairs = sum(comb2(c) for c in profile.counts)
    return same_pairs >= f0(p.n, p.k) - deficit


def check_avg_degree_gap(
    g: Graph,
    k: int,
    interval_sizes: Sequence[int] | None = None,
    p2: int | None = None,
) -> bool:
    """Mean degree of the top group <= k*i + (mean degree of group 0) - p2 - 1,
    given every group holds at least t+p2 vertices (p2 >= 0).

    Precondition violations raise LemmaPreconditionError; an inequality
    violation returns False."""
    params = SpreadParams.from_nk(g.n, k)
    intervals = degree_intervals(params, interval_sizes)
    degs = g.degrees()
    counts = [0] * len(intervals)
    sums = [0] * len(intervals)
    for d in degs:
        for j, (lo, hi) in enumerate(intervals):
            if lo <= d <= hi:
                counts[j] += 1
                sums[j] += d
                break
    if p2 is None:
        p2 = min(counts) - params.t
    if p2 < 0:
        raise LemmaPreconditionError("p2 must be nonnegative")
    if min(counts) < params.t + p2:
        raise LemmaPreconditionError(
            f"some group has {min(counts)} < t+p2 = {params.t + p2} vertices")
    x = Fraction(sums[0], counts[0])
    y = Fraction(sums[-1], counts[-1])
    return y <= k * params.i + x - p2 - 1


def cross_bound_preconditions(k: int, t: int, p1: int, p2: int) -> None:
    """Hypotheses of the cross-group close-pair bound; raises on violation.

    The denominator guard is defensive: a profile read off an actual graph
    always has p2 <= k-2 (pigeonhole over the i+1 groups), which makes
    2k - p2 - 3 positive for k >= 2, but direct callers can pass anything."""
    if p2 < 0:
        raise LemmaPreconditionError(f"smallest group has t+p2 = {t + p2} < t = {t} vertices")
    if p1 < p2:
        raise LemmaPreconditionError("p1 must be at least p2")
    denom = 2 * k - p2 - 3
    if denom <= 0:
        raise LemmaPreconditionError(f"2k - p2 - 3 = {denom} is not positive")


def check_cross_close_bound(g: Graph, k: int) -> bool:
    """Close pairs spanning two different groups number at least
    (t+p1)(t+p2)(p2+1) / (2k - p2 - 3), under the fixed interval layout,
    group minima t+p2 <= t+p1 with p2 >= 0, and 2k - p2 - 3 > 0."""
    params = SpreadParams.from_nk(g.n, k)
    intervals = degree_intervals(params)
    profile = profile_from_graph(g, k)
    p1, p2 = profile.p1, profile.p2
    cross_bound_preconditions(k, params.t, p1, p2)
    denom = 2 * k - p2 - 3
    group_of = [0] * g.n
    for j, (lo, hi) in enumerate(intervals):
        for d in range(lo, hi + 1):
            group_of[d] = j
    degs = g.degrees()
    cross = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if abs(degs[u] - degs[v]) < k and group_of[degs[u]] != group_of[degs[v]]:
                cross += 1
    t = params.t
    return cross >= Fraction((t + p1) * (t + p2) * (p2 + 1), denom)


# ---------------------------------------------------------------------------
# Exhaustive integer-grid positivity checks
# ---------------------------------------------------------------------------

def check_theorem5_polynomial(k_max: int = 60) -> list[tuple]:
    """Exhaustive positivity sweep over 3 <= k <= k_max, ceil(2k/3) <= t < k,
    0 <= p2 <= p1 <= k-t.

    Checks main_cubic > 0 on the branch p1+p2 >= k-t, second_cubic > 0 on the
    branch p1+p2 <= k-t, and main_cubic_dk < 0 at k = t+p1 and k = t+p1+p2
    (the extreme points of the admissible k-range for the first branch).
    Returns every violating tuple (kind, k, t, p1, p2, value); expected empty.
    """
    violations: list[tuple] = []
    deriv_seen: set[tuple[int, int, int]] = set()
    for k in range(3, k_max + 1):
        t_min = -(-2 * k // 3)
        for t in range(t_min, k):
            for p1 in range(k - t + 1):
                for p2 in range(p1 + 1):
                    s = p1 + p2
                    if s >= k - t:
                        v = poly_eval("main_cubic", k, t, p1, p2)
                        if v <= 0:
                            violations.append(("main_cubic", k, t, p1, p2, v))
                        if (t, p1, p2) not in deriv_seen:
                            deriv_seen.add((t, p1, p2))
                            for kk in (t + p1, t + p1 + p2):
                                dv = poly_eval("main_cubic_dk", kk, t, p1, p2)
                                if dv >= 0:
                                    violations.append(("main_cubic_dk", kk, t, p1, p2, dv))
                    if s <= k - t:
                        v = poly_eval("second_cubic", k, t, p1, p2)
                        if v <= 0:
                            violations.append(("second_cubic", k, t, p1, p2, v))
    return violations


# ---------------------------------------------------------------------------
# Random instance generators and trial runners (shared by tests and the CLI)
# ---------------------------------------------------------------------------

@dataclass
class LemmaVerdict:
    lemma: str
    trials: int
    seed: int | None
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "trials": self.trials,
            "seed": self.seed,
            "ok": self.ok,
            "violations": [repr(v) for v in self.violations[:50]],
        }


def random_chain_split(rng: random.Random, max_i: int = 10,
                       max_numerator: int = 40, max_denominator: int = 8) -> ChainSplit:
    i = rng.randint(2, max_i)

    def rand_frac() -> Fraction:
        return Fraction(rng.randint(0, max_numerator), rng.randint(1, max_denominator))

    a = (Fraction(0),) + tuple(rand_frac() for _ in range(i))
    b = tuple(rand_frac() for _ in range(i)) + (Fraction(0),)
    return ChainSplit(a=a, b=b)


def random_convex_table(rng: random.Random, lo: int, hi: int) -> dict[int, int]:
    table = {lo: rng.randint(-10, 10)}
    delta = rng.randint(-10, 10)
    for x in range(lo + 1, hi + 1):
        table[x] = table[x - 1] + delta
        delta += rng.randint(0, 6)
    return table


def random_convex_instance(rng: random.Random):
    """(xs, A, B, k, theta) satisfying both linear constraints; negative A or B
    arises whenever k falls outside the average of xs."""
    m = rng.randint(1, 8)
    xs = [rng.randint(-4, 12) for _ in range(m)]
    k = rng.randint(min(xs) - 3, max(xs) + 3)
    B = sum(xs) - m * k
    A = m - B
    if rng.random() < 0.5:
        theta = None  # default x(x-1)/2
    else:
        pts = xs + [k, k + 1]
        theta = random_convex_table(rng, min(pts), max(pts))
    return xs, A, B, k, theta


def random_group_profile(rng: random.Random, max_k: int = 8, max_i: int = 6) -> GroupProfile:
    k = rng.randint(1, max_k)
    i = rng.randint(1, max_i)
    t = rng.randint(1, k)
    n = k * i + t
    counts = [t] * (i + 1)
    for _ in range(n - (i + 1) * t):
        counts[rng.randrange(i + 1)] += 1
    return GroupProfile(params=SpreadParams(n=n, k=k, i=i, t=t), counts=tuple(counts))


def random_spread_graph(rng: random.Random, max_attempts: int = 400) -> tuple[Graph, int, int]:
    """Rejection-sample a graph whose degree-interval groups all hold >= t
    vertices and whose profile satisfies 2k - p2 - 3 > 0; returns (g, k, p2).

    Uniform random graphs essentially never meet the group minima, so degrees
    are drawn inside the intervals directly and kept when realizable."""
    for _ in range(max_attempts):
        k = rng.randint(2, 6)
        i = rng.randint(1, 4)
        t = rng.randint(1, k)
        n = k * i + t
        params = SpreadParams(n=n, k=k, i=i, t=t)
        counts = [t] * (i + 1)
        for _ in range(n - (i + 1) * t):
            counts[rng.randrange(i + 1)] += 1
        p2 = min(counts) - t
        if 2 * k - p2 - 3 <= 0:
            continue
        degrees: list[int] = []
        for (lo, hi), c in zip(degree_intervals(params), counts):
            degrees.extend(rng.randint(lo, hi) for _ in range(c))
        seq = sorted(degrees, reverse=True)
        if not is_graphical(seq):
            continue
        return realize(seq), k, p2
    raise RuntimeError("rejection sampling failed to find an admissible instance")


def run_lemma_trials(which: str, trials: int = 1000, seed: int = 0,
                     k_max: int = 60) -> LemmaVerdict:
    """Run one lemma suite; `which` is one of chain, convex, group-bound,
    avg-gap, cross-bound, poly."""
    rng = random.Random(seed)
    violations: list = []
    if which == "chain":
        for _ in range(trials):
            s = random_chain_split(rng)
            if not check_chain_inequality(s):
                violations.append(s)
    elif which == "convex":
        for _ in range(trials):
            xs, A, B, k, theta = random_convex_instance(rng)
            if not check_convex_rearrangement(xs, A, B, k, theta):
                violations.append((xs, A, B, k))
    elif which == "group-bound":
        for _ in range(trials):
            prof = random_group_profile(rng)
            if not check_group_pair_bound(prof):
                violations.append(prof)
    elif which == "avg-gap":
        for _ in range(trials):
            g, k, p2 = random_spread_graph(rng)
            if not check_avg_degree_gap(g, k, p2=p2):
                violations.append((g.degrees(), k, p2))
    elif which == "cross-bound":
        for _ in range(trials):
            g, k, _ = random_spread_graph(rng)
            if not check_cross_close_bound(g, k):
                violations.append((g.degrees(), k))
    elif which == "poly":
        violations = check_theorem5_polynomial(k_max)
        grid = sum(1 for k in range(3, k_max + 1)
                   for t in range(-(-2 * k // 3), k)
                   for p1 in range(k - t + 1)
                   for p2 in range(p1 + 1))
        return LemmaVerdict(lemma=which, trials=grid, seed=None, violations=violations)
    else:
        raise ValueError(f"unknown lemma suite {which!r}")
    return LemmaVerdict(lemma=which, trials=trials, seed=seed, violations=violations)
