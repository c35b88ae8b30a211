"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Stated runtime targets are asserted with a 5x slack factor (hardware varies);
the measured time is printed next to each criterion.  Everything mathematical
is asserted exactly -- no tolerances anywhere.
"""

import json
import os
import random
import time

import pytest

from degspread import (EnumerationConfig, comb2, construct_extremal, f0,
                       find_close_clique, h_k_graph, is_graphical, minimize_hk,
                       try_realize, verify_range)
from degspread.lemmas import random_convex_instance, run_lemma_trials
from oracles import all_graph_degree_multisets, brute_h, random_graph


def report(num: int, desc: str, ok: bool, elapsed: float | None = None) -> None:
    stamp = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"{'PASS' if ok else 'FAIL'}: criterion {num} - {desc}{stamp}")
    assert ok, f"criterion {num} failed: {desc}"


@pytest.fixture(scope="module")
def sweep12():
    t0 = time.perf_counter()
    report_ = verify_range(12)
    elapsed = time.perf_counter() - t0
    return report_, elapsed


def test_criterion_1_construction_optimality():
    t0 = time.perf_counter()
    ok = all(
        h_k_graph(construct_extremal(n, k), k) == f0(n, k)
        for n in range(2, 201)
        for k in range(1, n)
    )
    elapsed = time.perf_counter() - t0
    report(1, "h_k of the construction equals f0 for all k < n <= 200", ok, elapsed)
    assert elapsed < 10  # stated target


def test_criterion_2_conjecture_reproduction(sweep12):
    rep, elapsed = sweep12
    ok = (
        len(rep.entries) == 66
        and rep.complete
        and all(e.min_h == e.f0 for e in rep.entries)
    )
    report(2, "exhaustive sweep n_max=12: min_h equals f0 everywhere", ok, elapsed)
    assert elapsed < 600  # stated target: 10 min single-threaded


def test_criterion_3_degree_sequence_reduction_oracle(sweep12):
    rep, _ = sweep12
    by_pair = {(e.n, e.k): e.min_h for e in rep.entries}
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 8):
        multisets = all_graph_degree_multisets(n)
        for k in range(1, n):
            whole_graph_min = min(brute_h(m, k) for m in multisets)
            if whole_graph_min != by_pair[(n, k)]:
                ok = False
    elapsed = time.perf_counter() - t0
    report(3, "whole-graph minimum equals search result for every n <= 7", ok, elapsed)
    assert elapsed < 300  # stated target: 5 min


def test_criterion_4_special_case_formulas(sweep12):
    rep, _ = sweep12
    by_pair = {(e.n, e.k): e.min_h for e in rep.entries}
    ok = all(by_pair[(n, 1)] == 1 for n in range(2, 13))
    ok = ok and all(by_pair[(n, 2)] == -(-n // 2) + 1 for n in range(3, 13))
    for n in range(2, 13):
        for k in range(1, n):
            t = n - k
            if k < n <= 2 * k:
                ok = ok and by_pair[(n, k)] == comb2(k + 1) + comb2(t - 1)
            if n % k == 0:
                ok = ok and by_pair[(n, k)] == (n // k) * comb2(k) + 1
    report(4, "k=1, k=2, n<=2k, and k|n closed forms match the search", ok)


def test_criterion_5_close_clique_property():
    rng = random.Random(1905)
    t0 = time.perf_counter()
    failures = 0
    for _ in range(10_000):
        n = rng.randint(2, 64)
        g = random_graph(rng, n, rng.random())
        k = rng.randint(1, n - 1)
        try:
            got = find_close_clique(g, k)
        except Exception:
            failures += 1
            continue
        degs = [g.degree(v) for v in got]
        if len(got) != k + 1 or len(set(got)) != k + 1 or max(degs) - min(degs) >= k:
            failures += 1
    elapsed = time.perf_counter() - t0
    report(5, "close clique of k+1 vertices found on 10^4 random graphs", failures == 0,
           elapsed)


def test_criterion_6_chain_inequality_trials():
    t0 = time.perf_counter()
    verdict = run_lemma_trials("chain", trials=100_000, seed=60)
    elapsed = time.perf_counter() - t0
    report(6, "chain inequality holds on 10^5 random rational instances",
           verdict.ok, elapsed)


def test_criterion_7_convex_rearrangement_trials():
    t0 = time.perf_counter()
    verdict = run_lemma_trials("convex", trials=10_000, seed=70)
    rng = random.Random(70)
    negatives = sum(
        1 for _ in range(10_000)
        if min(random_convex_instance(rng)[1:3]) < 0
    )
    elapsed = time.perf_counter() - t0
    report(7, f"convex rearrangement holds on 10^4 instances ({negatives} with "
              "a negative coefficient)", verdict.ok and negatives > 0, elapsed)


def test_criterion_8_polynomial_grid():
    t0 = time.perf_counter()
    verdict = run_lemma_trials("poly", k_max=60)
    elapsed = time.perf_counter() - t0
    report(8, f"positivity grid k <= 60 ({verdict.trials} points), zero violations",
           verdict.ok, elapsed)
    assert elapsed < 5  # stated target: 1 s


def test_criterion_9_graphicality_cross_validation():
    rng = random.Random(1847)
    t0 = time.perf_counter()
    disagreements = 0
    for _ in range(100_000):
        n = rng.randint(1, 32)
        seq = sorted((rng.randint(0, n - 1) for _ in range(n)), reverse=True)
        verdict = is_graphical(seq)
        g = try_realize(seq)
        if verdict != (g is not None):
            disagreements += 1
        elif g is not None and sorted(g.degrees(), reverse=True) != seq:
            disagreements += 1
    elapsed = time.perf_counter() - t0
    report(9, "graphicality test agrees with realization on 10^5 sequences",
           disagreements == 0, elapsed)


@pytest.mark.skipif(not os.environ.get("DEGSPREAD_STRETCH"),
                    reason="stretch target (~3 min with 8 workers); "
                           "set DEGSPREAD_STRETCH=1 to run")
def test_stretch_sweep_n_max_14():
    t0 = time.perf_counter()
    rep = verify_range(14, parallel_width=8)
    elapsed = time.perf_counter() - t0
    ok = rep.complete and all(e.min_h == e.f0 for e in rep.entries)
    report(2, "stretch: exhaustive sweep n_max=14 with parallelism", ok, elapsed)


def test_criterion_10_parallel_determinism():
    t0 = time.perf_counter()
    blobs = {}
    for width in (1, 2, 8):
        lines = []
        for n in range(2, 11):
            for k in range(1, n):
                out = minimize_hk(EnumerationConfig(
                    n=n, k=k, bound=f0(n, k), parallel_width=width))
                lines.append(out.to_json())
        blobs[width] = "\n".join(lines)
    elapsed = time.perf_counter() - t0
    ok = blobs[1] == blobs[2] == blobs[8]
    for blob in blobs.values():
        for line in blob.splitlines():
            assert json.loads(line)["exhausted"]
    report(10, "byte-identical outcomes for parallel widths 1, 2, 8", ok, elapsed)
