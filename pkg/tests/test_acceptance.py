"""Exit criteria, one test per criterion, at the tolerances they state.

A pass/fail line per criterion is printed in the terminal summary.
"""
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from frobnum import cli, verify
from frobnum.counting import TripleCounter
from frobnum.dedekind import sigma_direct, sigma_fast, sigma_numeric_check, sigma_table
from frobnum.experiment import (
    ExperimentConfig, confirm_violations, davison_violations, emit_data, reproduce_extremes,
    run_experiment, scan_conjecture, tail_census,
)
from frobnum.numtheory import pairwise_coprime
from conftest import dp_counts

N_SAMPLES = 10000
SEED = 42


@pytest.fixture(scope="module")
def paper_run():
    t0 = time.perf_counter()
    run = run_experiment(ExperimentConfig(n=N_SAMPLES, lo=1, hi=750, seed=SEED, workers=1))
    return run, time.perf_counter() - t0


def test_c1_worked_example(capsys, criterion):
    t0 = time.perf_counter()
    code = cli.main(["compute", "7", "13", "30"])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    criterion.detail = f"{out.split(' method')[0]} in {elapsed:.3f}s"
    assert code == 0 and out.startswith("g=45 f=95")
    assert elapsed < 1.0


def test_c2_extreme_table(criterion):
    t0 = time.perf_counter()
    rows = reproduce_extremes()
    elapsed = time.perf_counter() - t0
    bad = [r for r in rows if not r.passed]
    criterion.detail = f"{len(rows) - len(bad)}/24 rows in {elapsed:.1f}s"
    assert len(rows) == 24 and not bad, bad
    assert elapsed < 300


def test_c3_oracle_equivalence(criterion):
    t0 = time.perf_counter()
    search = verify.search_vs_sieve(60)
    counts = verify.formula_vs_oracle(60)
    elapsed = time.perf_counter() - t0
    criterion.detail = (f"{search.checked} triples, {counts.checked} counts, "
                        f"{search.failed + counts.failed} mismatches, {elapsed:.0f}s")
    assert search.passed, search.failures
    assert counts.passed, counts.failures
    assert elapsed < 600


def test_c4_special_formulas(criterion):
    suites = [verify.brauer_shockley_vs_sieve(60), verify.lewin_vs_sieve(30, 4), verify.johnson_vs_sieve(60)]
    criterion.detail = ", ".join(f"{s.name} {s.checked}/{s.failed}" for s in suites)
    for s in suites:
        assert s.checked > 0 and s.passed, (s.name, s.failures)


def _assembled(t, a, b, c, tables):
    poly = (Fraction(t * t, 2 * a * b * c)
            + Fraction(t, 2) * (Fraction(1, a * b) + Fraction(1, a * c) + Fraction(1, b * c))
            + Fraction(1, 12) * (Fraction(3, a) + Fraction(3, b) + Fraction(3, c)
                                 + Fraction(a, b * c) + Fraction(b, a * c) + Fraction(c, a * b)))
    ta, tb, tc = tables
    return poly + ta[-t] + tb[-t] + tc[-t]


def test_c5_dedekind_closure(criterion):
    triples = [t for t in itertools.combinations(range(1, 31), 3) if pairwise_coprime(*t)]
    counted = 0
    for a, b, c in triples:
        period = a * b * c
        ways = dp_counts(period - 1, (a, b, c))
        if c <= 15:
            tables = (sigma_table(b, c, a), sigma_table(a, c, b), sigma_table(a, b, c))
            for t in range(period):
                assert _assembled(t, a, b, c, tables) == ways[t], (a, b, c, t)
        else:
            cnt = TripleCounter(a, b, c)
            for t in range(period):
                assert cnt.nonneg(t) == ways[t], (a, b, c, t)
        counted += period

    pairs = 0
    for c in range(1, 51):
        units = [x for x in range(1, c + 1) if math.gcd(x, c) == 1]
        for a, b in itertools.product(units, repeat=2):
            for t in range(c):
                assert sigma_fast(t, a, b, c) == sigma_direct(t, a, b, c), (t, a, b, c)
                pairs += 1

    rng = random.Random(2024)
    worst = 0.0
    for _ in range(1000):
        c = rng.randint(1, 120)
        a, b = rng.randint(1, 400), rng.randint(1, 400)
        while math.gcd(a, c) != 1:
            a += 1
        while math.gcd(b, c) != 1:
            b += 1
        worst = max(worst, sigma_numeric_check(rng.randint(-1000, 1000), a, b, c, 30))
    criterion.detail = (f"{len(triples)} triples / {counted} counts exact, "
                        f"{pairs} fast=direct, numeric max err {worst:.1e}")
    assert worst < 1e-6


def test_c6_statistics(paper_run, criterion):
    run, elapsed = paper_run
    s = run.summary
    above3 = tail_census(run.records, 3)
    criterion.detail = (f"mean {s.mean:.3f} median {s.median:.3f} min {s.min:.3f} "
                        f"Q1 {s.q1:.3f} Q3 {s.q3:.3f} R>3: {above3}, {elapsed:.0f}s")
    assert s.n == N_SAMPLES
    assert 2.18 <= s.mean <= 2.38
    assert 1.96 <= s.median <= 2.07
    assert s.min >= 1.732
    assert 1.89 <= s.q1 <= 1.99
    assert 2.25 <= s.q3 <= 2.35
    assert 800 <= above3 <= 1160
    assert elapsed < 1800


def test_c7_conjecture_scan(paper_run, criterion):
    run, _ = paper_run
    violators = scan_conjecture(run.records)
    confirmed = [v for v in confirm_violations(violators)
                 if v["sieve_f"] == v["f"] and v["verdict"] != "admissible"]
    criterion.detail = f"{len(violators)} records with f >= z^(5/4), {len(confirmed)} misclassified"
    for v in violators:
        print("finding: f >= z^(5/4) at", (v.a, v.b, v.c), v.f)
    assert not confirmed


def test_c8_davison_floor(paper_run, criterion):
    run, _ = paper_run
    below = davison_violations(run.records)
    criterion.detail = f"{len(below)} of {len(run.records)} records below sqrt(3abc)"
    assert not below


def test_c9_determinism(paper_run, tmp_path, criterion):
    run, _ = paper_run
    other = run_experiment(ExperimentConfig(n=N_SAMPLES, lo=1, hi=750, seed=SEED, workers=2))
    for fmt in ("csv", "json"):
        a = emit_data(run.records, fmt, tmp_path / f"w1-{fmt}", run.metadata)
        b = emit_data(other.records, fmt, tmp_path / f"w2-{fmt}", other.metadata)
        assert [p.name for p in a] == [p.name for p in b]
        for pa, pb in zip(a, b):
            assert pa.read_bytes() == pb.read_bytes(), pa.name
    criterion.detail = "workers 1 vs 2: byte-identical csv and json outputs"
