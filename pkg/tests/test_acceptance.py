"""Exit criteria for the package.  Each test records one PASS/FAIL line that
is printed in the pytest terminal summary."""

import io
import math
import random
import time

import numpy as np
import pytest
from scipy.stats import chisquare

from ordtrees import build_tables, count, first_codeword, iter_codewords, rank, unrank, validate
from ordtrees import oracle
from ordtrees.cli import bench, run
from ordtrees.counting import table_entries
from ordtrees.errors import TreeError
from ordtrees.ranking import OpCounter, uniform_sample

from conftest import ACCEPTANCE_LINES, oracle_words

GRID = [(n, delta) for delta in (1, 2, 3, 4) for n in range(1, 13)]


def record(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} {detail}".rstrip())
    assert ok, f"criterion {number} failed: {detail}"


def motzkin(k):
    m = [1]
    for j in range(1, k + 1):
        m.append(m[j - 1] + sum(m[i] * m[j - 2 - i] for i in range(j - 1)))
    return m[k]


def catalan(k):
    c = [1]
    for j in range(1, k + 1):
        c.append(sum(c[i] * c[j - 1 - i] for i in range(j)))
    return c[k]


def slope(xs, ys):
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def test_1_oracle_count_equivalence():
    start = time.perf_counter()
    bad = []
    for delta in (1, 2, 3, 4):
        t = build_tables(12, delta)
        for n in range(1, 13):
            if count(t, n) != len(oracle.enumerate_all(n, delta)):
                bad.append((n, delta))
    elapsed = time.perf_counter() - start
    record(1, "oracle count equivalence", not bad and elapsed < 30,
           f"mismatches={bad} time={elapsed:.1f}s")


def test_2_sequence_identities():
    t = build_tables(10, 2)
    motz = [count(t, n) for n in range(1, 11)]
    expected_motz = [motzkin(n - 1) for n in range(1, 11)]
    cat_ok = all(
        count(build_tables(n, max(1, n - 1 + extra)), n) == catalan(n - 1)
        for n in range(1, 11)
        for extra in (0, 1, 3)
    )
    ok = motz == expected_motz == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835] and cat_ok
    record(2, "Motzkin / Catalan identities", ok, f"motzkin={motz}")


def test_3_generation_order():
    start = time.perf_counter()
    bad = []
    for n, delta in GRID:
        expected = list(oracle_words(n, delta))
        got = list(iter_codewords(n, delta))
        if (
            got != expected
            or got[0] != first_codeword(n, delta).text
            or got[-1] != "s" * n
        ):
            bad.append((n, delta))
    elapsed = time.perf_counter() - start
    record(3, "generation order equals oracle", not bad and elapsed < 60,
           f"mismatches={bad} time={elapsed:.1f}s")


def test_4_rank_unrank_round_trip():
    start = time.perf_counter()
    bad = []
    for delta in (1, 2, 3, 4):
        t = build_tables(12, delta)
        for n in range(1, 13):
            for i, word in enumerate(oracle_words(n, delta), 1):
                if rank(word, t) != i or str(unrank(rank(word, t), n, t)) != word:
                    bad.append((n, delta, word))
                    break
    t = build_tables(16, 4)
    rng = random.Random(2024)
    total = count(t, 16)
    misses = 0
    for _ in range(1000):
        r = rng.randrange(1, total + 1)
        if rank(unrank(r, 16, t), t) != r:
            misses += 1
    elapsed = time.perf_counter() - start
    record(4, "rank/unrank round trip", not bad and misses == 0 and elapsed < 60,
           f"grid_failures={bad} n16_misses={misses} time={elapsed:.1f}s")


def test_5_amortized_constancy():
    reports = {key: bench(*key) for key in [(10, 2), (18, 2), (10, 4), (14, 4)]}
    checks = []
    for big, small in [((18, 2), (10, 2)), ((14, 4), (10, 4))]:
        for metric in ("writes_per_item", "scans_per_item"):
            ratio = reports[big][metric] / reports[small][metric]
            checks.append((big, metric, round(ratio, 3), ratio <= 2.0))
    items_ok = reports[(10, 2)]["items"] == 835 and reports[(18, 2)]["items"] == motzkin(17)
    record(5, "amortized constant successor cost", items_ok and all(c[-1] for c in checks),
           " ".join(f"{b}:{m}={r}" for b, m, r, _ in checks))


def test_6_complexity_proxies():
    ns = [64, 128, 256, 512]
    t = build_tables(512, 4)
    rank_ops, unrank_ops, wall = [], [], []
    for n in ns:
        rs, us = [], []
        start = time.perf_counter()
        for seed in range(10):
            word = uniform_sample(n, t, seed)
            c = OpCounter()
            r = rank(word, t, c)
            rs.append(c.ops)
            c = OpCounter()
            unrank(r, n, t, counter=c)
            us.append(c.ops)
        c = OpCounter()
        unrank(count(t, n), n, t, counter=c)  # the path tree: deepest search chain
        us.append(c.ops)
        wall.append(time.perf_counter() - start)
        rank_ops.append(np.mean(rs))
        unrank_ops.append(np.mean(us))
    rs, us = slope(ns, rank_ops), slope(ns, unrank_ops)
    ok = abs(rs - 1.0) <= 0.15 and us <= 1.25
    record(6, "rank/unrank operation-count slopes", ok,
           f"rank_slope={rs:.3f} unrank_slope={us:.3f} wall={[round(w, 3) for w in wall]}")


def test_7_table_build_scaling():
    ns = [100, 200, 400]
    entries = []
    for n in ns:
        t = build_tables(n, 4)
        entries.append(t.entry_count)
        assert t.entry_count == table_entries(n, 4)
    s = slope(ns, entries)
    record(7, "table size grows quadratically", abs(s - 2.0) <= 0.1,
           f"entries={entries} slope={s:.3f}")


def _chi_square_p(n, delta, samples):
    t = build_tables(n, delta)
    classes = list(oracle_words(n, delta))
    index = {w: i for i, w in enumerate(classes)}
    observed = np.zeros(len(classes))
    for seed in range(samples):
        observed[index[str(uniform_sample(n, t, seed))]] += 1
    return len(classes), chisquare(observed).pvalue


def test_8_uniformity():
    # n=7, delta=2 has M_6 = 51 trees; the 21-class case is n=6 (M_5 = 21)
    k7, p7 = _chi_square_p(7, 2, 40_000)
    k6, p6 = _chi_square_p(6, 2, 40_000)
    ok = k7 == motzkin(6) == 51 and p7 > 0.001 and k6 == 21 and p6 > 0.001
    record(8, "uniform sampling chi-square", ok,
           f"n=7: classes={k7} p={p7:.4f}; n=6: classes={k6} p={p6:.4f}")


def _malformed(rng):
    kind = rng.randrange(4)
    if kind == 0:
        n = rng.randrange(0, 12)
        return "".join(rng.choice("slmrx L(1 \t") for _ in range(n))
    word = str(unrank(rng.randrange(1, 5000), 12, _T12))
    if kind == 1:
        cut = rng.randrange(1, len(word))
        return word[:cut] + "l"
    if kind == 2:
        i = rng.randrange(1, len(word))
        return word[:i] + "lmmmmr" + word[i:]
    return "".join(rng.choice("slmr") for _ in range(rng.randrange(1, 16)))


_T12 = build_tables(12, 4)


def test_9_robustness_fuzz():
    rng = random.Random(99)
    strings = [_malformed(rng) for _ in range(100_000)]
    crashes = 0
    unstructured = 0
    for s in strings:
        try:
            report = validate(s, 4)
            if not report.valid and report.failure_position is None:
                unstructured += 1
        except TreeError as exc:
            if getattr(exc, "position", None) is None and s != "":
                unstructured += 1
        except Exception:
            crashes += 1
    # the CLI over the whole batch: one line per input, positions on failures
    lines = [s for s in strings if s.strip() and "\n" not in s]
    out, err = io.StringIO(), io.StringIO()
    code = run(["validate", "--delta", "4"], io.StringIO("\n".join(lines) + "\n"), out, err)
    reported = out.getvalue().splitlines()
    structured = all(r == "valid" or " at position " in r for r in reported)
    # a sample of individually invalid inputs must each exit with code 1
    individual = []
    for s in rng.sample(strings, 300):
        if not s or s.strip() != s or s.startswith("-"):
            continue
        try:
            valid = validate(s, 4).valid
        except TreeError:
            valid = False
        if not valid:
            individual.append(run(["validate", "--delta", "4", s], io.StringIO(),
                                  io.StringIO(), io.StringIO()))
    ok = (
        crashes == 0
        and unstructured == 0
        and code == 1
        and len(reported) == len(lines)
        and structured
        and individual
        and all(c == 1 for c in individual)
    )
    record(9, "malformed input robustness", ok,
           f"inputs={len(strings)} crashes={crashes} unstructured={unstructured} "
           f"cli_exit={code} individual={len(individual)}")
