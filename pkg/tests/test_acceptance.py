"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest -v -s tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import chain
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import seeded_random_graphs  # noqa: E402

from mimkit.enumeration import enumerate_mim_cameron, maximum_induced_matching  # noqa: E402
from mimkit.generators import exhaustive_graphs, extremal_mim  # noqa: E402
from mimkit.matchings import count_mim_oracle, enumerate_mim_oracle  # noqa: E402
from mimkit.verification import (  # noqa: E402
    characterize_extremal_n6,
    companion_bounds,
    exhaustive_bound_sweep,
    lemma6_sweep,
    lemma23_sweep,
    lemma45_sweep,
    oracle_cameron_mismatches,
    verify_extremal_family,
)

pytestmark = pytest.mark.slow


def exhaustive_upto(n: int):
    return chain.from_iterable(exhaustive_graphs(k) for k in range(1, n + 1))


def criterion_1() -> tuple[bool, str]:
    if count_mim_oracle(extremal_mim(1)) != 9:
        return False, "K33 oracle count differs from 9"
    parts = []
    ok = True
    for p in range(1, 6):
        start = time.perf_counter()
        r = verify_extremal_family(p)
        elapsed = time.perf_counter() - start
        good = r.enumerated and r.mim_count == 9 ** p and r.extremal
        if p == 5:
            good = good and elapsed < 60
        ok &= good
        parts.append(f"p={p}:{r.mim_count} ({elapsed:.2f}s)")
    return ok, ", ".join(parts)


def criterion_2() -> tuple[bool, str]:
    start = time.perf_counter()
    s = exhaustive_bound_sweep(7)
    elapsed = time.perf_counter() - start
    ok = s["graphs"] == 1 << 21 and s["violations"] == 0 and elapsed < 600
    return ok, (f"{s['graphs']} graphs, {s['triangle_free']} triangle-free, "
                f"{s['violations']} violations, max count {s['max_mim_count']}, {elapsed:.1f}s")


def criterion_3() -> tuple[bool, str]:
    r = characterize_extremal_n6()
    ok = not r["exceptions"] and r["count_9"] == r["k33_labelings"] > 0 and r["max_other"] <= 8
    return ok, (f"{r['triangle_free']} triangle-free, {r['count_9']} with 9 matchings, "
                f"{r['k33_labelings']} K33 labelings, max otherwise {r['max_other']}, "
                f"{len(r['exceptions'])} exceptions")


def criterion_4() -> tuple[bool, str]:
    s = companion_bounds(exhaustive_upto(7))
    return s["violations"] == 0, f"{s['graphs']} graphs, {s['violations']} violations"


def criterion_5() -> tuple[bool, str]:
    bad = oracle_cameron_mismatches(exhaustive_upto(6))
    bad += oracle_cameron_mismatches(seeded_random_graphs(500, 12, seed=2024))
    return not bad, f"{len(bad)} mismatches {bad[:3]}"


def criterion_6() -> tuple[bool, str]:
    a = lemma23_sweep(exhaustive_upto(6))
    b = lemma23_sweep(seeded_random_graphs(2000, 10, seed=2025, min_n=2))
    failures = a["failures"] + b["failures"]
    return failures == 0, (f"{a['applicable'] + b['applicable']} applicable checks, "
                           f"{failures} failures")


def criterion_7() -> tuple[bool, str]:
    s = lemma45_sweep(exhaustive_upto(7))
    return s["failures"] == 0, (f"{s['graphs']} triangle-free graphs, {s['pairs']} pairs, "
                                f"{s['non_twin_pairs']} non-twin, {s['failures']} failures")


def criterion_8() -> tuple[bool, str]:
    rng = random.Random(2026)
    checked = failures = 0
    for r in lemma6_sweep(exhaustive_upto(6), rng):
        checked += 1
        failures += not r.holds
    return checked > 0 and failures == 0, f"{checked} instances, {failures} failures"


def criterion_9() -> tuple[bool, str]:
    mismatches = checked = 0
    sample = chain(exhaustive_upto(6), seeded_random_graphs(300, 12, seed=2027))
    for g in sample:
        checked += 1
        best = max(len(m) for m in enumerate_mim_oracle(g))
        for strategy in ("stream", "branch"):
            mismatches += len(maximum_induced_matching(g, strategy)) != best
    stream = enumerate_mim_cameron(extremal_mim(4))
    for _ in stream:
        pass
    stats = stream.delay_stats()
    return mismatches == 0, (f"{checked} graphs, {mismatches} mismatches; delay on 4 x K33: "
                             f"max {stats['max'] * 1e6:.0f}us, median {stats['median'] * 1e6:.0f}us "
                             f"(reported only)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def gate(number: int) -> tuple[bool, str]:
    ok, detail = CRITERIA[number - 1]()
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    ok, line = gate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [gate(k) for k in range(1, len(CRITERIA) + 1)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
