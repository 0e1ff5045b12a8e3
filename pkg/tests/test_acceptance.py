"""Exit criteria. Each check prints one PASS/FAIL line.

    pytest tests/test_acceptance.py -v -s
    python tests/test_acceptance.py
"""

import random
import sys
import time
from pathlib import Path

import pytest

from nestrep.bench import CorpusSpec, generate_corpus, run_bench
from nestrep.construct import a159860, intro_chain, length_decreasing_chain, theorem3_chain
from nestrep.engine import Chain, replace
from nestrep.oracle import MaxM, max_solved, normalize_digit_runs, solves
from nestrep.search import SearchBounds, find_min_depth, refute_depth
from nestrep.sqlgen import emit_sql, evaluate_sql
from nestrep.unary import (chain_length_trace, max_reach_bruteforce, max_reach_closed_form,
                           rule_length_map)

GOLDEN = Path(__file__).parent / "golden"


def ac1_oracle_equivalence():
    start = time.perf_counter()
    mismatches = 0
    for ell in range(1, 13):
        for r in range(0, 13):
            pattern, repl = "1" * ell, "1" * r
            for k in range(0, 301):
                if rule_length_map((ell, r), k) != len(replace("1" * k, pattern, repl)):
                    mismatches += 1
    elapsed = time.perf_counter() - start
    return mismatches == 0 and elapsed < 10, f"mismatches={mismatches} elapsed={elapsed:.2f}s"


def ac2_one_replace():
    refuted = refute_depth(3, 1, SearchBounds(6, 6, 1))
    reach = max_solved(Chain.from_unary([(2, 1)]), cap=100)
    return refuted and reach == MaxM("exact", 2), f"refuted={refuted} max_solved([11->1])={reach}"


def ac3_two_replaces():
    refuted = refute_depth(5, 2, SearchBounds(12, 12, 2))
    reach = max_solved(Chain.from_unary([(2, 1), (2, 1)]), cap=100)
    return (refuted and reach == MaxM("exact", 4),
            f"refuted={refuted} (bounded: ell,r<=12) max_solved([11->1,11->1])={reach}")


def ac4_three_rule_construction():
    failures = [m for m in range(1, 65) if not solves(theorem3_chain(m), m, method="engine")]
    bad_identity = []
    for m in range(5, 65):
        pairs = theorem3_chain(m).unary_pairs()
        if any(chain_length_trace(pairs, k)[2] != m - 1 for k in range(1, m + 1)):
            bad_identity.append(m)
    return not failures and not bad_identity, f"unsolved={failures} identity_failures={bad_identity}"


def ac5_intro_chain():
    reach = max_solved(intro_chain(), cap=100)
    ok32 = solves(intro_chain(), 32, method="engine")
    return reach == MaxM("exact", 34) and ok32, f"max_solved={reach} solves(32)={ok32}"


def ac6_reach_sequence():
    terms = [a159860(n) for n in range(1, 5)]
    bad = []
    for n in range(1, 6):
        chain, a = length_decreasing_chain(n), a159860(n)
        if not solves(chain, a, method="engine") or solves(chain, a + 1, method="engine"):
            bad.append(n)
    return terms == [2, 4, 10, 40] and not bad, f"a(1..4)={terms} chain_failures={bad}"


def ac7_reach_formula():
    mismatches = max_mismatch = 0
    for target in range(2, 101, 2):
        reaches = []
        for ell in range(2, target + 3):
            brute = max_reach_bruteforce(ell, target)
            mismatches += brute != max_reach_closed_form(ell, target)
            reaches.append(brute)
        max_mismatch += max(reaches) != target * (target + 6) // 4
    return (mismatches == 0 and max_mismatch == 0,
            f"formula_mismatches={mismatches} maximum_mismatches={max_mismatch}")


def ac8_min_depth():
    expected = {2: 1, 3: 2, 4: 2, **{m: 3 for m in range(5, 41)}}
    got = {}
    for m in expected:
        result = find_min_depth(m)
        got[m] = result.depth if result.found else None
    wrong = {m: d for m, d in got.items() if d != expected[m]}
    return not wrong, f"m=2..40 checked, wrong={wrong}"


def ac9_sql():
    sql = emit_sql(intro_chain(), "s")
    golden_ok = sql + "\n" == (GOLDEN / "intro_default.sql").read_text()
    rng = random.Random(20240501)
    disagreements = 0
    for _ in range(500):
        s = _random_text(rng, 64, 34)
        disagreements += evaluate_sql(sql, {"s": s}) != normalize_digit_runs(intro_chain(), s)
    return golden_ok and disagreements == 0, f"golden_match={golden_ok} disagreements={disagreements}/500"


def _random_text(rng, max_len, max_run):
    out = []
    length = rng.randint(0, max_len)
    while len(out) < length:
        if rng.random() < 0.5:
            out.extend(rng.choice("0123456789") for _ in range(rng.randint(1, max_run)))
        out.append(rng.choice("abcxyz -_"))
    return "".join(out[:length])


def ac10_bench_agreement():
    corpus = generate_corpus(CorpusSpec(seed=0, count=10_000, max_len=32))
    report = run_bench(corpus)
    names = {e.name for e in report.entries}
    ok = report.agreement and {"theorem3", "length-decreasing", "scanner"} <= names
    ratios = " ".join(f"{e.name}={report.ratio(e.name):.2f}" for e in report.entries)
    return ok, f"agreement={report.agreement} ratios_vs_scanner(not asserted): {ratios}"


CRITERIA = [
    ("AC1 unary length map == engine length", ac1_oracle_equivalence),
    ("AC2 R(3) needs more than one REPLACE", ac2_one_replace),
    ("AC3 R(5) needs more than two REPLACEs", ac3_two_replaces),
    ("AC4 three-rule chain solves R(1..64)", ac4_three_rule_construction),
    ("AC5 introduction chain reaches 34", ac5_intro_chain),
    ("AC6 2,4,10,40 and length-decreasing chains", ac6_reach_sequence),
    ("AC7 reach closed form and its maximum", ac7_reach_formula),
    ("AC8 minimal depths for m=2..40", ac8_min_depth),
    ("AC9 SQL golden file and round trip", ac9_sql),
    ("AC10 benchmark output agreement", ac10_bench_agreement),
]


def _report(name, check):
    ok, detail = check()
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}", flush=True)
    return ok


@pytest.mark.parametrize("name, check", CRITERIA, ids=[n.split()[0] for n, _ in CRITERIA])
def test_criterion(name, check, capsys):
    with capsys.disabled():
        ok = _report(name, check)
    assert ok


if __name__ == "__main__":
    results = [_report(name, check) for name, check in CRITERIA]
    sys.exit(0 if all(results) else 1)
