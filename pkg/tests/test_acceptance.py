"""Acceptance suite: the end-to-end checks the package must satisfy.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of a failing run) and asserts the criterion at its stated
tolerance; every comparison is exact.
"""

import json
import time

from hexforms import cli
from hexforms.classify import is_universal
from hexforms.exclusions import (
    get_lemma,
    lemma_ids,
    verify_lemma,
    with_corrupted_family,
)
from hexforms.identities import (
    CASE_IDS,
    verify_base_identities,
    verify_coefficient_relations,
)
from hexforms.qseries import hex_theta_series, phi_series, series_mul, substitute_power
from hexforms.repcount import QuaternaryForm, count_hex, r2

EXPECTED_TRIPLES = (
    [[1, b, 1] for b in range(1, 7)]
    + [[2, b, 1] for b in range(2, 11)]
    + [[1, b, 2] for b in range(1, 6)]
    + [[1, 2, 3], [1, 2, 4]]
)


def _criterion(name, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_classification_reproduction(capsys):
    started = time.perf_counter()
    status = cli.main(["classify", "--amax", "2", "--bmax", "10",
                       "--cmax", "6", "--bound", "2000"])
    elapsed = time.perf_counter() - started
    report = json.loads(capsys.readouterr().out)
    triples = report["result"]["universal_triples"]
    with capsys.disabled():
        _criterion(
            "criterion 1: classify (2,10,6,2000) lists exactly the 22 triples",
            status == 0 and triples == EXPECTED_TRIPLES and elapsed < 30.0,
            f"{len(triples)} triples in {elapsed:.2f}s",
        )


def test_criterion_2_escalator_equivalence():
    violations = []
    for c in range(1, 9):
        for a in range(1, 13):
            for b in range(a, 13):
                report = is_universal(QuaternaryForm(a, b, c), 2000)
                if report.theorem_violation:
                    violations.append((a, b, c))
    _criterion(
        "criterion 2: gap-free <=> escalator pass over a<=b<=12, c<=8 at 2000",
        not violations,
        f"624 triples scanned, {len(violations)} disagreements",
    )


def test_criterion_3_base_identities():
    started = time.perf_counter()
    first, second = verify_base_identities(10000)
    elapsed = time.perf_counter() - started
    _criterion(
        "criterion 3: both base identities exact to order 10000",
        first.verified and second.verified and elapsed < 10.0,
        f"{elapsed:.2f}s",
    )


def test_criterion_4_coefficient_relations():
    failures = []
    for case_id in CASE_IDS:
        rel = verify_coefficient_relations(case_id, 3000)
        if not (rel.verified and rel.routes_agree):
            failures.append(case_id)
    _criterion(
        "criterion 4: C1a, C1b, C3, C4 verified to 3000 by both routes",
        not failures,
        f"failing cases: {failures or 'none'}",
    )


def test_criterion_5_lemma_verification():
    started = time.perf_counter()
    failures = []
    for lemma_id in lemma_ids():
        if not verify_lemma(lemma_id, 5000).verified:
            failures.append(lemma_id)
    elapsed = time.perf_counter() - started
    _criterion(
        "criterion 5: all nine lemmas agree with brute force to 5000",
        not failures and elapsed < 60.0,
        f"{elapsed:.2f}s, failing: {failures or 'none'}",
    )


def test_criterion_6_witness_spot_checks():
    from hexforms.classify import first_gap, ternary_first_gap

    checks = {
        "first_gap(1,2,5)=10": first_gap(QuaternaryForm(1, 2, 5), 2000) == 10,
        "first_gap(1,2,6)=5": first_gap(QuaternaryForm(1, 2, 6), 2000) == 5,
        "first_gap(1,2,7)=5": first_gap(QuaternaryForm(1, 2, 7), 2000) == 5,
        "first_gap(1,2,8)=5": first_gap(QuaternaryForm(1, 2, 8), 2000) == 5,
        "first_gap(1,1,3)=6": first_gap(QuaternaryForm(1, 1, 3), 2000) == 6,
        "ternary_first_gap(1,1)=6": ternary_first_gap(1, 1) == 6,
        "ternary_first_gap(1,2)=5": ternary_first_gap(1, 2) == 5,
        "count_hex(2)=0": count_hex(2) == 0,
    }
    bad = [name for name, ok in checks.items() if not ok]
    _criterion(
        "criterion 6: witness spot checks",
        not bad,
        f"failing: {bad or 'none'}",
    )


def test_criterion_7_oracle_cross_checks():
    hex_t = hex_theta_series(10000)
    hex_ok = all(hex_t[n] == count_hex(n) for n in range(10001))
    prod = series_mul(phi_series(5000), substitute_power(3, phi_series(5000)))
    r2_ok = all(prod[n] == r2(1, 3, n) for n in range(5001))
    _criterion(
        "criterion 7: theta coefficients match the enumeration oracles",
        hex_ok and r2_ok,
        "hex to 10000, squares product to 5000",
    )


def test_criterion_8_negative_controls():
    failures = []
    for lemma_id in lemma_ids():
        excluded = get_lemma(lemma_id).excluded
        for index in range(len(excluded.families)):
            corrupted = with_corrupted_family(excluded, index, delta=1)
            result = verify_lemma(lemma_id, 100, exclusion_override=corrupted)
            if result.verified or result.discrepancies[0].n >= 100:
                failures.append((lemma_id, index))
    _criterion(
        "criterion 8: every corrupted residue is caught below n=100",
        not failures,
        f"failing: {failures or 'none'}",
    )
