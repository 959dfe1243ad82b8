"""Acceptance gate: eight headline checks, one pass/fail line each.

Each test prints exactly one line, "PASS criterion N: ..." or "FAIL
criterion N: ...", then asserts.  Together they re-derive the package's
claims by exhaustive computation at desk scale.
"""

import itertools
import json
import math
import subprocess
import sys
import time
from fractions import Fraction

from tlkostant import (
    LaurentPoly,
    Permutation,
    a_value,
    basis_of,
    catalan,
    cells,
    check_lemma_multi,
    counts_by_bruteforce,
    counts_by_formula,
    diagram_of_fc,
    enumerate_fc,
    fibonacci_polynomial,
    flip,
    generator,
    hook_length_count,
    identity_diagram,
    is_kostant,
    ki_of,
    compose,
    maximal_parabolic_element,
    negative_witness,
    ratio_report,
    recursion_checks,
    rs_tableaux,
    special_involution,
    theta_nonzero,
    witness_postconditions,
)
from tlkostant.diagrams import arc_count
from tlkostant.permutations import _two_row_tableaux


def conclude(number: int, text: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}")
    assert ok, f"criterion {number}: {text}"


def cli_verify(n: int, *extra) -> tuple[int, dict]:
    proc = subprocess.run(
        [sys.executable, "-m", "tlkostant.cli", "verify", "--n", str(n),
         *extra],
        capture_output=True, text=True, timeout=300,
    )
    return proc.returncode, json.loads(proc.stdout)


def test_criterion_1_classifier_matches_oracle():
    start = time.perf_counter()
    ok = True
    for n in range(2, 6):
        code, data = cli_verify(n)
        ok = ok and code == 0 and data["ok"] and data["discrepancies"] == []
    small_elapsed = time.perf_counter() - start
    code, data = cli_verify(6, "--full-scan-limit", "6")
    ok = ok and code == 0 and data["ok"] and data["discrepancies"] == []
    full_elapsed = time.perf_counter() - start - small_elapsed
    ok = ok and small_elapsed <= 10 and full_elapsed <= 300
    conclude(
        1,
        "oracle and classifier agree on every involution, ranks 2-5 with "
        "full negative scans and rank 6 with a full scan too "
        f"({small_elapsed:.1f}s + {full_elapsed:.1f}s)",
        ok,
    )


def test_criterion_2_squared_multiplicity():
    start = time.perf_counter()
    cases = 0
    ok = True
    for n in range(2, 7):
        for d in enumerate_fc(n, involutions_only=True):
            for x in enumerate_fc(n):
                if theta_nonzero(x, d):
                    cases += 1
                    ok = ok and check_lemma_multi(d, x)
    elapsed = time.perf_counter() - start
    ok = ok and cases > 0 and elapsed <= 60
    conclude(
        2,
        "the surviving triple product always straightens to 2^(2a) times "
        f"the basis diagram, ranks up to 6 ({cases} cases, {elapsed:.1f}s)",
        ok,
    )


def test_criterion_3_exact_counts():
    start = time.perf_counter()
    ok = catalan(10) == 16796
    for n in range(1, 11):
        ok = ok and len(enumerate_fc(n)) == catalan(n)
    for n in range(1, 13):
        ok = ok and len(enumerate_fc(n, involutions_only=True)) == \
            math.comb(n, n // 2)
    for n in range(1, 11):
        involutions = enumerate_fc(n, involutions_only=True)
        positives = [d for d in involutions if is_kostant(d).positive]
        ok = ok and len(positives) == \
            fibonacci_polynomial(n).evaluate_at_one()
        by_a: dict[int, int] = {}
        for d in positives:
            by_a[a_value(d)] = by_a.get(a_value(d), 0) + 1
        for a in range(n // 2 + 1):
            ok = ok and by_a.get(a, 0) == ki_of(n, a) == math.comb(n - a, a)
    for n in range(1, 9):
        ok = ok and counts_by_formula(n) == counts_by_bruteforce(n)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed <= 120
    conclude(
        3,
        "Catalan, central binomial, Fibonacci and binomial counts all "
        f"match brute classification ({elapsed:.1f}s)",
        ok,
    )


def test_criterion_4_recursions_and_polynomial_identity():
    report = recursion_checks(12)
    conclude(
        4,
        "both counting recursions and the Fibonacci polynomial identity "
        f"hold exactly up to rank 12 ({report.checks} checks)",
        report.ok,
    )


def test_criterion_5_hook_formula():
    ok = True
    for n in range(1, 11):
        by_shape: dict[tuple[int, ...], int] = {}
        for t in _two_row_tableaux(n):
            by_shape[t.shape] = by_shape.get(t.shape, 0) + 1
        for a in range(n // 2 + 1):
            shape = (n - a, a) if a else (n,)
            ok = ok and hook_length_count(shape) == by_shape[shape]
    conclude(
        5,
        "hook-formula counts equal brute tableau enumeration for every "
        "two-row shape up to 10 boxes",
        ok,
    )


def test_criterion_6_maximal_parabolic_elements():
    ok = True
    for n in range(2, 9):
        for i in range(n // 2 + 1):
            ok = ok and is_kostant(maximal_parabolic_element(n, i)).positive
        if n % 2 == 0:
            half = n // 2
            ok = ok and maximal_parabolic_element(n, half) == \
                special_involution(half, half - 1, n)
    conclude(
        6,
        "the stacked-arcs elements are positive up to rank 8 and the "
        "middle case is the top special involution",
        ok,
    )


def test_criterion_7_ratio_trends():
    start = time.perf_counter()
    report = ratio_report(60)
    by_n = {row.n: row for row in report.rows}

    ki_mi = [row.ki_over_mi for row in report.rows if 4 <= row.n <= 40]
    k_m = [row.k_over_m for row in report.rows if 4 <= row.n <= 40]
    ok = all(p > q for p, q in zip(ki_mi, ki_mi[1:]))
    ok = ok and all(p > q for p, q in zip(k_m, k_m[1:]))
    ok = ok and report.totals_decreasing_from_4

    # pinned crossover: the involution ratio first dips below 1/10 at 18
    ok = ok and by_n[17].ki_over_mi >= Fraction(1, 10) > by_n[18].ki_over_mi

    # fixed arc counts: nondecreasing, and above 9/10 at pinned ranks
    ok = ok and report.fixed_a_nondecreasing == {1: True, 2: True, 3: True}
    ok = ok and all(
        row.fixed_a[1] == 1 for row in report.rows if 1 in row.fixed_a
    )
    ok = ok and by_n[20].fixed_a[2] <= Fraction(9, 10) < by_n[21].fixed_a[2]
    ok = ok and by_n[58].fixed_a[3] <= Fraction(9, 10) < by_n[59].fixed_a[3]

    elapsed = time.perf_counter() - start
    ok = ok and elapsed <= 10
    conclude(
        7,
        "positivity gets rare overall but not at fixed arc count, with "
        f"crossovers at ranks 18, 21 and 59 ({elapsed:.1f}s)",
        ok,
    )


def all_reduced_words(p):
    if p == Permutation.identity(p.n):
        yield ()
        return
    inv = p.inverse()
    for i in range(1, p.n):
        if inv(i) > inv(i + 1):
            images = list(range(1, p.n + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            shorter = p * Permutation(tuple(images))
            for word in all_reduced_words(shorter):
                yield word + (i,)


def test_criterion_8_structural_suites():
    start = time.perf_counter()
    delta = LaurentPoly.delta()
    ok = True

    # presentation relations through rank 8
    for n in range(2, 9):
        for i in range(1, n):
            ei = basis_of(Permutation(tuple(
                list(range(1, i)) + [i + 1, i] + list(range(i + 2, n + 1)))))
            ok = ok and ei * ei == ei.scaled(delta)
            for j in range(i + 1, n):
                ej = basis_of(Permutation(tuple(
                    list(range(1, j)) + [j + 1, j]
                    + list(range(j + 2, n + 1)))))
                if j == i + 1:
                    ok = ok and ei * ej * ei == ei and ej * ei * ej == ej
                else:
                    ok = ok and ei * ej == ej * ei

    # every reduced word builds the same diagram, rank up to 7
    for n in range(2, 8):
        for p in enumerate_fc(n):
            expected = diagram_of_fc(p)
            for word in all_reduced_words(p):
                d = identity_diagram(n)
                for letter in word:
                    d, _ = compose(d, generator(letter, n))
                ok = ok and d == expected

    # flip matches inversion, rank up to 7
    for n in range(2, 8):
        for p in enumerate_fc(n):
            ok = ok and flip(diagram_of_fc(p)) == diagram_of_fc(p.inverse())

    # arc count, a-value and the second tableau row agree, rank up to 8
    for n in range(2, 9):
        for p in enumerate_fc(n):
            shape = rs_tableaux(p)[0].shape
            second = shape[1] if len(shape) > 1 else 0
            ok = ok and arc_count(diagram_of_fc(p)) == a_value(p) == second

    # cells coincide with tableau classes, rank up to 7
    for n in range(2, 8):
        by_q: dict = {}
        by_p: dict = {}
        for w in enumerate_fc(n):
            p_tab, q_tab = rs_tableaux(w)
            by_q.setdefault(q_tab.rows, set()).add(w)
            by_p.setdefault(p_tab.rows, set()).add(w)
        ok = ok and set(cells(n, "left")) == \
            {frozenset(g) for g in by_q.values()}
        ok = ok and set(cells(n, "right")) == \
            {frozenset(g) for g in by_p.values()}

    # negative witnesses meet their contract, rank up to 7
    for n in range(2, 8):
        for d in enumerate_fc(n, involutions_only=True):
            if is_kostant(d).positive:
                continue
            x, y = negative_witness(d)
            ok = ok and witness_postconditions(d, x, y) == ()

    elapsed = time.perf_counter() - start
    ok = ok and elapsed <= 120
    conclude(
        8,
        "presentation, word independence, flip, arc counts, cells and "
        f"witness contracts all verified ({elapsed:.1f}s)",
        ok,
    )
