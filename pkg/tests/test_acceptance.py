"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Everything is exact arithmetic; tolerances are all zero.
"""

import math
import pathlib
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

import psutil
import pytest

from njordan import blift as bl
from njordan import concrete as cc
from njordan import freealg as fa
from njordan import jordan as jd
from njordan.freealg import Mode, Word
from njordan.jordan import JordanConfig

COM = Mode.COMMUTATIVE
NONCOM = Mode.NONCOMMUTATIVE
ALL_MODES = [(a, b) for a in (COM, NONCOM) for b in (COM, NONCOM)]
GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"{label}: FAIL")
        raise
    print(f"{label}: PASS")


def test_criterion_1_theorem_all_modes_up_to_n6():
    with criterion("criterion 1 (theorem identity, N=2..6, four mode pairs)"):
        for n in range(2, 7):
            for a_mode, b_mode in ALL_MODES:
                started = time.perf_counter()
                report = jd.verify_theorem(JordanConfig(n, a_mode, b_mode))
                elapsed = time.perf_counter() - started
                assert report.passed, (n, a_mode, b_mode, report.payload)
                if n == 6:
                    assert elapsed < 120.0, f"n=6 took {elapsed:.1f}s"
        rss = psutil.Process().memory_info().rss
        assert rss < 2 * 1024 ** 3, f"rss {rss / 1024 ** 3:.2f} GiB"


def test_criterion_2_decomposition_up_to_n5():
    with criterion("criterion 2 (decomposition identity, N=2..5)"):
        for n in range(2, 6):
            for a_mode, b_mode in ALL_MODES:
                report = jd.verify_decomposition(JordanConfig(n, a_mode, b_mode))
                assert report.passed, (n, a_mode, b_mode)
                assert report.payload["subsets"] == 2 ** n - 1


def test_criterion_3_three_way_psi_agreement():
    with criterion("criterion 3 (psi recursion = extraction = Mobius, N=2..5)"):
        for n in range(2, 6):
            for a_mode, b_mode in ALL_MODES:
                cfg = JordanConfig(n, a_mode, b_mode)
                subsets = jd.nonempty_subsets(cfg.full_set())
                phis = jd._phi_table(subsets, cfg)
                memo = {}
                for subset in subsets:
                    rec = jd.psi_recursive(subset, cfg, memo, phis)
                    assert rec == jd.psi_extract(subset, cfg), (n, subset)
                    assert rec == jd.mobius_psi(subset, cfg, phis), (n, subset)


def test_criterion_4_collapse_factors():
    with criterion("criterion 4 (commutative collapse factor = N!)"):
        for n in range(2, 7):
            report = jd.verify_collapse(JordanConfig(n, COM, COM))
            assert report.passed
            assert report.payload["factor"] == str(math.factorial(n))


def test_criterion_5_refutation():
    with criterion("criterion 5 (refutation: residual and overcount table)"):
        four = jd.refute_cheshmavar(JordanConfig(4))
        assert four.residual_nonzero()
        assert all(counts == (1, 3) for counts in four.multiplicities.values())

        five = jd.refute_cheshmavar(JordanConfig(5))
        assert five.residual_nonzero()
        assert all(counts == (1, 7) for counts in five.multiplicities.values())

        pair = frozenset({1, 2})
        component = jd.b_exact_varset_component(four.residual, pair)
        assert component == bl.b_scale(-2, jd.psi_extract(pair, JordanConfig(4)))


def test_criterion_6_golden_certificates():
    with criterion("criterion 6 (golden certificates N=2,3,4 re-verify)"):
        for n in (2, 3, 4):
            cfg = JordanConfig(n)
            entries, hash_value = jd.parse_certificate(
                (GOLDEN / f"cert_n{n}.txt").read_text())
            assert len(entries) == 2 ** n - 1
            for sign, subset in entries:
                assert sign == (-1) ** (n - len(subset))
            assert jd.check_certificate(entries, hash_value, cfg)


def test_criterion_7_transpose_counterexample():
    with criterion("criterion 7 (transpose on M2: Jordan yes, hom no)"):
        m2 = cc.builtin_algebra("m2")
        transpose = tuple(
            tuple(Fraction(1 if (r, c) in {(0, 0), (1, 2), (2, 1), (3, 3)} else 0)
                  for c in range(4)) for r in range(4))
        rng = random.Random(2024)
        for _ in range(50):
            a = cc.random_vector(rng, 4)
            assert cc.jordan_defect_concrete(transpose, m2, m2, a, 2) == cc.vzero(4)
        e11, e12, e21, e22 = (cc.basis_vector(4, i) for i in range(4))
        assert cc.hom_defect_concrete(transpose, m2, m2, [e12, e21]) \
            == cc.vsub(e11, e22)


def test_criterion_8_cross_validation():
    with criterion("criterion 8 (100/100 seeded numeric trials per setting)"):
        settings = [(n, a, b) for n in (3, 4)
                    for a, b in ((COM, COM), (NONCOM, NONCOM))]
        for n, a_mode, b_mode in settings:
            report = cc.cross_validate(JordanConfig(n, a_mode, b_mode), 100, 7)
            assert report.passed, (n, a_mode, report.payload)
            assert report.payload["equal_trials"] == 100


def _random_poly(rng, mode, max_terms=3, max_len=3, gens=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        word = Word.make([rng.randint(1, gens)
                          for _ in range(rng.randint(0, max_len))], mode)
        coeff = Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3)))
        new = terms.get(word, Fraction(0)) + coeff
        if new:
            terms[word] = new
        else:
            terms.pop(word, None)
    return fa.Polynomial(terms, mode)


def test_criterion_9_engine_unit_properties():
    with criterion("criterion 9 (ring axioms, canonical forms, counts)"):
        rng = random.Random(99)
        for case in range(1000):
            mode = COM if case % 2 else NONCOM
            p, q, r = (_random_poly(rng, mode) for _ in range(3))
            assert fa.mul(fa.mul(p, q), r) == fa.mul(p, fa.mul(q, r))
            assert fa.mul(p, fa.add(q, r)) == fa.add(fa.mul(p, q), fa.mul(p, r))
            assert fa.add(p, q) == fa.add(q, p)
            # canonicalization idempotence
            assert fa._from_items(list(p.terms.items()), mode) == p
            # component extraction partitions
            subsets = [frozenset()]
            for v in (1, 2, 3):
                subsets += [s | {v} for s in subsets]
            total = fa.zero(mode)
            for s in subsets:
                total = fa.add(total, fa.exact_varset_component(p, s))
            assert total == p

        for k in range(1, 7):
            for n in range(1, 7):
                p = fa.power(fa.sum_of_generators(set(range(1, k + 1)), NONCOM), n)
                assert len(p) == k ** n
                assert all(c == 1 for c in p.terms.values())

        for n in range(2, 7):
            noncom = fa.multilinear_component(
                fa.power(fa.sum_of_generators(set(range(1, n + 1)), NONCOM), n), n)
            assert len(noncom) == math.factorial(n)
            assert all(c == 1 for c in noncom.terms.values())
            com = fa.multilinear_component(
                fa.power(fa.sum_of_generators(set(range(1, n + 1)), COM), n), n)
            assert list(com.terms.values()) == [math.factorial(n)]
