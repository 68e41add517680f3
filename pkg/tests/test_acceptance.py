"""Acceptance criteria, all at exact equality.

Each test also asserts its runtime budget.  The terminal summary prints one
PASS/FAIL line per criterion with its elapsed time.
"""

import time

import pytest

from squareice import verifier as V
from squareice.cyclo import CoeffMode
from squareice.partition import Convention

G, W6 = CoeffMode.GENERIC, CoeffMode.OMEGA6


def _all_pass(reports):
    failed = [r.summary() + f" witness={r.witness}" for r in reports if not r.passed]
    assert not failed, "\n".join(failed)


def _within(start, seconds):
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


@pytest.mark.criterion("01 Yang-Baxter, 64 boundary cases")
def test_01_yang_baxter(criterion):
    start = time.perf_counter()
    rep = V.check_yang_baxter(G, "symbolic")
    _all_pass([rep])
    assert rep.params["constrained"] is True
    _within(start, 1)


@pytest.mark.criterion("02 Laurent structure, n = 1..5")
def test_02_half_width(criterion):
    start = time.perf_counter()
    _all_pass([V.check_half_width(n, G) for n in range(1, 6)])
    _within(start, 60)


@pytest.mark.criterion("03 partial symmetry, n = 2, 3")
def test_03_partial_symmetry(criterion):
    start = time.perf_counter()
    _all_pass([V.check_partial_symmetry(n, G) for n in (2, 3)])
    _within(start, 10)


@pytest.mark.criterion("04 specialization recursion, n = 2, 3, 4")
def test_04_specialization(criterion):
    start = time.perf_counter()
    _all_pass([V.check_specialization_dwbc(n) for n in (2, 3, 4)])
    _within(start, 60)


@pytest.mark.criterion("05 full symmetry at omega6, n = 1..5")
def test_05_theorem_main(criterion):
    start = time.perf_counter()
    reports = [V.check_theorem_main(n, "symbolic") for n in (1, 2, 3)]
    reports += [V.check_theorem_main(n, "random", trials=20, seed=0) for n in (4, 5)]
    _all_pass(reports)
    for rep in reports[3:]:
        assert rep.params["trials"] >= 20
        assert len(rep.params["transpositions"]) == 2 * rep.params["n"] - 1
    _within(start, 300)


@pytest.mark.criterion("06 counting consistency")
def test_06_counts(criterion):
    start = time.perf_counter()
    counts = V.check_state_counts(range(1, 7))
    homog = V.check_homogeneous_counts(range(1, 6), (), ())
    _all_pass([counts, homog])
    assert [counts.details["counts"][n][0] for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]
    _within(start, 120)


@pytest.mark.criterion("07 half-turn Laurent structure")
def test_07_half_width_ht(criterion):
    start = time.perf_counter()
    _all_pass([V.check_half_width_ht(n, fam, G) for fam in ("even", "odd") for n in (1, 2)])
    _within(start, 60)


@pytest.mark.criterion("08 loop and exchange identities")
def test_08_loop_exchange(criterion):
    start = time.perf_counter()
    _all_pass([V.check_loop_identity()] + [V.check_exchange_loop(w) for w in (1, 2)])
    _within(start, 30)


@pytest.mark.criterion("09 pseudo-symmetry, 2N = 2, 4")
def test_09_pseudo_sym(criterion):
    start = time.perf_counter()
    _all_pass([V.check_pseudo_sym(n) for n in (1, 2)])
    _within(start, 60)


@pytest.mark.criterion("10 half-turn specializations")
def test_10_specialization_ht(criterion):
    start = time.perf_counter()
    _all_pass([V.check_specialization_ht(n) for n in (1, 2)])
    _within(start, 120)


@pytest.mark.criterion("11 half-turn symmetry theorem")
def test_11_theorem_ht(criterion):
    start = time.perf_counter()
    reports = [V.check_theorem_ht(1, fam, "symbolic") for fam in ("odd", "even")]
    reports += [V.check_theorem_ht(2, fam, "random", trials=20, seed=0) for fam in ("odd", "even")]
    _all_pass(reports)
    assert all(r.params["x_equals_y"] for r in reports if r.params["family"] == "even")
    _within(start, 300)


@pytest.mark.criterion("12 calibration determinism")
def test_12_calibration(criterion):
    start = time.perf_counter()
    rep = V.check_calibration(dwbc_sizes=(2, 3, 4), ht_sizes=(1, 2))
    _all_pass([rep])
    outcome = rep.details["outcome"]
    assert [c for c, o in outcome.items() if o["passes"]] == [Convention.FIGURE.value]
    assert rep.details["selected"] == "figure"
    # frozen: the mirrored convention fails the forced corner structure and
    # the half-turn specializations even though its recursion identities hold
    assert outcome["mirrored"] == {"dwbc_identities": True, "forced_structure": False,
                                   "ht_specializations": False, "passes": False}


@pytest.mark.criterion("13 oracle equivalence")
def test_13_oracle_equivalence(criterion):
    start = time.perf_counter()
    reports = [V.check_oracle_equivalence(n, "symbolic") for n in range(1, 6)]
    reports.append(V.check_oracle_equivalence(6, "random", trials=20, seed=0))
    reports.append(V.check_ht_counts(even_orders=(2, 4, 6), odd_orders=(1, 3, 5)))
    _all_pass(reports)
    _within(start, 180)
