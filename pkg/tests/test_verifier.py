"""Checks pass on the real model and fail, with a witness, on broken inputs."""

import json

import pytest

from squareice import verifier as V
from squareice.cyclo import CoeffMode, CycNum
from squareice.partition import Convention

G, W6 = CoeffMode.GENERIC, CoeffMode.OMEGA6


def _fails(rep):
    return rep.verdict == "fail" and rep.witness is not None


def test_spec_identities_only_at_omega6():
    assert V.check_spec_identities(W6).passed
    assert _fails(V.check_spec_identities(G))


def test_yang_baxter_needs_the_parameter_constraint():
    assert _fails(V.check_yang_baxter(G, "symbolic", constrained=False))
    assert V.check_yang_baxter(W6, "random", trials=3).passed
    assert _fails(V.check_yang_baxter(W6, "random", trials=3, constrained=False))


def test_yang_baxter_fails_in_mirrored_convention():
    assert _fails(V.check_yang_baxter(G, "symbolic", convention=Convention.MIRRORED))


def test_loop_factor_must_be_complete():
    assert _fails(V.check_loop_identity("sigma_az"))


def test_exchange_with_swapped_coefficients_fails():
    assert _fails(V.check_exchange_loop(1, swap_coeffs=True))


def test_row_and_column_variables_do_not_commute_generically():
    assert _fails(V.check_partial_symmetry(2, transpositions=[("x1", "y1")]))
    assert _fails(V.check_theorem_main(3, "symbolic", mode=G, transpositions=[("x3", "y1")]))


def test_specialization_with_swapped_factors_fails():
    assert _fails(V.check_specialization_dwbc(2, swap_factors=True))


def test_specialization_ht_with_wrong_pairing_fails():
    wrong = {k: ((v[0][0], v[1][1]), (v[1][0], v[0][1])) for k, v in V.HT_PAIRINGS.items()}
    assert _fails(V.check_specialization_ht(1, pairings=wrong))


def test_even_half_turn_without_equal_centre_parameters():
    # x1 <-> y1 happens to remain a symmetry; exchanging x1 with x does not
    assert V.check_theorem_ht(2, "even", "symbolic", x_equals_y=False,
                              transpositions=[("x1", "y1")]).passed
    assert _fails(V.check_theorem_ht(2, "even", "symbolic", x_equals_y=False,
                                     transpositions=[("x1", "x")]))


def test_calibration_selects_figure_convention():
    rep = V.check_calibration(dwbc_sizes=(2, 3), ht_sizes=(1,))
    assert rep.passed
    assert rep.details["selected"] == "figure"


def test_sampler_is_seeded_and_avoids_zero():
    a = V.PointSampler(7).points(["x1", "y1"], 5, width=2)
    b = V.PointSampler(7).points(["x1", "y1"], 5, width=2)
    assert a == b
    assert all(not v.is_zero() for pt in a for v in pt.values())
    for var in ("x1", "y1"):
        assert len({pt[var] for pt in a}) > 2


def test_report_json_is_deterministic_without_timing():
    rep = V.check_state_counts([1, 2, 3])
    obj = rep.to_json(timing=False)
    assert "elapsed_ms" not in obj
    assert json.dumps(obj) == json.dumps(V.check_state_counts([1, 2, 3]).to_json(timing=False))
    assert "elapsed_ms" in rep.to_json(timing=True)


def test_poly_witness_names_a_monomial():
    z = V.dwbc_z(2)
    w = V.poly_witness(z, z.swap("x1", "y1"), transposition=["x1", "y1"])
    assert w["transposition"] == ["x1", "y1"]
    assert set(w) >= {"monomial", "lhs", "rhs"}


@pytest.mark.parametrize("family", ["even", "odd"])
def test_half_width_ht_at_omega6(family):
    assert V.check_half_width_ht(1, family, W6).passed
