import pytest

from squareice.cyclo import CoeffMode, CycNum
from squareice.ice import build_dwbc, build_ht_even, build_ht_odd
from squareice.laurent import LaurentPoly
from squareice.partition import (Convention, partition_function, sigma_a,
                                 transfer_matrix_partition, weight_poly)

G, W6 = CoeffMode.GENERIC, CoeffMode.OMEGA6


def _s(exps, a_exp=1):
    return sigma_a(G, a_exp, exps)


def test_single_vertex():
    assert partition_function(build_dwbc(1)).value == _s({}, 2)


def test_two_by_two_by_hand():
    # identity and anti-identity matrices; the two 1-entries carry sigma(a^2)
    c = _s({}, 2)
    anti = _s({"x1": 1, "y2": -1}) * _s({"x2": 1, "y1": -1})
    ident = _s({"x1": -1, "y1": 1}) * _s({"x2": -1, "y2": 1})
    res = partition_function(build_dwbc(2))
    assert res.state_count == 2
    assert res.value == c * c * (anti + ident)


def test_frozen_omega6_values():
    ones = {v: CycNum(1) for v in ("x1", "x2", "y1", "y2")}
    assert partition_function(build_dwbc(2), W6, point=ones).value == CycNum(18)
    twos = {v: CycNum(2) for v in ("x1", "x2", "x3", "y1", "y2", "y3")}
    assert partition_function(build_dwbc(3), W6, point=twos).value == CycNum(-567, 1134)


def test_weight_classes():
    param = {"x1": 1, "y1": -1}
    assert weight_poly("O1", param, G) == weight_poly("O2", param, G) == _s({}, 2)
    assert weight_poly("O3", param, G) == _s(param)
    assert weight_poly("O5", param, G) == _s({"x1": -1, "y1": 1})
    assert weight_poly("O3", param, G, Convention.MIRRORED) == weight_poly("O5", param, G)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("mode", [G, W6])
def test_backends_and_transfer_matrix_agree(n, mode):
    g = build_dwbc(n)
    ref = partition_function(g, mode, backend="dict").value
    assert partition_function(g, mode, backend="array").value == ref
    assert transfer_matrix_partition(g, mode) == ref


def test_generic_result_specializes_to_omega6():
    g = build_dwbc(3)
    assert partition_function(g, G).value.to_omega6() == partition_function(g, W6).value


def test_point_evaluation_matches_symbolic():
    g = build_dwbc(3)
    pt = {v: CycNum(k + 1, 1 - k) for k, v in enumerate(("x1", "x2", "x3", "y1", "y2", "y3"))}
    sym = partition_function(g, W6).value
    assert partition_function(g, W6, point=pt).value == sym.evaluate(pt)
    assert transfer_matrix_partition(g, W6, point=pt) == sym.evaluate(pt)


def test_half_turn_split_sums_to_total():
    for g in (build_ht_even(2), build_ht_odd(1)):
        res = partition_function(g)
        assert len(res.split) == 2
        total = LaurentPoly.zero(G)
        for part in res.split.values():
            total = total + part
        assert total == res.value


def test_json_shape():
    res = partition_function(build_ht_even(1))
    obj = res.to_json("ht-even", 1, G)
    assert set(obj) == {"model", "n", "mode", "Z", "state_count", "split"}
    assert obj["split"]["labels"] == ["up", "down"]
