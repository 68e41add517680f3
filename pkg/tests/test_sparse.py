import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from squareice.cyclo import CoeffMode
from squareice.laurent import LaurentPoly
from squareice.sparse import ArrayPoly, Layout, LayoutOverflow

G, W6 = CoeffMode.GENERIC, CoeffMode.OMEGA6
VARS = ("x1", "y1")
BOUNDS = {"x1": 12, "y1": 12}

term = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-9, 9))


def _poly(mode, terms):
    out = LaurentPoly.zero(mode)
    for e1, e2, ae, c in terms:
        out = out + LaurentPoly.monomial(mode, {"x1": e1, "y1": e2}, c, ae)
    return out


polys = st.sampled_from([G, W6]).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(term, max_size=6), st.lists(term, max_size=6)))


@given(polys)
@settings(max_examples=80)
def test_array_arithmetic_agrees_with_dict_engine(case):
    mode, ta, tb = case
    f, g = _poly(mode, ta), _poly(mode, tb)
    lay = Layout(mode, BOUNDS, a_bound=12)
    af, ag = ArrayPoly.from_laurent(f, lay), ArrayPoly.from_laurent(g, lay)
    assert (af * ag).to_laurent() == f * g
    assert (af + ag).to_laurent() == f + g
    assert (af - ag).to_laurent() == f - g


def test_coefficients_promote_instead_of_overflowing():
    lay = Layout(G, {"x1": 4}, a_bound=4)
    big = ArrayPoly.from_laurent(LaurentPoly.constant(G, 1 << 30), lay)
    sq = big * big
    assert sq.coeffs[0].dtype == object
    assert sq.to_laurent() == LaurentPoly.constant(G, 1 << 60)


def test_layout_rejects_too_many_bits():
    with pytest.raises(LayoutOverflow):
        Layout(G, {f"x{i}": 1000 for i in range(1, 8)}, a_bound=1000)


def test_structure_queries():
    lay = Layout(G, BOUNDS, a_bound=4)
    f = LaurentPoly.monomial(G, {"x1": 3}) + LaurentPoly.monomial(G, {"x1": -1, "y1": 2})
    af = ArrayPoly.from_laurent(f, lay)
    assert af.degree_range("x1") == (-1, 3)
    assert af.parity_and_centered("x1") == {"centered": False, "parity": "odd"}
    assert af.exponents_of("y1") == {0, 2}


def test_equal_layouts_compare_arrays():
    a = Layout(W6, BOUNDS)
    b = Layout(W6, dict(BOUNDS))
    assert a == b and hash(a) == hash(b)
    f = ArrayPoly.from_laurent(LaurentPoly.variable(W6, "x1"), a)
    g = ArrayPoly.from_laurent(LaurentPoly.variable(W6, "x1"), b)
    assert f == g
    assert np.array_equal(f.keys, g.keys)
