"""Vector space laws and serialization of sparse linear combinations."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from wqsym.lincomb import (
    LinComb,
    basis_sort_key,
    format_coeff,
    lincomb_from_json,
    lincomb_to_json,
    lincomb_to_text,
    lc_mul,
    tensor,
    tensor_bilinear,
)
from wqsym.words import shifted_shuffle


SIGMA = (1, 2)
TAU = (2, 1)
RHO = (1,)


def test_additive_inverse_cancels():
    assert LinComb.single(SIGMA, 1) + LinComb.single(SIGMA, -1) == LinComb.zero()


def test_rational_addition():
    s = LinComb.single(SIGMA, Fraction(1, 2)) + LinComb.single(SIGMA, Fraction(1, 3))
    assert s == LinComb.single(SIGMA, Fraction(5, 6))


def test_disjoint_keys():
    s = LinComb.single(SIGMA, 1) + LinComb.single(TAU, 2)
    assert s.terms == {SIGMA: 1, TAU: 2}


def test_map_basis_zero():
    assert LinComb.zero().map_basis(lambda k: LinComb.single(k, 99)) == LinComb.zero()


def test_map_basis_scalar_carry():
    out = LinComb.single(SIGMA, 2).map_basis(lambda k: LinComb.single(TAU, 1))
    assert out == LinComb.single(TAU, 2)


def test_map_basis_key_merge():
    combo = LinComb.single(SIGMA, 1) + LinComb.single(TAU, 1)
    out = combo.map_basis(lambda k: LinComb.single(RHO, 1))
    assert out == LinComb.single(RHO, 2)


def test_tensor_bilinear_empty():
    anything = LinComb.single(((), ()), 1)
    assert tensor_bilinear(LinComb.zero(), anything, shifted_shuffle) == LinComb.zero()


def test_tensor_bilinear_unit_law():
    iota = LinComb.single(((), ()), 1)
    assert tensor_bilinear(iota, iota, shifted_shuffle) == iota


def test_tensor_bilinear_one_letter():
    # ((1), id) x (id, (1)) under the shifted shuffle: both legs multiply
    # a one letter word by the unit
    a = LinComb.single(((1,), ()), 1)
    b = LinComb.single(((), (1,)), 1)
    assert tensor_bilinear(a, b, shifted_shuffle) == LinComb.single(((1,), (1,)), 1)


keys = st.tuples(st.integers(min_value=-3, max_value=3).filter(bool))
rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
combos = st.dictionaries(keys, rationals, max_size=5).map(LinComb)


@settings(max_examples=80, deadline=None)
@given(combos, combos, combos)
def test_vector_space_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + LinComb.zero() == a
    assert a - a == LinComb.zero()


@settings(max_examples=80, deadline=None)
@given(combos, combos, rationals)
def test_scalar_distributivity(a, b, r):
    assert (a + b).scale(r) == a.scale(r) + b.scale(r)


@settings(max_examples=60, deadline=None)
@given(combos, combos)
def test_map_basis_is_linear(a, b):
    f = lambda k: LinComb.single(k + k, 2) + LinComb.single((), 1)
    assert (a + b).map_basis(f) == a.map_basis(f) + b.map_basis(f)


@settings(max_examples=80, deadline=None)
@given(combos, combos, rationals)
def test_no_stored_zeros(a, b, r):
    for lc in (a + b, a - b, a.scale(r), lc_mul(a, b, lambda x, y: LinComb.single(x + y))):
        assert all(c != 0 for c in lc.terms.values())


def test_items_in_canonical_order():
    lc = LinComb({(2, 1): 1, (1,): 1, (1, 2): 1, (): 1})
    assert [k for k, _ in lc.items()] == [(), (1,), (1, 2), (2, 1)]
    assert basis_sort_key((-1, 2)) < basis_sort_key((1, 2))


def test_tensor_outer_product():
    t = tensor(LinComb.single((1,), 2), LinComb.single((2,), 3))
    assert t == LinComb.single(((1,), (2,)), 6)


def test_json_round_trip():
    lc = LinComb({(1, -2): Fraction(5, 6), (2, -1): -2})
    enc = lambda k: ",".join(map(str, k))
    dec = lambda s: tuple(int(x) for x in s.split(","))
    blob = lincomb_to_json(lc, enc)
    assert blob["terms"][0]["coeff"] in ("5/6", "-2")
    assert lincomb_from_json(blob, dec) == lc


def test_unit_coefficient_serializes_plainly():
    assert format_coeff(Fraction(2, 2)) == "1"
    assert format_coeff(Fraction(-3, 3)) == "-1"
    assert format_coeff(Fraction(5, 6)) == "5/6"


def test_text_rendering():
    lc = LinComb({(1, 2): 2, (2, 1): -1})
    text = lincomb_to_text(lc, lambda k: f"P[{','.join(map(str, k))}]")
    assert text == "2*P[1,2] - 1*P[2,1]"
    assert lincomb_to_text(LinComb.zero(), str) == "0"
