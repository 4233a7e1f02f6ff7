import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from matkls.errors import DegreeExceedsRank
from matkls.poly import IntPoly, IntPoly2, reverse

coeff_lists = st.lists(st.integers(min_value=-10**30, max_value=10**30), max_size=8)
t = sp.Symbol("t")


def to_sympy(p):
    return sum(c * t**i for i, c in enumerate(p.coeffs))


def test_normal_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().degree == -1
    assert IntPoly(5) == 5


def test_reverse_examples():
    assert reverse(IntPoly([1, 2]), 3) == IntPoly([0, 0, 2, 1])
    assert reverse(IntPoly([1]), 0) == IntPoly([1])
    with pytest.raises(DegreeExceedsRank):
        reverse(IntPoly([1, 1, 1]), 1)


@given(coeff_lists, st.integers(min_value=0, max_value=4))
def test_reverse_is_involution(coeffs, extra):
    p = IntPoly(coeffs)
    r = max(p.degree, 0) + extra
    assert reverse(reverse(p, r), r) == p


@given(coeff_lists, coeff_lists)
def test_arithmetic_matches_sympy(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert sp.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sp.expand(to_sympy(p + q) - to_sympy(p) - to_sympy(q)) == 0
    assert sp.expand(to_sympy(p - q) - to_sympy(p) + to_sympy(q)) == 0


@given(coeff_lists, st.integers(min_value=-50, max_value=50))
def test_evaluation(coeffs, v):
    p = IntPoly(coeffs)
    assert p(v) == sum(c * v**i for i, c in enumerate(coeffs))


def test_str():
    assert str(IntPoly([-8, 14, -7, 1])) == "t^3 - 7t^2 + 14t - 8"
    assert str(IntPoly()) == "0"


def test_bivariate_substitution():
    # x^2 + x + y at x = 1 - t, y = 0
    tri = IntPoly2([[0, 1], [1], [1]])
    assert tri[(2, 0)] == 1 and tri[(0, 1)] == 1 and tri[(1, 1)] == 0
    assert tri.substitute(IntPoly([1, -1]), IntPoly()) == IntPoly([2, -3, 1])
    assert tri(2, 5) == 11


def test_bivariate_normal_form():
    assert IntPoly2([[1, 0, 0], [0, 0]]).coeffs == ((1,),)
    assert IntPoly2([[0], [0]]).coeffs == ()


def test_immutable():
    p = IntPoly([1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


def test_pickle_roundtrip():
    import pickle

    p = IntPoly([3, 0, -2])
    assert pickle.loads(pickle.dumps(p)) == p
    q = IntPoly2([[1, 2], [0, 3]])
    assert pickle.loads(pickle.dumps(q)).coeffs == q.coeffs
