import pytest

from matkls.errors import CapacityExceeded, ParseError, UnsupportedField
from matkls.matroid import are_isomorphic, fano, is_connected, uniform
from matkls.named import build_named, parse_edges, projective_geometry


def test_uniform_and_boolean():
    assert build_named("uniform:2,3") == uniform(2, 3)
    b = build_named("boolean:4")
    assert (b.n, b.r, len(b.bases)) == (4, 4, 1)


def test_pg22_is_fano():
    m = build_named("pg:2,2")
    assert (m.n, m.r) == (7, 3)
    assert are_isomorphic(m, fano())


@pytest.mark.parametrize("d,q", [(1, 3), (2, 3), (3, 2), (2, 5), (1, 7)])
def test_pg_sizes(d, q):
    m = projective_geometry(d, q)
    assert m.n == (q ** (d + 1) - 1) // (q - 1)
    assert m.r == d + 1


def test_sum():
    m = build_named("sum:boolean:1+uniform:2,3")
    assert (m.n, m.r) == (4, 3)
    assert not is_connected(m)
    assert build_named("sum:boolean:1+boolean:1+boolean:1") == build_named("boolean:3")


def test_fano_dual():
    m = build_named("fano-dual")
    assert (m.n, m.r) == (7, 4)


def test_graphic_forms():
    assert build_named("graphic:K4") == build_named("graphic:0-1,0-2,0-3,1-2,1-3,2-3")
    assert build_named("graphic:K3,3").n == 9
    assert build_named("graphic:C4") == uniform(3, 4)
    assert build_named("graphic:prism").r == 5
    w = build_named("graphic:W4")
    assert (w.n, w.r) == (8, 4)
    assert parse_edges("0-1, 1-2") == [(0, 1), (1, 2)]


def test_graphic_loop_and_parallel():
    m = build_named("graphic:0-1,0-1,1-1")
    assert m.r == 1 and m.loops() == 0b100


@pytest.mark.parametrize(
    "spec,err",
    [
        ("uniform:2", ParseError),
        ("uniform:5,3", ParseError),
        ("nonsense", ParseError),
        ("graphic:0-x", ParseError),
        ("sum:fano", ParseError),
        ("pg:2,4", UnsupportedField),
        ("pg:2,7", CapacityExceeded),
        ("uniform:2,40", CapacityExceeded),
        ("sum:uniform:1,20+uniform:1,20", CapacityExceeded),
        ("fano:3", ParseError),
    ],
)
def test_errors(spec, err):
    with pytest.raises(err):
        build_named(spec)
