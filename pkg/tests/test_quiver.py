"""Quiver, path, and path-algebra-element basics."""

import pytest

from quivalg import IncomposableError, PathAlgElement, Quiver, compose_paths
from quivalg.linalg import QQ


@pytest.fixture()
def kronecker():
    return Quiver(["u", "w"], [("a", "u", "w"), ("b", "u", "w")])


def test_quiver_rejects_duplicate_vertex():
    with pytest.raises(ValueError):
        Quiver(["v", "v"], [])


def test_quiver_rejects_duplicate_arrow_label():
    with pytest.raises(ValueError):
        Quiver(["u", "w"], [("a", "u", "w"), ("a", "w", "u")])


def test_quiver_rejects_unknown_endpoint():
    with pytest.raises(ValueError):
        Quiver(["u"], [("a", "u", "nope")])


def test_arrow_lookup(kronecker):
    a = kronecker.arrow("a")
    assert (a.source, a.target) == (0, 1)
    with pytest.raises(ValueError):
        kronecker.arrow("zz")


def test_path_composition(kronecker):
    e_u = kronecker.trivial_path(0)
    pa = kronecker.arrow_path("a")
    assert compose_paths(e_u, pa) == pa
    assert compose_paths(pa, kronecker.trivial_path(1)) == pa
    with pytest.raises(IncomposableError):
        compose_paths(pa, pa)  # both start at u, cannot chain


def test_path_builder_and_formatting(kronecker):
    p = kronecker.path(["a"])
    assert p.length == 1
    assert kronecker.format_path(p) == "a"
    assert kronecker.format_path(kronecker.trivial_path(1)) == "e_w"


def test_loop_powers_order_length_lex():
    q = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    xy = q.path(["x", "y"])
    yx = q.path(["y", "x"])
    xxx = q.path(["x", "x", "x"])
    assert sorted([xxx, yx, xy]) == [xy, yx, xxx]


def test_reverse_swaps_endpoints(kronecker):
    rev = kronecker.reverse()
    a = rev.arrow("a")
    assert (a.source, a.target) == (1, 0)
    assert rev.vertex_labels == kronecker.vertex_labels


def test_element_arithmetic(kronecker):
    pa = PathAlgElement.from_path(kronecker, kronecker.arrow_path("a"), QQ(2))
    pb = PathAlgElement.from_path(kronecker, kronecker.arrow_path("b"), QQ(3))
    s = pa + pb
    assert s.sorted_terms()[0][1] == QQ(2)
    assert (s - pa) == pb
    assert (-pa).scale(QQ(-1)) == pa
    assert (pa - pa).is_zero()


def test_element_multiplication_respects_composition():
    q = Quiver(["v"], [("x", "v", "v")])
    x = PathAlgElement.from_path(q, q.arrow_path("x"))
    e = PathAlgElement.from_path(q, q.trivial_path(0))
    assert e * x == x
    assert (x * x).sorted_terms()[0][0] == q.path(["x", "x"])
    mixed = (e + x) * (e + x)
    lengths = sorted(p.length for p, _ in mixed.sorted_terms())
    assert lengths == [0, 1, 2]
    assert dict(mixed.sorted_terms())[q.arrow_path("x")] == QQ(2)


def test_incomposable_products_drop_to_zero(kronecker):
    pa = PathAlgElement.from_path(kronecker, kronecker.arrow_path("a"))
    assert (pa * pa).is_zero()


def test_uniform_endpoints(kronecker):
    pa = PathAlgElement.from_path(kronecker, kronecker.arrow_path("a"))
    pb = PathAlgElement.from_path(kronecker, kronecker.arrow_path("b"))
    assert (pa + pb).uniform_endpoints() == (0, 1)
    e_u = PathAlgElement.from_path(kronecker, kronecker.trivial_path(0))
    assert (pa + e_u).uniform_endpoints() is None
