"""Text format round trips and parse diagnostics."""

import pytest

from quivalg import (
    ParseError,
    build_algebra,
    format_algebra,
    format_element,
    format_module,
    parse_algebra,
    parse_module,
    reference_end_algebra,
    regular_module,
    simples,
    validate,
)
from quivalg.linalg import QQ

from conftest import element


def test_algebra_round_trip_two_loop(two_loop):
    text = format_algebra(two_loop.quiver, two_loop.relations)
    quiver, relations = parse_algebra(text)
    assert quiver.vertex_labels == two_loop.quiver.vertex_labels
    assert [a.label for a in quiver.arrows] == [a.label for a in two_loop.quiver.arrows]
    assert len(relations) == len(two_loop.relations)
    rebuilt = build_algebra(quiver, relations)
    assert rebuilt.dim == two_loop.dim
    # formatting the parse is stable
    assert format_algebra(quiver, relations) == text


def test_algebra_round_trip_reference():
    b = reference_end_algebra()
    text = format_algebra(b.quiver, b.relations)
    quiver, relations = parse_algebra(text)
    assert build_algebra(quiver, relations).dim == 165


def test_module_round_trip(two_loop):
    reg = regular_module(two_loop)
    text = format_module(reg, "some/path with spaces.alg")
    rep = parse_module(text, algebra=two_loop)
    assert rep == reg
    assert format_module(rep, "some/path with spaces.alg") == text


def test_module_algebra_reference_keeps_raw_tail(two_loop):
    # references may contain characters outside the token alphabet
    text = format_module(simples(two_loop)[0], "builtin:two-loop-local")
    seen = {}

    def loader(ref):
        seen["ref"] = ref
        return two_loop

    rep = parse_module(text, algebra_loader=loader)
    assert seen["ref"] == "builtin:two-loop-local"
    assert validate(rep) is None


def test_missing_arrow_block_means_zero(two_loop):
    text = "vertex v 1\n"
    rep = parse_module(text, algebra=two_loop)
    assert rep.dims == [1]
    assert all(mat.is_zero() for mat in rep.matrices)


def test_format_element_signs_and_coefficients(two_loop):
    q = two_loop.quiver
    el = element(q, (QQ(1), ["a"]), (QQ(-1, 2), ["b", "b"]), (QQ(3), ["a", "b"]))
    text = format_element(q, el)
    assert text == "a + 3*a*b - 1/2*b*b"


def test_parse_algebra_positions():
    bad = "vertices v\narrow a: v -> v\nrelation a*c\n"
    with pytest.raises(ParseError) as err:
        parse_algebra(bad)
    assert err.value.line == 3
    assert "c" in str(err.value)


def test_parse_algebra_duplicate_arrow():
    bad = "vertices v\narrow a: v -> v\narrow a: v -> v\n"
    with pytest.raises(ParseError) as err:
        parse_algebra(bad)
    assert err.value.line == 3


def test_parse_algebra_unknown_vertex_in_arrow():
    bad = "vertices v\narrow a: v -> w\n"
    with pytest.raises(ParseError) as err:
        parse_algebra(bad)
    assert err.value.line == 2


def test_parse_module_shape_errors(two_loop):
    bad = "vertex v 2\narrow a\n1 0\n"
    with pytest.raises(ParseError) as err:
        parse_module(bad, algebra=two_loop)
    assert "2 rows" in str(err.value)
    bad_width = "vertex v 1\narrow a\n1 0\n"
    with pytest.raises(ParseError) as err:
        parse_module(bad_width, algebra=two_loop)
    assert "1 entries" in str(err.value)


def test_parse_module_unknown_labels(two_loop):
    with pytest.raises(ParseError) as err:
        parse_module("vertex w 1\n", algebra=two_loop)
    assert "unknown vertex" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_module("vertex v 1\narrow zz\n0\n", algebra=two_loop)
    assert "unknown arrow" in str(err.value)
    assert err.value.line == 2


def test_parse_module_needs_algebra_source():
    with pytest.raises(ParseError):
        parse_module("vertex v 1\n")


def test_parse_rational_entries(two_loop):
    text = "vertex v 1\narrow a\n0\narrow b\n-2/3\n"
    rep = parse_module(text, algebra=two_loop)
    assert rep.matrices[1].rows[0][0] == QQ(-2, 3)
    with pytest.raises(ParseError):
        parse_module("vertex v 1\narrow a\n1/0\n", algebra=two_loop)


def test_comments_and_blank_lines_ignored(two_loop):
    text = "# header\n\nvertex v 1  # inline\n\n# done\n"
    rep = parse_module(text, algebra=two_loop)
    assert rep.dims == [1]
