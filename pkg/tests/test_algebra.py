"""Quotient construction oracles and multiplication invariants."""

import random
from collections import Counter

import pytest

from quivalg import (
    MalformedRelationError,
    NotFiniteDimensionalError,
    PathAlgElement,
    Quiver,
    build_algebra,
    build_dimension_only,
    reference_end_algebra,
)
from quivalg.linalg import QQ

from conftest import element


def test_two_loop_frozen_dimensions(two_loop):
    assert two_loop.dim == 6
    assert two_loop.num_vertices == 1
    assert two_loop.loewy_length == 4
    # basis leads with the trivial path, then the arrows
    assert two_loop.basis[0].length == 0
    assert {two_loop.basis[1].length, two_loop.basis[2].length} == {1}


def test_two_loop_relations_vanish(two_loop):
    q = two_loop.quiver
    for rel in (
        element(q, (1, ["a", "a"])),
        element(q, (1, ["a", "b"]), (1, ["b", "b"]), (1, ["b", "b", "a"])),
    ):
        assert two_loop.normal_form(rel).is_zero()
        assert not any(two_loop.element_vec(rel).values())


def test_reference_end_algebra_frozen_profile():
    b = reference_end_algebra()
    assert b.dim == 165
    assert b.num_vertices == 5
    assert b.loewy_length == 17
    hist = Counter(p.length for p in b.basis)
    assert dict(hist) == {0: 5, 1: 10, 2: 19, 3: 31, 4: 43, 5: 37, 6: 15, 7: 4, 8: 1}


def test_reference_basis_starts_with_idempotents_then_arrows():
    b = reference_end_algebra()
    assert [p.length for p in b.basis[:5]] == [0] * 5
    assert [p.length for p in b.basis[5:15]] == [1] * 10
    for v in range(5):
        assert b.idempotent_position(v) == v


def test_endpoint_basis_partitions_reference():
    b = reference_end_algebra()
    total = 0
    for u in range(5):
        for v in range(5):
            idxs = b.endpoint_basis(u, v)
            total += len(idxs)
            for i in idxs:
                p = b.basis[i]
                assert (p.source, p.target) == (u, v)
    assert total == b.dim


def _unit(i):
    # basis vectors are sparse {index: coeff} maps
    return {i: QQ(1)}


def _clean(vec):
    return {i: c for i, c in vec.items() if c != 0}


def test_identity_vec_is_unit():
    b = reference_end_algebra()
    ident = b.identity_vec()
    for i in (0, 7, 42, 164):
        assert _clean(b.multiply_vec(ident, _unit(i))) == _unit(i)
        assert _clean(b.multiply_vec(_unit(i), ident)) == _unit(i)


def test_associativity_sampled_on_reference():
    b = reference_end_algebra()
    rng = random.Random(0)
    for _ in range(24):
        i, j, k = (rng.randrange(b.dim) for _ in range(3))
        left = b.multiply_vec(b.mult_basis(i, j), _unit(k))
        right = b.multiply_vec(_unit(i), b.mult_basis(j, k))
        assert _clean(left) == _clean(right)


def test_apply_arrow_matches_mult_basis(two_loop):
    nv = two_loop.num_vertices
    for ai, _ in enumerate(two_loop.quiver.arrows):
        for i in range(two_loop.dim):
            stepped = two_loop.apply_arrow(_unit(i), ai)
            assert _clean(stepped) == _clean(two_loop.mult_basis(i, nv + ai))


def test_opposite_is_involution(two_loop):
    op = two_loop.opposite
    assert op.dim == two_loop.dim
    back = op.opposite
    assert back.dim == two_loop.dim
    assert [p.sort_key for p in back.basis] == [p.sort_key for p in two_loop.basis]


def test_loop_without_relations_is_infinite_dimensional():
    q = Quiver(["v"], [("x", "v", "v")])
    with pytest.raises(NotFiniteDimensionalError):
        build_algebra(q, [], length_cap=6)


def test_malformed_relation_mixed_endpoints():
    q = Quiver(["u", "w"], [("a", "u", "w")])
    e_u = PathAlgElement.from_path(q, q.trivial_path(0))
    a = PathAlgElement.from_path(q, q.arrow_path("a"))
    with pytest.raises(MalformedRelationError):
        build_algebra(q, [e_u + a])


def test_build_dimension_only_matches_and_aborts(two_loop):
    q = two_loop.quiver
    rels = list(two_loop.relations)
    assert build_dimension_only(q, rels, length_cap=20) == 6
    # the abort threshold is a work cap, None only means "gave up"
    assert build_dimension_only(q, [], length_cap=30, abort_above=10) is None


def test_normal_form_and_vec_round_trip(two_loop):
    for i in range(two_loop.dim):
        el = two_loop.basis_element(i)
        vec = two_loop.element_vec(el)
        assert _clean(vec) == _unit(i)
        assert two_loop.vec_to_element(vec) == el
