"""Representations, homs, duality, covers, and hom spaces.

Oracle facts come from the two smallest test algebras: the dual
numbers (one loop, square zero) and the path algebra of v1 -> v2.
"""

import pytest

from quivalg import (
    ModuleHom,
    Representation,
    cokernel,
    direct_sum,
    dual,
    hom_basis,
    indec_injectives,
    indec_projectives,
    injective_envelope,
    is_injective,
    is_isomorphic,
    is_projective,
    kernel,
    projective_cover,
    radical_top_socle,
    regular_module,
    simples,
    validate,
)
from quivalg.linalg import QQ, Matrix
from quivalg.modules import radical, socle, top, zero_module


def test_validate_accepts_regular(two_loop, a2):
    assert validate(regular_module(two_loop)) is None
    assert validate(regular_module(a2)) is None


def test_validate_rejects_broken_action(l2):
    # x acting as the identity violates x^2 = 0
    bad = Representation(l2, [1], [Matrix(1, 1, [[QQ(1)]])])
    assert validate(bad) is not None


def test_simples_and_projectives_a2(a2):
    s = simples(a2)
    assert [x.dims for x in s] == [[1, 0], [0, 1]]
    p = indec_projectives(a2)
    assert [x.dims for x in p] == [[1, 1], [0, 1]]
    i = indec_injectives(a2)
    assert [x.dims for x in i] == [[1, 0], [1, 1]]
    for x in s + p + i:
        assert validate(x) is None


def test_l2_projective_equals_injective(l2):
    p = indec_projectives(l2)[0]
    i = indec_injectives(l2)[0]
    assert p.dims == [2] and i.dims == [2]
    assert is_projective(i) and is_injective(p)
    assert bool(is_isomorphic(p, i))


def test_regular_module_is_projective_sum(two_loop):
    reg = regular_module(two_loop)
    assert reg.total_dim == two_loop.dim
    assert is_projective(reg)
    assert not is_injective(reg)  # the two-loop quotient is not selfinjective


def test_direct_sum_structure(l2):
    p = indec_projectives(l2)[0]
    s = simples(l2)[0]
    total, injs, projs = direct_sum([p, s])
    assert total.total_dim == 3
    assert validate(total) is None
    for inc, pr, part in zip(injs, projs, (p, s)):
        assert (inc * pr).total_matrix() == Matrix.identity(part.total_dim)
    # mixed terms vanish
    assert (injs[0] * projs[1]).is_zero()
    assert (injs[1] * projs[0]).is_zero()


def test_hom_composition_is_left_to_right(a2):
    p = indec_projectives(a2)
    # Hom(P2, P1) is one-dimensional, Hom(P1, P2) vanishes
    assert len(hom_basis(p[1], p[0])) == 1
    assert len(hom_basis(p[0], p[1])) == 0
    f = hom_basis(p[1], p[0])[0]
    g = ModuleHom.identity(p[0])
    assert (f * g).total_matrix() == f.total_matrix()


def test_hom_dims_two_loop(two_loop):
    reg = regular_module(two_loop)
    assert len(hom_basis(reg, reg)) == two_loop.dim
    s = simples(two_loop)[0]
    assert len(hom_basis(reg, s)) == 1
    # Hom(S, A) is the right annihilator of the radical, i.e. the socle
    assert len(hom_basis(s, reg)) == socle(reg)[0].total_dim == 2


def test_kernel_cokernel_exactness(l2):
    p = indec_projectives(l2)[0]
    s = simples(l2)[0]
    covers = hom_basis(p, s)
    onto = next(h for h in covers if h.rank() == 1)
    k, inc = kernel(onto)
    assert k.total_dim == 1
    assert (inc * onto).is_zero()
    c, pr = cokernel(inc)
    assert c.total_dim == 1
    assert (inc * pr).is_zero()


def test_radical_top_socle_l2(l2):
    p = indec_projectives(l2)[0]
    r, t, soc = radical_top_socle(p)
    assert r[0].total_dim == 1 and t[0].total_dim == 1 and soc[0].total_dim == 1
    rad_rep, rad_inc = radical(p)
    assert (rad_inc * ModuleHom.identity(p)).total_matrix() == rad_inc.total_matrix()
    assert top(p)[0].total_dim == 1
    assert socle(p)[0].total_dim == 1
    assert rad_rep.total_dim == 1


def test_projective_cover_minimal(two_loop):
    s = simples(two_loop)[0]
    cover, epi = projective_cover(s)
    assert cover.total_dim == two_loop.dim  # local algebra: cover of S is A
    assert epi.rank() == 1
    env, mono = injective_envelope(s)
    assert env.total_dim == two_loop.dim
    assert mono.rank() == 1


def test_dual_reverses_dims(a2):
    p1 = indec_projectives(a2)[0]
    d = dual(p1)
    assert d.algebra is not a2
    assert d.total_dim == p1.total_dim
    assert validate(d) is None


def test_dual_swaps_projective_injective(two_loop):
    reg = regular_module(two_loop)
    da = dual(regular_module(two_loop.opposite))
    assert is_injective(da)
    assert not is_projective(da)
    assert validate(da) is None
    assert da.total_dim == reg.total_dim


def test_is_isomorphic_negative_certainty(l2):
    p = indec_projectives(l2)[0]
    s = simples(l2)[0]
    verdict = is_isomorphic(p, s)
    assert not verdict
    assert verdict.certain  # dimension mismatch is conclusive


def test_is_isomorphic_finds_nontrivial_witness(l2, two_loop):
    p = indec_projectives(l2)[0]
    twisted = Representation(l2, [2], [Matrix(2, 2, [[QQ(0), QQ(3)], [QQ(0), QQ(0)]])])
    assert validate(twisted) is None
    witness = is_isomorphic(p, twisted)
    assert bool(witness)
    assert witness.is_isomorphism()
    assert witness.source is p and witness.target is twisted


def test_zero_module_edge_cases(l2):
    z = zero_module(l2)
    assert z.is_zero() and z.total_dim == 0
    assert hom_basis(z, z) == []
    assert is_projective(z) and is_injective(z)
