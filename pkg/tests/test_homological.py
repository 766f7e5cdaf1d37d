"""Syzygies, translates, dimensions: small closed-form oracles first,
then the two-loop translate pipeline."""

import pytest

from quivalg import (
    AtLeastBound,
    ExceedsBound,
    ar_translate,
    cartan_determinant,
    cartan_matrix,
    cluster_tilting_verdict,
    dominant_dimension,
    ext_dim,
    global_dimension,
    indec_projectives,
    injective_dimension,
    is_generator_cogenerator,
    is_isomorphic,
    is_projective,
    is_selfinjective,
    minimal_presentation,
    projective_dimension,
    reference_end_algebra,
    regular_module,
    simples,
    syzygy,
    tau2,
    transpose,
)
from quivalg.modules import cokernel, dual, radical


# -- dual numbers: everything is periodic --------------------------------


def test_l2_syzygy_of_simple_is_simple(l2):
    s = simples(l2)[0]
    o1 = syzygy(s, 1)
    assert bool(is_isomorphic(o1, s))
    assert bool(is_isomorphic(syzygy(s, 3), s))


def test_l2_translate_fixes_simple(l2):
    s = simples(l2)[0]
    assert bool(is_isomorphic(ar_translate(s), s))


def test_l2_ext_self_extension(l2):
    s = simples(l2)[0]
    assert ext_dim(s, s, 1) == 1
    assert ext_dim(s, s, 2) == 1  # periodic resolution


def test_l2_cartan_and_selfinjectivity(l2):
    assert int(cartan_determinant(l2)) == 2
    assert is_selfinjective(l2)


def test_l2_dimensions_hit_bounds(l2):
    s = simples(l2)[0]
    assert projective_dimension(s, 5) == ExceedsBound(5)
    assert global_dimension(l2, 5) == ExceedsBound(5)
    assert injective_dimension(s, 4) == ExceedsBound(4)
    assert dominant_dimension(l2, 6) == AtLeastBound(6)


# -- path algebra of v1 -> v2: hereditary --------------------------------


def test_a2_global_dimension_one(a2):
    assert global_dimension(a2, 6) == 1
    assert dominant_dimension(a2, 6) == 1
    assert int(cartan_determinant(a2)) == 1
    assert not is_selfinjective(a2)


def test_a2_projective_dimensions(a2):
    s1, s2 = simples(a2)
    assert projective_dimension(s1, 6) == 1
    assert projective_dimension(s2, 6) == 0
    assert ext_dim(s1, s2, 1) == 1  # one arrow v1 -> v2
    assert ext_dim(s2, s1, 1) == 0


def test_a2_translate_of_top_simple(a2):
    s1 = simples(a2)[0]
    p2 = indec_projectives(a2)[1]
    assert bool(is_isomorphic(ar_translate(s1), p2))
    for p in indec_projectives(a2):
        assert transpose(p).is_zero()
        assert ar_translate(p).is_zero()


def test_minimal_presentation_is_exact(a2, l2):
    for alg in (a2, l2):
        s = simples(alg)[0]
        pres = minimal_presentation(s)
        assert (pres.d * pres.epi).is_zero()
        c, _ = cokernel(pres.d)
        assert bool(is_isomorphic(c, s))


# -- the two-loop local algebra pipeline ---------------------------------


def test_two_loop_simple_syzygy_is_radical(two_loop):
    s = simples(two_loop)[0]
    o1 = syzygy(s, 1)
    r, _ = radical(regular_module(two_loop))
    assert bool(is_isomorphic(o1, r))
    assert o1.total_dim == 5


def test_two_loop_global_dimension_infinite(two_loop):
    assert global_dimension(two_loop, 6) == ExceedsBound(6)
    assert not is_selfinjective(two_loop)


def test_translate_dims_frozen(translates):
    assert [t.total_dim for t in translates] == [6, 8, 5, 8, 6]


def test_fourth_translate_is_projective_regular(two_loop, translates):
    u4 = translates[4]
    assert is_projective(u4)
    witness = is_isomorphic(u4, regular_module(two_loop))
    assert bool(witness)
    assert witness.is_isomorphism()


def test_translates_have_no_self_ext1(translates, m_module):
    reg_dual = translates[0]
    assert ext_dim(reg_dual, m_module, 1) == 0
    assert ext_dim(m_module, m_module, 1) == 0


def test_ext_regression_pins(two_loop, translates, m_module):
    # frozen second-degree values; these are regression pins, the
    # vanishing in degree one is the meaningful statement
    reg = regular_module(two_loop)
    da = translates[0]
    assert ext_dim(da, reg, 1) == 0
    assert ext_dim(da, reg, 2) == 4
    assert ext_dim(m_module, m_module, 2) == 35


def test_generator_cogenerator_classification(two_loop, translates, m_module):
    assert is_generator_cogenerator(m_module)
    assert not is_generator_cogenerator(regular_module(two_loop))
    assert not is_generator_cogenerator(translates[0])


def test_tau2_of_projective_vanishes(two_loop):
    assert tau2(regular_module(two_loop)).is_zero()


def test_reference_algebra_dimensions():
    b = reference_end_algebra()
    assert global_dimension(b, 6) == 3
    assert dominant_dimension(b, 6) == 3
    assert int(cartan_determinant(b)) == 1
    cm = cartan_matrix(b)
    assert [[int(x) for x in row] for row in cm.rows] == [
        [6, 8, 5, 8, 6],
        [6, 10, 6, 9, 8],
        [4, 6, 4, 6, 5],
        [7, 10, 6, 10, 8],
        [4, 7, 4, 6, 6],
    ]


def test_cluster_tilting_verdict_on_pipeline(m_module):
    verdict = cluster_tilting_verdict(m_module, 2, bound=6, seed=0)
    assert verdict.conclusive
    assert verdict.is_cluster_tilting is True
    assert bool(verdict)
    assert verdict.global_dimension == 3
    assert verdict.dominant_dimension == 3
    assert verdict.end_dim == 165


def test_cluster_tilting_inconclusive_at_low_bound(m_module):
    verdict = cluster_tilting_verdict(m_module, 2, bound=2, seed=0)
    assert not verdict.conclusive
    assert verdict.is_cluster_tilting is None
    assert not bool(verdict)


def test_cluster_tilting_rejects_bare_regular(two_loop):
    verdict = cluster_tilting_verdict(regular_module(two_loop), 2, bound=6, seed=0)
    assert verdict.conclusive
    assert verdict.is_cluster_tilting is False
