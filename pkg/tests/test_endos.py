"""Endomorphism algebra structure, radicals, and decomposition."""

import pytest

from quivalg import (
    DecompositionInconclusiveError,
    ModuleHom,
    decompose,
    direct_sum,
    indec_projectives,
    is_isomorphic,
    regular_module,
    simples,
)
from quivalg.endos import EndStructure
from quivalg.linalg import QQ, Matrix, SpanSolver, rank, vstack


@pytest.fixture(scope="module")
def l2_mixed(l2):
    s = simples(l2)[0]
    p = indec_projectives(l2)[0]
    return direct_sum([s, p])[0]


def test_end_dims_l2_mixed(l2_mixed):
    e = EndStructure(l2_mixed)
    assert e.dim == 5
    assert e.radical_dim == 3
    assert len(e.radical_square()) == 1  # Hom(S,P) then Hom(P,S) survives one step


def test_end_dims_l2_double_projective(l2):
    p = indec_projectives(l2)[0]
    pp = direct_sum([p, p])[0]
    e = EndStructure(pp)
    assert e.dim == 8
    assert e.radical_dim == 4


def test_semisimple_end_has_zero_radical(a2):
    reg = regular_module(a2)
    # End(A2-regular) is A2 itself: radical = the arrow span
    e = EndStructure(reg)
    assert e.dim == 3
    assert e.radical_dim == 1
    s = simples(a2)[0]
    assert EndStructure(s).radical_dim == 0


def test_radical_homs_are_nilpotent(l2_mixed):
    e = EndStructure(l2_mixed)
    for h in e.radical_homs():
        power = h
        for _ in range(l2_mixed.total_dim):
            power = power * h
        assert power.is_zero()
    ident = ModuleHom.identity(l2_mixed)
    assert e.coords(ident) is not None
    # the identity never lies in the radical span
    solver = SpanSolver(l2_mixed.total_dim ** 2)
    for h in e.radical_homs():
        solver.insert(h.total_matrix().flatten())
    assert solver.coords(ident.total_matrix().flatten()) is None


def test_natural_and_regular_trace_forms_agree(l2, l2_mixed, a2):
    # the radical from the trace form of the action on the module must
    # match the radical from the trace form of left multiplication on
    # the endomorphism algebra itself
    targets = [l2_mixed, regular_module(a2), direct_sum([indec_projectives(l2)[0]] * 2)[0]]
    for x in targets:
        e = EndStructure(x)
        n = e.dim
        left_mult = []
        for i in range(n):
            rows = []
            for j in range(n):
                prod = e.basis[i] * e.basis[j]
                rows.append(e.coords(prod))
            left_mult.append(Matrix(n, n, rows))
        gram = Matrix(
            n, n, [[(left_mult[i] @ left_mult[j]).trace() for j in range(n)] for i in range(n)]
        )
        from quivalg.linalg import left_kernel_basis

        reg_radical = left_kernel_basis(gram)
        nat_radical = e.radical_coords
        assert rank(reg_radical) == rank(nat_radical)
        assert rank(vstack([reg_radical, nat_radical])) == rank(nat_radical)


def test_decompose_indecomposable_is_identity(l2):
    p = indec_projectives(l2)[0]
    parts = decompose(p, seed=0)
    assert len(parts) == 1
    assert parts[0].rep.total_dim == p.total_dim
    assert parts[0].idempotent.total_matrix() == Matrix.identity(p.total_dim)


def test_decompose_split_pair(l2_mixed):
    parts = decompose(l2_mixed, seed=0)
    assert sorted(s.rep.total_dim for s in parts) == [1, 2]
    ident = ModuleHom.identity(l2_mixed)
    total = None
    for s in parts:
        e = s.idempotent
        assert (e * e).total_matrix() == e.total_matrix()
        total = e if total is None else total + e
    assert total.total_matrix() == ident.total_matrix()
    for i, si in enumerate(parts):
        for j, sj in enumerate(parts):
            prod = si.idempotent * sj.idempotent
            if i != j:
                assert prod.is_zero()


def test_decompose_inclusion_projection_identities(l2_mixed):
    for s in decompose(l2_mixed, seed=0):
        round_trip = s.inclusion * s.projection  # summand -> M -> summand
        assert round_trip.total_matrix() == Matrix.identity(s.rep.total_dim)
        back = s.projection * s.inclusion  # M -> summand -> M
        assert back.total_matrix() == s.idempotent.total_matrix()


def test_decompose_deterministic(l2_mixed):
    a = [s.rep.dims for s in decompose(l2_mixed, seed=0)]
    b = [s.rep.dims for s in decompose(l2_mixed, seed=0)]
    assert a == b


def test_end_of_m_frozen_profile(m_module, m_structure, m_summands):
    assert m_structure.dim == 165
    assert m_structure.radical_dim == 160
    assert len(m_structure.radical_square(summands=m_summands)) == 150
    assert m_structure.radical_nilpotency_index(m_summands) == 17


def test_m_summands_match_translates(m_summands, translates):
    assert len(m_summands) == 5
    assert [s.rep.total_dim for s in m_summands] == [t.total_dim for t in translates]
    for s, t in zip(m_summands, translates):
        assert bool(is_isomorphic(s.rep, t))
