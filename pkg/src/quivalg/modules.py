"""Right modules over a presented algebra, given as quiver representations.

A representation assigns a row-vector space to every vertex and a matrix to
every arrow; arrows act on the right (x at source(a) maps to x @ mat(a) at
target(a)).  Homomorphisms are per-vertex matrices subject to commuting
squares, composed left-to-right like paths.  Everything here is exact.
"""

from __future__ import annotations

import random
import weakref
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import QuivalgError
from .linalg import (
    Matrix,
    ONE,
    ZERO,
    hstack,
    kernel_basis,
    left_kernel_basis,
    rat,
    row_space_basis,
    rref,
    solve_left,
    vstack,
    _block_diagonal_any,
)
from .quiver import Path, PathAlgElement
from .algebra import PresentedAlgebra


def _row_times(row: List, mat: Matrix) -> List:
    out = [ZERO] * mat.ncols
    for i, c in enumerate(row):
        if c:
            mrow = mat.rows[i]
            for j in range(mat.ncols):
                x = mrow[j]
                if x:
                    out[j] += c * x
    return out


class Representation:
    """A right module: dimension per vertex, matrix per arrow.

    Instances are treated as immutable.  Construction checks shapes only;
    validate() checks that the algebra's relations act by zero.
    """

    __slots__ = ("algebra", "dims", "matrices", "__weakref__")

    def __init__(
        self,
        algebra: PresentedAlgebra,
        dims: Sequence[int],
        matrices: Sequence[Matrix],
    ):
        dims = [int(d) for d in dims]
        matrices = list(matrices)
        if len(dims) != algebra.num_vertices:
            raise ValueError(
                f"expected {algebra.num_vertices} vertex dimensions, got {len(dims)}"
            )
        arrows = algebra.quiver.arrows
        if len(matrices) != len(arrows):
            raise ValueError(
                f"expected {len(arrows)} arrow matrices, got {len(matrices)}"
            )
        for a, mat in zip(arrows, matrices):
            if mat.nrows != dims[a.source] or mat.ncols != dims[a.target]:
                raise ValueError(
                    f"arrow {a.label!r} needs a {dims[a.source]}x{dims[a.target]} "
                    f"matrix, got {mat.nrows}x{mat.ncols}"
                )
        self.algebra = algebra
        self.dims = dims
        self.matrices = matrices

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, p: Path) -> Matrix:
        """Action of a path: product of its arrow matrices in path order."""
        if p.length == 0:
            return Matrix.identity(self.dims[p.source])
        out = self.matrices[p.arrows[0]]
        for ai in p.arrows[1:]:
            out = out @ self.matrices[ai]
        return out

    def element_matrix(self, el: PathAlgElement) -> Matrix:
        """Action of a vertex-homogeneous path-algebra element."""
        ends = el.uniform_endpoints()
        if ends is None:
            raise ValueError("element does not have uniform endpoints")
        u, v = ends
        acc = Matrix.zero(self.dims[u], self.dims[v])
        for p, c in el.sorted_terms():
            acc = acc + self.path_matrix(p).scale(c)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.dims == other.dims
            and self.matrices == other.matrices
        )

    def __hash__(self):
        return hash((id(self.algebra), tuple(self.dims)))

    def __repr__(self) -> str:
        return f"Representation(dims {self.dims}, total {self.total_dim})"


def validate(r: Representation) -> Optional[str]:
    """None when every relation acts by zero, else a report on the first
    violation.  Shape mismatches are rejected at construction already."""
    for rel in r.algebra.relations:
        mat = r.element_matrix(rel)
        if not mat.is_zero():
            return f"relation {rel!r} acts by a nonzero matrix"
    return None


class ModuleHom:
    """Homomorphism between representations: one matrix per vertex.

    The commuting-square law, for each arrow a: v -> w, is
    mat_source(a) @ f_w == f_v @ mat_target(a); h1 * h2 composes
    left-to-right (h1 then h2), matching path composition.
    """

    __slots__ = ("source", "target", "vertex_maps")

    def __init__(
        self,
        source: Representation,
        target: Representation,
        vertex_maps: Sequence[Matrix],
    ):
        vertex_maps = list(vertex_maps)
        if len(vertex_maps) != source.algebra.num_vertices:
            raise ValueError("one matrix per vertex required")
        for v, f in enumerate(vertex_maps):
            if f.nrows != source.dims[v] or f.ncols != target.dims[v]:
                raise ValueError(
                    f"vertex {v} map must be {source.dims[v]}x{target.dims[v]}, "
                    f"got {f.nrows}x{f.ncols}"
                )
        self.source = source
        self.target = target
        self.vertex_maps = vertex_maps

    @staticmethod
    def identity(m: Representation) -> "ModuleHom":
        return ModuleHom(m, m, [Matrix.identity(d) for d in m.dims])

    @staticmethod
    def zero(m: Representation, n: Representation) -> "ModuleHom":
        return ModuleHom(m, n, [Matrix.zero(m.dims[v], n.dims[v]) for v in range(len(m.dims))])

    def is_valid(self) -> bool:
        """Exact check of every commuting square."""
        for a in self.source.algebra.quiver.arrows:
            lhs = self.source.matrices[a.index] @ self.vertex_maps[a.target]
            rhs = self.vertex_maps[a.source] @ self.target.matrices[a.index]
            if lhs != rhs:
                return False
        return True

    def __mul__(self, other: "ModuleHom") -> "ModuleHom":
        """Left-to-right composition: self then other."""
        if self.target is not other.source and self.target != other.source:
            raise ValueError("composition endpoints do not match")
        maps = [f @ g for f, g in zip(self.vertex_maps, other.vertex_maps)]
        return ModuleHom(self.source, other.target, maps)

    def then(self, other: "ModuleHom") -> "ModuleHom":
        return self * other

    def __add__(self, other: "ModuleHom") -> "ModuleHom":
        maps = [f + g for f, g in zip(self.vertex_maps, other.vertex_maps)]
        return ModuleHom(self.source, self.target, maps)

    def __sub__(self, other: "ModuleHom") -> "ModuleHom":
        maps = [f - g for f, g in zip(self.vertex_maps, other.vertex_maps)]
        return ModuleHom(self.source, self.target, maps)

    def __neg__(self) -> "ModuleHom":
        return ModuleHom(self.source, self.target, [-f for f in self.vertex_maps])

    def scale(self, c) -> "ModuleHom":
        c = rat(c)
        return ModuleHom(self.source, self.target, [f.scale(c) for f in self.vertex_maps])

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.vertex_maps)

    def total_matrix(self) -> Matrix:
        """Block-diagonal matrix over the concatenated vertex spaces."""
        return _block_diagonal_any(self.vertex_maps)

    def rank(self) -> int:
        return sum(len(rref(f)[1]) for f in self.vertex_maps)

    def is_isomorphism(self) -> bool:
        return (
            self.source.dims == self.target.dims
            and self.rank() == sum(self.source.dims)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.vertex_maps == other.vertex_maps
        )

    def __repr__(self) -> str:
        return f"ModuleHom({self.source!r} -> {self.target!r})"


class NotIsomorphic:
    """Negative outcome of is_isomorphic; falsy.  certain is True only when
    a dimension obstruction rules the isomorphism out, otherwise the answer
    is probabilistic (no invertible combination was found)."""

    __slots__ = ("certain",)

    def __init__(self, certain: bool):
        self.certain = certain

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"NotIsomorphic(certain={self.certain})"


def _same_algebra(m: Representation, n: Representation) -> None:
    if m.algebra is not n.algebra:
        raise ValueError("representations live over different algebras")


# -- basic module constructions ----------------------------------------


def zero_module(a: PresentedAlgebra) -> Representation:
    dims = [0] * a.num_vertices
    mats = [Matrix.zero(0, 0) for _ in a.quiver.arrows]
    return Representation(a, dims, mats)


def simples(a: PresentedAlgebra) -> List[Representation]:
    """S(i): one-dimensional at vertex i, all arrows acting by zero."""
    out = []
    for i in range(a.num_vertices):
        dims = [1 if v == i else 0 for v in range(a.num_vertices)]
        mats = [
            Matrix.zero(dims[ar.source], dims[ar.target]) for ar in a.quiver.arrows
        ]
        out.append(Representation(a, dims, mats))
    return out


_proj_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def indec_projectives(a: PresentedAlgebra) -> List[Representation]:
    """P(i) = e_i A, with basis the algebra basis paths starting at i and
    arrows acting by right multiplication through the algebra's table."""
    cached = _proj_cache.get(a)
    if cached is not None:
        return list(cached)
    out = []
    for i in range(a.num_vertices):
        positions = [a.endpoint_basis(i, v) for v in range(a.num_vertices)]
        local: Dict[int, Tuple[int, int]] = {}
        for v, plist in enumerate(positions):
            for k, pos in enumerate(plist):
                local[pos] = (v, k)
        dims = [len(plist) for plist in positions]
        mats = []
        for ar in a.quiver.arrows:
            mat = Matrix.zero(dims[ar.source], dims[ar.target])
            for r, pos in enumerate(positions[ar.source]):
                for pos2, c in a.apply_arrow({pos: ONE}, ar.index).items():
                    v2, k2 = local[pos2]
                    assert v2 == ar.target
                    mat.rows[r][k2] = c
            mats.append(mat)
        out.append(Representation(a, dims, mats))
    _proj_cache[a] = out
    return list(out)


def dual(r: Representation) -> Representation:
    """Vector-space dual over the opposite algebra: same dimensions, each
    reversed arrow acting by the transposed matrix.  An involution."""
    op = r.algebra.opposite
    mats = [m.transpose() for m in r.matrices]
    return Representation(op, list(r.dims), mats)


def dual_hom(
    h: ModuleHom,
    dual_source: Optional[Representation] = None,
    dual_target: Optional[Representation] = None,
) -> ModuleHom:
    """Dual of a hom: runs from dual(target) to dual(source), transposed."""
    src = dual_source if dual_source is not None else dual(h.target)
    tgt = dual_target if dual_target is not None else dual(h.source)
    return ModuleHom(src, tgt, [f.transpose() for f in h.vertex_maps])


def indec_injectives(a: PresentedAlgebra) -> List[Representation]:
    """I(i) = dual of the i-th indecomposable projective of the opposite."""
    return [dual(p) for p in indec_projectives(a.opposite)]


def regular_module(a: PresentedAlgebra) -> Representation:
    """A as a right module over itself: the sum of all P(i) in vertex order."""
    rep, _, _ = direct_sum(indec_projectives(a))
    return rep


def direct_sum(
    ms: Sequence[Representation],
) -> Tuple[Representation, List[ModuleHom], List[ModuleHom]]:
    """Direct sum with its injection and projection homs."""
    ms = list(ms)
    if not ms:
        raise ValueError("direct_sum needs at least one summand")
    a = ms[0].algebra
    for m in ms[1:]:
        if m.algebra is not a:
            raise ValueError("direct_sum over mixed algebras")
    dims = [sum(m.dims[v] for m in ms) for v in range(a.num_vertices)]
    mats = [
        _block_diagonal_any([m.matrices[ar.index] for m in ms])
        for ar in a.quiver.arrows
    ]
    total = Representation(a, dims, mats)
    injections = []
    projections = []
    offset = [0] * a.num_vertices
    for m in ms:
        inj_maps = []
        proj_maps = []
        for v in range(a.num_vertices):
            inj = Matrix.zero(m.dims[v], dims[v])
            for i in range(m.dims[v]):
                inj.rows[i][offset[v] + i] = ONE
            inj_maps.append(inj)
            proj_maps.append(inj.transpose())
        injections.append(ModuleHom(m, total, inj_maps))
        projections.append(ModuleHom(total, m, proj_maps))
        for v in range(a.num_vertices):
            offset[v] += m.dims[v]
    return total, injections, projections


# -- explicit sums of indecomposable projectives ------------------------


class _ProjSum:
    """Direct sum of P(v) for a list of vertices, with generator positions.

    Summand s occupies a contiguous row block at every vertex; its
    generator (the trivial path of P(vertices[s])) sits at row
    offsets[s][vertices[s]] of the vertex space, which is local index 0 of
    the block because trivial paths head the algebra basis.
    """

    __slots__ = ("algebra", "vertices", "rep", "offsets")

    def __init__(self, algebra: PresentedAlgebra, vertices: Sequence[int]):
        self.algebra = algebra
        self.vertices = list(vertices)
        projs = indec_projectives(algebra)
        parts = [projs[v] for v in self.vertices]
        nv = algebra.num_vertices
        self.offsets: List[List[int]] = []
        running = [0] * nv
        for part in parts:
            self.offsets.append(list(running))
            for v in range(nv):
                running[v] += part.dims[v]
        dims = list(running)
        mats = [
            _block_diagonal_any([p.matrices[ar.index] for p in parts])
            for ar in algebra.quiver.arrows
        ]
        self.rep = Representation(algebra, dims, mats)

    @property
    def num_summands(self) -> int:
        return len(self.vertices)

    def generator_row(self, s: int) -> Tuple[int, int]:
        """(vertex, row index) of the s-th summand's generator."""
        v = self.vertices[s]
        return v, self.offsets[s][v]

    def block_slice(self, s: int, at_vertex: int) -> Tuple[int, int]:
        """Row range of summand s inside the vertex space."""
        start = self.offsets[s][at_vertex]
        width = len(self.algebra.endpoint_basis(self.vertices[s], at_vertex))
        return start, start + width


def _fold_row(row: List, n: Representation, arrows: Sequence[int]) -> List:
    for ai in arrows:
        row = _row_times(row, n.matrices[ai])
    return row


def _hom_from_generators(
    psum: _ProjSum, n: Representation, images: Sequence[Sequence]
) -> ModuleHom:
    """The hom out of a projective sum sending each generator to the given
    row of n at the matching vertex; basis paths fold through n's action."""
    a = psum.algebra
    maps = []
    for w in range(a.num_vertices):
        rows: List[List] = []
        for s, v_s in enumerate(psum.vertices):
            image = [rat(x) for x in images[s]]
            for pos in a.endpoint_basis(v_s, w):
                rows.append(_fold_row(image, n, a.basis[pos].arrows))
        maps.append(Matrix(len(rows), n.dims[w], rows))
    return ModuleHom(psum.rep, n, maps)


# -- substructures and quotients ----------------------------------------


def _sub_rep(
    m: Representation, rows_list: Sequence[Matrix]
) -> Tuple[Representation, ModuleHom]:
    """Subrepresentation on given row bases (must be arrow-stable)."""
    a = m.algebra
    dims = [rm.nrows for rm in rows_list]
    mats = []
    for ar in a.quiver.arrows:
        prod = rows_list[ar.source] @ m.matrices[ar.index]
        sol = solve_left(rows_list[ar.target], prod)
        if sol is None:
            raise QuivalgError("internal: subspace is not arrow-stable")
        mats.append(sol)
    sub = Representation(a, dims, mats)
    incl = ModuleHom(sub, m, [rm.copy() for rm in rows_list])
    return sub, incl


def _quotient_data(sub: Matrix, ambient: int) -> Tuple[Matrix, Matrix]:
    """(lift, proj) for the quotient of an ambient row space by a sub
    row space: lift rows are the non-pivot unit representatives, proj maps
    ambient coordinates to quotient coordinates, and lift @ proj is the
    identity on the quotient."""
    ech, pivots = rref(sub)
    pivot_set = set(pivots)
    np_cols = [j for j in range(ambient) if j not in pivot_set]
    lift = Matrix.zero(len(np_cols), ambient)
    for r, j in enumerate(np_cols):
        lift.rows[r][j] = ONE
    proj = Matrix.zero(ambient, len(np_cols))
    pivot_row = {pc: k for k, pc in enumerate(pivots)}
    for i in range(ambient):
        if i in pivot_set:
            ech_row = ech.rows[pivot_row[i]]
            for c, j in enumerate(np_cols):
                if ech_row[j]:
                    proj.rows[i][c] = -ech_row[j]
        else:
            proj.rows[i][np_cols.index(i)] = ONE
    return lift, proj


def _quotient_rep(
    m: Representation, sub_rows: Sequence[Matrix]
) -> Tuple[Representation, ModuleHom]:
    """Quotient of m by an arrow-stable subspace, with the projection hom."""
    a = m.algebra
    lifts = []
    projs = []
    for v in range(a.num_vertices):
        lift, proj = _quotient_data(sub_rows[v], m.dims[v])
        lifts.append(lift)
        projs.append(proj)
    dims = [lift.nrows for lift in lifts]
    mats = []
    for ar in a.quiver.arrows:
        mats.append(lifts[ar.source] @ m.matrices[ar.index] @ projs[ar.target])
    quot = Representation(a, dims, mats)
    return quot, ModuleHom(m, quot, projs)


def kernel(h: ModuleHom) -> Tuple[Representation, ModuleHom]:
    """Kernel with its inclusion into the source."""
    rows_list = [left_kernel_basis(f) for f in h.vertex_maps]
    return _sub_rep(h.source, rows_list)


def cokernel(h: ModuleHom) -> Tuple[Representation, ModuleHom]:
    """Cokernel with the projection from the target."""
    image_rows = [row_space_basis(f) for f in h.vertex_maps]
    return _quotient_rep(h.target, image_rows)


def _radical_rows(m: Representation) -> List[Matrix]:
    a = m.algebra
    rows = []
    for v in range(a.num_vertices):
        incoming = [m.matrices[ar.index] for ar in a.quiver.in_arrows[v]]
        if incoming:
            rows.append(row_space_basis(vstack(incoming)))
        else:
            rows.append(Matrix.zero(0, m.dims[v]))
    return rows


def radical_top_socle(m: Representation):
    """((rad, inclusion), (top, projection), (soc, inclusion)).

    rad at v is the sum of incoming arrow images, soc at v the intersection
    of outgoing arrow kernels; top = m / rad carries the zero action.
    """
    a = m.algebra
    rad_rows = _radical_rows(m)
    rad = _sub_rep(m, rad_rows)
    top = _quotient_rep(m, rad_rows)
    soc_rows = []
    for v in range(a.num_vertices):
        outgoing = [m.matrices[ar.index] for ar in a.quiver.out_arrows[v]]
        if outgoing:
            soc_rows.append(left_kernel_basis(hstack(outgoing)))
        else:
            soc_rows.append(Matrix.identity(m.dims[v]))
    soc = _sub_rep(m, soc_rows)
    return rad, top, soc


def radical(m: Representation) -> Tuple[Representation, ModuleHom]:
    return _sub_rep(m, _radical_rows(m))


def top(m: Representation) -> Tuple[Representation, ModuleHom]:
    return _quotient_rep(m, _radical_rows(m))


def socle(m: Representation) -> Tuple[Representation, ModuleHom]:
    return radical_top_socle(m)[2]


# -- covers, envelopes, projectivity ------------------------------------


def _cover_data(m: Representation) -> Tuple[_ProjSum, ModuleHom]:
    """Projective cover as an explicit sum of P(v) with the covering epi.

    One summand P(v) per basis vector of top(m) at v; the generator maps to
    the chosen representative, a unit vector missing the radical pivots.
    """
    a = m.algebra
    rad_rows = _radical_rows(m)
    vertices: List[int] = []
    images: List[List] = []
    for v in range(a.num_vertices):
        _, pivots = rref(rad_rows[v])
        pivot_set = set(pivots)
        for j in range(m.dims[v]):
            if j not in pivot_set:
                row = [ZERO] * m.dims[v]
                row[j] = ONE
                vertices.append(v)
                images.append(row)
    psum = _ProjSum(a, vertices)
    epi = _hom_from_generators(psum, m, images)
    return psum, epi


def projective_cover(m: Representation) -> Tuple[Representation, ModuleHom]:
    psum, epi = _cover_data(m)
    return psum.rep, epi


def injective_envelope(m: Representation) -> Tuple[Representation, ModuleHom]:
    """Minimal injective extension, via the cover of the dual module."""
    dm = dual(m)
    psum, epi = _cover_data(dm)
    env = dual(psum.rep)
    mono = ModuleHom(m, env, [f.transpose() for f in epi.vertex_maps])
    return env, mono


def is_projective(m: Representation) -> bool:
    _, epi = projective_cover(m)
    return epi.is_isomorphism()


def is_injective(m: Representation) -> bool:
    _, mono = injective_envelope(m)
    return mono.is_isomorphism()


# -- hom spaces ---------------------------------------------------------

# above this many matrix cells the stacked commuting-square system is
# replaced by the equivalent solve through a minimal projective presentation
_DIRECT_HOM_CELLS = 200_000


def hom_basis(m: Representation, n: Representation) -> List[ModuleHom]:
    """Deterministic basis of Hom(m, n).

    Small instances solve the stacked commuting-square system directly by
    kernel_basis; larger ones factor through a minimal projective
    presentation of m, which gives the same space with far fewer unknowns.
    """
    _same_algebra(m, n)
    a = m.algebra
    unknowns = sum(m.dims[v] * n.dims[v] for v in range(a.num_vertices))
    if unknowns == 0:
        return []
    constraints = sum(
        m.dims[ar.source] * n.dims[ar.target] for ar in a.quiver.arrows
    )
    if unknowns * (constraints + unknowns) <= _DIRECT_HOM_CELLS:
        return _hom_basis_direct(m, n)
    return _hom_basis_presented(m, n)


def _hom_basis_direct(m: Representation, n: Representation) -> List[ModuleHom]:
    a = m.algebra
    nv = a.num_vertices
    offsets = []
    total = 0
    for v in range(nv):
        offsets.append(total)
        total += m.dims[v] * n.dims[v]
    rows: List[List] = []
    for ar in a.quiver.arrows:
        u, v = ar.source, ar.target
        ma, na = m.matrices[ar.index], n.matrices[ar.index]
        for i in range(m.dims[u]):
            for j in range(n.dims[v]):
                row = [ZERO] * total
                for k in range(m.dims[v]):
                    if ma.rows[i][k]:
                        row[offsets[v] + k * n.dims[v] + j] += ma.rows[i][k]
                for l in range(n.dims[u]):
                    if na.rows[l][j]:
                        row[offsets[u] + i * n.dims[u] + l] -= na.rows[l][j]
                rows.append(row)
    system = Matrix(len(rows), total, rows) if rows else Matrix.zero(0, total)
    out = []
    for sol in kernel_basis(system).rows:
        maps = []
        for v in range(nv):
            block = [
                sol[offsets[v] + i * n.dims[v] : offsets[v] + (i + 1) * n.dims[v]]
                for i in range(m.dims[v])
            ]
            maps.append(Matrix(m.dims[v], n.dims[v], block))
        out.append(ModuleHom(m, n, maps))
    return out


def _presentation_components(
    psum_hi: _ProjSum, psum_lo: _ProjSum, d: ModuleHom
) -> List[List[Tuple[List, List[int]]]]:
    """comp[t][s] = (coefficients, basis positions) of the element of
    e_{v_s} A e_{v_t} carried by the map's (t, s) component."""
    a = psum_lo.algebra
    comp = []
    for t in range(psum_hi.num_summands):
        v_t, row_idx = psum_hi.generator_row(t)
        gen_row = d.vertex_maps[v_t].rows[row_idx]
        per_s = []
        for s in range(psum_lo.num_summands):
            lo_start, lo_stop = psum_lo.block_slice(s, v_t)
            coeffs = gen_row[lo_start:lo_stop]
            positions = a.endpoint_basis(psum_lo.vertices[s], v_t)
            per_s.append((coeffs, positions))
        comp.append(per_s)
    return comp


def _induced_hom_matrix(
    psum_hi: _ProjSum, psum_lo: _ProjSum, d: ModuleHom, n: Representation
) -> Matrix:
    """Matrix of precomposition with d: Hom(psum_lo, n) -> Hom(psum_hi, n).

    Both hom spaces are taken in generator coordinates: a hom out of a
    projective sum is the list of generator images, one row of n per
    summand.  Row index = source coordinate, column index = target one.
    """
    a = psum_lo.algebra
    comp = _presentation_components(psum_hi, psum_lo, d)
    col_offsets = []
    ncols = 0
    for t in range(psum_hi.num_summands):
        col_offsets.append(ncols)
        ncols += n.dims[psum_hi.vertices[t]]
    rows: List[List] = []
    for s in range(psum_lo.num_summands):
        v_s = psum_lo.vertices[s]
        for beta in range(n.dims[v_s]):
            unit = [ZERO] * n.dims[v_s]
            unit[beta] = ONE
            row = [ZERO] * ncols
            for t in range(psum_hi.num_summands):
                coeffs, positions = comp[t][s]
                if not any(coeffs):
                    continue
                base = col_offsets[t]
                for c, pos in zip(coeffs, positions):
                    if c:
                        folded = _fold_row(unit, n, a.basis[pos].arrows)
                        for j, x in enumerate(folded):
                            if x:
                                row[base + j] += c * x
            rows.append(row)
    return Matrix(len(rows), ncols, rows)


def _hom_basis_presented(m: Representation, n: Representation) -> List[ModuleHom]:
    a = m.algebra
    psum0, epi = _cover_data(m)
    syz, incl = kernel(epi)
    psum1, epi1 = _cover_data(syz)
    d1 = epi1 * incl
    system = _induced_hom_matrix(psum1, psum0, d1, n)
    solutions = left_kernel_basis(system)
    # sections of the cover epi, one per vertex, to factor homs through m
    sections = []
    for v in range(a.num_vertices):
        sec = solve_left(epi.vertex_maps[v], Matrix.identity(m.dims[v]))
        assert sec is not None
        sections.append(sec)
    out = []
    for sol in solutions.rows:
        images = []
        cursor = 0
        for s in range(psum0.num_summands):
            width = n.dims[psum0.vertices[s]]
            images.append(sol[cursor : cursor + width])
            cursor += width
        g = _hom_from_generators(psum0, n, images)
        maps = [sections[v] @ g.vertex_maps[v] for v in range(a.num_vertices)]
        out.append(ModuleHom(m, n, maps))
    return out


# -- isomorphism testing ------------------------------------------------


def is_isomorphic(
    m: Representation,
    n: Representation,
    seed: int = 0,
    attempts: int = 24,
) -> Union[ModuleHom, NotIsomorphic]:
    """Invertible hom witness, or a falsy NotIsomorphic.

    Positive answers are certain (the witness is verified invertible);
    negative answers are probabilistic unless a dimension obstruction or an
    empty hom space makes them certain.  Deterministic for a fixed seed.
    """
    _same_algebra(m, n)
    if m.dims != n.dims:
        return NotIsomorphic(certain=True)
    if m.total_dim == 0:
        return ModuleHom.zero(m, n)
    if m is n:
        return ModuleHom.identity(m)
    homs = hom_basis(m, n)
    if not homs:
        return NotIsomorphic(certain=True)
    for h in homs:
        if h.is_isomorphism():
            return h
    rng = random.Random(seed)
    for _ in range(attempts):
        coeffs = [rng.randint(-4, 4) for _ in homs]
        combo = None
        for c, h in zip(coeffs, homs):
            if c:
                part = h.scale(c)
                combo = part if combo is None else combo + part
        if combo is not None and combo.is_isomorphism():
            return combo
    return NotIsomorphic(certain=False)
