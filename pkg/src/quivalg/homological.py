"""Homological invariants: syzygies, translates, Ext, dimensions.

Everything here works with minimal projective covers, so syzygies and
resolution terms are minimal by construction.  Dimension searches are
bounded and return sentinel objects (ExceedsBound, AtLeastBound) instead
of looping forever on infinite-dimension inputs.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .algebra import PresentedAlgebra
from .linalg import Matrix, ZERO, determinant, rank
from .modules import (
    ModuleHom,
    Representation,
    _ProjSum,
    _cover_data,
    _hom_from_generators,
    _induced_hom_matrix,
    _presentation_components,
    cokernel,
    dual,
    indec_injectives,
    indec_projectives,
    injective_envelope,
    is_isomorphic,
    is_projective,
    kernel,
    regular_module,
    simples,
)

DEFAULT_BOUND = 6


class ExceedsBound:
    """Sentinel: the true value is strictly greater than `bound`."""

    __slots__ = ("bound",)

    def __init__(self, bound: int):
        self.bound = bound

    def __eq__(self, other) -> bool:
        return isinstance(other, ExceedsBound) and other.bound == self.bound

    def __hash__(self) -> int:
        return hash(("ExceedsBound", self.bound))

    def __repr__(self) -> str:
        return "ExceedsBound(%d)" % self.bound


class AtLeastBound:
    """Sentinel: the true value is at least `bound` (possibly infinite)."""

    __slots__ = ("bound",)

    def __init__(self, bound: int):
        self.bound = bound

    def __eq__(self, other) -> bool:
        return isinstance(other, AtLeastBound) and other.bound == self.bound

    def __hash__(self) -> int:
        return hash(("AtLeastBound", self.bound))

    def __repr__(self) -> str:
        return "AtLeastBound(%d)" % self.bound


# -- minimal resolutions ------------------------------------------------


class _Resolution:
    """Lazily extended minimal projective resolution with cover data.

    psums[k] is the k-th term as a _ProjSum, maps[k] is the differential
    psums[k+1].rep -> psums[k].rep, epi is the augmentation onto the
    resolved module.
    """

    def __init__(self, m: Representation):
        self.module = m
        self.psums: List[_ProjSum] = []
        self.maps: List[ModuleHom] = []
        self.epi: Optional[ModuleHom] = None
        self._syzygies: List[Representation] = [m]
        self._incls: List[ModuleHom] = []

    def extend_to(self, k: int) -> None:
        while len(self.psums) <= k:
            s = len(self.psums)
            psum, epi = _cover_data(self._syzygies[s])
            self.psums.append(psum)
            if s == 0:
                self.epi = epi
            else:
                self.maps.append(epi * self._incls[s - 1])
            ker, incl = kernel(epi)
            self._syzygies.append(ker)
            self._incls.append(incl)

    def syzygy(self, k: int) -> Representation:
        if k > 0:
            self.extend_to(k - 1)
        return self._syzygies[k]


def syzygy(m: Representation, k: int) -> Representation:
    """k-th syzygy of m along minimal covers; k = 0 returns m itself."""
    if k < 0:
        raise ValueError("syzygy index must be nonnegative")
    cur = m
    for _ in range(k):
        if cur.is_zero():
            return cur
        _, epi = _cover_data(cur)
        cur = kernel(epi)[0]
    return cur


@dataclass
class MinimalPresentation:
    """Start of a minimal resolution: p1 --d--> p0 --epi--> module."""

    p1: Representation
    p0: Representation
    d: ModuleHom
    epi: ModuleHom


def minimal_presentation(m: Representation) -> MinimalPresentation:
    res = _Resolution(m)
    res.extend_to(1)
    return MinimalPresentation(
        p1=res.psums[1].rep, p0=res.psums[0].rep, d=res.maps[0], epi=res.epi
    )


# -- transpose and translates -------------------------------------------


def transpose(m: Representation) -> Representation:
    """Transpose over the opposite algebra; zero when m is projective.

    Applies Hom(-, algebra) to a minimal presentation d: P1 -> P0 and
    returns the cokernel of the induced map between the corresponding
    projectives over the opposite algebra.  Basis positions are shared
    between an algebra and its opposite (reversal keeps indices), so the
    presentation components transfer without any coordinate translation.
    """
    a = m.algebra
    psum0, epi = _cover_data(m)
    syz, incl = kernel(epi)
    psum1, epi1 = _cover_data(syz)
    comp = _presentation_components(psum1, psum0, epi1 * incl)
    op = a.opposite
    src = _ProjSum(op, list(psum0.vertices))
    tgt = _ProjSum(op, list(psum1.vertices))
    images = []
    for s in range(psum0.num_summands):
        v_s = psum0.vertices[s]
        row = [ZERO] * tgt.rep.dims[v_s]
        for t in range(psum1.num_summands):
            coeffs, positions = comp[t][s]
            start, stop = tgt.block_slice(t, v_s)
            assert stop - start == len(positions)
            assert op.endpoint_basis(psum1.vertices[t], v_s) == list(positions)
            for off, c in enumerate(coeffs):
                if c:
                    row[start + off] += c
        images.append(row)
    phi = _hom_from_generators(src, tgt.rep, images)
    return cokernel(phi)[0]


def ar_translate(m: Representation) -> Representation:
    """Auslander-Reiten translate: dual of the transpose."""
    return dual(transpose(m))


def tau2(m: Representation) -> Representation:
    """Second translate: AR translate of the first syzygy."""
    return ar_translate(syzygy(m, 1))


# -- Ext dimensions -----------------------------------------------------


def ext_dim(m: Representation, n: Representation, i: int) -> int:
    """dim Ext^i(m, n) for i >= 1, computed from a minimal resolution.

    Hom spaces out of resolution terms are kept in generator
    coordinates, so the value is dim Hom(P_i, n) minus the ranks of the
    two adjacent induced maps.
    """
    if i < 1:
        raise ValueError("ext_dim needs i >= 1")
    if m.algebra is not n.algebra:
        raise ValueError("modules live over different algebras")
    res = _Resolution(m)
    res.extend_to(i + 1)

    def hom_dim(k: int) -> int:
        return sum(n.dims[v] for v in res.psums[k].vertices)

    if hom_dim(i) == 0:
        return 0
    rank_out = rank(_induced_hom_matrix(res.psums[i + 1], res.psums[i], res.maps[i], n))
    rank_in = rank(_induced_hom_matrix(res.psums[i], res.psums[i - 1], res.maps[i - 1], n))
    return hom_dim(i) - rank_out - rank_in


# -- bounded dimension searches -----------------------------------------


def projective_dimension(
    m: Representation, bound: int = DEFAULT_BOUND
) -> Union[int, ExceedsBound]:
    """Projective dimension, or ExceedsBound(bound) when it is > bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if m.is_zero():
        return 0
    cur = m
    for k in range(bound + 1):
        _, epi = _cover_data(cur)
        cur = kernel(epi)[0]
        if cur.is_zero():
            return k
    return ExceedsBound(bound)


def global_dimension(
    a: PresentedAlgebra, bound: int = DEFAULT_BOUND
) -> Union[int, ExceedsBound]:
    """Max projective dimension over the simple modules, bounded search."""
    best = 0
    for s in simples(a):
        pd = projective_dimension(s, bound)
        if isinstance(pd, ExceedsBound):
            return pd
        best = max(best, pd)
    return best


def injective_dimension(
    m: Representation, bound: int = DEFAULT_BOUND
) -> Union[int, ExceedsBound]:
    """Injective dimension via the projective dimension of the dual."""
    return projective_dimension(dual(m), bound)


def dominant_dimension(
    a: PresentedAlgebra, bound: int = DEFAULT_BOUND
) -> Union[int, AtLeastBound]:
    """Number of leading projective terms of the minimal injective
    coresolution of the regular module; AtLeastBound(bound) when the
    first bound terms are all projective or the coresolution stops."""
    if bound < 1:
        raise ValueError("bound must be positive")
    cur = regular_module(a)
    for k in range(bound):
        if cur.is_zero():
            return AtLeastBound(bound)
        env, mono = injective_envelope(cur)
        if not is_projective(env):
            return k
        cur = cokernel(mono)[0]
    return AtLeastBound(bound)


def is_selfinjective(a: PresentedAlgebra) -> bool:
    from .modules import is_injective

    return is_injective(regular_module(a))


# -- Cartan data --------------------------------------------------------


def cartan_matrix(a: PresentedAlgebra) -> Matrix:
    """Entry (i, j) = dim of the slice of the basis from vertex i to j."""
    nv = a.num_vertices
    rows = [
        [len(a.endpoint_basis(i, j)) for j in range(nv)] for i in range(nv)
    ]
    return Matrix(nv, nv, rows)


def cartan_determinant(a: PresentedAlgebra):
    """Exact rational determinant of the Cartan matrix."""
    return determinant(cartan_matrix(a))


# -- cluster-tilting verdict --------------------------------------------


def is_generator_cogenerator(m: Representation, seed: int = 0) -> bool:
    """Every indecomposable projective and injective occurs among the
    direct summands of m (up to isomorphism)."""
    from .endos import decompose

    a = m.algebra
    parts = [p.rep for p in decompose(m, seed=seed)]
    for target in indec_projectives(a) + indec_injectives(a):
        if not any(bool(is_isomorphic(target, p, seed=seed)) for p in parts):
            return False
    return True


def _is_connected(quiver) -> bool:
    n = quiver.num_vertices
    if n <= 1:
        return True
    adj: List[set] = [set() for _ in range(n)]
    for ar in quiver.arrows:
        adj[ar.source].add(ar.target)
        adj[ar.target].add(ar.source)
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n


@dataclass
class ClusterTiltingVerdict:
    """Outcome of the bounded cluster-tilting check for a module.

    is_cluster_tilting is None when the bounded searches could not
    settle the answer; conclusive records whether it is final.
    """

    n: int
    is_cluster_tilting: Optional[bool]
    conclusive: bool
    generator_cogenerator: bool
    global_dimension: Union[int, ExceedsBound]
    dominant_dimension: Union[int, AtLeastBound]
    end_dim: int
    ext_dims: Dict[int, int] = field(default_factory=dict)
    presentation: object = None

    def __bool__(self) -> bool:
        return self.is_cluster_tilting is True


def _equals_target(value, target: int) -> Optional[bool]:
    """Does a possibly-bounded value equal target?  None = unknown."""
    if isinstance(value, ExceedsBound):
        return False if value.bound >= target else None
    if isinstance(value, AtLeastBound):
        return False if value.bound > target else None
    return value == target


def cluster_tilting_verdict(
    m: Representation,
    n: int,
    bound: int = DEFAULT_BOUND,
    seed: int = 0,
    max_length: int = 20,
) -> ClusterTiltingVerdict:
    """Check whether m is n-cluster-tilting via its endomorphism algebra.

    m must live over a connected non-semisimple algebra and n >= 2.
    The verdict is True exactly when m is a generator-cogenerator, the
    endomorphism algebra has global dimension and dominant dimension
    both equal to n + 1, and Ext^i(m, m) = 0 for 0 < i < n.  Bounded
    dimension searches that cannot separate the computed value from
    n + 1 leave the verdict inconclusive.
    """
    from .endquiver import end_as_quiver_algebra

    a = m.algebra
    if n < 2:
        raise ValueError("cluster-tilting degree must be at least 2")
    if not a.quiver.arrows:
        raise ValueError("base algebra must not be semisimple")
    if not _is_connected(a.quiver):
        raise ValueError("base algebra must have a connected quiver")
    if m.is_zero():
        raise ValueError("module must be nonzero")

    gen_cog = is_generator_cogenerator(m, seed=seed)
    pres = end_as_quiver_algebra(m, max_length=max_length, seed=seed)
    b = pres.presented
    gdim = global_dimension(b, bound)
    ddim = dominant_dimension(b, bound)
    ext_dims = {i: ext_dim(m, m, i) for i in range(1, n)}
    ext_ok = all(d == 0 for d in ext_dims.values())

    target = n + 1
    g_eq = _equals_target(gdim, target)
    d_eq = _equals_target(ddim, target)
    if not gen_cog or g_eq is False or d_eq is False or not ext_ok:
        verdict: Optional[bool] = False
        conclusive = True
    elif g_eq is None or d_eq is None:
        verdict = None
        conclusive = False
    else:
        verdict = True
        conclusive = True
    return ClusterTiltingVerdict(
        n=n,
        is_cluster_tilting=verdict,
        conclusive=conclusive,
        generator_cogenerator=gen_cog,
        global_dimension=gdim,
        dominant_dimension=ddim,
        end_dim=b.dim,
        ext_dims=ext_dims,
        presentation=pres,
    )
