"""Exact computer algebra for quotients of path algebras and their modules."""

from .errors import (
    DecompositionInconclusiveError,
    DimensionMismatchError,
    IncomposableError,
    IncompletePresentationWarning,
    MalformedRelationError,
    NotFiniteDimensionalError,
    ParseError,
    QuivalgError,
)
from .linalg import (
    Matrix,
    SpanSolver,
    block_diagonal,
    block_diagonal_rect,
    coefficients_in_span,
    determinant,
    extend_independent,
    invert,
    kernel_basis,
    left_kernel_basis,
    rank,
    row_space_basis,
    rref,
    solve_left,
)
from .quiver import Path, PathAlgElement, Quiver, compose_paths
from .algebra import PresentedAlgebra, build_algebra, build_dimension_only
from .modules import (
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
from .homological import (
    AtLeastBound,
    ClusterTiltingVerdict,
    ExceedsBound,
    MinimalPresentation,
    ar_translate,
    cartan_determinant,
    cartan_matrix,
    cluster_tilting_verdict,
    dominant_dimension,
    ext_dim,
    global_dimension,
    injective_dimension,
    is_generator_cogenerator,
    is_selfinjective,
    minimal_presentation,
    projective_dimension,
    syzygy,
    tau2,
    transpose,
)
from .endos import (
    EndStructure,
    Summand,
    decompose,
)
from .endquiver import (
    EndPresentation,
    element_endomorphism,
    end_as_quiver_algebra,
    minimize_relations,
    path_endomorphism,
    presentation_dimension_check,
)
from .textio import (
    format_algebra,
    format_element,
    format_module,
    parse_algebra,
    parse_module,
)
from .presets import (
    builtin_algebra,
    reference_end_algebra,
    reference_end_quiver,
    reference_end_relations,
    two_loop_local_algebra,
    two_loop_quiver,
    two_loop_relations,
)
from .verify import CheckResult, VerificationReport, run_verification

__all__ = [
    "DecompositionInconclusiveError",
    "DimensionMismatchError",
    "IncomposableError",
    "IncompletePresentationWarning",
    "MalformedRelationError",
    "NotFiniteDimensionalError",
    "ParseError",
    "QuivalgError",
    "Matrix",
    "SpanSolver",
    "block_diagonal",
    "block_diagonal_rect",
    "coefficients_in_span",
    "determinant",
    "extend_independent",
    "invert",
    "kernel_basis",
    "left_kernel_basis",
    "rank",
    "row_space_basis",
    "rref",
    "solve_left",
    "Path",
    "PathAlgElement",
    "Quiver",
    "compose_paths",
    "PresentedAlgebra",
    "build_algebra",
    "build_dimension_only",
    "ModuleHom",
    "Representation",
    "cokernel",
    "direct_sum",
    "dual",
    "hom_basis",
    "indec_injectives",
    "indec_projectives",
    "injective_envelope",
    "is_injective",
    "is_isomorphic",
    "is_projective",
    "kernel",
    "projective_cover",
    "radical_top_socle",
    "regular_module",
    "simples",
    "validate",
    "AtLeastBound",
    "ClusterTiltingVerdict",
    "ExceedsBound",
    "MinimalPresentation",
    "ar_translate",
    "cartan_determinant",
    "cartan_matrix",
    "cluster_tilting_verdict",
    "dominant_dimension",
    "ext_dim",
    "global_dimension",
    "injective_dimension",
    "is_generator_cogenerator",
    "is_selfinjective",
    "minimal_presentation",
    "projective_dimension",
    "syzygy",
    "tau2",
    "transpose",
    "EndStructure",
    "Summand",
    "decompose",
    "EndPresentation",
    "element_endomorphism",
    "end_as_quiver_algebra",
    "minimize_relations",
    "path_endomorphism",
    "presentation_dimension_check",
    "format_algebra",
    "format_element",
    "format_module",
    "parse_algebra",
    "parse_module",
    "builtin_algebra",
    "reference_end_algebra",
    "reference_end_quiver",
    "reference_end_relations",
    "two_loop_local_algebra",
    "two_loop_quiver",
    "two_loop_relations",
    "run_verification",
    "CheckResult",
    "VerificationReport",
]
