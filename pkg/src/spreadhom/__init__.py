"""Hom-space and resolution invariants of persistence modules over finite posets."""

from . import errors
from .errors import (
    AntichainOrderError,
    CapExceededError,
    CommutativityError,
    CycleError,
    DuplicateMemberError,
    DuplicateSpreadError,
    FileFormatError,
    HomMatrixSingularError,
    HookOrderError,
    MissingProjectivesError,
    NotAntichainError,
    NotComparableError,
    NotConnectedError,
    NotConvexError,
    NotQuotientClosedError,
    NotTypeAError,
    OutOfRangeError,
    PosetMismatchError,
    RedundantCoverError,
    ResolutionTruncatedError,
    ShapeError,
    SpreadHomError,
    UnknownInvariantError,
)
from .approx import (
    Family,
    FamilyDiagnostics,
    Resolution,
    betti,
    builtin_family,
    check_family,
    minimal_approximation,
    resolve,
    support_restrict,
    universal_approximation,
    x_dimension,
)
from .field import DEFAULT_PRIME, PrimeField
from .hom import HomBasis, hom_basis, hom_dim, image_module, kernel_module, spread_hom_dim
from .invariants import (
    GrothClass,
    RankInvariant,
    SignedDiagram,
    barcode,
    class_via_hom_matrix,
    class_via_resolution,
    compare,
    dim_hom_vector,
    generalized_rank,
    generalized_rank_vector,
    rank_invariant,
    rank_via_hooks,
    signed_diagram,
)
from .modules import (
    Morphism,
    PersistenceModule,
    direct_sum,
    hook_module,
    identity_morphism,
    interval_module,
    morphism_from_vec,
    projective_module,
    simple_module,
    spread_module,
    summand_inclusions,
    zero_module,
    zero_morphism,
)
from .poset import (
    Poset,
    Spread,
    containment_poset,
    enumerate_spreads,
    spread_from_antichains,
    spread_from_convex,
)

__version__ = "0.1.0"

__all__ = [
    "AntichainOrderError",
    "CapExceededError",
    "CommutativityError",
    "CycleError",
    "DEFAULT_PRIME",
    "DuplicateMemberError",
    "DuplicateSpreadError",
    "Family",
    "FileFormatError",
    "HomMatrixSingularError",
    "HookOrderError",
    "MissingProjectivesError",
    "NotAntichainError",
    "NotComparableError",
    "NotConnectedError",
    "NotConvexError",
    "NotQuotientClosedError",
    "NotTypeAError",
    "OutOfRangeError",
    "PosetMismatchError",
    "RedundantCoverError",
    "ResolutionTruncatedError",
    "ShapeError",
    "SpreadHomError",
    "UnknownInvariantError",
    "FamilyDiagnostics",
    "GrothClass",
    "HomBasis",
    "Morphism",
    "PersistenceModule",
    "Poset",
    "PrimeField",
    "RankInvariant",
    "Resolution",
    "SignedDiagram",
    "Spread",
    "barcode",
    "betti",
    "builtin_family",
    "check_family",
    "class_via_hom_matrix",
    "class_via_resolution",
    "compare",
    "containment_poset",
    "dim_hom_vector",
    "direct_sum",
    "enumerate_spreads",
    "errors",
    "generalized_rank",
    "generalized_rank_vector",
    "hom_basis",
    "hom_dim",
    "hook_module",
    "identity_morphism",
    "image_module",
    "interval_module",
    "kernel_module",
    "minimal_approximation",
    "morphism_from_vec",
    "projective_module",
    "rank_invariant",
    "rank_via_hooks",
    "resolve",
    "signed_diagram",
    "simple_module",
    "spread_from_antichains",
    "spread_from_convex",
    "spread_hom_dim",
    "spread_module",
    "summand_inclusions",
    "support_restrict",
    "universal_approximation",
    "x_dimension",
    "zero_module",
    "zero_morphism",
]
