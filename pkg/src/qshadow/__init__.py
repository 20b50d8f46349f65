"""Enumeration of periodicity shadows, reconstruction of candidate Gabriel
quivers, and the block calculus of weighted surface algebras."""

from .errors import QShadowError
from .quivers import (
    Quiver,
    VertexDegree,
    canonical_form,
    degrees,
    from_arrows,
    is_isomorphic,
    is_isomorphic_or_opposite,
    loop_free,
    opposite,
    reduced_quiver,
    validate_quiver,
)
from .shadows import (
    Shadow,
    ShadowReport,
    canonical_shadow,
    full_report,
    make_shadow,
    ps3_feasible,
    quiver_of_shadow,
    shadow_of,
)
from .search import enumerate_shadows
from .reconstruction import (
    CandidateQuiver,
    ClassificationResult,
    classify,
    reconstruct,
    verify_against_reference,
)
from .blocks import (
    BlockDecomposition,
    decompose_into_blocks,
    glue_blocks,
    mutate_block,
    recognize_gwsa_gabriel,
    triangulation_structure,
    verify_main_theorem,
)
from .wild import find_wild_unfolding

__all__ = [
    "QShadowError",
    "Quiver",
    "VertexDegree",
    "Shadow",
    "ShadowReport",
    "CandidateQuiver",
    "ClassificationResult",
    "BlockDecomposition",
    "validate_quiver",
    "from_arrows",
    "degrees",
    "loop_free",
    "reduced_quiver",
    "opposite",
    "canonical_form",
    "is_isomorphic",
    "is_isomorphic_or_opposite",
    "make_shadow",
    "shadow_of",
    "quiver_of_shadow",
    "canonical_shadow",
    "full_report",
    "ps3_feasible",
    "enumerate_shadows",
    "reconstruct",
    "classify",
    "verify_against_reference",
    "glue_blocks",
    "decompose_into_blocks",
    "recognize_gwsa_gabriel",
    "triangulation_structure",
    "mutate_block",
    "verify_main_theorem",
    "find_wild_unfolding",
]
