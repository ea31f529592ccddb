"""Total Milnor quotients of linking matrices and total triple linking numbers."""

from .alternating import AltVector, TripleIndex, canonicalize, basis_position, unit
from .linalg import (
    IntMatrix,
    Mod2Matrix,
    SmithForm,
    integer_rank,
    rank_mod2,
    smith_normal_form,
    solve_in_column_lattice,
)
from .quotient import (
    AbelianGroup,
    LinkingMatrix,
    LinkingMatrixError,
    MilnorClass,
    classes_equal,
    coset_reduce,
    mod2_rank,
    presentation_matrix,
    quotient_group,
    rank,
    rank_lower_bound,
    relator,
    verify_dependencies,
)
from .surface import (
    ClaspWord,
    SurfaceSystemData,
    borromean_move,
    derive_linking_matrix,
    epsilon,
    m_count,
    parse_clasp_word,
    realize,
    total_triple_linking,
)
from .sublink import delete_component, project, verify_surjection
from .census import CensusResult, enumerate_mod2_matrices, find_rank, find_trivial_quotients, run_census
from .formats import load_linking_matrix, load_surface_system, parse_linking_matrix, parse_target

# The 5x5 linking matrix whose total Milnor quotient is trivial.
TRIVIAL_FIVE = LinkingMatrix.from_rows([
    [0, 1, 1, 0, 0],
    [1, 0, 1, 1, 0],
    [1, 1, 0, 1, 1],
    [0, 1, 1, 0, 1],
    [0, 0, 1, 1, 0],
])

__all__ = [
    "AltVector",
    "TripleIndex",
    "canonicalize",
    "basis_position",
    "unit",
    "IntMatrix",
    "Mod2Matrix",
    "SmithForm",
    "integer_rank",
    "rank_mod2",
    "smith_normal_form",
    "solve_in_column_lattice",
    "AbelianGroup",
    "LinkingMatrix",
    "LinkingMatrixError",
    "MilnorClass",
    "classes_equal",
    "coset_reduce",
    "mod2_rank",
    "presentation_matrix",
    "quotient_group",
    "rank",
    "rank_lower_bound",
    "relator",
    "verify_dependencies",
    "ClaspWord",
    "SurfaceSystemData",
    "borromean_move",
    "derive_linking_matrix",
    "epsilon",
    "m_count",
    "parse_clasp_word",
    "realize",
    "total_triple_linking",
    "delete_component",
    "project",
    "verify_surjection",
    "CensusResult",
    "enumerate_mod2_matrices",
    "find_rank",
    "find_trivial_quotients",
    "run_census",
    "load_linking_matrix",
    "load_surface_system",
    "parse_linking_matrix",
    "parse_target",
    "TRIVIAL_FIVE",
]

__version__ = "0.1.0"
