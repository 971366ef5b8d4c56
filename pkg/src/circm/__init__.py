"""Exact-arithmetic toolkit for Cohen-Macaulay and related properties of
circulant graphs, decided through their independence complexes."""

from .complexes import (
    Complex,
    FHVectors,
    alpha,
    deletion,
    faces,
    family_f_vector,
    f_vector,
    independence_complex,
    is_well_covered,
    link,
    restrict,
)
from .errors import GuardError, InconsistencyError
from .fields import FieldChoice
from .graphs import (
    CirculantSpec,
    CubicDecomposition,
    Graph,
    circulant,
    connected_components,
    cubic_decompose,
    induced_subgraph,
    interval_circulant,
    is_isomorphic_small,
    lex_product,
    make_circulant,
)
from .homology import BettiTable, ChainComplexData, build_chain_complex, euler_check, kernel_rank_of, reduced_betti
from .properties import (
    PropertyReport,
    ShellabilityResult,
    full_report,
    is_buchsbaum,
    is_cohen_macaulay,
    is_shellable,
    is_vertex_decomposable,
    projective_dimension,
    reisner_violation,
)
from .theorems import (
    FamilyStatus,
    H2Evidence,
    OctahedronWitness,
    VerifyScope,
    build_octahedron_list,
    expected_cubic_cm,
    expected_family_status,
    h2_equality_experiment,
    octahedron_witness,
    verify_kernel_rank,
    verify_theorems,
)

__all__ = [name for name in dir() if not name.startswith("_")]
