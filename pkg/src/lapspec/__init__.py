"""Exact-arithmetic Laplacian integrality decisions for sparse graph families.

The library decides integrality of Laplacian (and signless Laplacian)
spectra exactly, reconstructs and verifies a catalog of parametric
quotient-matrix computations, and exhaustively checks the six-family
classification of integral members of the one- and two-hub families.
"""

from .graphs import (
    FamilyConfig,
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    degree_sequence,
    disjoint_union,
    empty_graph,
    family_membership,
    firefly,
    from_graph6,
    graph_to_config,
    is_bipartite,
    is_connected,
    join,
    max_degree,
    min_degree,
    path,
    realize,
    star,
    to_graph6,
    vertex_connectivity,
)
from .matrices import (
    IntMatrix,
    assemble_G2_laplacian,
    block_diag,
    char_poly,
    det_gauss,
    path_interior_block,
    principal_submatrix,
)
from .partitions import (
    check_equitable,
    coarsest_equitable_refinement,
    eigenvalue_containment_check,
    format_partition,
    is_equitable,
    parse_partition,
    quotient_matrix,
)
from .polys import (
    DEFAULT_PRECISION,
    LAMBDA,
    MPoly,
    RootReport,
    count_real_roots,
    divides,
    integer_roots,
    isolate_roots,
    parse_poly,
    sign_at,
    sturm_count,
)
from .spectra import (
    SpectralValue,
    SpectrumReport,
    algebraic_connectivity,
    edge_interlacing_check,
    gamma_101,
    is_L_integral,
    is_Q_integral,
    kirkland_decomposition_check,
    laplacian,
    signless_laplacian,
    spectrum,
)
from .enumeration import (
    brute_force_oracle,
    canonical_form,
    config_tag,
    enumerate_family,
    theorem_tag,
    verify_theorem,
)
from .families import (
    build_quotient,
    case_config,
    case_ids,
    closed_form_root_check,
    cross_check_with_realization,
    erratum_entries,
    verify_printed_matrix,
    verify_printed_polynomial,
    verify_sign_claims,
)

__version__ = "0.1.0"
