"""Serre conditions, local cohomology tables, and codimension-1 connectedness
for Stanley-Reisner rings, monomial supports, and codimension-2 lattice data.
"""

from .complexes import (
    EMPTY_FACE,
    Face,
    SimplicialComplex,
    all_faces,
    boundary_simplex,
    builtin,
    builtin_names,
    cone,
    corpus,
    cycle,
    disjoint_union,
    from_facets,
    link,
    product,
    rp2_6,
    sphere_product,
    top_subcomplex,
    torus_7,
    wedge,
)
from .connectivity import (
    Codim1Partition,
    ComponentSpace,
    HochsterHunekeReport,
    SummandReport,
    codim1_partition,
    complex_codim1,
    hochster_huneke_report,
    summand_report,
)
from .errors import InputError, UnitIdealError
from .fields import RATIONALS, Field, gf, parse_field
from .fiberprod import (
    LCProfile,
    LESReport,
    SymDim,
    les_consistency,
    table_A,
    table_B,
    table_C,
    table_R,
    verify_Sk,
    verify_kunneth,
    verify_les,
)
from .homology import (
    BettiVector,
    IntegerMatrix,
    SNFResult,
    boundary_matrix,
    homology_over_Z,
    matrix_from_dense,
    rank_over_Z,
    reduced_betti,
    smith_normal_form,
)
from .lattice import (
    PSCertificate,
    PSIncidence,
    QuadrangleData,
    deficiency_support,
    non_s2_top_report,
    ps_connectivity_certificate,
    validate_quadrangle,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    minimal_primes,
    stanley_reisner_components,
    variable,
)
from .serre import (
    GradedHilbert,
    HochsterTable,
    SerreLevel,
    SerreReport,
    canonical_hilbert,
    check_Sr,
    depth,
    hochster_table,
    is_CM_reisner,
    lc_hilbert,
    max_Sr,
)

__version__ = "0.1.0"
