"""fracbal: exact computation and verification for fractional balanced
colorings of signed graphs and for fractional arboricity.

The public surface groups into five layers: the signed-graph core
(`sgraph`), gadget constructors and graph surgery (`gadgets`), balanced
and acyclic set enumeration (`families`), the exact rational covering LP
(`cover`), and certificates with their verifier, audits and the inductive
(83, 41)-coloring composer (`certify`, `compose`).  `bounds` carries the
closed-form inequality arithmetic and `acceptance` the runnable release
gate.
"""
from .bounds import (
    BoundParams,
    arboricity_counting_check,
    first_infeasible_index,
    m_upper_bound,
    mu_bound,
    mu_recurrence,
    threshold_52_25,
    threshold_83_41,
    threshold_172_85,
)
from .certify import (
    Certificate,
    Mode,
    OverlapProfile,
    VerifyReport,
    overlap,
    profile,
    triangle_common_count,
    triangle_missing_count,
    triangle_property_audit,
    verify,
)
from .compose import ComposeError, compose_8341
from .cover import (
    ColumnGenResult,
    CoverError,
    LpResult,
    a_f,
    chi_fb,
    column_generation,
    fractional_cover_optimum,
    lp_to_certificate,
)
from .families import (
    GuardExceeded,
    SetFamily,
    SetProperty,
    check_forest_lemmas,
    check_missing_triangle_lemma,
    enumerate_sets,
    lemma_case_sets,
    triangles_missed,
)
from .gadgets import (
    BuildTrace,
    GadgetGraph,
    Op1,
    Op2,
    TraceError,
    build_from_trace,
    complete_negative_face,
    complete_positive_face,
    g_hat_k3,
    g_sequence,
    glue_triangle,
    k3_minus,
    k4_minus,
    substitute_edge,
    u_hat,
    w1_underlying,
    w_double_prime,
    w_hat,
    w_prime,
)
from .sgraph import (
    CycleWitness,
    GraphError,
    SignedGraph,
    all_triangles,
    is_balanced,
    is_k4_minus_equivalent,
    negative_cycle_witness,
    parse_graph,
    serialize_graph,
    switch,
    triangle_sign,
)

__version__ = "0.1.0"
