"""Bruhat order on orbit posets of flag varieties.

Exact integer combinatorics for root data, Weyl groups, parabolic
quotients, closure orders of spherical-subgroup orbits, and the cross
action / Cayley transform graphs of symmetric subgroups, with one text
format per structure and a small command-line front end.
"""

from .errors import (
    AxiomViolation,
    DatumMismatch,
    FlagOrbitsError,
    InvalidCartan,
    InvalidTwist,
    Mismatch,
    NoOpenNode,
    NotADescent,
    NotARoot,
    NotDownward,
    NotNoncompact,
    NotPositiveRoot,
    NotPReduced,
    NotReal,
    NotReduced,
    ParabolicMismatch,
    ParseError,
    Unreachable,
)
from .root_datum import (
    CartanSpec,
    RootDatum,
    RootPosition,
    build_root_datum,
    cartan_matrix,
    classify_wrt_parabolic,
    coroot_pairing,
    format_root_datum,
    is_m_alpha_trivial,
    parse_root_datum,
    positive_roots,
    reflect,
    simple_root,
    twist_root,
)
from .weyl import (
    Direction,
    WeylElt,
    apply_twist,
    bruhat_leq,
    bruhat_leq_subword,
    descent_direction,
    enumerate_elements,
    exchange,
    format_word,
    from_word,
    identity,
    inv,
    is_reduced,
    length,
    mul,
    parse_word,
    reduced_word,
    reflection_element,
    reflection_word,
    simple_reflection,
)
from .parabolic import (
    ParabolicCoset,
    StepType,
    classify_step,
    coset_bruhat_leq,
    coset_bruhat_leq_induced,
    coset_elements,
    coset_of,
    enumerate_cosets,
    is_p_maximal,
    is_p_minimal,
    is_p_reduced,
    levi_subgroup_elements,
    longest_levi_element,
    p_length,
    quotient_exchange,
    quotient_property_z_check,
    step_coset,
)
from .orbit_poset import (
    OrbitGraph,
    ReducedDecomposition,
    all_reduced_decompositions,
    from_parabolic,
    from_weyl,
    hasse,
    hasse_dot,
    load_orbit_graph,
    format_orbit_graph,
    poset_leq,
    property_z_check,
    reduced_decomposition,
    save_orbit_graph,
    subexpression_endpoints,
    validate,
)
from .kgb import (
    CanonicalSequences,
    KgbGraph,
    RootType,
    a1xa1_swap,
    ascent_consistency_check,
    builtin_fixtures,
    canonical_sequences,
    cayley,
    cross_action,
    format_kgb,
    group_case,
    inverse_cayley,
    load_kgb,
    minimal_w_uniqueness_check,
    monoid,
    monoid_elt,
    monoid_word,
    parse_kgb,
    pgl2_split,
    replay_downward,
    replay_upward,
    root_type,
    save_kgb,
    sl2_split,
    to_orbit_poset,
    twisted_involutions,
    twisted_shadow,
    validate_kgb,
)
from .kgp import (
    IEquivClass,
    class_hasse,
    class_of,
    distinct_ascents_check,
    find_descent_counterexample,
    i_equivalence_classes,
    kgp_leq,
    kgp_leq_induced,
    levi_conjugate_root_check,
    monoid_descent_check,
    p_maximal_set,
)

__version__ = "0.1.0"
