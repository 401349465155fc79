"""Exact principal specializations of Schubert polynomials at roots of unity.

Three independent engines compute S_w(1, q, q^2, ...): bumpless pipe dream
enumeration, the reduced-word identity, and staircase lattice-path
determinants.  A composition dynamic program maximizes the specializations
over layered families.
"""

from .bpd import (
    BpdGrid,
    RootValue,
    enumerate_bpds,
    enumerate_bpds_bruteforce,
    droop_moves,
    principal_specialization,
    q_specialization,
    root_specialization,
    rothe_bpd,
    undroop_moves,
)
from .determinant import det_cofactor, det_fraction_free
from .lgv import (
    StaircaseShape,
    WeightedLatticeGraph,
    build_double,
    build_multi,
    build_plain,
    delta,
    double_layer_factor,
    double_shape,
    layer_factor,
    multi_layer_factor,
    multi_shape,
    plain_shape,
)
from .macdonald import principal_from_words, q_specialization_from_words
from .maximize import (
    MaxRecord,
    growth_exponent_estimate,
    layer_decay_estimate,
    layered_value,
    max_doubly_layered,
    max_layered,
    max_multi_layered,
    max_over_symmetric_group,
    max_root_over_symmetric_group,
)
from .permutations import (
    Permutation,
    comajor,
    direct_sum,
    doubly_layered,
    layered,
    multi_layered,
    one_fixed_then,
    reduced_words,
)
from .rings import (
    CyclotomicInteger,
    IntPolynomial,
    catalan,
    cyclotomic_polynomial,
    eval_at_root,
    exact_sqrt,
    squared_modulus,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
