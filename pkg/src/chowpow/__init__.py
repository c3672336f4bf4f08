"""Plethysm coefficients, positive-plethysm semigroups and tableau function
evaluations for comparing power sums with products of linear forms."""
from .combinatorics import (
    Partition,
    QPolynomial,
    add_partitions,
    column_counts,
    compositions,
    m_partitions,
    q_binom,
    q_binomial,
    rect_partition_count,
    transpose,
)
from .field import DEFAULT_PRIME, PrimeField
from .hwv import (
    ChowPoint,
    PowPoint,
    certify_rank,
    column_det,
    eval_chow,
    eval_pow,
    evaluation_matrix,
    random_chow_point,
    random_pow_point,
    rank,
)
from .obstructions import (
    ObstructionReport,
    chow_mult_lower_bound,
    chow_upper_bound,
    multiplicity_obstruction_check,
    no_occurrence_pipeline,
    occurrence_obstruction_check,
    pow_multiplicity,
)
from .plethysm import (
    BudgetExceeded,
    bar_vanishes,
    closed_form_c,
    closed_form_pleth_Lr2,
    foulkes_delta_case,
    monomial_coefficient,
    pleth_difference_Lr2,
    plethysm,
    plethysm_bruteforce,
)
from .semigroup import (
    GeneratorFamily,
    NotDecomposable,
    decompose,
    enumerate_m_partitions,
    load_family,
    verify_generators,
)
from .tableau import (
    Tableau,
    cache_size,
    enumerate_ssyt,
    parse_compact_tableaux,
    sample_ssyt,
    tableau_from_permutation,
)

__version__ = "0.1.0"
