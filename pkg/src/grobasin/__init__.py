"""Staircases of zero-dimensional lex ideals in two variables: the
combinatorial orders between them, exact Groebner machinery over the
rationals, torus limits, and randomized basin experiments."""

from .staircase import (
    EMPTY,
    CellDimensions,
    StandardSet,
    c4_sum,
    cell_dimensions,
    dimension_polynomial,
    enumerate_staircases,
    sum1,
    sum2,
)
from .orders import (
    IncidenceCertificate,
    PosetData,
    SplitQuadruple,
    build_poset,
    check_certificate,
    dominance,
    et_row_partition,
    figure_alg,
    find_certificate,
    incidence_filter,
    leq_et,
    leq_punc,
    leq_punc_via_alg,
    lex_cols_geq,
    lex_rows_leq,
    order_function,
    to_dot,
)
from .poly import Polynomial, X1, X2, ONE, format_polynomial, lex_compare, parse_polynomial
from .groebner import (
    Ideal,
    LimitDoesNotExist,
    NotZeroDimensional,
    ReducedGroebnerBasis,
    format_ideal,
    ideal_product,
    intersect_comaximal,
    monomial_ideal,
    normal_form,
    parse_ideal_text,
    point_ideal,
    reduced_groebner_basis,
    staircase_of,
    tall_point_ideal,
    torus_limit,
    torus_scale,
    vanishing_ideal,
)
from .basinlab import (
    BasinSampleSpec,
    ExperimentReport,
    SamplingError,
    run_divisibility,
    run_et_closure,
    run_et_closure_covers,
    run_prop1,
    run_prop2,
    run_punc_consistency,
    run_single_column_density,
    run_torus_calibration,
    sample_basin_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "CellDimensions",
    "StandardSet",
    "c4_sum",
    "cell_dimensions",
    "dimension_polynomial",
    "enumerate_staircases",
    "sum1",
    "sum2",
    "IncidenceCertificate",
    "PosetData",
    "SplitQuadruple",
    "build_poset",
    "check_certificate",
    "dominance",
    "et_row_partition",
    "figure_alg",
    "find_certificate",
    "incidence_filter",
    "leq_et",
    "leq_punc",
    "leq_punc_via_alg",
    "lex_cols_geq",
    "lex_rows_leq",
    "order_function",
    "to_dot",
    "Polynomial",
    "X1",
    "X2",
    "ONE",
    "format_polynomial",
    "lex_compare",
    "parse_polynomial",
    "Ideal",
    "LimitDoesNotExist",
    "NotZeroDimensional",
    "ReducedGroebnerBasis",
    "format_ideal",
    "ideal_product",
    "intersect_comaximal",
    "monomial_ideal",
    "normal_form",
    "parse_ideal_text",
    "point_ideal",
    "reduced_groebner_basis",
    "staircase_of",
    "tall_point_ideal",
    "torus_limit",
    "torus_scale",
    "vanishing_ideal",
    "BasinSampleSpec",
    "ExperimentReport",
    "SamplingError",
    "run_divisibility",
    "run_et_closure",
    "run_et_closure_covers",
    "run_prop1",
    "run_prop2",
    "run_punc_consistency",
    "run_single_column_density",
    "run_torus_calibration",
    "sample_basin_ideal",
    "__version__",
]
