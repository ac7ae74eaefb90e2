"""triset: triangular decomposition of polynomial systems over the rationals.

Exact sparse polynomial arithmetic, pseudo-division and subresultant
remainder sequences, a family of pairwise admissible reductions, and a
characteristic-set driver with a plain Ritt-Wu baseline, plus a CLI that
reports output statistics as index tuples.
"""

from .poly import (
    ExactDivisionError,
    Measure,
    Polynomial,
    VariableOrder,
    exact_divide,
    format_power_product,
    multivariate_gcd,
)
from .order import (
    RankOutcome,
    RefineOutcome,
    degree_tuple_compare,
    rank_compare,
    rank_compare_sets,
    refine_compare,
)
from .prs import (
    OneStepResult,
    PseudoDivisionResult,
    SubresultantSequence,
    euclidean_prs,
    one_step_pseudo_divide,
    prem,
    prem_chain,
    pseudo_divide,
    resultant,
    subresultant_prs,
    sylvester_matrix,
    sylvester_resultant,
)
from .reductions import (
    Certificate,
    FIND_ORDER,
    ReductionKind,
    ReductionRest,
    UnsupportedCertificateError,
    is_kind_reducible,
    is_reduced,
    is_reduced_wrt_chain,
    rem,
    rem_certified,
    rem_plus,
)
from .charset import (
    AscendingSet,
    CharSetResult,
    Combination,
    DecompositionBranches,
    EliminationOptions,
    FindTriple,
    auto_reduce,
    basic_set,
    characteristic_set,
    check_characteristic,
    decomposition_branches,
    find_reduction,
)
from .sysio import (
    NonIntegerCoefficientError,
    SystemParseError,
    SystemSyntaxError,
    UndeclaredVariableError,
    parse_poly,
    parse_system,
    render_system,
)
from .report import (
    ALGORITHMS,
    RunReport,
    index_tuple,
    options_for,
    render_figures,
    render_report_json,
    render_report_table,
    run_benchmark,
    run_system,
)

__version__ = "0.1.0"
