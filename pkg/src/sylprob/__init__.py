"""Exact commuting probabilities of Sylow subgroups in finite permutation groups.

Composition is left to right: ``(a * b)(i) = b(a(i))``.  Points are 0-based
internally and 1-based in cycle notation.
"""

from __future__ import annotations

from .builders import (
    GroupExpression,
    build,
    build_expression,
    direct_product,
    parse_expression,
)
from .config import RunConfig, get_config, set_config, use_config
from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    NotASubgroup,
    NotNormal,
    NotSoluble,
    ParseError,
    SearchFailed,
    SylprobError,
)
from .group import (
    PermutationGroup,
    SubgroupHandle,
    centralizer,
    centralizer_of_subgroup,
    conjugate_subgroup,
    contains,
    enumerate_elements,
    generated_subgroup,
    group_order,
    is_normal,
    normalizer,
)
from .perm import Permutation, compose, format_cycles, inverse, parse_cycles
from .probability import (
    ExactRational,
    OmegaReport,
    PrStarReport,
    build_h0,
    check_product_rule,
    check_quotient_inequality,
    class_size_bound,
    omega_set,
    pr,
    pr_no_pq_formula,
    pr_star,
    xy_inequality_check,
)
from .structure import (
    FittingSeriesReport,
    PrimeSet,
    fitting_subgroup,
    frattini_of_p_group,
    hall_p_complement,
    has_element_of_order,
    is_nilpotent,
    is_p_soluble,
    is_soluble,
    p_core,
    quotient_group,
    soluble_radical,
    sylow_subgroup,
    upper_fitting_series,
)

__version__ = "0.1.0"
