"""Exact construction and recognition of linear iterative ODEs."""
from iterode.core import (
    CoefficientTable,
    MultiSumFrame,
    a_invariant,
    coeffs_algorithmic,
    coeffs_closed_form,
    coeffs_recurrence,
    coeffs_simplified,
    coeffs_unit_r,
    generate_concrete,
    generate_normal_concrete,
    normal_coeffs,
    psi_apply,
    term_count,
)
from iterode.criteria import (
    IterativityReport,
    criteria4,
    is_iterative,
    laguerre3,
    normal_pattern_check,
)
from iterode.errors import ConsistencyError, UnsupportedOrderError
from iterode.exact import (
    Poly,
    RationalFunction,
    ResourceLimitError,
    rf_derivative,
    rf_is_zero,
    rf_normalize,
)
from iterode.jet import (
    DiffRational,
    JetPoly,
    JetVar,
    diffrat_reduce,
    jet_derive,
    jet_eliminate_s,
    jet_substitute,
)
from iterode.normal_form import (
    LinearODE,
    gauge_reduce,
    standard_from_normal3,
    standard_from_normal4,
)
from iterode.parser import ParseError, parse_expression

__version__ = "0.1.0"
