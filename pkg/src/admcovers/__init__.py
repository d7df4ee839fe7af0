"""Chern classes of the Hodge bundle on spaces of cyclic admissible covers.

Degree-3 covers: boundary expression for lambda_1, its exhaustive check
against one-dimensional strata, and the lambda_1^{n+m-3} recursion.
Degree-2 covers: lambda_1 and lambda_2 boundary coefficients.
"""

from .arith import binomial, rat
from .hodge_z2 import (
    Codim2ClassZ2,
    DivisorClassZ2,
    alpha_z2_lambda1,
    alpha_z2_lambda2_closed,
    alpha_z2_lambda2_composed,
    check_forms,
    lambda2_expression,
)
from .integrals_z3 import IntegralKey, hodge_integral, integral_table, trace_terms
from .lambda1_z3 import (
    alpha_z3,
    expected_pairing,
    lambda1_expression,
    pairing_total,
    verify_theorem,
)
from .strata import (
    BlockZ3,
    CurveClassZ3,
    DivisorClassZ3,
    Family,
    classify_family,
    enumerate_curve_classes,
    enumerate_divisor_classes,
    pair_curve_divisor,
)

__version__ = "0.1.0"
