"""Exact arithmetic for fractional-part orderings of irrational multiples.

The library computes, without floating point: Sturmian words and their
factor sets, the permutation ordering {alpha}, {2 alpha}, ..., {n alpha},
its integer matrix representation, Farey-cell decompositions, and the exact
integral of the permutation order over all slopes.
"""

from .errors import (
    CoefficientsExhausted,
    InternalInvariantViolation,
    InvalidSlope,
    NotInImage,
    RecurrenceMismatch,
    RefinementBudgetExceeded,
    SafetyCapExceeded,
    SingularParameters,
    SlopeSyntaxError,
    SturmlabError,
    WitnessCollision,
)
from .farey import (
    FareyCell,
    IntegralResult,
    b_range_search,
    cell_containing,
    complement_factors,
    congruence_test,
    exact_integral,
    farey_cells,
    perm_on_cell,
    sign_sum,
)
from .irrational import (
    Convergent,
    EulerE,
    EulerEInv,
    ExplicitCF,
    IrrationalSlope,
    QuadraticSurd,
    RationalInterval,
    convergent,
    floor_multiple,
    frac_compare,
    frac_interval,
    parse_slope,
    phi,
    refinement,
)
from .matrep import (
    AuxMatrix,
    FactorMatrix,
    IntertwinerQ,
    aux_matrix,
    char_trace,
    descent_set,
    det_exact,
    factor_matrix,
    intertwiner,
    m_from_alpha,
    perm_matrix,
    reconstruct_sigma,
    simplex_volume,
)
from .permtool import (
    BetterCount,
    FracPermutation,
    Gap,
    OrderPrediction,
    b_alpha,
    b_stream,
    order,
    order_prediction,
    pi_direct,
    pi_sos,
    rho,
    sign_direct,
    sign_formula,
    three_distance_gaps,
)
from .sturmian import (
    FactorSet,
    WordSpec,
    characteristic_prefix,
    factor_set,
    factor_set_from_perm,
    word_factor_set,
    word_letter,
    word_prefix,
)

__version__ = "0.1.0"
