"""Exact real Waring decompositions of real binary forms."""

from .binform import (
    BinaryForm,
    LinearForm,
    Term,
    WaringDecomposition,
    effective_length,
    expand,
    forms_equal,
    from_raw_coeffs,
    to_raw_coeffs,
)
from .delta import DeltaCofactors, DeltaRestriction, eval_deltas, h_star, restrict_deltas
from .errors import (
    DimensionError,
    HomogeneityError,
    InconsistentSystemError,
    MembershipError,
    NoValidPointError,
    ParityError,
    ParseError,
    SingularSystemError,
    WaringError,
    ZeroFormError,
)
from .exactnum import RatMatrix, Rational, det_bareiss, det_laplace, solve_consistent_overdetermined
from .params import SuitableParams, in_G, is_suitable, wd_parameters, wd_parameters_even, wd_parameters_odd
from .parser import parse_poly
from .rwd import RwdResult, decompose, decompose_with_params, parametric_family, search_shorter

__version__ = "0.1.0"
