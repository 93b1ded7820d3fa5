"""Exact rational Newton interpolation through divided differences, with
q-series and bibasic identity verification built on top of it."""
from .divdiff import apply_chain, apply_divdiff, lemma1_check
from .errors import (
    DivisionByZeroSymbol,
    ExprSyntaxError,
    IndexOutOfRange,
    MissingBinding,
    NonExactDivision,
    NonInvertibleConstantTerm,
    PoleHit,
    RatInterpError,
    TruncationUnreachable,
    UnknownSymbol,
)
from .families import (
    Constant,
    Explicit,
    Geometric,
    InterpolationContext,
    Symbolic,
    gasper_context,
    gosper_context,
    liu_context,
    newton_context,
    symbolic_context,
)
from .identities import VerificationReport, verify_all
from .interp import X, expansion_term, interpolation_residuals, rational_newton_coeffs
from .poly import Polynomial, Var, bvar, cvar, scalar, xvar
from .qseries import HypergeometricSpec, basic_hypergeometric, pochhammer, pochhammer_inf, q_binomial
from .ratfun import RatFun, substitute
from .series import TruncatedSeries

__version__ = "0.1.0"
