"""Global rational approximation of the two-parametric Mittag-Leffler function.

Construction of type-(3,2)/(5,4)/(6,3)/(7,2) approximants of
E_{a,b}(-x) on x >= 0, their partial-fraction form, inversion, matrix
arguments via shifted solves, a high-accuracy reference oracle, and the
application benchmarks; served over HTTP with a thin CLI client.
"""

from .errors import (
    ContourFailure,
    GammaOverflow,
    IllConditioned,
    InvalidSpec,
    InverseDomainError,
    MlpadeError,
    MultiplePositiveRoots,
    NegativeDiscriminant,
    NonConvergence,
    NoPositiveRoot,
    NumeratorPole,
    PairingUnavailable,
    PrecisionLoss,
    RealPositivePole,
    RepeatedPoles,
    SingularMatrix,
    UnpairedPoles,
)
from .gamma import GammaValue, gamma, gamma_ratio, rgamma
from .inverse import invert_fourth, invert_r32
from .matml import mlf_action, mlf_matrix
from .oracle import OracleConfig, mlf_asym, mlf_contour, mlf_oracle, mlf_series
from .pade import (
    ApproximantSpec,
    RationalApproximant,
    Regime,
    asymptotic_check,
    construct,
    eval_error,
    eval_scalar,
    make_spec,
)
from .pfd import PartialFractionForm, decompose, eval_pfd
from .report import EvalReport, make_report

__version__ = "0.1.0"
