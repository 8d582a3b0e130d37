"""Strong Groebner and standard bases over the integers."""

from .coeff import QQ, ZZ, div_min_rem, divides, norm_less, xgcd
from .engine import (
    Basis,
    EngineConfig,
    Stats,
    buchberger,
    interreduce,
    mutually_strongly_divisible,
    sorted_basis,
    verify_strong,
)
from .pairs import Strategy, gpoly, spoly
from .parse import IdealFile, ParseError, parse_ideal, parse_polynomial
from .poly import MonomialOrder, PolyRing, Polynomial
from .reduce import LT_ONLY, ReductionPolicy, nf_global, nf_mora, normal_form, replace_2x2
from .rpc import extract_constant, rational_gb_with_cofactors, rpc_augment

__version__ = "0.1.0"
