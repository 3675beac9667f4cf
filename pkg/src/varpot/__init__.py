"""varpot: exact integrability analysis of planar homogeneous potentials of
degree -1 through higher variational equations along straight-line orbits.

Everything is computed in exact arithmetic over Q(i); see README.md for an
overview of the layers.
"""

from .scalars import GQ, GaussianRational, rational_from_str, rational_to_str
from .params import ParamPoly, StructureError, poly_arith
from .polyt import TPoly
from .ratfunc import (PartialFractions, RatFunc, UnsupportedDenominatorError,
                      partial_fractions)
from .laurent import (LaurentSeries, TruncationError, arctanh_at_infinity,
                      expand_ratfunc)
from .tower import (ARCTANH, LOG_T2M1, CertificationError,
                    NewTranscendentalNeeded, TowerElement, differentiate,
                    integrate, monodromy_class, residue_shift_poly)
from .basis import (BasisPair, EigenIndex, basis_pair, eigenvalue_of, epsilon,
                    rodrigues_P, theta_pair)

__all__ = [
    "GQ", "GaussianRational", "rational_from_str", "rational_to_str",
    "ParamPoly", "StructureError", "poly_arith", "TPoly",
    "PartialFractions", "RatFunc", "UnsupportedDenominatorError",
    "partial_fractions", "LaurentSeries", "TruncationError",
    "arctanh_at_infinity", "expand_ratfunc",
    "ARCTANH", "LOG_T2M1", "CertificationError", "NewTranscendentalNeeded",
    "TowerElement", "differentiate", "integrate", "monodromy_class",
    "residue_shift_poly",
    "BasisPair", "EigenIndex", "basis_pair", "eigenvalue_of", "epsilon",
    "rodrigues_P", "theta_pair",
]

__version__ = "0.1.0"
