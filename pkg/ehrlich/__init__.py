"""Certified simultaneous polynomial root finding with high-order Ehrlich-type iterations."""
from .errors import EhrlichError
from .numerics.apcx import PrecisionContext
from .numerics.polynomial import Polynomial
from .numerics.solver import SolveConfig, SolveReport, solve

__all__ = ['EhrlichError', 'Polynomial', 'PrecisionContext', 'SolveConfig', 'SolveReport', 'solve']
