"""Exact verification of hypergeometric summation and transformation identities."""

from .arith import PowerSeries, poch, rat, rat_str
from .catalog import ParamEnv, explain, instantiate, list_entries, residual
from .errors import ConstraintViolation, DegenerateError, HyperError, UnknownEntry
from .series import Formal, Partial, SeriesSpec, Terminating

__all__ = [
    "ConstraintViolation", "DegenerateError", "Formal", "HyperError", "ParamEnv",
    "Partial", "PowerSeries", "SeriesSpec", "Terminating", "UnknownEntry", "explain",
    "instantiate", "list_entries", "poch", "rat", "rat_str", "residual",
]

__version__ = "0.1.0"
