"""Dual B-spline and truncated power bases, least-squares spline approximation."""

from ._dualspline import *  # noqa: F401,F403
from ._dualspline import NumericalError, ValidationError  # noqa: F401

__version__ = "0.1.0"
