"""Exact mixed-integer hulls of rational polyhedra.

All coordinates are exact rationals: pass ints, "p/q" strings, or
fractions.Fraction; results come back as Fraction.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
