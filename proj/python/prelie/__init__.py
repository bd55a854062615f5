"""Exact-arithmetic verification of operator structures on pre-Lie algebras.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. All scalars are exact: fractions.Fraction on the python side,
arbitrary-precision rationals underneath.
"""

from ._prelie import *  # noqa: F401,F403
from ._prelie import __doc__ as _core_doc

__doc__ = _core_doc if _core_doc else __doc__
