"""Exact computations on multigraded Hilbert schemes of monomial-type data:
ideal enumeration, supportive degree sets, defining equations, toric and
Gotzmann specializations, tangent spaces, and a local-ring Groebner checker.
"""

__version__ = "0.1.0"

from .grading import Degree, FiberBox, Grading, uniform_box
from .monomials import INFINITE, MonomialIdeal, minimalize
from .enumeration import HilbertSpec, constant_hilbert, enumerate_admissible, enumerate_on

__all__ = [
    "Degree", "FiberBox", "Grading", "uniform_box",
    "INFINITE", "MonomialIdeal", "minimalize",
    "HilbertSpec", "constant_hilbert", "enumerate_admissible", "enumerate_on",
    "__version__",
]
