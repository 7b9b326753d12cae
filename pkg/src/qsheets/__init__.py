"""Quantum groups at roots of unity, induced modules and SL_n sheets.

Subpackages and modules:

* ``cyclo``: exact cyclotomic arithmetic;
* ``roots``: root systems, reduced words and convex orders;
* ``classes``: SL_n conjugacy classes, induction, Jordan classes, sheets;
* ``uqe``: PBW normal forms for U_eps, the Frobenius center, the covering map;
* ``reps``: modules as matrices, parabolic induction, probes;
* ``suite``: the acceptance checks used by ``qsheets verify-all``.
"""

from .cyclo import CycNumber, parse, principal_root, zeta

__version__ = "0.1.0"

__all__ = ["CycNumber", "parse", "principal_root", "zeta", "__version__"]
