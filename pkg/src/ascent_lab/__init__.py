"""Exact computations around properly ascending HNN extensions.

Free-semigroup witnesses, certified growth bounds, the t-stability test for
cyclic modules, and the failure of subgroup separability for BS(1, n).
"""

__version__ = "0.1.0"
