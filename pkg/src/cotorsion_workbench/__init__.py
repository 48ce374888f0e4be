"""Exact computational workbench for relative cotorsion theory over
triangular matrix algebras of finite acyclic quivers.

Everything runs over a prime field F_p with deterministic dense linear
algebra, so every result is exact and every run is reproducible.
"""

__version__ = "0.1.0"
