"""Exact computations on diagonal del Pezzo surfaces of degree 1.

w^2 = z^3 + A x^6 + B y^6 in P(1,1,2,3): the 240 exceptional curves, the
Galois action on the Picard lattice, H^1 of that action, explicit cyclic
algebras obtained by Galois descent, and local invariants deciding
Brauer-Manin obstructions to weak approximation.
"""

__version__ = "0.1.0"

__all__ = [
    "tower", "embedding", "forms", "enumeration", "lattice", "galois", "cohomology",
    "classify", "descent", "local", "pipeline", "cli", "reference_data",
]
