"""ymvac: numerical toolkit for the monopole structure of the non-Abelian
gauge vacuum.

Modules
-------
bps_profiles   smooth/singular hedgehog pairs, tension and covariant
               derivative stencils, first-order residual checks
topology       group factors, degree-of-map and Chern-Simons quadrature,
               gauge transforms
greens         radial Green-function potentials, Euler/radial residuals,
               background operator
rotator        Bloch spectrum, theta-function Green representations,
               interference averages
interference   dressed factors, window-averaged propagators, lattice loop
               shifts
pheno          vacuum energetics and the constants chain
cli            command-line frontend (json/csv reports)
"""

from . import bps_profiles, greens, interference, pheno, rotator, topology
from .bps_profiles import (
    FieldVariant,
    MonopoleScale,
    SpatialPoint,
    StencilConfig,
)

__version__ = "0.1.0"

__all__ = [
    "bps_profiles",
    "topology",
    "greens",
    "rotator",
    "interference",
    "pheno",
    "FieldVariant",
    "MonopoleScale",
    "SpatialPoint",
    "StencilConfig",
    "__version__",
]
