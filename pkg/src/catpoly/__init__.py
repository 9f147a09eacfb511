"""Catalan polyominoes, their black cell capacity and related statistics.

``words`` enumerates polyominoes and computes statistics, ``series`` is the
truncated multivariate power series engine, ``solvers`` holds the generating
function solvers and ``contfrac`` the 2x2 matrix continued fraction.
"""

from .series import MPoly, NotAUnit, RingMismatch, SeriesMatrix, VarSet, geom_inverse, pochhammer
from .words import (
    STATISTICS,
    CatalanWord,
    DistributionTable,
    EnumerationCapError,
    Polyomino,
    black_capacity,
    capacity_sequence,
    catalan_number,
    catalan_words,
    diag_bijection,
    distribution,
    dyck_black_cells,
    polyominoes,
    s_statistics,
    vertical_capacities,
    white_capacity,
)

__version__ = "0.1.0"
