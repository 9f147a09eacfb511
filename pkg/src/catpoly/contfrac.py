"""The 2x2 matrix continued fraction ``S_0 = I - U_0 (I - U_1 (I - ...)^-1)^-1``.

Level ``h`` carries ``U_h = [[0, a_h], [b_h, 0]]`` with
``a_h = x q^ceil((h+1)/2)`` and ``b_h = x q^floor((h+1)/2)``; these are the
up-step weights of the two-layer automaton reading partial Dyck paths by
length and black cells.  ``(A_0, B_0) = S_0^{-1} (1, 1)`` and
``A_0 - 1 = F(x, 1, q)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import MPoly, SeriesMatrix, VarSet
from .solvers import Residual, compare, f_ring

__all__ = [
    "CFLevel",
    "level",
    "convergent",
    "convergent_levels",
    "s0_and_inverse",
    "a0_b0",
    "automaton_series",
    "recurrence_check",
]


def a_weight(ring: VarSet, h: int) -> MPoly:
    return ring.monomial(1, x=1, q=(h + 2) // 2)


def b_weight(ring: VarSet, h: int) -> MPoly:
    return ring.monomial(1, x=1, q=(h + 1) // 2)


@dataclass(frozen=True)
class CFLevel:
    h: int
    U: SeriesMatrix

    @property
    def a(self) -> MPoly:
        return self.U[0, 1]

    @property
    def b(self) -> MPoly:
        return self.U[1, 0]


def level(ring: VarSet, h: int) -> CFLevel:
    if h < 0:
        raise ValueError("level index must be nonnegative")
    return CFLevel(h, SeriesMatrix([[0, a_weight(ring, h)],
                                    [b_weight(ring, h), 0]], ring))


def convergent_levels(N: int, ring: VarSet) -> list[SeriesMatrix]:
    """``[S_0^(N), ..., S_N^(N)]`` from ``S_{N+1}^(N) = I`` backwards."""
    if N < 0:
        raise ValueError("depth must be nonnegative")
    ident = SeriesMatrix.identity(ring, 2)
    S = ident
    levels = []
    for h in range(N, -1, -1):
        S = ident - level(ring, h).U @ S.neumann_inverse()
        levels.append(S)
    return levels[::-1]


def convergent(N: int, x_max: int, ring: VarSet | None = None) -> SeriesMatrix:
    """The ``N``-th convergent ``S_0^(N)`` modulo ``x^{x_max+1}``."""
    ring = ring or f_ring(x_max)
    return convergent_levels(N, ring)[0]


def s0_and_inverse(x_max: int, ring: VarSet | None = None):
    """Depth-``x_max`` convergent (already stable mod ``x^{x_max+1}``) and its inverse."""
    ring = ring or f_ring(x_max)
    S0 = convergent(x_max, x_max, ring)
    return S0, S0.neumann_inverse()


def a0_b0(x_max: int, ring: VarSet | None = None) -> tuple[MPoly, MPoly]:
    _, inv = s0_and_inverse(x_max, ring)
    return inv[0, 0] + inv[0, 1], inv[1, 0] + inv[1, 1]


def automaton_series(x_max: int, h_max: int, ring: VarSet | None = None):
    """``[(A_h, B_h)]`` for ``h <= h_max + 1`` via ``W_0 = S_0^{-1} e``,
    ``W_{h+1} = S_{h+1}^{-1} W_h``.

    The depth is ``x_max + h_max + 1`` so that every ``S_h`` used is exact
    modulo ``x^{x_max+1}``.
    """
    ring = ring or f_ring(x_max)
    levels = convergent_levels(x_max + h_max + 1, ring)
    W = levels[0].neumann_inverse() @ SeriesMatrix.column([1, 1], ring)
    out = [(W[0, 0], W[1, 0])]
    for h in range(1, h_max + 2):
        W = levels[h].neumann_inverse() @ W
        out.append((W[0, 0], W[1, 0]))
    return out


def recurrence_check(x_max: int, h_max: int | None = None,
                     ring: VarSet | None = None) -> list[Residual]:
    """Residuals of ``A_0 = 1 + a_0 B_1``, ``B_0 = 1 + b_0 A_1`` and, for
    ``1 <= h <= h_max``, ``A_h = A_{h-1} + a_h B_{h+1}``,
    ``B_h = B_{h-1} + b_h A_{h+1}``."""
    ring = ring or f_ring(x_max)
    h_max = x_max if h_max is None else h_max
    AB = automaton_series(x_max, h_max, ring)
    one = ring.one()
    report = [
        compare("A_0 = 1 + a_0 B_1", AB[0][0], one + a_weight(ring, 0) * AB[1][1]),
        compare("B_0 = 1 + b_0 A_1", AB[0][1], one + b_weight(ring, 0) * AB[1][0]),
    ]
    for h in range(1, h_max + 1):
        report.append(compare(f"A_{h} = A_{h - 1} + a_{h} B_{h + 1}", AB[h][0],
                              AB[h - 1][0] + a_weight(ring, h) * AB[h + 1][1]))
        report.append(compare(f"B_{h} = B_{h - 1} + b_{h} A_{h + 1}", AB[h][1],
                              AB[h - 1][1] + b_weight(ring, h) * AB[h + 1][0]))
    return report
