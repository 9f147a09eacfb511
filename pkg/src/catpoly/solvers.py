"""Generating-function pipelines for the black cell capacity.

Three independent routes to the same series:

* the four-component system ``G = M.G(qu) - N.G(1) + B`` in ``(x, u, q)``,
  whose components carry the length and last-column parities;
* the two-component system for ``EV``/``OD`` in ``(x, y, z, u)`` (vertical
  black/white capacities), iterated directly and also through its
  q-Pochhammer closed form;
* the single equation for ``C(x, y, z, u)`` (statistics ``s``, ``s_bar``),
  solved by a 2x2 linear system in ``F(1)`` and ``G(1)``.

All infinite sums stop as soon as the summand's guaranteed power of ``x``
exceeds ``x_max``.  Every ``1/(m - 1)`` is computed as
``-geom_inverse(1 - m)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .series import MPoly, SeriesMatrix, VarSet, geom_inverse, pochhammer
from .words import STATISTICS

__all__ = [
    "GFResult",
    "SolverMismatch",
    "Residual",
    "degree_caps",
    "G_ORDER",
    "matrix_solve_at_u1",
    "matrix_solve_full",
    "evod_solve_iteration",
    "evod_closed_form",
    "evod_product_vs_pochhammer",
    "funceq_parts",
    "funceq_solve",
    "funceq_identity_checks",
    "funceq_pochhammer_form",
    "funceq_product_vs_pochhammer",
    "f_ring",
    "evod_to_f",
    "c_to_f",
    "brute_force_series",
]

G_ORDER = ("G00", "G01", "G10", "G11")


class SolverMismatch(ArithmeticError):
    """Two routes that must agree produced different coefficients."""


@dataclass
class GFResult:
    """A named generating function plus the method and truncation that produced it."""

    name: str
    method: str
    series: MPoly
    x_max: int
    extra: dict = field(default_factory=dict)

    @property
    def caps(self) -> dict[str, int]:
        return dict(zip(self.series.ring.names, self.series.ring.caps))

    def to_json(self) -> dict:
        return {"name": self.name, "method": self.method, "x_max": self.x_max,
                "vars": list(self.series.ring.names), "caps": self.caps,
                "terms": self.series.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_text(self) -> str:
        return "\n".join(f"x^{d}: {t}" for d, t in self.series.graded_text("x"))


@dataclass
class Residual:
    """Outcome of an identity check: ``first`` is the first differing coefficient."""

    name: str
    ok: bool
    first: tuple | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"{self.name}: ok"
        exps, lhs, rhs = self.first
        return f"{self.name}: differs at {exps} ({lhs} != {rhs})"


def compare(name: str, lhs: MPoly, rhs: MPoly) -> Residual:
    diff = lhs - rhs
    if not diff:
        return Residual(name, True)
    exps, _ = next(diff.items())
    return Residual(name, False, (exps, lhs.coeff(exps), rhs.coeff(exps)))


# ---------------------------------------------------------------------------
# degree bounds

def _staircase_max(stat: str, n: int) -> int:
    return STATISTICS[stat](list(range(1, n + 1)))


def degree_caps(x_max: int, stats) -> dict[str, int]:
    """Largest value of each statistic over polyominoes of length <= x_max.

    Every statistic used here is monotone in each column height, so the
    staircase ``1, 2, ..., n`` attains the maximum for length ``n``.
    """
    return {s: max(_staircase_max(s, n) for n in range(1, x_max + 1)) for s in stats}


def _neg_recip(ring: VarSet, m: MPoly) -> MPoly:
    """``1/(m - 1)`` for constant-free ``m``."""
    return -geom_inverse(ring.one() - m)


def _recip(ring: VarSet, m: MPoly) -> MPoly:
    """``1/(1 - m)`` for constant-free ``m``."""
    return geom_inverse(ring.one() - m)


# ---------------------------------------------------------------------------
# four-component system in (x, u, q)

def _g_system(ring: VarSet, u: MPoly):
    """``M(x,u,q)``, ``N(x,u,q)``, ``B(x,u,q)`` with ``u`` any ring element."""
    x, q = ring.var("x"), ring.var("q")
    d = _neg_recip(ring, q * u)
    xuq = x * u * q * d
    xu2q = x * u * u * q * d
    xu = x * u * d
    xu2q2 = x * u * u * q * q * d
    M = SeriesMatrix([[0, 0, xuq, xuq],
                      [0, 0, xu2q, xu],
                      [xuq, xuq, 0, 0],
                      [xu2q2, xuq, 0, 0]], ring)
    N = SeriesMatrix([[0, 0, xuq, xuq],
                      [0, 0, xu, xu],
                      [xuq, xuq, 0, 0],
                      [xuq, xuq, 0, 0]], ring)
    B = SeriesMatrix.column([0, 0, 0, x * u * q], ring)
    return M, N, B


def _matrix_ring(x_max: int, with_u: bool, pad: int = 0) -> VarSet:
    q_cap = degree_caps(x_max, ["bck"])["bck"] + pad
    if with_u:
        return VarSet.of(x=x_max + pad, u=x_max + pad, q=q_cap)
    return VarSet.of(x=x_max + pad, q=q_cap)


def matrix_solve_at_u1(x_max: int, pad: int = 0) -> dict[str, GFResult]:
    """``G(x,1,q) = (I + S)^{-1} sum_k P_k(x,1,q) B(x,q^k,q)``.

    Returns the four components (also equal to ``F_ab(x,1,q)``) and their
    sum ``F`` = ``F(x,1,q)``.
    """
    if x_max < 1:
        raise ValueError("x_max must be positive")
    ring = _matrix_ring(x_max, False, pad)
    q = ring.var("q")
    ident = SeriesMatrix.identity(ring, 4)
    P = ident
    S = SeriesMatrix.zeros(ring, 4, 4)
    rhs = SeriesMatrix.zeros(ring, 4, 1)
    k = 0
    while not P.is_zero():
        M, N, B = _g_system(ring, q ** k)
        S = S + P @ N
        rhs = rhs + P @ B
        P = P @ M
        k += 1
    G1 = (ident + S).neumann_inverse() @ rhs
    comps = [G1[i, 0] for i in range(4)]
    out = {name: GFResult(name, "matrix", c, x_max) for name, c in zip(G_ORDER, comps)}
    out["F"] = GFResult("F", "matrix", sum(comps, ring.zero()), x_max)
    out["S"] = S
    return out


def matrix_solve_full(x_max: int, pad: int = 0, at_u1: dict | None = None) -> GFResult:
    """``F(x,u,q)`` from the iterated G-system and the parity substitutions."""
    at_u1 = at_u1 or matrix_solve_at_u1(x_max, pad)
    ring = _matrix_ring(x_max, True, pad)
    u, q = ring.var("u"), ring.var("q")
    G1 = SeriesMatrix.column([at_u1[n].series.embed(ring) for n in G_ORDER], ring)
    P = SeriesMatrix.identity(ring, 4)
    G = SeriesMatrix.zeros(ring, 4, 1)
    k = 0
    while not P.is_zero():
        M, N, B = _g_system(ring, q ** k * u)
        G = G + P @ (B - N @ G1)
        P = P @ M
        k += 1

    # G_ab(x,u,q) -> F_ab(x,u,q): u -> u^2, then divide G01, G11 by u
    wide = VarSet(ring.names, (ring.caps[0], 2 * ring.cap("u"), ring.caps[2]))
    total = ring.zero()
    parts = {}
    for i, name in enumerate(G_ORDER):
        g = G[i, 0].restrict(wide).stretch("u", 2)
        if name.endswith("1"):
            try:
                g = g.shift_down("u")
            except ArithmeticError as exc:
                raise SolverMismatch(f"{name} has a term without u: {exc}") from None
        f = g.restrict(ring)
        parts["F" + name[1:]] = f
        total = total + f
    return GFResult("F", "matrix", total, x_max,
                    extra={"G": G, "parts": parts})


# ---------------------------------------------------------------------------
# EV / OD system in (x, y, z, u)

def _evod_ring(x_max: int, with_u: bool, pad: int = 0) -> VarSet:
    caps = degree_caps(x_max, ["ver", "white"])
    y_cap, z_cap = caps["ver"] + pad, caps["white"] + pad
    if with_u:
        return VarSet.of(x=x_max + pad, y=y_cap, z=z_cap, u=x_max + pad)
    return VarSet.of(x=x_max + pad, y=y_cap, z=z_cap)


def _evod_system(ring: VarSet, u: MPoly):
    x, y, z = ring.var("x"), ring.var("y"), ring.var("z")
    dz = _neg_recip(ring, u * z)          # 1/(uz - 1)
    dy = _neg_recip(ring, u * y)          # 1/(uy - 1)
    dyz = _neg_recip(ring, u * y * z)     # 1/(uyz - 1)
    u3, u4 = u ** 3, u ** 4
    x2 = x * x
    M = SeriesMatrix([[x2 * y ** 2 * z ** 4 * u4 * dz * dyz, 0],
                      [0, x2 * y ** 4 * z ** 2 * u4 * dy * dyz]], ring)
    N = SeriesMatrix([[x2 * y * z ** 3 * u3 * dz * dyz, x * z * u * dz],
                      [x * y * u * dy, x2 * y ** 3 * z * u3 * dy * dyz]], ring)
    B = SeriesMatrix.column([x2 * y * z ** 3 * u3 * dz, x * y * u], ring)
    return M, N, B


def _gk(ring: VarSet, a: str, b: str, k: int) -> MPoly:
    """``G_k(a, b) = x^{2k} a^{2k} b^{4k} (ab)^{2k(k-1)} / ((b;ab)_k (ab;ab)_k)``."""
    x, va, vb = ring.var("x"), ring.var(a), ring.var(b)
    ab = va * vb
    num = x ** (2 * k) * va ** (2 * k) * vb ** (4 * k) * ab ** (2 * k * (k - 1))
    den = pochhammer(vb, ab, k) * pochhammer(ab, ab, k)
    return num * geom_inverse(den)


def evod_product_vs_pochhammer(ring: VarSet, k: int) -> Residual:
    """``P_k(1) = prod_{j<k} M((yz)^j)`` against its diagonal closed form.

    ``G_k`` starts at ``y^{2k^2} z^{2k^2+2k}``; a solver ring built for a
    small ``x_max`` truncates both sides to zero for larger ``k``.
    """
    yz = ring.var("y") * ring.var("z")
    P = SeriesMatrix.identity(ring, 2)
    for j in range(k):
        P = P @ _evod_system(ring, yz ** j)[0]
    closed = SeriesMatrix([[_gk(ring, "y", "z", k), 0],
                           [0, _gk(ring, "z", "y", k)]], ring)
    for i in range(2):
        for j in range(2):
            r = compare(f"P_{k}(1)[{i},{j}]", P[i, j], closed[i, j])
            if not r:
                return r
    return Residual(f"P_{k}(1)", True)


def _evod_at_1(ring: VarSet, check_pochhammer: bool) -> tuple[MPoly, MPoly]:
    yz = ring.var("y") * ring.var("z")
    ident = SeriesMatrix.identity(ring, 2)
    P = ident
    S = SeriesMatrix.zeros(ring, 2, 2)
    rhs = SeriesMatrix.zeros(ring, 2, 1)
    k = 0
    while not P.is_zero():
        if check_pochhammer:
            closed = SeriesMatrix([[_gk(ring, "y", "z", k), 0],
                                   [0, _gk(ring, "z", "y", k)]], ring)
            if closed != P:
                raise SolverMismatch(f"P_{k}(1): matrix product and Pochhammer form differ")
        M, N, B = _evod_system(ring, yz ** k)
        S = S + P @ N
        rhs = rhs + P @ B
        P = P @ M
        k += 1
    V1 = (ident + S).neumann_inverse() @ rhs
    return V1[0, 0], V1[1, 0]


def evod_solve_iteration(x_max: int, with_u: bool = True, pad: int = 0,
                         check_pochhammer: bool = True) -> dict[str, GFResult]:
    """``EV`` and ``OD`` by iterating ``V(u) = M(u)V(yzu) - N(u)V(1) + B(u)``.

    With ``with_u=False`` only ``V(1)`` is computed (in ``(x, y, z)``).
    """
    if x_max < 1:
        raise ValueError("x_max must be positive")
    ring1 = _evod_ring(x_max, False, pad)
    ev1, od1 = _evod_at_1(ring1, check_pochhammer)
    out = {"EV1": GFResult("EV", "matrix", ev1, x_max, {"u": 1}),
           "OD1": GFResult("OD", "matrix", od1, x_max, {"u": 1})}
    if not with_u:
        return out
    ring = _evod_ring(x_max, True, pad)
    u, yz = ring.var("u"), ring.var("y") * ring.var("z")
    V1 = SeriesMatrix.column([ev1.embed(ring), od1.embed(ring)], ring)
    P = SeriesMatrix.identity(ring, 2)
    V = SeriesMatrix.zeros(ring, 2, 1)
    k = 0
    while not P.is_zero():
        M, N, B = _evod_system(ring, yz ** k * u)
        V = V + P @ (B - N @ V1)
        P = P @ M
        k += 1
    out["EV"] = GFResult("EV", "matrix", V[0, 0], x_max)
    out["OD"] = GFResult("OD", "matrix", V[1, 0], x_max)
    return out


@dataclass
class ClosedFormParts:
    f: MPoly
    g: MPoly
    phi: MPoly
    psi: MPoly
    f_swap: MPoly
    g_swap: MPoly
    phi_swap: MPoly
    psi_swap: MPoly
    delta: MPoly


def _q_sum(ring: VarSet, x_max: int, x_deg: Callable[[int], int],
           term: Callable[[int], MPoly]) -> MPoly:
    total = ring.zero()
    k = 0
    while x_deg(k) <= x_max:
        total = total + term(k)
        k += 1
    return total


def closed_form_parts(ring: VarSet, x_max: int) -> ClosedFormParts:
    x = ring.var("x")

    def build(a: str, b: str):
        va, vb = ring.var(a), ring.var(b)
        ab = va * vb

        def poch(base, k):
            return pochhammer(base, ab, k)

        def f_term(k):
            num = x ** (2 * k + 2) * va ** (2 * k + 1) * vb ** (4 * k + 3) * ab ** (k * (2 * k + 1))
            return num * geom_inverse(poch(vb, k + 1) * poch(ab, k))

        def g_term(k):
            num = x ** (2 * k + 1) * va ** (4 * k + 1) * vb ** (2 * k) * ab ** (k * (2 * k - 1))
            return num * geom_inverse(poch(va, k) * poch(ab, k))

        def phi_term(k):
            num = x ** (2 * k + 2) * va ** (2 * k + 1) * vb ** (4 * k + 3) * ab ** (k * (2 * k + 1))
            return num * geom_inverse(poch(vb, k + 1) * poch(ab, k + 1))

        def psi_term(k):
            num = x ** (2 * k + 1) * va ** (2 * k) * vb ** (4 * k + 1) * ab ** (k * (2 * k - 1))
            return -(num * geom_inverse(poch(vb, k + 1) * poch(ab, k)))

        f = _q_sum(ring, x_max, lambda k: 2 * k + 2, f_term)
        g = _q_sum(ring, x_max, lambda k: 2 * k + 1, g_term)
        phi = _q_sum(ring, x_max, lambda k: 2 * k + 2, phi_term)
        psi = _q_sum(ring, x_max, lambda k: 2 * k + 1, psi_term)
        return f, g, phi, psi

    f, g, phi, psi = build("y", "z")
    f_s, g_s, phi_s, psi_s = build("z", "y")
    one = ring.one()
    delta = (one + phi) * (one + phi_s) - psi * psi_s
    return ClosedFormParts(f, g, phi, psi, f_s, g_s, phi_s, psi_s, delta)


def evod_closed_form(x_max: int, pad: int = 0,
                     reference: dict | None = None) -> dict:
    """``V(1)`` from the q-Pochhammer sums ``f, g, phi, psi`` and ``Delta``.

    With ``reference`` (the output of :func:`evod_solve_iteration`) the result
    is compared entry-wise and a :class:`SolverMismatch` names the first
    differing coefficient.
    """
    if x_max < 1:
        raise ValueError("x_max must be positive")
    ring = _evod_ring(x_max, False, pad)
    parts = closed_form_parts(ring, x_max)
    one = ring.one()
    inv = geom_inverse(parts.delta)
    ev = (-(one + parts.phi_swap) * parts.f - parts.psi * parts.g) * inv
    od = ((one + parts.phi) * parts.g + parts.psi_swap * parts.f) * inv
    out = {"EV1": GFResult("EV", "closed", ev, x_max, {"u": 1}),
           "OD1": GFResult("OD", "closed", od, x_max, {"u": 1}),
           "parts": parts}
    if reference is not None:
        for key in ("EV1", "OD1"):
            r = compare(f"closed vs iteration {key}", out[key].series,
                        reference[key].series)
            if not r:
                raise SolverMismatch(str(r))
    return out


# ---------------------------------------------------------------------------
# C(x, y, z, u) and the 2x2 solve

def _funceq_ring(x_max: int, pad: int = 0) -> VarSet:
    caps = degree_caps(x_max, ["s", "s_bar"])
    # y and z trade places in the companion equation, so they share one cap
    cap = max(caps.values()) + pad
    return VarSet.of(x=x_max + pad, y=cap, z=cap, u=x_max + pad)


@dataclass
class FuncEqParts:
    P_y: MPoly
    Q_y: MPoly
    R_y: MPoly
    P_z: MPoly
    Q_z: MPoly
    R_z: MPoly
    P_y1: MPoly
    Q_y1: MPoly
    R_y1: MPoly
    P_z1: MPoly
    Q_z1: MPoly
    R_z1: MPoly
    F1: MPoly
    G1: MPoly
    delta_fe: MPoly


def _pqr(ring: VarSet, x_max: int, a: str, b: str, u: MPoly):
    """Split the ``n``-sum for ``F(u)`` into the constant, ``G(1)`` and ``F(1)`` groups.

    ``a`` plays the role of ``y`` (``b`` of ``z``), ``q = ab``.
    """
    x, ya = ring.var("x"), ring.var(a)
    q = ya * ring.var(b)
    P = Q = R = ring.zero()
    n = 0
    while 2 * n + 1 <= x_max:
        qn = q ** n
        t = (x * x * ya * ya * u ** 4) ** n * q ** (2 * n * n)
        t = t * geom_inverse(pochhammer(ya * u, q, n) * pochhammer(q * u, q, n))
        d1 = _recip(ring, ya * qn * u)            # 1/(1 - y q^n u)
        d2 = _recip(ring, qn * q * u)             # 1/(1 - q^{n+1} u)
        lin = x * ya * qn * u
        cub = x * x * ya * ya * q ** (1 + 3 * n) * u ** 3
        P = P + t * (lin - cub * d1)
        Q = Q + t * lin * d1
        R = R - t * cub * d1 * d2
        n += 1
    return P, Q, R


def funceq_parts(x_max: int, pad: int = 0) -> FuncEqParts:
    ring = _funceq_ring(x_max, pad)
    u, one = ring.var("u"), ring.one()
    P_y, Q_y, R_y = _pqr(ring, x_max, "y", "z", u)
    P_z, Q_z, R_z = _pqr(ring, x_max, "z", "y", u)
    # u = 1 is substituted before expanding; collapsing a truncated series would
    # lose the terms cut at the u cap
    P_y1, Q_y1, R_y1 = _pqr(ring, x_max, "y", "z", one)
    P_z1, Q_z1, R_z1 = _pqr(ring, x_max, "z", "y", one)
    delta = (one - R_y1) * (one - R_z1) - Q_y1 * Q_z1
    if delta.constant_term() != 1:
        raise SolverMismatch(f"Delta has constant term {delta.constant_term()}, not 1")
    inv = geom_inverse(delta)
    F1 = (P_y1 * (one - R_z1) + Q_y1 * P_z1) * inv
    G1 = (P_z1 * (one - R_y1) + Q_z1 * P_y1) * inv
    return FuncEqParts(P_y, Q_y, R_y, P_z, Q_z, R_z,
                     P_y1, Q_y1, R_y1, P_z1, Q_z1, R_z1, F1, G1, delta)


def funceq_solve(x_max: int, pad: int = 0, parts: FuncEqParts | None = None) -> dict:
    """``C(x,y,z,u) = P_y(u) + Q_y(u) G(1) + R_y(u) F(1)``; also returns ``C(x,y,z,1)``."""
    if x_max < 1:
        raise ValueError("x_max must be positive")
    parts = parts or funceq_parts(x_max, pad)
    C = parts.P_y + parts.Q_y * parts.G1 + parts.R_y * parts.F1
    return {"C": GFResult("C", "funceq", C, x_max),
            "C1": GFResult("C", "funceq", parts.F1, x_max, {"u": 1}),
            "parts": parts}


def _B_y(ring: VarSet, u: MPoly) -> MPoly:
    x, y = ring.var("x"), ring.var("y")
    q = y * ring.var("z")
    return x * x * y * y * q * q * u ** 4 * _recip(ring, y * u) * _recip(ring, q * u)


def funceq_pochhammer_form(ring: VarSet, n: int) -> MPoly:
    """``(x^2 y^2 u^4)^n q^{2n^2} / ((yu;q)_n (qu;q)_n)`` with ``q = yz``."""
    x, y, u = ring.var("x"), ring.var("y"), ring.var("u")
    q = y * ring.var("z")
    return (x * x * y * y * u ** 4) ** n * q ** (2 * n * n) * geom_inverse(
        pochhammer(y * u, q, n) * pochhammer(q * u, q, n))


def funceq_product_vs_pochhammer(ring: VarSet, n: int) -> Residual:
    """``prod_{k<n} B_y(q^k u)`` against :func:`funceq_pochhammer_form`.

    The closed form starts at ``y^{2n+2n^2}``, so the comparison is only
    informative in a ring whose ``y`` and ``z`` caps exceed that.
    """
    q = ring.var("y") * ring.var("z")
    u = ring.var("u")
    prod = ring.one()
    for k in range(n):
        prod = prod * _B_y(ring, q ** k * u)
    return compare(f"prod_(k<{n}) B_y(q^k u) = Pochhammer form", prod,
                   funceq_pochhammer_form(ring, n))


def _A_y(ring: VarSet, u: MPoly, F1: MPoly, G1: MPoly) -> MPoly:
    x, y = ring.var("x"), ring.var("y")
    q = y * ring.var("z")
    dy, dq = _recip(ring, y * u), _recip(ring, q * u)
    cub = x * x * y * y * q * u ** 3
    return x * y * u + x * y * u * dy * G1 - cub * dy - cub * dy * dq * F1


def funceq_identity_checks(x_max: int, solved: dict | None = None,
                      max_n: int = 5) -> list[Residual]:
    """Identity checks on the solved ``F(u) = C(x,y,z,u)``.

    * ``F(u) = A_y(u) + B_y(u) F(qu)``;
    * ``prod_{k<n} B_y(q^k u)`` equals its Pochhammer form for ``n <= max_n``;
    * ``prod_{k<N} B_y(q^k u) * F(q^N u)`` is divisible by ``u^{4N}``;
    * ``F(u)`` equals ``sum_n (prod_{k<n} B_y(q^k u)) A_y(q^n u)`` (tail dropped).
    """
    solved = solved or funceq_solve(x_max)
    parts = solved["parts"]
    F = solved["C"].series
    ring = F.ring
    x, y, z, u = ring.gens()
    q = y * z
    qmono = {"y": 1, "z": 1}
    F1, G1 = parts.F1, parts.G1
    report = []

    A = _A_y(ring, u, F1, G1)
    Bu = _B_y(ring, u)
    report.append(compare("F(u) = A_y(u) + B_y(u) F(qu)", F,
                          A + Bu * F.subst_scale("u", qmono)))

    for n in range(max_n + 1):
        report.append(funceq_product_vs_pochhammer(ring, n))

    prod = ring.one()
    series_sum = ring.zero()
    n = 0
    tail_ok = True
    while True:
        tail = prod * F.subst_scale("u", qmono, n)
        val = tail.valuation("u")
        if val is not None and val < 4 * n:
            tail_ok = False
            report.append(Residual(f"u^{4 * n} divides tail at N={n}", False,
                                   (("u-valuation",), val, 4 * n)))
            break
        if not prod:
            break
        series_sum = series_sum + prod * _A_y(ring, q ** n * u, F1, G1)
        prod = prod * _B_y(ring, q ** n * u)
        n += 1
    if tail_ok:
        report.append(Residual("tail carries u^{4N}", True))
    report.append(compare("F(u) = sum_n prod B_y(q^k u) A_y(q^n u)", F, series_sum))
    return report


# ---------------------------------------------------------------------------
# reassembly into F(x, 1, q) and the brute-force oracle

def f_ring(x_max: int, pad: int = 0) -> VarSet:
    return _matrix_ring(x_max, False, pad)


def evod_to_f(ev1: MPoly, od1: MPoly, ring: VarSet) -> MPoly:
    """``F(x,1,q)`` as ``OD(x,q,1,1)`` (odd lengths) + ``EV(x,1,q,1)`` (even lengths)."""
    odd = od1.eval_one("z").relabel(ring, {"y": "q"})
    even = ev1.eval_one("y").relabel(ring, {"z": "q"})
    return odd + even


def c_to_f(c1: MPoly, ring: VarSet) -> MPoly:
    """``F(x,1,q)`` as ``C(x,q,1,1)``."""
    c = c1
    for v in ("z", "u"):
        if v in c.ring.names:
            c = c.eval_one(v)
    return c.relabel(ring, {"y": "q"})


def brute_force_series(ring: VarSet, stats: dict[str, str], x_max: int,
                       cap: int | None = None) -> MPoly:
    """Enumerate every polyomino of length ``1..x_max`` into a series.

    ``stats`` maps a ring variable to the statistic it marks; ``x`` always
    marks the length.
    """
    from .words import distribution

    names = [n for n in ring.names if n != "x"]
    table = distribution(range(1, x_max + 1), [stats[n] for n in names], cap=cap)
    xi = ring.index("x")
    terms = {}
    for (n, key), c in table.entries.items():
        exps = [0] * len(ring)
        exps[xi] = n
        for name, v in zip(names, key):
            exps[ring.index(name)] = v
        terms[tuple(exps)] = c
    return ring.from_dict(terms)
