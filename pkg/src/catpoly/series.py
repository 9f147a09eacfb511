"""Truncated sparse multivariate polynomials over the integers.

Every polynomial lives in a :class:`VarSet`, an ordered list of variable
names with a maximum retained exponent per variable.  Products, sums and
substitutions silently drop any monomial that exceeds a cap, so the
arithmetic is the quotient of ``Z[vars]`` by the monomial ideal of
out-of-range exponents.  Substitutions that only raise exponents are ring
maps of that quotient; :meth:`MPoly.eval_one` is not, and should only be
applied to values whose true support fits inside the caps.

The first variable is treated as the grading variable (``x`` in every ring
used here): it sits in the most significant bits of the packed exponent
keys, which lets multiplication skip pairs of terms whose ``x`` degrees
already overflow.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "VarSet",
    "MPoly",
    "SeriesMatrix",
    "RingMismatch",
    "NotAUnit",
    "geom_inverse",
    "pochhammer",
]


class RingMismatch(ValueError):
    pass


class NotAUnit(ValueError):
    pass


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names with per-variable exponent caps."""

    names: tuple[str, ...]
    caps: tuple[int, ...]
    _offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _bias: int = field(init=False, repr=False, compare=False)
    _high: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        caps = tuple(int(c) for c in self.caps)
        if len(names) != len(caps):
            raise ValueError("one cap per variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if any(c < 0 for c in caps):
            raise ValueError("caps must be nonnegative")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "caps", caps)

        # Field i holds exponents up to 2*cap without spilling into field i-1;
        # adding the bias sets the field's top bit exactly when e > cap.
        offsets = [0] * len(caps)
        bias = high = 0
        off = 0
        for i in reversed(range(len(caps))):
            width = caps[i].bit_length() + 1
            offsets[i] = off
            bias |= ((1 << (width - 1)) - 1 - caps[i]) << off
            high |= (1 << (width - 1)) << off
            off += width
        object.__setattr__(self, "_offsets", tuple(offsets))
        object.__setattr__(self, "_bias", bias)
        object.__setattr__(self, "_high", high)

    @classmethod
    def of(cls, **caps: int) -> "VarSet":
        """``VarSet.of(x=5, q=15)``; keyword order fixes the variable order."""
        return cls(tuple(caps), tuple(caps.values()))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not in ring {self.names}") from None

    def cap(self, name: str) -> int:
        return self.caps[self.index(name)]

    def fits(self, exps: Sequence[int]) -> bool:
        return all(0 <= e <= c for e, c in zip(exps, self.caps))

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != len(self.names):
            raise ValueError(f"expected {len(self.names)} exponents, got {len(exps)}")
        key = 0
        for e, off in zip(exps, self._offsets):
            key |= e << off
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        offs = self._offsets
        out = []
        for i, off in enumerate(offs):
            width = offs[i - 1] - off if i else None
            e = key >> off
            if width is not None:
                e &= (1 << width) - 1
            out.append(e)
        return tuple(out)

    def widened(self, extra: int) -> "VarSet":
        return VarSet(self.names, tuple(c + extra for c in self.caps))

    # constructors

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return self.const(1)

    def const(self, c: int) -> "MPoly":
        return MPoly(self, {0: int(c)} if c else {})

    def var(self, name: str) -> "MPoly":
        return self.monomial(1, **{name: 1})

    def gens(self) -> tuple["MPoly", ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, coef: int = 1, **exps: int) -> "MPoly":
        vec = [0] * len(self.names)
        for name, e in exps.items():
            if e < 0:
                raise ValueError("negative exponent")
            vec[self.index(name)] = e
        if not coef or not self.fits(vec):
            return self.zero()
        return MPoly(self, {self.pack(vec): int(coef)})

    def from_dict(self, terms: Mapping[Sequence[int], int]) -> "MPoly":
        out: dict[int, int] = {}
        for exps, c in terms.items():
            if c and self.fits(exps):
                k = self.pack(exps)
                out[k] = out.get(k, 0) + int(c)
        return MPoly(self, {k: v for k, v in out.items() if v})


class MPoly:
    """Immutable sparse polynomial with big-integer coefficients.

    ``terms`` maps packed exponent keys to nonzero ints; use
    :meth:`items` for ``(exponent tuple, coefficient)`` pairs.
    """

    __slots__ = ("ring", "_t", "_sorted")

    def __init__(self, ring: VarSet, terms: dict[int, int]):
        self.ring = ring
        self._t = terms
        self._sorted = None

    # inspection

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        unpack = self.ring.unpack
        for k in sorted(self._t):
            yield unpack(k), self._t[k]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.items())

    def coeff(self, exps: Sequence[int]) -> int:
        return self._t.get(self.ring.pack(exps), 0) if self.ring.fits(exps) else 0

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def degree(self, var: str) -> int:
        """Largest exponent of ``var`` present, -1 for the zero polynomial."""
        i = self.ring.index(var)
        return max((e[i] for e, _ in self.items()), default=-1)

    def valuation(self, var: str) -> int | None:
        i = self.ring.index(var)
        return min((e[i] for e, _ in self.items()), default=None)

    def __repr__(self):
        return f"MPoly({self.to_text() or '0'})"

    def __hash__(self):
        return hash((self.ring, frozenset(self._t.items())))

    def __eq__(self, other):
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring == other.ring and self._t == other._t

    # arithmetic

    def _check(self, other: "MPoly"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.names}{self.ring.caps} vs "
                               f"{other.ring.names}{other.ring.caps}")

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        if len(other._t) > len(self._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.ring.zero()
            return MPoly(self.ring, {k: c * other for k, c in self._t.items()})
        other = self._coerce(other)
        return MPoly(self.ring, _mul_terms(self.ring, self, other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power; use geom_inverse")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scalar_mul(self, c: int) -> "MPoly":
        return self * int(c)

    def _sorted_items(self) -> list[tuple[int, int]]:
        if self._sorted is None:
            self._sorted = sorted(self._t.items())
        return self._sorted

    # substitutions

    def _map_exps(self, fn, ring: VarSet | None = None) -> "MPoly":
        ring = ring or self.ring
        out: dict[int, int] = {}
        for exps, c in self.items():
            new = fn(exps)
            if new is None or not ring.fits(new):
                continue
            k = ring.pack(new)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return MPoly(ring, out)

    def subst_scale(self, target: str, scaler: Mapping[str, int] | str, k: int = 1) -> "MPoly":
        """Substitute ``target -> scaler**k * target``.

        ``scaler`` is a variable name or a monomial given as ``{name: exp}``.
        A monomial with ``target``-exponent ``j`` gains ``k*j`` times each
        scaler exponent.
        """
        if k < 0:
            raise ValueError("k must be nonnegative")
        if isinstance(scaler, str):
            scaler = {scaler: 1}
        t = self.ring.index(target)
        shift = [(self.ring.index(v), e * k) for v, e in scaler.items()]

        def fn(exps):
            j = exps[t]
            if not j:
                return exps
            new = list(exps)
            for i, e in shift:
                new[i] += e * j
            return new

        return self._map_exps(fn)

    def eval_one(self, var: str) -> "MPoly":
        """Set ``var = 1`` by collapsing its exponents to zero."""
        i = self.ring.index(var)
        return self._map_exps(lambda e: e[:i] + (0,) + e[i + 1:])

    def stretch(self, var: str, factor: int) -> "MPoly":
        """Substitute ``var -> var**factor``."""
        i = self.ring.index(var)
        return self._map_exps(lambda e: e[:i] + (e[i] * factor,) + e[i + 1:])

    def shift_down(self, var: str, amount: int = 1) -> "MPoly":
        """Exact division by ``var**amount``; raises if some term is not divisible."""
        i = self.ring.index(var)

        def fn(e):
            if e[i] < amount:
                raise ArithmeticError(
                    f"term with exponents {e} not divisible by {var}^{amount}")
            return e[:i] + (e[i] - amount,) + e[i + 1:]

        return self._map_exps(fn)

    def swap(self, a: str, b: str) -> "MPoly":
        """Exchange two variables; their caps must agree."""
        i, j = self.ring.index(a), self.ring.index(b)
        if self.ring.caps[i] != self.ring.caps[j]:
            raise ValueError(f"cannot swap {a} and {b}: caps differ")

        def fn(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return e

        return self._map_exps(fn)

    def restrict(self, ring: VarSet) -> "MPoly":
        """Re-home into a ring with the same variables and (usually) smaller caps."""
        if ring.names != self.ring.names:
            raise RingMismatch("restrict needs identical variable names")
        return self._map_exps(lambda e: e, ring)

    def project(self, ring: VarSet) -> "MPoly":
        """Drop variables absent from ``ring``; each must have exponent 0."""
        idx = [self.ring.index(n) for n in ring.names]
        dropped = [i for i in range(len(self.ring)) if i not in idx]

        def fn(e):
            if any(e[i] for i in dropped):
                raise ValueError(f"term {e} uses a variable missing from {ring.names}")
            return [e[i] for i in idx]

        return self._map_exps(fn, ring)

    def relabel(self, ring: VarSet, mapping: Mapping[str, str]) -> "MPoly":
        """Move into ``ring`` sending variable ``old`` to ``mapping[old]``.

        Unmapped variables keep their name; any that ``ring`` lacks must
        have exponent 0 throughout.
        """
        src = {}
        for i, n in enumerate(self.ring.names):
            target = mapping.get(n, n)
            src[i] = ring.index(target) if target in ring.names else None

        def fn(e):
            new = [0] * len(ring)
            for i, v in enumerate(e):
                j = src[i]
                if j is None:
                    if v:
                        raise ValueError(f"term {e} uses {self.ring.names[i]}, "
                                         f"absent from {ring.names}")
                else:
                    new[j] += v
            return new

        return self._map_exps(fn, ring)

    def embed(self, ring: VarSet) -> "MPoly":
        """Move into a ring with more variables (new ones get exponent 0)."""
        idx = [ring.index(n) for n in self.ring.names]

        def fn(e):
            new = [0] * len(ring)
            for i, v in zip(idx, e):
                new[i] = v
            return new

        return self._map_exps(fn, ring)

    def coeff_of(self, var: str, deg: int) -> "MPoly":
        """Coefficient of ``var**deg`` as a polynomial in the same ring."""
        i = self.ring.index(var)
        return self._map_exps(lambda e: e if e[i] == deg else None)

    def filter(self, pred) -> "MPoly":
        return self._map_exps(lambda e: e if pred(e) else None)

    def truncate(self, var: str, max_deg: int) -> "MPoly":
        i = self.ring.index(var)
        return self.filter(lambda e: e[i] <= max_deg)

    # serialization

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, ring: VarSet, data: Iterable[Mapping]) -> "MPoly":
        return ring.from_dict({tuple(d["exp"]): int(d["coef"]) for d in data})

    def to_text(self, skip: Iterable[str] = ()) -> str:
        """Terms in descending exponent order, e.g. ``q^6 + 2*q^5 - q``."""
        skip = set(skip)
        names = self.ring.names
        parts = []
        for exps, c in sorted(self.items(), reverse=True):
            factors = []
            for n, e in zip(names, exps):
                if not e or n in skip:
                    continue
                factors.append(n if e == 1 else f"{n}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def graded_text(self, var: str = None) -> list[tuple[int, str]]:
        """One ``(degree, text)`` row per nonzero coefficient of ``var``."""
        var = var or self.ring.names[0]
        i = self.ring.index(var)
        degs = sorted({e[i] for e, _ in self.items()})
        return [(d, self.coeff_of(var, d).to_text(skip=[var])) for d in degs]


def _mul_terms(ring: VarSet, a: MPoly, b: MPoly) -> dict[int, int]:
    if not a._t or not b._t:
        return {}
    if len(a._t) > len(b._t):
        a, b = b, a
    bitems = b._sorted_items()
    bkeys = [k for k, _ in bitems]
    bias, high = ring._bias, ring._high
    xoff, xcap = ring._offsets[0], ring.caps[0]
    out: dict[int, int] = {}
    get = out.get
    for ka, ca in a._t.items():
        room = xcap - (ka >> xoff)
        if room < 0:
            continue
        lim = bisect_left(bkeys, (room + 1) << xoff)
        for kb, cb in bitems[:lim]:
            k = ka + kb
            if (k + bias) & high:
                continue
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def geom_inverse(p: MPoly) -> MPoly:
    """Inverse of ``p = c*(1 - m)`` with ``c = +-1`` and ``m`` constant-free.

    Sums the geometric series in ``m``; it terminates because every
    variable is capped.
    """
    c = p.constant_term()
    if c not in (1, -1):
        raise NotAUnit(f"not a unit for Neumann inversion (constant term {c})")
    m = p * c
    m = p.ring.one() - m
    total = p.ring.one()
    power = p.ring.one()
    while True:
        power = power * m
        if not power:
            break
        total = total + power
    return total * c


def pochhammer(a: MPoly, b: MPoly, k: int) -> MPoly:
    """``(a; b)_k = prod_{j<k} (1 - a*b^j)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a._check(b)
    one = a.ring.one()
    out = one
    step = a
    for _ in range(k):
        out = out * (one - step)
        step = step * b
    return out


class SeriesMatrix:
    """Small dense matrix of :class:`MPoly` entries over one ring."""

    __slots__ = ("ring", "rows")

    def __init__(self, rows: Sequence[Sequence[MPoly | int]], ring: VarSet | None = None):
        if ring is None:
            ring = next(e.ring for r in rows for e in r if isinstance(e, MPoly))
        conv = []
        for r in rows:
            row = []
            for e in r:
                if isinstance(e, int):
                    e = ring.const(e)
                elif e.ring != ring:
                    raise RingMismatch("matrix entries must share one ring")
                row.append(e)
            conv.append(tuple(row))
        if len({len(r) for r in conv}) != 1:
            raise ValueError("ragged matrix")
        self.ring = ring
        self.rows = tuple(conv)

    @classmethod
    def identity(cls, ring: VarSet, dim: int) -> "SeriesMatrix":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)], ring)

    @classmethod
    def zeros(cls, ring: VarSet, nrows: int, ncols: int) -> "SeriesMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ring)

    @classmethod
    def column(cls, entries: Sequence[MPoly | int], ring: VarSet | None = None):
        return cls([[e] for e in entries], ring)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def dim(self) -> int:
        r, c = self.shape
        if r != c:
            raise ValueError("not square")
        return r

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        body = "; ".join(", ".join(e.to_text() for e in r) for r in self.rows)
        return f"SeriesMatrix([{body}])"

    def map(self, fn) -> "SeriesMatrix":
        return SeriesMatrix([[fn(e) for e in r] for r in self.rows], self.ring)

    def __add__(self, other: "SeriesMatrix"):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return SeriesMatrix([[a + b for a, b in zip(r, s)]
                             for r, s in zip(self.rows, other.rows)], self.ring)

    def __neg__(self):
        return self.map(lambda e: -e)

    def __sub__(self, other: "SeriesMatrix"):
        return self + (-other)

    def __matmul__(self, other: "SeriesMatrix"):
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero()
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = zero
                for k in range(m):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out, self.ring)

    def __mul__(self, scalar: MPoly | int):
        return self.map(lambda e: e * scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(e for r in self.rows for e in r)

    def transpose(self) -> "SeriesMatrix":
        return SeriesMatrix([list(c) for c in zip(*self.rows)], self.ring)

    def neumann_inverse(self) -> "SeriesMatrix":
        """Inverse of ``I + X`` as ``I - X + X^2 - ...``; requires constant term ``I``."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                if self.rows[i][j].constant_term() != int(i == j):
                    raise NotAUnit("matrix constant term is not the identity")
        ident = SeriesMatrix.identity(self.ring, n)
        neg_x = ident - self
        total = ident
        power = ident
        while True:
            power = power @ neg_x
            if power.is_zero():
                return total
            total = total + power

    def coeff_of(self, var: str, deg: int) -> "SeriesMatrix":
        return self.map(lambda e: e.coeff_of(var, deg))

    def to_json(self) -> dict:
        return {"vars": list(self.ring.names), "caps": list(self.ring.caps),
                "shape": list(self.shape),
                "entries": [e.to_json() for r in self.rows for e in r]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def mat_mul(a: SeriesMatrix, b: SeriesMatrix) -> SeriesMatrix:
    return a @ b


def mat_add(a: SeriesMatrix, b: SeriesMatrix) -> SeriesMatrix:
    return a + b


def mat_neumann_inverse(m: SeriesMatrix) -> SeriesMatrix:
    return m.neumann_inverse()
