"""Catalan words, Catalan polyominoes and their cell statistics.

A Catalan word ``w_1 ... w_n`` has ``w_1 = 0`` and ``w_i <= w_{i-1} + 1``.
The associated polyomino (bargraph) has bottom-aligned columns of heights
``w_i + 1``.  Cells are chessboard-coloured with the south-west cell black;
columns and rows are numbered from 1.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, Sequence

__all__ = [
    "CatalanWord",
    "Polyomino",
    "EnumerationCapError",
    "DistributionTable",
    "STATISTICS",
    "catalan_number",
    "catalan_words",
    "polyominoes",
    "black_capacity",
    "white_capacity",
    "vertical_capacities",
    "diag_bijection",
    "diagonal_lengths",
    "s_statistics",
    "dyck_path",
    "dyck_black_cells",
    "distribution",
    "capacity_sequence",
    "enumeration_cap",
]

DEFAULT_CAP = 14
CAP_ENV = "CATPOLY_ENUM_CAP"


class EnumerationCapError(ValueError):
    """Raised instead of starting an exhaustive enumeration that is too large."""


def enumeration_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


def _check_cap(n: int, cap: int | None):
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise EnumerationCapError(
            f"length {n} exceeds the enumeration cap {cap} "
            f"(C_{n} = {catalan_number(n)} objects); raise it with {CAP_ENV}")


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class CatalanWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        problem = _word_violation(letters)
        if problem:
            raise ValueError(problem)

    @classmethod
    def parse(cls, text: str) -> "CatalanWord":
        """Accepts ``"0,1,2,1"`` or the compact digit form ``"0121"``."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))

    def polyomino(self) -> "Polyomino":
        return Polyomino(tuple(a + 1 for a in self.letters))


def _word_violation(letters: Sequence[int]) -> str | None:
    if not letters:
        return None
    if letters[0] != 0:
        return f"first letter must be 0, got {letters[0]}"
    for i in range(1, len(letters)):
        if letters[i] < 0:
            return f"letter {i + 1} is negative"
        if letters[i] > letters[i - 1] + 1:
            return (f"letter {i + 1} is {letters[i]} but may be at most "
                    f"{letters[i - 1] + 1} (previous letter + 1)")
    return None


@dataclass(frozen=True)
class Polyomino:
    """Catalan polyomino stored by its column heights."""

    heights: tuple[int, ...] = ()

    def __post_init__(self):
        heights = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", heights)
        if any(h < 1 for h in heights):
            raise ValueError("column heights must be positive")
        if heights and heights[0] != 1:
            raise ValueError(f"first column must have height 1, got {heights[0]}")
        for i in range(1, len(heights)):
            if heights[i] > heights[i - 1] + 1:
                raise ValueError(
                    f"column {i + 1} has height {heights[i]} but may be at most "
                    f"{heights[i - 1] + 1} (previous height + 1)")

    @classmethod
    def parse(cls, text: str) -> "Polyomino":
        """Accepts ``"1,2,3,2"`` or the compact digit form ``"1232"``."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_json(cls, data: dict) -> "Polyomino":
        return cls(tuple(data["heights"]))

    def to_json(self) -> dict:
        return {"heights": list(self.heights)}

    def word(self) -> CatalanWord:
        return CatalanWord(tuple(h - 1 for h in self.heights))

    def __len__(self):
        return len(self.heights)

    def __str__(self):
        return ",".join(map(str, self.heights))

    @property
    def length(self) -> int:
        return len(self.heights)

    @property
    def last(self) -> int:
        return self.heights[-1] if self.heights else 0

    @property
    def area(self) -> int:
        return sum(self.heights)


def _iter_words(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    word = [0] * n

    def rec(i):
        if i == n:
            yield tuple(word)
            return
        for a in range(word[i - 1] + 2):
            word[i] = a
            yield from rec(i + 1)

    yield from rec(1)


def catalan_words(n: int, cap: int | None = None) -> list[CatalanWord]:
    """All Catalan words of length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, cap)
    return [CatalanWord(w) for w in _iter_words(n)]


def polyominoes(n: int, cap: int | None = None) -> Iterator[Polyomino]:
    """Lazily yield the ``C_n`` polyominoes of length ``n``, lexicographic by word."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, cap)
    for w in _iter_words(n):
        yield Polyomino(tuple(a + 1 for a in w))


def _heights(p) -> Sequence[int]:
    return p.heights if isinstance(p, Polyomino) else p


def black_capacity(p: Polyomino | Sequence[int]) -> int:
    """Black cells: ``ceil(h/2)`` in odd columns, ``floor(h/2)`` in even ones."""
    hs = _heights(p)
    return sum((h + 1) // 2 for h in hs[0::2]) + sum(h // 2 for h in hs[1::2])


def white_capacity(p: Polyomino | Sequence[int]) -> int:
    hs = _heights(p)
    return sum(h // 2 for h in hs[0::2]) + sum((h + 1) // 2 for h in hs[1::2])


def vertical_capacities(p: Polyomino | Sequence[int]) -> tuple[int, int]:
    """``(ver, white)``: total cells in odd-index and even-index columns."""
    hs = _heights(p)
    return sum(hs[0::2]), sum(hs[1::2])


def s_statistics(p: Polyomino | Sequence[int]) -> tuple[int, int]:
    """``(s, s_bar)``; ``s`` is ver for odd length and white for even length."""
    hs = _heights(p)
    ver, white = vertical_capacities(hs)
    return (ver, white) if len(hs) % 2 else (white, ver)


def diagonal_lengths(p: Polyomino | Sequence[int]) -> list[int]:
    """Length of the north-east diagonal starting at the bottom of each column."""
    hs = _heights(p)
    n = len(hs)
    out = []
    for i in range(n):
        m = 1
        while i + m < n and hs[i + m] >= m + 1:
            m += 1
        out.append(m)
    return out


def diag_bijection(p: Polyomino) -> Polyomino:
    """Columns of the image are the diagonal lengths of ``p`` read right to left."""
    return Polyomino(tuple(reversed(diagonal_lengths(p))))


def dyck_path(p: Polyomino | Sequence[int]) -> list[int]:
    """Heights of the Dyck path vertices; up-step ``i`` starts at height ``h_i - 1``."""
    hs = _heights(p)
    path = [0]
    for i, h in enumerate(hs):
        start = h - 1
        while path[-1] > start:
            path.append(path[-1] - 1)
        path.append(start + 1)
    while path[-1] > 0:
        path.append(path[-1] - 1)
    return path


def dyck_black_cells(p: Polyomino | Sequence[int]) -> int:
    """Count unit diamonds under the Dyck path (above ``y = -1``) with centre
    ``(a, b)``, ``a - b = 1 (mod 4)``."""
    path = dyck_path(p)
    count = 0
    for a in range(1, len(path) - 1):
        # diamonds centred at (a, b) with b >= 0, a + b odd, top vertex under the path
        for b in range((a + 1) % 2, path[a], 2):
            if (a - b) % 4 == 1:
                count += 1
    return count


STATISTICS: dict[str, Callable[[Sequence[int]], int]] = {
    "bck": black_capacity,
    "white_cells": white_capacity,
    "ver": lambda hs: vertical_capacities(hs)[0],
    "white": lambda hs: vertical_capacities(hs)[1],
    "s": lambda hs: s_statistics(hs)[0],
    "s_bar": lambda hs: s_statistics(hs)[1],
    "last": lambda hs: hs[-1] if len(hs) else 0,
    "lth": len,
    "area": sum,
    "dyck": dyck_black_cells,
}


@dataclass
class DistributionTable:
    """Counts of polyominoes keyed by ``(length, statistic tuple)``."""

    stats: tuple[str, ...]
    entries: dict[tuple[int, tuple[int, ...]], int]

    def lengths(self) -> list[int]:
        return sorted({n for n, _ in self.entries})

    def for_length(self, n: int) -> dict[tuple[int, ...], int]:
        return {k: c for (m, k), c in sorted(self.entries.items()) if m == n}

    def marginal(self, n: int) -> dict[int, int]:
        """Single-statistic view ``{value: count}``."""
        if len(self.stats) != 1:
            raise ValueError("marginal needs exactly one statistic")
        return {k[0]: c for k, c in self.for_length(n).items()}

    def total(self, n: int) -> int:
        return sum(self.for_length(n).values())

    def to_csv_rows(self) -> list[list]:
        rows = [["n", *self.stats, "count"]]
        for (n, key), c in sorted(self.entries.items()):
            rows.append([n, *key, c])
        return rows


def _stat_fns(stats: Sequence[str]):
    try:
        return [STATISTICS[s] for s in stats]
    except KeyError as exc:
        raise ValueError(f"unknown statistic {exc.args[0]!r}; "
                         f"choose from {sorted(STATISTICS)}") from None


def distribution(n: int | Sequence[int], stats: Sequence[str],
                 cap: int | None = None) -> DistributionTable:
    """Exact counts over every polyomino of length ``n`` (or each listed length)."""
    lengths = [n] if isinstance(n, int) else list(n)
    fns = _stat_fns(stats)
    entries: Counter = Counter()
    for m in lengths:
        if m < 1:
            raise ValueError("length must be positive")
        _check_cap(m, cap)
        for w in _iter_words(m):
            hs = [a + 1 for a in w]
            entries[(m, tuple(f(hs) for f in fns))] += 1
    return DistributionTable(tuple(stats), dict(entries))


def _column_stat(stat: str) -> Callable[[int, int], int]:
    # contribution of a column of height h at 1-based index i
    if stat == "bck":
        return lambda i, h: (h + 1) // 2 if i % 2 else h // 2
    if stat == "ver":
        return lambda i, h: h if i % 2 else 0
    raise ValueError(f"capacity_sequence supports 'bck' and 'ver', not {stat!r}")


def capacity_sequence(stat: str, k_max: int, cap: int | None = None,
                      max_length: int | None = None) -> list[int]:
    """Number of polyominoes of any length with ``stat == k`` for ``k = 1..k_max``.

    Since every odd column adds at least one to both statistics, only lengths
    up to ``2*k_max`` can reach ``k_max``.  Words are generated depth-first
    and a branch is abandoned once its running total passes ``k_max`` (column
    contributions are nonnegative); each visited polyomino is rescored from
    its full height list before it is counted.
    ``max_length`` lowers the length bound, which reproduces series that
    were truncated in ``x``.
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    column = _column_stat(stat)
    score = STATISTICS[stat]
    max_len = 2 * k_max if max_length is None else min(max_length, 2 * k_max)
    _check_cap(max_len, cap)
    counts = [0] * (k_max + 1)
    heights: list[int] = []

    def rec(partial: int):
        n = len(heights)
        if n:
            value = score(heights)
            if value <= k_max:
                counts[value] += 1
        if n == max_len:
            return
        top = heights[-1] + 1 if heights else 1
        for h in range(1, top + 1):
            nxt = partial + column(n + 1, h)
            # column contributions grow with h
            if nxt > k_max:
                break
            heights.append(h)
            rec(nxt)
            heights.pop()

    rec(0)
    return counts[1:]


def iter_all(max_len: int, cap: int | None = None) -> Iterator[Polyomino]:
    for n in range(1, max_len + 1):
        yield from polyominoes(n, cap)
