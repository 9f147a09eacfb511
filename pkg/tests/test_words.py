import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catpoly.words import (STATISTICS, CatalanWord, EnumerationCapError, Polyomino,
                           black_capacity, capacity_sequence, catalan_number,
                           catalan_words, diag_bijection, diagonal_lengths, distribution,
                           dyck_black_cells, dyck_path, polyominoes, s_statistics,
                           vertical_capacities, white_capacity)


@st.composite
def catalan_heights(draw, max_len=14):
    n = draw(st.integers(1, max_len))
    hs = [1]
    for _ in range(n - 1):
        hs.append(draw(st.integers(1, hs[-1] + 1)))
    return hs


def cells(hs):
    """Every (column, row) cell, both 1-based."""
    return [(i, j) for i, h in enumerate(hs, start=1) for j in range(1, h + 1)]


def naive_black(hs):
    # the south-west cell (1, 1) is black
    return sum((i + j) % 2 == 0 for i, j in cells(hs))


def naive_diagonals(hs):
    occupied = set(cells(hs))
    out = []
    for i in range(1, len(hs) + 1):
        m = 0
        while (i + m, 1 + m) in occupied:
            m += 1
        out.append(m)
    return out


FIG1_WORD = "0012012310110"


def test_fig1_polyomino():
    p = CatalanWord.parse(FIG1_WORD).polyomino()
    assert len(p) == 13 and p.last == 1
    assert black_capacity(p) == 13
    assert vertical_capacities(p) == (12, 13)
    assert dyck_black_cells(p) == 13


@pytest.mark.parametrize("heights, image, value, label", [
    ("1232121", "1121223", 8, "ver"),
    ("12321212", "12121223", 9, "white"),
])
def test_bijection_examples(heights, image, value, label):
    p = Polyomino.parse(heights)
    q = diag_bijection(p)
    assert q == Polyomino.parse(image)
    assert black_capacity(p) == value
    ver, white = vertical_capacities(q)
    assert {"ver": ver, "white": white}[label] == value


def test_word_and_polyomino_parsing():
    assert CatalanWord.parse("0,1,2").letters == (0, 1, 2)
    assert CatalanWord.parse("012") == CatalanWord.parse("0, 1, 2")
    assert Polyomino.parse("1,2,3").word() == CatalanWord((0, 1, 2))
    assert str(Polyomino.parse("1,2,1")) == "1,2,1"
    p = Polyomino.parse("1,2,2,1")
    assert Polyomino.from_json(p.to_json()) == p
    assert p.to_json() == {"heights": [1, 2, 2, 1]}
    assert (p.length, p.last, p.area) == (4, 1, 6)


@pytest.mark.parametrize("bad, fragment", [
    ("1,2,3", "first"),
    ("0,2", "at most"),
    ("0,1,3", "at most"),
    ("0,-1", ""),
])
def test_invalid_words_name_the_violation(bad, fragment):
    with pytest.raises(ValueError) as err:
        CatalanWord.parse(bad)
    assert fragment in str(err.value)


def test_invalid_heights():
    with pytest.raises(ValueError, match="first column"):
        Polyomino.parse("2,1")
    with pytest.raises(ValueError, match="at most"):
        Polyomino.parse("1,3")


def test_counts_match_catalan_numbers_by_brute_force():
    # independent oracle: filter all sequences with entries < n
    for n in range(1, 8):
        brute = sum(
            1 for w in itertools.product(range(n), repeat=n)
            if w[0] == 0 and all(b <= a + 1 for a, b in zip(w, w[1:])))
        assert brute == catalan_number(n) == len(catalan_words(n))


def test_enumeration_is_lexicographic_and_distinct():
    words = [w.letters for w in catalan_words(7)]
    assert words == sorted(words)
    assert len(set(words)) == len(words)


def test_cap_refusal(monkeypatch):
    with pytest.raises(EnumerationCapError):
        list(polyominoes(20))
    monkeypatch.setenv("CATPOLY_ENUM_CAP", "3")
    with pytest.raises(EnumerationCapError):
        list(polyominoes(4))
    with pytest.raises(EnumerationCapError):
        capacity_sequence("bck", 2)


@given(catalan_heights())
def test_black_capacity_is_chessboard_count(hs):
    assert black_capacity(hs) == naive_black(hs)
    assert white_capacity(hs) == sum(hs) - naive_black(hs)


@given(catalan_heights())
def test_dyck_interpretation_of_black_capacity(hs):
    path = dyck_path(hs)
    assert path[0] == path[-1] == 0 and len(path) == 2 * len(hs) + 1
    assert all(abs(a - b) == 1 for a, b in zip(path, path[1:]))
    assert dyck_black_cells(hs) == black_capacity(hs)


@given(catalan_heights())
def test_diagonals_match_cell_walk(hs):
    assert diagonal_lengths(hs) == naive_diagonals(hs)


@given(catalan_heights())
def test_bijection_transports_black_capacity(hs):
    p = Polyomino(tuple(hs))
    q = diag_bijection(p)
    assert len(q) == len(p)
    assert black_capacity(p) == vertical_capacities(q)[0 if len(p) % 2 else 1]


@given(catalan_heights())
def test_statistic_identities(hs):
    ver, white = vertical_capacities(hs)
    assert ver + white == sum(hs) == black_capacity(hs) + white_capacity(hs)
    s, s_bar = s_statistics(hs)
    assert {s, s_bar} == {ver, white}
    assert STATISTICS["last"](hs) == hs[-1]


def test_diagonal_cells_share_a_colour():
    for p in polyominoes(8):
        for i, m in enumerate(diagonal_lengths(p), start=1):
            colours = {(i + t + 1 + t) % 2 for t in range(m)}
            assert len(colours) == 1


def test_bijection_bijective_for_small_lengths():
    for n in range(1, 11):
        images = {diag_bijection(p) for p in polyominoes(n)}
        assert len(images) == catalan_number(n)


def test_s_equidistributed_with_bck():
    for n in range(1, 10):
        assert (distribution(n, ["s"]).marginal(n)
                == distribution(n, ["bck"]).marginal(n))


def test_length_four_distribution():
    table = distribution(4, ["bck"])
    assert table.total(4) == 14
    assert table.marginal(4) == {2: 2, 3: 5, 4: 4, 5: 2, 6: 1}
    rows = table.to_csv_rows()
    assert rows[0] == ["n", "bck", "count"] and len(rows) == 6


def test_distribution_multi_stat_and_errors():
    table = distribution([1, 2], ["ver", "white", "last"])
    assert table.lengths() == [1, 2]
    assert table.for_length(2) == {(1, 1, 1): 1, (1, 2, 2): 1}
    with pytest.raises(ValueError):
        table.marginal(2)
    with pytest.raises(ValueError):
        distribution(3, ["nope"])


def naive_sequence(stat, k_max):
    counts = [0] * k_max
    for n in range(1, 2 * k_max + 1):
        for p in polyominoes(n):
            v = STATISTICS[stat](p.heights)
            if 1 <= v <= k_max:
                counts[v - 1] += 1
    return counts


@pytest.mark.parametrize("stat", ["bck", "ver"])
def test_capacity_sequence_matches_plain_enumeration(stat):
    assert capacity_sequence(stat, 6) == naive_sequence(stat, 6)


def test_capacity_sequence_small_values():
    assert capacity_sequence("bck", 1) == [2]
    assert capacity_sequence("bck", 3)[-1] == 15
    assert capacity_sequence("ver", 3)[-1] == 20
    with pytest.raises(ValueError):
        capacity_sequence("area", 3)


def test_capacity_sequence_length_bound():
    # a polyomino with ver = k has at most 2k columns
    assert capacity_sequence("ver", 5, max_length=10) == capacity_sequence("ver", 5)
    assert capacity_sequence("ver", 5, max_length=9)[-1] < capacity_sequence("ver", 5)[-1]
