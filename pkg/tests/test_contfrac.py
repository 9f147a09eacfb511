import pytest
from goldens import by_name, load_matrices

from catpoly import contfrac, solvers
from catpoly.series import SeriesMatrix
from catpoly.solvers import brute_force_series, f_ring


def matrix_terms(m: SeriesMatrix, k: int):
    c = m.coeff_of("x", k)
    return [[by_name(c[i, j]) for j in range(2)] for i in range(2)]


@pytest.fixture(scope="module")
def s0_pair():
    return contfrac.s0_and_inverse(5)


@pytest.mark.parametrize("k", range(1, 6))
def test_s0_coefficients(s0_pair, k):
    assert matrix_terms(s0_pair[0], k) == load_matrices("S0_M.txt")[k]


@pytest.mark.parametrize("k", range(1, 6))
def test_s0_inverse_coefficients(s0_pair, k):
    assert matrix_terms(s0_pair[1], k) == load_matrices("S0inv_N.txt")[k]


def test_constant_terms_are_identity(s0_pair):
    ident = SeriesMatrix.identity(s0_pair[0].ring, 2)
    assert s0_pair[0].coeff_of("x", 0) == ident
    assert s0_pair[1].coeff_of("x", 0) == ident


def test_level_weights():
    ring = f_ring(3)
    lv = contfrac.level(ring, 0)
    assert lv.a == ring.monomial(x=1, q=1) and lv.b == ring.monomial(x=1)
    lv = contfrac.level(ring, 3)
    assert lv.a == ring.monomial(x=1, q=2) and lv.b == ring.monomial(x=1, q=2)
    with pytest.raises(ValueError):
        contfrac.level(ring, -1)


def test_convergents_stabilise():
    ring = f_ring(6)
    deep = contfrac.convergent(12, 6, ring)
    for n in range(6, 12):
        assert contfrac.convergent(n, 6, ring) == deep
    # a shallower convergent still agrees below x^(n+1)
    shallow = contfrac.convergent(3, 6, ring)
    for k in range(4):
        assert shallow.coeff_of("x", k) == deep.coeff_of("x", k)


def test_a0_minus_one_is_the_length_bck_series():
    ring = f_ring(8)
    a0, b0 = contfrac.a0_b0(8, ring)
    assert a0 - 1 == brute_force_series(ring, {"q": "bck"}, 8)
    assert a0 - 1 == solvers.matrix_solve_at_u1(8)["F"].series
    assert b0.constant_term() == 1


def test_first_row_of_n4_is_length_four_distribution(s0_pair):
    N4 = s0_pair[1].coeff_of("x", 4)
    q = f_ring(5).var("q")
    assert by_name(N4[0, 0] + N4[0, 1]) == by_name(
        q ** 6 + 2 * q ** 5 + 4 * q ** 4 + 5 * q ** 3 + 2 * q ** 2)


def test_automaton_recurrences():
    report = contfrac.recurrence_check(8)
    assert len(report) == 2 + 2 * 8
    assert all(report), [str(r) for r in report if not r]
