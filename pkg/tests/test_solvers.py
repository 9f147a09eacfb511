import json

import pytest
from goldens import first_diff, graded, load_graded

from catpoly import solvers
from catpoly.series import VarSet
from catpoly.solvers import (GFResult, SolverMismatch, brute_force_series, c_to_f,
                             compare, degree_caps, evod_to_f, f_ring)


@pytest.fixture(scope="module")
def evod_x7():
    return solvers.evod_solve_iteration(7, with_u=False)


def test_degree_caps_are_staircase_maxima():
    caps = degree_caps(6, ["bck", "ver", "white"])
    # the staircase 1..6 has bck 1+1+2+2+3+3, ver 1+3+5, white 2+4+6
    assert caps == {"bck": 12, "ver": 9, "white": 12}


def test_matrix_route_at_u1_golden():
    F = solvers.matrix_solve_at_u1(7)["F"].series
    assert first_diff(load_graded("F_x1q.txt"), graded(F)) is None


def test_matrix_route_components_sum_to_F():
    out = solvers.matrix_solve_at_u1(5)
    total = sum((out[k].series for k in ("G00", "G01", "G10", "G11")), out["F"].series.ring.zero())
    assert total == out["F"].series


def test_matrix_route_full_golden():
    F = solvers.matrix_solve_full(5).series
    assert first_diff(load_graded("F_xuq.txt"), graded(F)) is None


def test_matrix_route_full_matches_brute_force():
    F = solvers.matrix_solve_full(6).series
    brute = brute_force_series(F.ring, {"u": "last", "q": "bck"}, 6)
    assert compare("F(x,u,q)", F, brute)


def test_evod_iteration_goldens(evod_x7):
    od = evod_x7["OD1"].series.eval_one("z")
    ev = evod_x7["EV1"].series.eval_one("y")
    assert first_diff(load_graded("OD_xy11.txt"), graded(od)) is None
    assert first_diff(load_graded("EV_x1z1.txt"), graded(ev)) is None
    both = evod_x7["OD1"].series.eval_one("z") + evod_x7["EV1"].series.eval_one("z")
    assert first_diff(load_graded("ODEV_xy11.txt"), graded(both)) is None


def test_evod_full_matches_brute_force():
    res = solvers.evod_solve_iteration(6, with_u=True)
    ring = res["EV"].series.ring
    brute = brute_force_series(ring, {"y": "ver", "z": "white", "u": "last"}, 6)
    assert compare("EV+OD", res["EV"].series + res["OD"].series, brute)
    assert all(e[0] % 2 == 1 for e, _ in res["OD"].series.items())
    assert all(e[0] % 2 == 0 for e, _ in res["EV"].series.items())


def test_closed_form_equals_iteration(evod_x7):
    cf = solvers.evod_closed_form(7, reference=evod_x7)
    assert cf["OD1"].series == evod_x7["OD1"].series
    assert cf["EV1"].series == evod_x7["EV1"].series
    assert cf["parts"].delta.constant_term() == 1


def test_closed_form_detects_a_wrong_reference(evod_x7):
    bad = dict(evod_x7)
    od = evod_x7["OD1"]
    bad["OD1"] = GFResult("OD1", od.method, od.series + od.series.ring.var("x"), od.x_max)
    with pytest.raises(SolverMismatch):
        solvers.evod_closed_form(7, reference=bad)


@pytest.mark.parametrize("k", range(4))
def test_pochhammer_form_of_products(k):
    cap = 2 * k * k + 2 * k + 3
    ring = VarSet.of(x=2 * k + 1, y=cap, z=cap)
    assert solvers._gk(ring, "y", "z", k)
    assert solvers.evod_product_vs_pochhammer(ring, k)


@pytest.mark.parametrize("n", range(4))
def test_funceq_pochhammer_form_of_products(n):
    ring = VarSet.of(x=2 * n + 1, y=2 * n * n + 2 * n + 3, z=2 * n * n + 3, u=4 * n + 3)
    assert solvers.funceq_pochhammer_form(ring, n)
    assert solvers.funceq_product_vs_pochhammer(ring, n)


def test_identity_check_detects_a_wrong_product():
    ring = VarSet.of(x=3, y=8, z=8)
    r = compare("perturbed", solvers._gk(ring, "y", "z", 1),
                solvers._gk(ring, "y", "z", 1) + ring.monomial(x=2, y=2, z=5))
    assert not r


def test_parity_reassembly(evod_x7):
    ring = f_ring(7)
    F = evod_to_f(evod_x7["EV1"].series, evod_x7["OD1"].series, ring)
    assert F == solvers.matrix_solve_at_u1(7)["F"].series


def test_functional_equation_solution_matches_brute_force():
    res = solvers.funceq_solve(6)
    C = res["C"].series
    brute = brute_force_series(C.ring, {"y": "s", "z": "s_bar", "u": "last"}, 6)
    assert compare("C", C, brute)
    assert c_to_f(res["C1"].series, f_ring(6)) == brute_force_series(f_ring(6), {"q": "bck"}, 6)


def test_functional_equation_identities():
    report = solvers.funceq_identity_checks(10)
    assert report and all(report), [str(r) for r in report if not r]


def test_compare_reports_first_difference():
    ring = VarSet.of(x=2, q=2)
    x, q = ring.gens()
    r = compare("demo", x * q, x * q + x * x)
    assert not r
    exps, lhs, rhs = r.first
    assert exps == (2, 0) and (lhs, rhs) == (0, 1)
    assert "demo" in str(r)


def test_gfresult_serialisation_is_deterministic():
    F = solvers.matrix_solve_at_u1(3)["F"]
    assert F.dumps() == solvers.matrix_solve_at_u1(3)["F"].dumps()
    data = json.loads(F.dumps())
    assert data["vars"] == ["x", "q"] and data["x_max"] == 3
    assert F.to_text().splitlines()[0] == "x^1: q"
