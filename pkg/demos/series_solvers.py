"""
Three ways to the length / black cell series
============================================

``F(x, 1, q)`` counts polyominoes by length (x) and black cells (q).  It is
computed here from the four-component matrix system, from the ver / white
system through its closed form, and from the single equation in
``C(x, y, z, u)``, then checked against plain enumeration.
"""

import time

from catpoly import solvers

X = 8
ring = solvers.f_ring(X)

t = time.perf_counter()
matrix = solvers.matrix_solve_at_u1(X)["F"].series
print(f"matrix system      {time.perf_counter() - t:.2f}s")

t = time.perf_counter()
closed = solvers.evod_closed_form(X)
via_parity = solvers.evod_to_f(closed["EV1"].series, closed["OD1"].series, ring)
print(f"closed form        {time.perf_counter() - t:.2f}s")

t = time.perf_counter()
via_c = solvers.c_to_f(solvers.funceq_solve(X)["C1"].series, ring)
print(f"single equation    {time.perf_counter() - t:.2f}s")

brute = solvers.brute_force_series(ring, {"q": "bck"}, X)
print("all equal:", matrix == via_parity == via_c == brute)

for d, text in matrix.graded_text("x"):
    print(f"x^{d}: {text}")

###############################################################################
# Keeping the height of the last column (u) as well

full = solvers.matrix_solve_full(4).series
print(solvers.GFResult("F", "matrix", full, 4).to_text())
