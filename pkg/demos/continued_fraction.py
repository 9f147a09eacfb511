"""
A 2x2 matrix continued fraction
===============================

Partial Dyck paths are read by an automaton with two rows of states, one
for each colour of the column being built.  Its transfer matrices nest into
``S_0 = I - U_0 (I - U_1 (...)^-1)^-1``; the first entry of ``S_0^-1 (1, 1)``
minus one is again the length / black cell series.
"""

from catpoly import contfrac, solvers

S0, inv = contfrac.s0_and_inverse(5)
for k in range(1, 6):
    m = S0.coeff_of("x", k)
    print(f"M{k} = [[{m[0, 0].to_text(['x'])}, {m[0, 1].to_text(['x'])}],"
          f" [{m[1, 0].to_text(['x'])}, {m[1, 1].to_text(['x'])}]]")

###############################################################################
# The x^4 row of the inverse gives the 14 polyominoes of length 4

N4 = inv.coeff_of("x", 4)
print("(1 0) N4 (1 1)^T =", (N4[0, 0] + N4[0, 1]).to_text(["x"]))

###############################################################################
# Convergents settle one power of x per level

ring = solvers.f_ring(6)
deep = contfrac.convergent(10, 6, ring)
for depth in range(7):
    c = contfrac.convergent(depth, 6, ring)
    agree = max(k for k in range(7)
                if all(c.coeff_of("x", j) == deep.coeff_of("x", j) for j in range(k + 1)))
    print(f"depth {depth}: exact through x^{agree}")

a0, _ = contfrac.a0_b0(6)
print("A0 - 1 equals the matrix-system series:",
      a0 - 1 == solvers.matrix_solve_at_u1(6)["F"].series)
