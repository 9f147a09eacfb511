"""
Diagonals turn black cells into whole columns
=============================================

Every north-east diagonal of a Catalan polyomino is single coloured, and the
black ones start in odd columns.  Reading the diagonal lengths right to left
gives another polyomino whose odd (or even) columns hold exactly the black
cells of the first.
"""

from catpoly import Polyomino, black_capacity, catalan_number, diag_bijection, polyominoes
from catpoly import vertical_capacities
from catpoly.words import diagonal_lengths

for text in ("1232121", "12321212"):
    p = Polyomino.parse(text)
    q = diag_bijection(p)
    ver, white = vertical_capacities(q)
    print(p, "diagonals", diagonal_lengths(p), "->", q)
    print("  bck =", black_capacity(p), " ver =", ver, " white =", white)

###############################################################################
# Exhaustive check on every polyomino of length 9

n = 9
images = set()
for p in polyominoes(n):
    q = diag_bijection(p)
    images.add(q)
    assert black_capacity(p) == vertical_capacities(q)[0]
print(f"length {n}: {len(images)} distinct images out of {catalan_number(n)}")
