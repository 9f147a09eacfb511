"""
Black cells of a Catalan polyomino
==================================

Columns are bottom-aligned, heights are one more than the letters of a
Catalan word, and the cells are coloured like a chessboard with the
south-west cell black.
"""

from catpoly import CatalanWord, black_capacity, distribution, vertical_capacities
from catpoly.words import dyck_black_cells, dyck_path

###############################################################################
# One polyomino of length 13

p = CatalanWord.parse("0012012310110").polyomino()
print("heights:", p)
print("bck:", black_capacity(p))
ver, white = vertical_capacities(p)
print("ver:", ver, "white:", white)

# draw it, '#' for black and '.' for white
for row in range(max(p.heights), 0, -1):
    line = ""
    for col, h in enumerate(p.heights, start=1):
        line += " " if h < row else ("#" if (col + row) % 2 == 0 else ".")
    print(line)

###############################################################################
# The same count read off the Dyck path: diamonds under the path whose centre
# (a, b) has a - b = 1 mod 4

print("dyck path:", dyck_path(p))
print("diamonds:", dyck_black_cells(p))

###############################################################################
# All 14 polyominoes of length 4, grouped by black cell capacity

table = distribution(4, ["bck"])
for k, count in table.marginal(4).items():
    print(f"bck = {k}: {count}")
