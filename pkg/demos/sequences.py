"""
Counting by black cells alone
=============================

A polyomino with ``k`` black cells (or ``k`` cells in odd columns) has at
most ``2k`` columns, so each count is finite.
"""

from catpoly import capacity_sequence

print("bck:", capacity_sequence("bck", 8, cap=16))
print("ver:", capacity_sequence("ver", 8, cap=16))

###############################################################################
# Cutting the ver count off at nine columns changes it from k = 5 on, since
# a polyomino with ver = 5 can have ten columns

print("ver, at most 9 columns:", capacity_sequence("ver", 8, max_length=9))

###############################################################################
# The same in OEIS b-file layout

for k, v in enumerate(capacity_sequence("bck", 6), start=1):
    print(k, v)
