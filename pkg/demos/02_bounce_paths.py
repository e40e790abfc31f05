"""
Bounce paths and the cell-set description of D_n.

The first half replays a few large configurations.  The second half expands
D_2 on u_(2,2,1) for k = 4 both from cell sets and from strong strips, and
prints every contributing set.  Both routes give five terms: the two sets
lying in a single row are admissible because only columns must be distinct.
"""

from nckschur import (D, combinatorial_D_n, east_south_bounce, from_word,
                      hook_factorize, north_west_bounce, u, west_north_bounce)
from nckschur.diagrams import strip_ordering, valid_cell_sets
from nckschur.nilcoxeter import format_word
from nckschur.shapes import Diagram, reading_word

lam = (11, 9, 8, 8, 7, 7, 6, 5)
X = {(2, 2), (2, 6), (4, 2), (4, 6), (6, 1), (6, 4)}
path = east_south_bounce(lam, X, (2, 2))
print("East-South from (2,2) visits", len(path.path), "cells and ends at content", path.terminal)

lam = (12, 10, 9, 8, 8, 8, 7, 6)
X = {(2, 2), (2, 6), (3, 9), (4, 3), (6, 3), (6, 6)}
print("North-West from (6,6) ends at", north_west_bounce(lam, X, (6, 6)).terminal)
print("West-North from (6,6) ends at", west_north_bounce(lam, X, (6, 6)).terminal)

lam_x, gamma = hook_factorize((9, 6, 6, 5, 4, 4, 3, 1), (3, 3), 16)
print("removing the hook of (3,3):", lam_x, "with Gamma =", format_word(gamma, 16))

print()
k, lam = 4, (2, 2, 1)
for X in sorted(valid_cell_sets(lam, 2), key=sorted):
    word = reading_word(Diagram(lam, X), k)
    labels = [label for _, label in strip_ordering(lam, X)]
    print(f"  strike {sorted(X)}: {format_word(word, k)}  labels {labels}")
cells_side = combinatorial_D_n(lam, 2, k)
strips_side = D(u(from_word(k, reading_word(lam, k))), 2)
print("D_2(u_(2,2,1)) =", cells_side)
print("agrees with strong strips:", cells_side == strips_side)
