"""
Walk down the marked strong order for k = 2.

Builds the graph below the Grassmannian elements of length 4, shows the
double edge between s0s1s2s0 and s1s2s0, then applies the down operators
to a couple of basis elements.  Pass a path to also write the DOT file.
"""

import sys

from nckschur import D, D_J, emit_graph, from_word, to_dot, u, u_from_word
from nckschur.strong import marked_down_edges

k = 2
vertices, edges = emit_graph(k, 4)
print(f"{len(vertices)} vertices and {len(edges)} marked edges below length 4")

x = from_word(k, [0, 1, 2, 0])
y = from_word(k, [1, 2, 0])
for e in marked_down_edges(x):
    if e.target == y:
        i, j = e.instance
        print(f"  x = y * t_({i},{j}), label y({j}) = {e.label}")

print()
print("D_1(u0u1u2u0) =", D(u(x), 1))
print("D_2(u0u1u2u0) =", D(u(x), 2))

w = u_from_word(k, [1, 2, 1, 0])
for J in ([3], [2, 1], [1, 2], [1, 1, 1]):
    print(f"D_{J}(u1u2u1u0) =", D_J(w, J))

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(to_dot(vertices, edges))
    print(f"\nwrote {sys.argv[1]}")
