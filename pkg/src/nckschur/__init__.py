"""
Exact computations in the affine symmetric group and the affine nilCoxeter
algebra: down operators on the marked strong order, the bounce-path
calculus for diagrams inside k-rectangles, and non-commutative k-Schur
functions with the k-Littlewood-Richardson products they give.
"""

from .affine import (AffinePermutation, from_word, identity, is_reduced,
                     reduced_word, simple, transposition)
from .diagrams import (check_C1, check_C2, combinatorial_D_1n,
                       combinatorial_D_n, east_south_bounce, hook_factorize,
                       north_west_bounce, west_north_bounce)
from .kschur import (CoeffVector, affine_stanley_coefficient,
                     grassmannian_support, h_in_kschur, multiply_kschur,
                     nckschur, nckschur_general, nckschur_rectangle,
                     nckschur_rectangle_column, nckschur_rectangle_strip,
                     pieri)
from .nilcoxeter import (NilCoxeterElement, cyclically_decreasing, h,
                         h_lambda, inner_product, one, u, u_from_word, zero)
from .shapes import (Diagram, bounded_to_core, core_to_bounded,
                     core_to_grassmannian, grassmannian_to_core,
                     reading_word)
from .strong import D, D_J, emit_graph, marked_down_edges, to_dot

__version__ = "0.1.0"
