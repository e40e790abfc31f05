"""
A k-Littlewood-Richardson product through the action on cores.

Every monomial of s^(4)_(3,1) acts on the 5-core of (2,1); the survivors
are read back as 4-bounded partitions.
"""

from nckschur import multiply_kschur, nckschur_rectangle_strip
from nckschur.affine import reduced_word
from nckschur.nilcoxeter import format_word
from nckschur.shapes import act_word_on_core, bounded_to_core, core_to_bounded

k, lam, mu = 4, (3, 1), (2, 1)
core = bounded_to_core(k, mu)
expansion = nckschur_rectangle_strip(k, 3, 2)
print(f"s_{lam} has {len(expansion)} monomials; acting on the core {core}:")
for w, coeff in expansion.sorted_terms():
    word = reduced_word(w)
    image = act_word_on_core(k, word, core)
    if image is not None:
        print(f"  {coeff} * {format_word(word, k)} -> core {image} = bounded {core_to_bounded(k, image)}")

print()
print(f"s_{lam} * s_{mu} =", multiply_kschur(k, lam, mu))
print("general route:    ", multiply_kschur(k, lam, mu, general=True))
