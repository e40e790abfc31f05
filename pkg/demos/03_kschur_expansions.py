"""
Non-commutative k-Schur functions for R = (3,3), k = 4.

Lists the contribution of each partition inside R to the three closed-form
families, then checks every family against the expansion obtained by
inverting the h / affine Stanley pairing.
"""

from nckschur import nckschur_general, zero
from nckschur.kschur import (column_shape, expansion_by_source,
                             grassmannian_support, strip_shape)

k, c = 4, 3
for title, i, distinct_columns, shape in [
    ("rectangle", 0, True, (3, 3)),
    ("strip, i = 2", 2, True, strip_shape(k, c, 2)),
    ("column, i = 2", 2, False, column_shape(k, c, 2)),
]:
    parts = expansion_by_source(k, c, i, distinct_columns)
    total = sum(parts.values(), start=zero(k))
    print(f"{title}: shape {shape}, {len(total)} monomials")
    for lam, e in parts.items():
        if e:
            print(f"  from {lam or '()'}: {e}")
    general = nckschur_general(k, shape)
    print("  matches the duality expansion:", total == general)
    print("  Grassmannian term:", grassmannian_support(general))
    print()
