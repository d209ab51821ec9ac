"""Standard lattices and their exact classification.

Build the named Gram matrices, classify them by exact congruence
diagonalization, and combine blocks into bigger lattices.
"""

from geocycle import classify, combine, eval_form, standard_lattice

# The diagonal form diag(+1, -1, -1): signature (1, 2), odd, unimodular.
b12 = standard_lattice("bpq", 1, 2)
print("B(1,2) gram:", b12.gram)
print("B(1,2) class:", classify(b12))

# The hyperbolic plane [[0,1],[1,0]] is even with determinant -1.
h = standard_lattice("hyperbolic")
print("\nH class:", classify(h))
print("H pairing of the two basis vectors:", eval_form(h, (1, 0), (0, 1)))
print("H self-pairing of their difference:", eval_form(h, (1, -1), (1, -1)))

# E8 is the positive-definite, even, unimodular lattice of rank 8.
e8 = standard_lattice("e8_pos")
print("\nE8 class:", classify(e8))

# Direct sums add signatures; negating a block swaps its signature.
print("\nH + H class:", classify(combine(h, h)))
print("E8 + (-E8) class:", classify(combine(e8, e8, negate_b=True)))

# Three hyperbolic planes plus two negated E8 blocks: rank 22, (3, 19),
# even, unimodular -- the middle homology lattice of a K3 surface.
k3 = standard_lattice("k3")
print("\nK3 lattice rank:", k3.rank)
print("K3 class:", classify(k3))
