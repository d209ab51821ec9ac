"""Exact rational subspaces: canonical bases, intersections, complements.

Everything is computed over Fraction, so subspace equality is literal
equality of the stored echelon bases and every verdict is certified.
"""

from geocycle import intersect, perp, restricted_definiteness, span, standard_lattice

# Spans are canonicalized to reduced row echelon form.
a = span([(1, 1, 0), (0, 1, 1)])
print("RREF basis of the span:", a.basis)

# Scrambling the generators does not change the stored basis.
b = span([(2, 3, 1), (1, 1, 0)])
print("same subspace from scrambled generators:", a == b)

# Intersections come from the kernel of a stacked constraint system.
xy = span([(1, 0, 0), (0, 1, 0)])
yz = span([(0, 1, 0), (0, 0, 1)])
print("\nxy-plane intersect yz-plane:", intersect(xy, yz).basis)

# Orthogonal complements use the bilinear form of a lattice, not the dot
# product. Under the hyperbolic form, (1,1) is orthogonal to (1,-1).
h = standard_lattice("hyperbolic")
print("\ncomplement of <(1,1)> under H:", perp(span([(1, 1)]), h).basis)

# The restricted form on a subspace can be definite, split, or degenerate.
b11 = standard_lattice("bpq", 1, 1)
print("\ninertia of <e1> in B(1,1):", restricted_definiteness(span([(1, 0)]), b11))
print("inertia of the isotropic line <(1,1)>:", restricted_definiteness(span([(1, 1)]), b11))
print("inertia of the full plane under H:", restricted_definiteness(span([(1, 0), (0, 1)]), h))
