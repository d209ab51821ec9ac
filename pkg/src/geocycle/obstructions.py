"""Root-vector enumeration and the orthogonality predicates behind the
geometric obstruction classes."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import AmbientMismatch, NotSpanning, WrongInertia
from .lattices import QuadLattice, eval_form
from .linalg import Mat, Subspace, subspace_sum

# A root vector is an integer coordinate tuple with self-pairing -2.
RootVector = tuple[int, ...]

ROOT_NORM = -2


def _integer_square_forms(l: QuadLattice):
    """Rewrite the form as an integer-weighted sum of squares of integer
    linear forms: W_k * M_k(x)^2 summing to scale * Q(x).

    Derived from exact congruence diagonalization; returns
    (weights, coeff_rows, scale) with everything integral.
    """
    diag, t = linalg.diagonalize_symmetric(l.gram_matrix())
    tinv = linalg.matrix_inverse(t)
    n = l.rank
    # linear form k has rational coefficients column k of t^{-1}
    weights: list[Fraction] = []
    icoeffs: list[list[int]] = []
    for k in range(n):
        col = [tinv[j][k] for j in range(n)]
        mult = math.lcm(*(c.denominator for c in col))
        icoeffs.append([int(c * mult) for c in col])
        weights.append(diag[k] / (mult * mult))
    scale = math.lcm(*(w.denominator for w in weights))
    int_weights = [int(w * scale) for w in weights]
    return int_weights, icoeffs, scale


def _is_lower_unitriangular_support(icoeffs: list[list[int]]) -> bool:
    # form k may only involve coordinates k..n-1, with a nonzero leading one
    n = len(icoeffs)
    return all(
        icoeffs[k][k] != 0 and all(icoeffs[k][j] == 0 for j in range(k))
        for k in range(n)
    )


def _enumerate_definite(weights, icoeffs, target: int, bound: int, n: int) -> list[RootVector]:
    """Depth-first search down a triangular sum of negative squares.

    Coordinates are assigned last-to-first; because every weight is negative
    the partial sum only decreases, so any prefix below the target is pruned
    exactly.
    """
    found: list[RootVector] = []
    x = [0] * n
    tails = [0] * n  # known part of each form from already-assigned coordinates

    def descend(idx: int, running: int) -> None:
        if idx < 0:
            if running == target:
                found.append(tuple(x))
            return
        lead = icoeffs[idx][idx]
        w = weights[idx]
        tail = tails[idx]
        for value in range(-bound, bound + 1):
            m = lead * value + tail
            nxt = running + w * m * m
            if nxt < target:
                continue
            x[idx] = value
            for k in range(idx):
                tails[k] += icoeffs[k][idx] * value
            descend(idx - 1, nxt)
            for k in range(idx):
                tails[k] -= icoeffs[k][idx] * value
        x[idx] = 0

    descend(n - 1, 0)
    return sorted(found)


def _enumerate_box(weights, icoeffs, target: int, bound: int, n: int) -> list[RootVector]:
    """General fallback: scan the coordinate box first-to-last, pruning with
    exact interval bounds on each squared form over the unassigned tail."""
    suffix_abs = [
        [sum(abs(c) for c in row[t:]) for t in range(n + 1)] for row in icoeffs
    ]
    found: list[RootVector] = []
    x = [0] * n
    fixed = [0] * n  # value of each form on the assigned prefix

    def reachable(depth: int) -> tuple[int, int]:
        lo_total = hi_total = 0
        for k in range(n):
            slack = bound * suffix_abs[k][depth]
            lo_m, hi_m = fixed[k] - slack, fixed[k] + slack
            if lo_m <= 0 <= hi_m:
                sq_min, sq_max = 0, max(lo_m * lo_m, hi_m * hi_m)
            else:
                a, b = lo_m * lo_m, hi_m * hi_m
                sq_min, sq_max = min(a, b), max(a, b)
            w = weights[k]
            if w >= 0:
                lo_total += w * sq_min
                hi_total += w * sq_max
            else:
                lo_total += w * sq_max
                hi_total += w * sq_min
        return lo_total, hi_total

    def descend(depth: int) -> None:
        lo, hi = reachable(depth)
        if target < lo or target > hi:
            return
        if depth == n:
            if lo == hi == target:
                found.append(tuple(x))
            return
        for value in range(-bound, bound + 1):
            x[depth] = value
            for k in range(n):
                fixed[k] += icoeffs[k][depth] * value
            descend(depth + 1)
            for k in range(n):
                fixed[k] -= icoeffs[k][depth] * value
        x[depth] = 0

    descend(0)
    return sorted(found)


def enumerate_roots(l: QuadLattice, bound: int) -> list[RootVector]:
    """All integer vectors with coordinates in [-bound, bound] and
    self-pairing -2, in lexicographic order.

    Definite forms take a triangular completed-squares search; indefinite
    forms fall back to a pruned box scan. Both are exact.
    """
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    n = l.rank
    if n == 0:
        return []
    weights, icoeffs, scale = _integer_square_forms(l)
    if all(w > 0 for w in weights):
        return []  # positive definite: self-pairing -2 is unreachable
    target = ROOT_NORM * scale
    if all(w < 0 for w in weights) and _is_lower_unitriangular_support(icoeffs):
        return _enumerate_definite(weights, icoeffs, target, bound, n)
    return _enumerate_box(weights, icoeffs, target, bound, n)


def is_root(l: QuadLattice, coords: Sequence[int]) -> bool:
    return eval_form(l, coords, coords) == ROOT_NORM


def plane_orthogonal_to(u: Subspace, delta, l: QuadLattice) -> bool:
    """Containment test: does the plane sit inside the vector's orthogonal
    complement? True iff every basis vector pairs to zero with it."""
    if u.ambient != l.rank:
        raise AmbientMismatch(f"plane ambient {u.ambient}, lattice rank {l.rank}")
    d = linalg.as_vector(delta)
    return all(eval_form(l, row, d) == 0 for row in u.basis)


def any_root_orthogonal(
    u: Subspace, roots: Sequence[RootVector], l: QuadLattice
) -> Optional[RootVector]:
    """First root (in list order) whose hyperplane contains the plane, else
    None; None means the plane avoids the truncated root-hyperplane union."""
    for root in roots:
        if plane_orthogonal_to(u, root, l):
            return root
    return None


def inner_product(rows) -> Mat:
    """Validate a symmetric positive-definite rational matrix."""
    beta = linalg.as_matrix(rows)
    n = len(beta)
    if any(len(r) != n for r in beta):
        raise ValueError("inner product matrix must be square")
    if beta != linalg.transpose(beta):
        raise ValueError("inner product matrix must be symmetric")
    sig = linalg.inertia(beta)
    if sig != (n, 0, 0):
        raise WrongInertia(f"inner product must be positive definite, got inertia {sig}")
    return beta


def unit_volume_scale(beta: Mat) -> float:
    """Display-only multiplier carrying beta to determinant 1.

    Exact arithmetic cannot take n-th roots, and every predicate here is
    scale-invariant anyway; this float is for presentation.
    """
    d = linalg.det(beta)
    return float(d) ** (-1.0 / len(beta))


def beta_orthogonal(beta: Mat, p_sub: Subspace, l_sub: Subspace) -> bool:
    """Direct orthogonality test of a complementary (hyperplane, line) pair
    under a given inner product."""
    if p_sub.ambient != l_sub.ambient or p_sub.ambient != len(beta):
        raise AmbientMismatch("inner product and subspaces must share one ambient space")
    if l_sub.dim != 1:
        raise NotSpanning(f"the line factor must be one-dimensional, got {l_sub.dim}")
    if p_sub.dim + 1 != p_sub.ambient or subspace_sum(p_sub, l_sub).dim != p_sub.ambient:
        raise NotSpanning("the two factors must be complementary")
    products = linalg.mat_mul(
        linalg.mat_mul(p_sub.basis, beta), linalg.transpose(l_sub.basis)
    )
    return all(all(x == 0 for x in row) for row in products)
