"""Isometries of a rational quadratic space: reflections, factorization,
spinor norms and congruence-subgroup membership."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    AmbientMismatch,
    DetMinusOne,
    FormNotPreserved,
    IsotropicVector,
    NonIntegralMatrix,
    NotSquare,
)
from .lattices import QuadLattice, eval_form
from .linalg import Mat, Vec


@dataclass(frozen=True)
class Isometry:
    """A rational matrix g with g^T.gram.g = gram, certified at construction."""

    matrix: Mat
    lattice: QuadLattice
    det: Fraction

    def apply(self, v) -> Vec:
        return linalg.mat_vec(self.matrix, linalg.as_vector(v))

    @property
    def is_identity(self) -> bool:
        return self.matrix == linalg.identity_matrix(self.lattice.rank)

    def to_dict(self) -> dict:
        return {
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "lattice": self.lattice.to_dict(),
            "det": str(self.det),
        }


def isometry_from_matrix(m, l: QuadLattice) -> Isometry:
    """Validate m^T.gram.m = gram exactly and package the result."""
    mat = linalg.as_matrix(m)
    n = l.rank
    if len(mat) != n or any(len(r) != n for r in mat):
        raise NotSquare(f"expected a {n}x{n} matrix")
    g = l.gram_matrix()
    if linalg.mat_mul(linalg.mat_mul(linalg.transpose(mat), g), mat) != g:
        raise FormNotPreserved("matrix does not preserve the bilinear form")
    d = linalg.det(mat)
    # |det| = 1 is automatic for form-preserving matrices; keep the sign
    return Isometry(mat, l, d)


def identity_isometry(l: QuadLattice) -> Isometry:
    return Isometry(linalg.identity_matrix(l.rank), l, Fraction(1))


def compose(g: Isometry, h: Isometry) -> Isometry:
    """g after h. Products of certified isometries need no re-validation."""
    if g.lattice != h.lattice:
        raise AmbientMismatch("isometries over different lattices")
    return Isometry(linalg.mat_mul(g.matrix, h.matrix), g.lattice, g.det * h.det)


def reflection(x, l: QuadLattice) -> Isometry:
    """The reflection along an anisotropic vector: z -> z - 2(z.x)/(x.x) x."""
    v = linalg.as_vector(x)
    if len(v) != l.rank:
        raise AmbientMismatch(f"vector of length {len(v)} on rank {l.rank}")
    q = eval_form(l, v, v)
    if q == 0:
        raise IsotropicVector(f"cannot reflect along isotropic vector {v}")
    pairing = linalg.mat_vec(l.gram_matrix(), v)  # row functional z -> x.z
    scale = Fraction(2) / q
    n = l.rank
    mat = tuple(
        tuple((Fraction(1) if i == j else Fraction(0)) - scale * v[i] * pairing[j] for j in range(n))
        for i in range(n)
    )
    return Isometry(mat, l, Fraction(-1))


def _orthogonal_basis(l: QuadLattice) -> tuple[Vec, ...]:
    """A rational basis of pairwise-orthogonal anisotropic vectors.

    The rows of the congruence transform t (with t.gram.t^T diagonal) give
    one; nondegeneracy guarantees every diagonal entry is nonzero.
    """
    diag, t = linalg.diagonalize_symmetric(l.gram_matrix())
    assert all(d != 0 for d in diag)
    return t


def cartan_dieudonne(g: Isometry) -> list[Vec]:
    """Factor g into reflections.

    Returns vectors x_1..x_k so that reflection(x_1) . ... . reflection(x_k)
    equals g exactly (matrix product in list order), with k <= 2*rank. The
    empty list is returned exactly for the identity.

    Walks an orthogonal basis b_1..b_n: at each step either one reflection
    (along g(b)-b when that vector is anisotropic) or two (along g(b)+b and
    then b, the classical workaround when g(b)-b is isotropic) restores b
    without disturbing the vectors already fixed.
    """
    l = g.lattice
    current = g.matrix
    vectors: list[Vec] = []
    for b in _orthogonal_basis(l):
        u = linalg.mat_vec(current, b)
        if u == b:
            continue
        w = linalg.vec_sub(u, b)
        if eval_form(l, w, w) != 0:
            vectors.append(w)
            current = linalg.mat_mul(reflection(w, l).matrix, current)
        else:
            # q(u+b) = 4 q(b) != 0 when q(u-b) = 0; R^{u+b} sends u to -b
            w2 = linalg.vec_add(u, b)
            vectors.append(w2)
            current = linalg.mat_mul(reflection(w2, l).matrix, current)
            vectors.append(b)
            current = linalg.mat_mul(reflection(b, l).matrix, current)
    assert current == linalg.identity_matrix(l.rank), "factorization failed to terminate"
    assert len(vectors) <= 2 * l.rank
    return vectors


def product_of_reflections(vectors, l: QuadLattice) -> Isometry:
    out = identity_isometry(l)
    for v in vectors:
        out = compose(out, reflection(v, l))
    return out


@dataclass(frozen=True)
class SquareClass:
    """A nonzero rational modulo squares: squarefree representative + real sign."""

    representative: int
    real_sign: int

    def to_dict(self) -> dict:
        return {"class": self.representative, "real_sign": self.real_sign}


def squarefree_part(n: int) -> int:
    """Strip square factors by trial division (inputs are desk scale)."""
    if n == 0:
        raise ValueError("0 has no square class")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                out *= d
        d += 1 if d == 2 else 2
    return sign * out * n


def square_class(r: Fraction) -> SquareClass:
    # num*den differs from num/den by the square den^2
    rep = squarefree_part(r.numerator * r.denominator)
    return SquareClass(rep, 1 if rep > 0 else -1)


def spinor_norm(g: Isometry) -> SquareClass:
    """Product of the self-pairings over a reflection factorization, mod squares.

    Independent of the factorization; the identity (empty product) gets the
    trivial class (+1, +1).
    """
    total = Fraction(1)
    for x in cartan_dieudonne(g):
        total *= eval_form(g.lattice, x, x)
    return square_class(total)


def in_congruence_subgroup(g: Isometry, modulus: int) -> bool:
    """True iff g is integral, det +1, and congruent to the identity mod modulus."""
    if modulus < 1:
        raise ValueError("modulus must be a positive integer")
    for row in g.matrix:
        for x in row:
            if x.denominator != 1:
                raise NonIntegralMatrix("congruence membership needs integer entries")
    if g.det != 1:
        raise DetMinusOne("congruence subgroups sit inside the determinant-one group")
    n = g.lattice.rank
    for i in range(n):
        for j in range(n):
            if (int(g.matrix[i][j]) - (1 if i == j else 0)) % modulus != 0:
                return False
    return True
