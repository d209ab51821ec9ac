"""The Grassmannian model of the symmetric space of an indefinite form.

Points are positive-definite p-planes. A *flat* is cut out by an orthogonal
splitting into p hyperbolic planes plus a negative-definite rest; a
*hyperplane* is the locus of positive p-planes inside the orthogonal
complement of a fixed negative vector. Everything here is exact: the
flat/hyperplane intersection criterion returns certified verdicts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import (
    LatticeMismatch,
    NonNegativeVector,
    NotOrthogonal,
    NotSpanning,
    WrongInertia,
)
from .isometries import Isometry
from .lattices import QuadLattice, eval_form
from .linalg import Subspace, Vec, intersect, perp, restricted_definiteness, span


@dataclass(frozen=True)
class GrPoint:
    """A positive-definite p-plane, i.e. one point of the Grassmannian model."""

    lattice: QuadLattice
    plane: Subspace


def gr_point(plane: Subspace, l: QuadLattice) -> GrPoint:
    sig = restricted_definiteness(plane, l)
    if sig != (plane.dim, 0, 0):
        raise WrongInertia(f"plane has restricted inertia {sig}, not positive definite")
    return GrPoint(l, plane)


@dataclass(frozen=True)
class Flat:
    """Orthogonal splitting into hyperbolic 2-blocks plus a negative rest."""

    lattice: QuadLattice
    blocks: tuple[Subspace, ...]  # each of restricted inertia (1,1,0)
    rest: Subspace  # negative definite, possibly zero-dimensional

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def to_dict(self) -> dict:
        return {
            "blocks": [b.to_dict() for b in self.blocks],
            "rest": self.rest.to_dict(),
        }


@dataclass(frozen=True)
class Hyperplane:
    """Locus of positive planes orthogonal to a fixed negative vector."""

    lattice: QuadLattice
    normal: Vec  # self-pairing < 0
    line: Subspace  # span of the normal
    complement: Subspace  # its orthogonal complement

    def to_dict(self) -> dict:
        return {
            "normal": [str(x) for x in self.normal],
            "line": self.line.to_dict(),
            "complement": self.complement.to_dict(),
        }


@dataclass(frozen=True)
class IntersectionVerdict:
    """Outcome of intersecting a flat with a hyperplane.

    tag is one of "Point" (with the unique intersection point attached),
    "Empty", or "Degenerate" (with a machine-readable reason).
    """

    tag: str
    point: GrPoint | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.point is not None:
            out["point"] = self.point.plane.to_dict()
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def flat_new(u_bases, n_basis, l: QuadLattice) -> Flat:
    """Validate and build a flat from block bases and a rest basis.

    Each block must restrict to inertia (1,1,0), the rest to a negative
    definite form; all components must be pairwise orthogonal and together
    span the ambient space.
    """
    blocks = tuple(span(rows, ambient=l.rank) for rows in u_bases)
    if not blocks:
        raise ValueError("a flat needs at least one hyperbolic block")
    rest = span(n_basis, ambient=l.rank)
    for i, b in enumerate(blocks):
        sig = restricted_definiteness(b, l)
        if sig != (1, 1, 0):
            raise WrongInertia(f"block {i} has restricted inertia {sig}, expected (1, 1, 0)")
    rest_sig = restricted_definiteness(rest, l)
    if rest_sig != (0, rest.dim, 0):
        raise WrongInertia(f"rest has restricted inertia {rest_sig}, expected negative definite")
    parts = list(blocks) + [rest]
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for x in parts[i].basis:
                for y in parts[j].basis:
                    if eval_form(l, x, y) != 0:
                        raise NotOrthogonal(f"components {i} and {j} are not orthogonal")
    total = span([row for part in parts for row in part.basis], ambient=l.rank)
    if total.dim != l.rank:
        raise NotSpanning(f"components span only {total.dim} of {l.rank} dimensions")
    return Flat(l, blocks, rest)


def hyperplane_new(normal, l: QuadLattice) -> Hyperplane:
    v = linalg.as_vector(normal)
    q = eval_form(l, v, v)
    if q >= 0:
        raise NonNegativeVector(f"hyperplane normal needs negative self-pairing, got {q}")
    line = span([v], ambient=l.rank)
    return Hyperplane(l, v, line, perp(line, l))


def _check_same_lattice(a, b) -> None:
    if a.lattice != b.lattice:
        raise LatticeMismatch("objects live over different lattices")


def general_position(
    flat: Flat,
    hyper: Hyperplane,
    mode: str = "weak",
    *,
    skip_rest_clause_when_empty: bool = False,
) -> bool:
    """Transversality of a (flat, hyperplane) pair.

    weak: every complement-block intersection is a line, and the hyperplane's
    line meets the rest's orthogonal complement trivially. strong: weak, and
    every such line is positive.

    When the rest is zero-dimensional its orthogonal complement is the whole
    space, so the rest clause fails as stated; `skip_rest_clause_when_empty`
    opts out of the clause in exactly that case (and only that case).
    """
    if mode not in ("weak", "strong"):
        raise ValueError(f"mode must be 'weak' or 'strong', got {mode!r}")
    _check_same_lattice(flat, hyper)
    lines = [intersect(hyper.complement, b) for b in flat.blocks]
    if any(line.dim != 1 for line in lines):
        return False
    if not (skip_rest_clause_when_empty and flat.rest.dim == 0):
        rest_perp = perp(flat.rest, flat.lattice)
        if intersect(rest_perp, hyper.line).dim != 0:
            return False
    if mode == "strong":
        for line in lines:
            if restricted_definiteness(line, flat.lattice) != (1, 0, 0):
                return False
    return True


def intersect_flat_hyperplane(
    flat: Flat,
    hyper: Hyperplane,
    *,
    check_rest_clause: bool = False,
) -> IntersectionVerdict:
    """Certified flat-hyperplane intersection verdict.

    Computes the line cut out of each hyperbolic block by the hyperplane's
    complement. All lines positive: the unique intersection point is their
    direct sum. Some line negative or isotropic: the intersection is empty.
    A block meeting the complement in dimension != 1 is degenerate (the
    criterion's hypothesis fails).

    The rest clause of weak general position plays no role in the criterion
    itself; pass check_rest_clause=True to demand it anyway and receive a
    degenerate verdict when it fails.
    """
    _check_same_lattice(flat, hyper)
    lines = []
    for i, block in enumerate(flat.blocks):
        line = intersect(hyper.complement, block)
        if line.dim != 1:
            return IntersectionVerdict("Degenerate", reason=f"dim_not_one({i})")
        lines.append(line)
    if check_rest_clause:
        rest_perp = perp(flat.rest, flat.lattice)
        if intersect(rest_perp, hyper.line).dim != 0:
            return IntersectionVerdict("Degenerate", reason="rest_clause_fails")
    if all(restricted_definiteness(line, flat.lattice) == (1, 0, 0) for line in lines):
        plane = span([row for line in lines for row in line.basis], ambient=flat.lattice.rank)
        return IntersectionVerdict("Point", point=gr_point(plane, flat.lattice))
    return IntersectionVerdict("Empty")


def stabilizer_sign_patterns(flat: Flat, hyper: Hyperplane) -> list[tuple[int, ...]]:
    """Sign patterns s for which (+-1 on each block, +1 on the rest) keeps
    the hyperplane's line invariant.

    Enumerates all 2^p candidates; the all-ones pattern is always present.
    Under strong general position (with the rest clause) the result is
    exactly the all-ones pattern; degenerate normals admit more.
    """
    _check_same_lattice(flat, hyper)
    p = flat.block_count
    columns = [row for b in flat.blocks for row in b.basis] + list(flat.rest.basis)
    change = linalg.transpose(linalg.as_matrix(columns))  # columns = component basis
    coords = linalg.mat_vec(linalg.matrix_inverse(change), hyper.normal)
    sizes = [b.dim for b in flat.blocks] + [flat.rest.dim]
    patterns = []
    for signs in itertools.product((1, -1), repeat=p):
        scale = []
        for s, size in zip(list(signs) + [1], sizes):
            scale.extend([s] * size)
        image = linalg.mat_vec(
            change, tuple(c * s for c, s in zip(coords, scale))
        )
        if hyper.line.contains(image):
            patterns.append(signs)
    return patterns


def translate(g: Isometry, obj):
    """Apply an isometry to a flat, hyperplane, or point.

    Rebuilds through the validating constructors, so every invariant is
    re-certified on the image.
    """
    if isinstance(obj, Flat):
        _check_same_lattice(g, obj)
        return flat_new(
            [[g.apply(row) for row in b.basis] for b in obj.blocks],
            [g.apply(row) for row in obj.rest.basis],
            obj.lattice,
        )
    if isinstance(obj, Hyperplane):
        _check_same_lattice(g, obj)
        return hyperplane_new(g.apply(obj.normal), obj.lattice)
    if isinstance(obj, GrPoint):
        _check_same_lattice(g, obj)
        return gr_point(
            span([g.apply(row) for row in obj.plane.basis], ambient=obj.lattice.rank),
            obj.lattice,
        )
    raise TypeError(f"cannot translate {type(obj).__name__}")
