"""Families of flats and hyperplanes with a certified intersection pattern.

A boost along the first hyperbolic block and a rational rotation mixing the
first two positive and first two negative directions generate, for suitable
parameters, a family whose flat-vs-hyperplane intersection matrix is lower
triangular with points on the diagonal. The inequality controlling emptiness
is evaluated as an exact rational comparison: angles never appear, only
Pythagorean pairs (c, s) and the exact tangent s/c.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import SearchExhausted
from .grassmann import (
    Flat,
    Hyperplane,
    IntersectionVerdict,
    flat_new,
    hyperplane_new,
    intersect_flat_hyperplane,
    translate,
)
from .isometries import Isometry, isometry_from_matrix
from .lattices import QuadLattice, standard_lattice
from .linalg import frac

# Deterministic scan sequence for the rotation parameter; each t encodes the
# exact rotation pair ((1-t^2)/(1+t^2), -2t/(1+t^2)).
TANGENT_SCAN = tuple(
    Fraction(1, d) for d in (10, 16, 20, 32, 50, 64, 100, 128, 256, 512, 1024)
)
MAX_BOOST_POWER = 64


@dataclass(frozen=True)
class BoostParams:
    """Coefficients (a, b) of a hyperbolic boost: a^2 - b^2 = 1, a > b >= 0.

    b = 0 (the identity, a = 1) is allowed so that the zeroth power is
    representable; a family generator must have b > 0.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", frac(self.a))
        object.__setattr__(self, "b", frac(self.b))
        if self.a * self.a - self.b * self.b != 1:
            raise ValueError(f"boost needs a^2 - b^2 = 1, got ({self.a}, {self.b})")
        if not self.a > self.b >= 0:
            raise ValueError(f"boost needs a > b >= 0, got ({self.a}, {self.b})")


def boost_power(base: BoostParams, m: int) -> BoostParams:
    """Coefficients of the m-th power of a boost, by the exact closed form
    a_m = ((a+b)^m + (a-b)^m)/2, b_m = ((a+b)^m - (a-b)^m)/2."""
    if m < 0:
        raise ValueError("boost power wants a nonnegative exponent")
    grow = (base.a + base.b) ** m
    shrink = (base.a - base.b) ** m
    out = BoostParams((grow + shrink) / 2, (grow - shrink) / 2)
    assert out.a * out.a - out.b * out.b == 1
    return out


@dataclass(frozen=True)
class RotationPair:
    """An exact point (c, s) on the unit circle; the family generator uses
    s < 0 (small clockwise angle), but powers may land anywhere."""

    c: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", frac(self.c))
        object.__setattr__(self, "s", frac(self.s))
        if self.c * self.c + self.s * self.s != 1:
            raise ValueError(f"rotation needs c^2 + s^2 = 1, got ({self.c}, {self.s})")


def rotation_from_tangent(t) -> RotationPair:
    """Rational rotation with tan(angle/2) = -t, i.e. ((1-t^2)/(1+t^2), -2t/(1+t^2))."""
    t = frac(t)
    den = 1 + t * t
    return RotationPair((1 - t * t) / den, (-2 * t) / den)


def rotation_power(r: RotationPair, k: int) -> RotationPair:
    if k < 0:
        raise ValueError("rotation power wants a nonnegative exponent")
    c, s = Fraction(1), Fraction(0)
    for _ in range(k):
        c, s = c * r.c - s * r.s, s * r.c + c * r.s
    out = RotationPair(c, s)
    return out


@dataclass(frozen=True)
class ArrangementSpec:
    """Parameters of one boost/rotation family over diag(+1 x p, -1 x q)."""

    p: int
    q: int
    boost: BoostParams
    m: int
    rotation: RotationPair
    n: int

    def __post_init__(self):
        if not (2 <= self.p <= self.q):
            raise ValueError("the rotation needs p >= 2 and q >= p")
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be nonnegative")
        if self.boost.b == 0:
            raise ValueError("the family generator needs a nontrivial boost (b > 0)")
        if not self.rotation.s < 0:
            raise ValueError("the family generator needs s < 0")

    def lattice(self) -> QuadLattice:
        return standard_lattice("bpq", self.p, self.q)


def standard_flat(p: int, q: int, l: QuadLattice | None = None) -> Flat:
    """The flat of the coordinate splitting: blocks <e_i, f_i>, rest <f_j>_{j>p}."""
    l = l if l is not None else standard_lattice("bpq", p, q)
    n = p + q

    def unit(i):
        return [1 if j == i else 0 for j in range(n)]

    blocks = [[unit(i), unit(p + i)] for i in range(p)]
    rest = [unit(p + j) for j in range(p, q)]
    return flat_new(blocks, rest, l)


def rotation_isometry(pair: RotationPair, p: int, q: int, l: QuadLattice | None = None) -> Isometry:
    """The isometry rotating <e_1, e_2> and <f_1, f_2> by the same pair."""
    if p < 2 or q < 2:
        raise ValueError("the rotation mixes two positive and two negative directions")
    l = l if l is not None else standard_lattice("bpq", p, q)
    n = p + q
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for base in (0, p):  # e-block then f-block
        rows[base][base] = pair.c
        rows[base + 1][base] = pair.s
        rows[base][base + 1] = -pair.s
        rows[base + 1][base + 1] = pair.c
    return isometry_from_matrix(rows, l)


def base_hyperplane_normal(spec: ArrangementSpec) -> tuple[Fraction, ...]:
    """The boosted negative vector b_m e_1 + a_m f_1 + f_2 + ... + f_p."""
    bp = boost_power(spec.boost, spec.m)
    coords = [Fraction(0)] * (spec.p + spec.q)
    coords[0] = bp.b
    coords[spec.p] = bp.a
    for j in range(1, spec.p):
        coords[spec.p + j] = Fraction(1)
    return tuple(coords)


def build_family(spec: ArrangementSpec) -> tuple[list[Flat], list[Hyperplane]]:
    """Flats F_k and hyperplanes H_l for 0 <= k, l <= n, as rotated copies of
    the base pair."""
    l = spec.lattice()
    base_flat = standard_flat(spec.p, spec.q, l)
    base_hyper = hyperplane_new(base_hyperplane_normal(spec), l)
    flats, hypers = [], []
    for k in range(spec.n + 1):
        rk = rotation_isometry(rotation_power(spec.rotation, k), spec.p, spec.q, l)
        flats.append(translate(rk, base_flat))
        hypers.append(translate(rk, base_hyper))
    return flats, hypers


@dataclass(frozen=True)
class InequalityDetail:
    holds: bool
    pole: bool  # the k-th power lands on a tangent pole (c_k = 0)
    tangent: Fraction | None
    lower: Fraction
    upper: Fraction


def inequality_detail(spec: ArrangementSpec, k: int) -> InequalityDetail:
    """Exact evaluation of the emptiness inequality for the k-th rotated flat:
    -(a_m + b_m) <= tan(k*angle) <= -(a_m - b_m)."""
    if k < 1:
        raise ValueError("the inequality is stated for k >= 1")
    bp = boost_power(spec.boost, spec.m)
    lower, upper = -(bp.a + bp.b), -(bp.a - bp.b)
    rk = rotation_power(spec.rotation, k)
    if rk.c == 0:
        return InequalityDetail(False, True, None, lower, upper)
    tangent = rk.s / rk.c
    return InequalityDetail(lower <= tangent <= upper, False, tangent, lower, upper)


def inequality_predicate(spec: ArrangementSpec, k: int) -> bool:
    return inequality_detail(spec, k).holds


@dataclass(frozen=True)
class IntersectionMatrix:
    """Verdict table: rows indexed by hyperplanes, columns by flats."""

    size: int
    verdicts: tuple[tuple[IntersectionVerdict, ...], ...]
    lower_triangular: bool  # Point diagonal and Empty strict upper triangle
    shift_consistent: bool  # verdict(H_l, F_k) matches verdict(H_0, F_{k-l}) for k >= l

    def tags(self) -> list[list[str]]:
        return [[v.tag for v in row] for row in self.verdicts]

    def to_csv(self) -> str:
        return "\n".join(",".join(v.tag[0] for v in row) for row in self.verdicts) + "\n"

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "entries": [[v.to_dict() for v in row] for row in self.verdicts],
            "lower_triangular": self.lower_triangular,
            "shift_consistent": self.shift_consistent,
        }


def intersection_matrix(spec: ArrangementSpec, max_workers: int = 1) -> IntersectionMatrix:
    """Fill the whole verdict table directly, then record whether the
    lower-triangular pattern holds and cross-check the rotation shift
    identity (every entry is still computed, never inferred)."""
    flats, hypers = build_family(spec)
    size = spec.n + 1
    cells = [(row, col) for row in range(size) for col in range(size)]

    def verdict(cell):
        row, col = cell
        return intersect_flat_hyperplane(flats[col], hypers[row])

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(verdict, cells))
    else:
        results = [verdict(c) for c in cells]
    grid = tuple(
        tuple(results[row * size + col] for col in range(size)) for row in range(size)
    )
    lower = all(grid[i][i].tag == "Point" for i in range(size)) and all(
        grid[row][col].tag == "Empty"
        for row in range(size)
        for col in range(row + 1, size)
    )
    shift_ok = all(
        grid[row][col].tag == grid[0][col - row].tag
        for row in range(size)
        for col in range(row, size)
    )
    return IntersectionMatrix(size, grid, lower, shift_ok)


def _negative_tangents(rotation: RotationPair, limit: int) -> list[Fraction]:
    """tan(k*angle) for k = 1, 2, ... while the tangent stays negative,
    stopping at the first pole or sign change (where the inequality is
    unsatisfiable for every boost)."""
    out: list[Fraction] = []
    c, s = Fraction(1), Fraction(0)
    for _ in range(limit):
        c, s = c * rotation.c - s * rotation.s, s * rotation.c + c * rotation.s
        if c == 0 or s / c >= 0:
            break
        out.append(s / c)
    return out


def search_parameters(
    p: int, q: int, n: int, boost: BoostParams
) -> tuple[int, Fraction]:
    """Smallest boost power m and first scan tangent t whose family satisfies
    the emptiness inequality for every k = 1..n. Deterministic; raises
    SearchExhausted when the bounded scan (m <= 64, fixed tangent list)
    contains no witness."""
    if n < 1:
        raise ValueError("family size n must be at least 1")
    tangent_cache = {t: _negative_tangents(rotation_from_tangent(t), n) for t in TANGENT_SCAN}
    for m in range(1, MAX_BOOST_POWER + 1):
        bp = boost_power(boost, m)
        lower, upper = -(bp.a + bp.b), -(bp.a - bp.b)
        for t in TANGENT_SCAN:
            tangents = tangent_cache[t]
            if len(tangents) < n:
                continue  # some k <= n already hits a pole or a nonnegative tangent
            if all(lower <= tan <= upper for tan in tangents[:n]):
                return m, t
    raise SearchExhausted(
        f"no (m <= {MAX_BOOST_POWER}, t) in the scan grid works for n = {n}"
    )


def arrangement_spec(
    p: int, q: int, n: int, boost: BoostParams, m: int, t
) -> ArrangementSpec:
    return ArrangementSpec(p, q, boost, m, rotation_from_tangent(t), n)


def arrangement_spec_to_dict(spec: ArrangementSpec) -> dict:
    return {
        "p": spec.p,
        "q": spec.q,
        "n": spec.n,
        "m": spec.m,
        "boost": [str(spec.boost.a), str(spec.boost.b)],
        "rotation": [str(spec.rotation.c), str(spec.rotation.s)],
    }


def arrangement_spec_from_dict(d: dict) -> ArrangementSpec:
    """Accepts either an explicit rotation pair or a tangent parameter t."""
    boost = BoostParams(frac(d["boost"][0]), frac(d["boost"][1]))
    if "rotation" in d:
        rotation = RotationPair(frac(d["rotation"][0]), frac(d["rotation"][1]))
    else:
        rotation = rotation_from_tangent(frac(d["t"]))
    return ArrangementSpec(int(d["p"]), int(d["q"]), boost, int(d["m"]), rotation, int(d["n"]))


DEFAULT_BOOST = BoostParams(Fraction(5, 4), Fraction(3, 4))
