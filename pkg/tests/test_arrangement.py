from fractions import Fraction as F

import pytest

from geocycle.arrangement import (
    DEFAULT_BOOST,
    ArrangementSpec,
    BoostParams,
    RotationPair,
    arrangement_spec,
    base_hyperplane_normal,
    boost_power,
    build_family,
    inequality_detail,
    inequality_predicate,
    intersection_matrix,
    rotation_from_tangent,
    rotation_isometry,
    rotation_power,
    search_parameters,
    standard_flat,
)
from geocycle.errors import SearchExhausted
from geocycle.grassmann import hyperplane_new, intersect_flat_hyperplane, translate
from geocycle.lattices import eval_form
from geocycle.linalg import span


def boost_matrix_power_oracle(base: BoostParams, m: int):
    """Independent oracle: m-fold product of [[a, b], [b, a]]."""
    a, b = F(1), F(0)
    for _ in range(m):
        a, b = a * base.a + b * base.b, a * base.b + b * base.a
    return a, b


# -------------------------------------------------------------------- boost


def test_boost_power_zero_is_identity():
    assert boost_power(DEFAULT_BOOST, 0) == BoostParams(F(1), F(0))


def test_boost_power_one():
    assert boost_power(DEFAULT_BOOST, 1) == DEFAULT_BOOST


def test_boost_power_three():
    bp = boost_power(DEFAULT_BOOST, 3)
    assert (bp.a, bp.b) == (F(65, 16), F(63, 16))
    assert bp.a + bp.b == 8
    assert bp.a - bp.b == F(1, 8)
    assert 65 * 65 - 63 * 63 == 256


def test_boost_power_matches_matrix_oracle():
    for base in (DEFAULT_BOOST, BoostParams(F(5, 3), F(4, 3))):
        for m in range(9):
            bp = boost_power(base, m)
            assert (bp.a, bp.b) == boost_matrix_power_oracle(base, m)


def test_boost_power_invariant_up_to_32():
    grow = DEFAULT_BOOST.a + DEFAULT_BOOST.b
    shrink = DEFAULT_BOOST.a - DEFAULT_BOOST.b
    for m in range(33):
        bp = boost_power(DEFAULT_BOOST, m)
        assert bp.a * bp.a - bp.b * bp.b == 1
        assert bp.a + bp.b == grow**m
        assert bp.a - bp.b == shrink**m


def test_boost_validation():
    with pytest.raises(ValueError):
        BoostParams(F(2), F(1))  # 4 - 1 != 1
    with pytest.raises(ValueError):
        BoostParams(F(-5, 4), F(-3, 4))


# ----------------------------------------------------------------- rotation


def test_rotation_from_tangent():
    assert rotation_from_tangent(F(1, 10)) == RotationPair(F(99, 101), F(-20, 101))


def test_rotation_power_zero_and_one():
    r = rotation_from_tangent(F(1, 10))
    assert rotation_power(r, 0) == RotationPair(F(1), F(0))
    assert rotation_power(r, 1) == r


def test_rotation_power_two():
    r = RotationPair(F(99, 101), F(-20, 101))
    assert rotation_power(r, 2) == RotationPair(F(9401, 10201), F(-3960, 10201))


def test_rotation_power_unit_circle_and_additivity():
    r = rotation_from_tangent(F(1, 16))
    for j in range(5):
        for k in range(5):
            a, b, c = rotation_power(r, j), rotation_power(r, k), rotation_power(r, j + k)
            assert (a.c * b.c - a.s * b.s, a.s * b.c + a.c * b.s) == (c.c, c.s)
            assert c.c * c.c + c.s * c.s == 1


def test_rotation_validation():
    with pytest.raises(ValueError):
        RotationPair(F(1, 2), F(1, 2))


def test_spec_validation():
    with pytest.raises(ValueError):
        ArrangementSpec(1, 3, DEFAULT_BOOST, 1, rotation_from_tangent(F(1, 10)), 1)
    with pytest.raises(ValueError):
        # generator rotation must turn clockwise (s < 0)
        ArrangementSpec(2, 3, DEFAULT_BOOST, 1, RotationPair(F(99, 101), F(20, 101)), 1)


# --------------------------------------------------------------- inequality


def test_inequality_first_power_holds():
    spec = arrangement_spec(2, 3, 5, DEFAULT_BOOST, 3, F(1, 10))
    detail = inequality_detail(spec, 1)
    assert detail.holds
    assert detail.tangent == F(-20, 99)
    assert detail.lower == -8 and detail.upper == F(-1, 8)
    # exact cross-check: 20/99 >= 1/8 because 160 >= 99
    assert 20 * 8 >= 99


def test_inequality_fails_past_quarter_turn():
    spec = arrangement_spec(2, 3, 5, DEFAULT_BOOST, 3, F(1, 10))
    detail = inequality_detail(spec, 8)
    assert not detail.holds
    assert detail.tangent is not None and detail.tangent > 0


def test_inequality_fails_at_zero_rotation_tangent():
    # a boost interval never contains 0, so a zero tangent always fails
    spec = arrangement_spec(2, 3, 5, DEFAULT_BOOST, 3, F(1, 10))
    assert all(inequality_detail(spec, k).upper < 0 for k in (1, 2, 3))


def test_inequality_pole_is_false_with_flag():
    spec = ArrangementSpec(2, 3, DEFAULT_BOOST, 3, RotationPair(F(0), F(-1)), 1)
    detail = inequality_detail(spec, 1)
    assert not detail.holds and detail.pole and detail.tangent is None


# ------------------------------------------------------------------- family


def test_family_base_normal_m3():
    spec = arrangement_spec(2, 3, 0, DEFAULT_BOOST, 3, F(1, 10))
    lam = base_hyperplane_normal(spec)
    assert lam == (F(63, 16), F(0), F(65, 16), F(1), F(0))
    assert eval_form(spec.lattice(), lam, lam) == -2


def test_family_hyperplanes_are_rotated_copies():
    spec = arrangement_spec(2, 3, 3, DEFAULT_BOOST, 3, F(1, 10))
    flats, hypers = build_family(spec)
    l = spec.lattice()
    base = hyperplane_new(base_hyperplane_normal(spec), l)
    for k in range(4):
        rk = rotation_isometry(rotation_power(spec.rotation, k), 2, 3, l)
        assert hypers[k] == translate(rk, base)
        assert flats[k] == translate(rk, standard_flat(2, 3, l))


def test_rotated_block_cut_line_has_the_derived_ratio():
    # the line the complement cuts out of the rotated first block is
    # X * r^k(e_1) + Y * r^k(f_1) with X/Y = a_m/b_m + tan(k angle)/b_m,
    # so its positivity is exactly the tangent inequality failing
    spec = arrangement_spec(2, 3, 5, DEFAULT_BOOST, 3, F(1, 10))
    flats, hypers = build_family(spec)
    bp = boost_power(DEFAULT_BOOST, 3)
    from geocycle.linalg import intersect, vec_add, vec_scale, span

    for k in (1, 2, 3):
        rk = rotation_power(spec.rotation, k)
        tangent = rk.s / rk.c
        ratio = bp.a / bp.b + tangent / bp.b
        line = intersect(hypers[0].complement, flats[k].blocks[0])
        assert line.dim == 1
        rot_e1 = (rk.c, rk.s, F(0), F(0), F(0))
        rot_f1 = (F(0), F(0), rk.c, rk.s, F(0))
        expected = span([vec_add(vec_scale(ratio, rot_e1), rot_f1)], ambient=5)
        assert line == expected


def test_complement_matches_explicit_spanning_set():
    # the boosted normal's orthogonal complement equals the explicit span
    # <e_1^m, e_2, f_1^m - f_2, f_3> in B(2,3)
    spec = arrangement_spec(2, 3, 0, DEFAULT_BOOST, 3, F(1, 10))
    l = spec.lattice()
    h = hyperplane_new(base_hyperplane_normal(spec), l)
    a, b = F(65, 16), F(63, 16)
    explicit = span(
        [
            (a, 0, b, 0, 0),  # boosted e_1
            (0, 1, 0, 0, 0),  # e_2
            (b, 0, a, -1, 0),  # boosted f_1 minus f_2
            (0, 0, 0, 0, 1),  # f_3
        ],
        ambient=5,
    )
    assert h.complement == explicit


# ------------------------------------------------------------------- matrix


@pytest.mark.parametrize("p,q", [(2, 2), (2, 3), (3, 3)])
def test_intersection_matrix_pattern(p, q):
    m, t = search_parameters(p, q, 5, DEFAULT_BOOST)
    matrix = intersection_matrix(arrangement_spec(p, q, 5, DEFAULT_BOOST, m, t))
    assert matrix.lower_triangular
    assert matrix.shift_consistent
    for i in range(6):
        assert matrix.verdicts[i][i].tag == "Point"
        for j in range(i + 1, 6):
            assert matrix.verdicts[i][j].tag == "Empty"


def test_matrix_csv_cells():
    m, t = search_parameters(2, 3, 2, DEFAULT_BOOST)
    matrix = intersection_matrix(arrangement_spec(2, 3, 2, DEFAULT_BOOST, m, t))
    lines = matrix.to_csv().strip().split("\n")
    assert len(lines) == 3
    assert all(cell in {"E", "P", "D"} for line in lines for cell in line.split(","))


def test_matrix_parallel_fill_agrees():
    spec = arrangement_spec(2, 3, 3, DEFAULT_BOOST, 3, F(1, 10))
    assert intersection_matrix(spec, max_workers=4).tags() == intersection_matrix(spec).tags()


def test_first_row_empty_where_inequality_holds():
    spec = arrangement_spec(2, 3, 5, DEFAULT_BOOST, 3, F(1, 10))
    matrix = intersection_matrix(spec)
    for k in range(1, 6):
        if inequality_predicate(spec, k):
            assert matrix.verdicts[0][k].tag == "Empty"


def test_inequality_implies_empty_on_grid():
    for s in (2, 3):
        boost = BoostParams(F(s * s + 1, 2 * s), F(s * s - 1, 2 * s))
        for m in (1, 3):
            spec = ArrangementSpec(2, 3, boost, m, rotation_from_tangent(F(1, 10)), 12)
            flats, hypers = build_family(spec)
            for k in range(1, 13):
                if inequality_predicate(spec, k):
                    assert intersect_flat_hyperplane(flats[k], hypers[0]).tag == "Empty"


# ------------------------------------------------------------------- search


def test_search_parameters_2_3_5():
    assert search_parameters(2, 3, 5, DEFAULT_BOOST) == (3, F(1, 10))


def test_search_parameters_reusable_for_smaller_n():
    assert search_parameters(2, 3, 1, DEFAULT_BOOST) == (3, F(1, 10))


def test_search_exhausted_for_huge_family():
    with pytest.raises(SearchExhausted):
        search_parameters(2, 3, 10**6, DEFAULT_BOOST)


def test_search_rejects_empty_family():
    with pytest.raises(ValueError):
        search_parameters(2, 3, 0, DEFAULT_BOOST)


def test_searched_parameters_satisfy_all_inequalities():
    for n in (1, 3, 5, 8):
        m, t = search_parameters(2, 3, n, DEFAULT_BOOST)
        spec = arrangement_spec(2, 3, n, DEFAULT_BOOST, m, t)
        for k in range(1, n + 1):
            assert inequality_predicate(spec, k)
        # deterministic: repeated searches agree
        assert search_parameters(2, 3, n, DEFAULT_BOOST) == (m, t)
