"""Veronese surface computations: ideal, secant stratification, the
projection kernel, singular quadrics, hyperplane splittings, and the
characteristic-two smooth-conic search."""

import itertools
import random
from fractions import Fraction

import pytest

from certkit import veronese
from certkit.exactcore import (
    Polynomial,
    poly_from_string_exps,
    span_dimension,
    spans_contain,
)
from certkit.veronese import (
    F2_FIELD,
    F4_FIELD,
    ConicSubspace,
    QuadraticForm3,
    SecantStratum,
    exhaustive_smooth_conic,
    find_smooth_conic,
    find_smooth_conic_details,
    is_smooth_conic,
    proposed_kernel_generators,
    principal_kernel_generator,
    projection_images,
    projection_kernel_certificate,
    projection_kernel_principal_certificate,
    quadric_pencil_singularity_certificate,
    quotient_hilbert_comparison,
    secant_cubic_matches_determinant,
    secant_stratum,
    smooth_conic_closed_form,
    split_hyperplane_certificate,
    symmetric_matrix_minors,
    veronese_ideal,
    veronese_map,
)

P5 = veronese.P5_VARS


def p5(data):
    return poly_from_string_exps(P5, {k: Fraction(v) for k, v in data.items()})


# ---------------------------------------------------------------------------
# ideal and secant stratification
# ---------------------------------------------------------------------------


def test_ideal_generators_verbatim():
    expected = [
        p5({"x*y": 1, "u^2": -1}),
        p5({"y*z": 1, "s^2": -1}),
        p5({"x*z": 1, "t^2": -1}),
        p5({"x*s": 1, "t*u": -1}),
        p5({"y*t": 1, "s*u": -1}),
        p5({"z*u": 1, "s*t": -1}),
    ]
    assert veronese_ideal() == expected


def test_minors_span_equals_ideal_span():
    gens = veronese_ideal()
    minors = symmetric_matrix_minors()
    assert len(minors) == 9
    assert spans_contain(minors, gens)
    assert spans_contain(gens, minors)
    assert span_dimension(minors) == 6


def test_secant_cubic_is_symmetric_determinant():
    assert secant_cubic_matches_determinant()


def test_secant_strata_samples():
    assert secant_stratum(veronese_map((1, 2, 3))) is SecantStratum.ON_VERONESE \
        or secant_stratum(veronese_map((1, 2, 3))).value == "OnVeronese"
    assert secant_stratum((1, 1, 0, 0, 0, 0)).value == "OnSecantOnly"
    assert secant_stratum((1, 2, 3, 4, 5, 6)).value == "Generic"


def test_veronese_points_satisfy_ideal_seeded():
    rng = random.Random("veronese-points")
    gens = veronese_ideal()
    count = 0
    while count < 200:
        pt = tuple(Fraction(rng.randint(-9, 9)) for _ in range(3))
        if not any(pt):
            continue
        count += 1
        image = veronese_map(pt)
        values = dict(zip(P5, image))
        assert all(g.evaluate(values) == 0 for g in gens)
        assert secant_stratum(image).value == "OnVeronese"


def test_rank_two_sums_land_on_secant():
    rng = random.Random("secant-sums")
    for _ in range(60):
        p = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        q = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        if not any(p) or not any(q):
            continue
        # skip proportional pairs, their sum stays on the surface
        if p[0] * q[1] == p[1] * q[0] and p[1] * q[2] == p[2] * q[1] \
                and p[0] * q[2] == p[2] * q[0]:
            continue
        total = tuple(a + b for a, b in zip(veronese_map(p), veronese_map(q)))
        assert secant_stratum(total).value in ("OnSecantOnly", "OnVeronese")


# ---------------------------------------------------------------------------
# projection kernel
# ---------------------------------------------------------------------------


def test_projection_images_chart_formulas():
    from certkit.exactcore import RationalFunction
    tu = veronese.CHART_VARS
    one = Polynomial.constant(tu, Fraction(1))
    u = Polynomial.variable("u", tu)
    t = Polynomial.variable("t", tu)
    den = one - u * u
    images = projection_images()
    assert images["Z"] == RationalFunction(t * t, den)
    assert images["S"] == RationalFunction(t * u, den)
    assert images["T"] == RationalFunction(t, den)
    assert images["U"] == RationalFunction(u, den)


KERNEL_ROWS = (
    (1, 0, 4, 4, True),
    (2, 2, 9, 10, False),
    (3, 8, 16, 20, False),
    (4, 19, 25, 35, False),
    (5, 36, 36, 56, False),
    (6, 60, 49, 84, False),
)


def test_kernel_certificate_memberships_and_rows():
    cert = projection_kernel_certificate(6)
    assert [ok for _, ok in cert.memberships] == [False, True]
    assert not cert.membership_all
    assert not cert.identity_all
    assert tuple(tuple(r) for r in cert.rows) == KERNEL_ROWS


def test_kernel_certificate_degree_bound_validation():
    with pytest.raises(ValueError):
        projection_kernel_certificate(1)


def test_principal_kernel_certificate_is_clean():
    cert = projection_kernel_principal_certificate(6)
    assert cert.membership_all
    assert cert.identity_all
    g = principal_kernel_generator()
    assert g == poly_from_string_exps(veronese.KERNEL_VARS,
                                      {"S*T": Fraction(1), "U*Z": Fraction(-1)})


QUOTIENT_ROWS = (
    (0, 1, 1, True),
    (1, 4, 4, True),
    (2, 8, 8, True),
    (3, 12, 13, False),
    (4, 16, 19, False),
    (5, 20, 26, False),
    (6, 24, 34, False),
)


def test_quotient_hilbert_rows():
    rows = quotient_hilbert_comparison(6)
    assert tuple(tuple(r) for r in rows) == QUOTIENT_ROWS
    for r in rows:
        assert r.claimed_dim == (r.degree + 2) * (r.degree + 1) // 2 + r.degree


def test_proposed_generators_shape():
    g1, g2 = proposed_kernel_generators()
    assert g1 == poly_from_string_exps(veronese.KERNEL_VARS,
                                       {"S^2": Fraction(1), "T*U": Fraction(-1)})
    assert g2 == principal_kernel_generator()


# ---------------------------------------------------------------------------
# singular quadrics and splittings
# ---------------------------------------------------------------------------


def test_pencil_is_singular_at_projection_point():
    verdict = quadric_pencil_singularity_certificate()
    assert verdict.partials_zero
    assert verdict.value_zero
    assert verdict.singular_for_all


def test_split_default_hyperplane():
    for choice in ("x0x1+x2^2", "x0x1+x2x3"):
        v = split_hyperplane_certificate(choice)
        x2 = Polynomial.variable("x2", veronese.P4_VARS)
        assert v.hyperplane == x2
        assert v.containment_ok
        assert v.all_equal
        assert all(r.equal for r in v.rows)


def test_split_default_components_choice_one():
    v = split_hyperplane_certificate("x0x1+x2^2")
    x0 = Polynomial.variable("x0", veronese.P4_VARS)
    x1 = Polynomial.variable("x1", veronese.P4_VARS)
    x2 = Polynomial.variable("x2", veronese.P4_VARS)
    assert list(v.component_a) == [x0, x2]
    assert list(v.component_b) == [x1, x2]


def test_split_tilted_avoids_marked_plane():
    x0 = Polynomial.variable("x0", veronese.P4_VARS)
    x1 = Polynomial.variable("x1", veronese.P4_VARS)
    x2 = Polynomial.variable("x2", veronese.P4_VARS)
    avoided = [x0, x2]
    for choice in ("x0x1+x2^2", "x0x1+x2x3"):
        v = split_hyperplane_certificate(choice, avoided_divisor=(0, 2))
        assert v.hyperplane == x1 - x2
        assert v.all_equal
        for comp in (v.component_a, v.component_b):
            union_dim = span_dimension(list(comp) + avoided)
            assert union_dim > 2  # component plane differs from the avoided one


def test_split_rejects_unknown_choice():
    with pytest.raises(ValueError, match="unknown quadric choice"):
        split_hyperplane_certificate("x0^2")


# ---------------------------------------------------------------------------
# smooth conics in characteristic two
# ---------------------------------------------------------------------------


def form(bits, field=F2_FIELD):
    zero, one = field[0], field[1]
    return QuadraticForm3(tuple(one if b else zero for b in bits))


def test_smooth_and_singular_conics_f2():
    assert is_smooth_conic(form((0, 0, 1, 0, 0, 1)), F2_FIELD)   # xy + z^2
    assert not is_smooth_conic(form((1, 0, 0, 0, 0, 0)), F2_FIELD)  # x^2
    assert not is_smooth_conic(form((0, 0, 0, 0, 0, 1)), F2_FIELD)  # xy


def test_smooth_and_singular_conics_f4():
    assert is_smooth_conic(form((0, 0, 1, 0, 0, 1), F4_FIELD), F4_FIELD)
    assert not is_smooth_conic(form((1, 0, 0, 0, 0, 0), F4_FIELD), F4_FIELD)
    assert not is_smooth_conic(form((0, 0, 0, 0, 0, 1), F4_FIELD), F4_FIELD)


def test_closed_form_matches_literal_f2_exhaustive():
    zero, one = F2_FIELD
    for bits in itertools.product((0, 1), repeat=6):
        if not any(bits):
            continue
        q = form(bits)
        assert smooth_conic_closed_form(q) == is_smooth_conic(q, F2_FIELD)


def test_closed_form_matches_literal_f4_exhaustive():
    for coeffs in itertools.product(F4_FIELD, repeat=6):
        if not any(coeffs):
            continue
        q = QuadraticForm3(coeffs)
        assert smooth_conic_closed_form(q) == is_smooth_conic(q, F4_FIELD)


def test_conic_subspace_validation():
    with pytest.raises(ValueError, match="empty basis"):
        ConicSubspace([])
    a = form((1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError, match="not linearly independent"):
        ConicSubspace([a, a])


def _f2_subspaces():
    """Reduced-row-echelon bases of all 4-dimensional coefficient subspaces."""
    for pivots in itertools.combinations(range(6), 4):
        nonpivots = [j for j in range(6) if j not in pivots]
        free = [(i, j) for i in range(4) for j in nonpivots if j > pivots[i]]
        for bits in itertools.product((0, 1), repeat=len(free)):
            rows = [[0] * 6 for _ in range(4)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), bit in zip(free, bits):
                rows[i][j] = bit
            yield rows


def _combo_matches(result, subspace):
    acc = subspace.basis[0].scale(result.combo[0])
    for mu, b in zip(result.combo[1:], subspace.basis[1:]):
        acc = acc + b.scale(mu)
    return acc == result.form


EXPECTED_HISTOGRAM = {
    "normalized-member-smooth": 213,
    "yz-member-smooth": 164,
    "diagonal-plus-xy": 146,
    "diagonal-plus-yz": 65,
    "zx-member-smooth": 45,
    "diagonal-plus-zx": 12,
    "case-all-squares": 6,
}


def test_full_f2_sweep_is_constructive():
    histogram = {}
    count = 0
    for rows in _f2_subspaces():
        count += 1
        sub = ConicSubspace([form(r) for r in rows])
        res = find_smooth_conic_details(sub, F2_FIELD)
        histogram[res.path] = histogram.get(res.path, 0) + 1
        assert res.form is not None
        assert is_smooth_conic(res.form, F2_FIELD)
        assert _combo_matches(res, sub)
    assert count == 651
    assert histogram == EXPECTED_HISTOGRAM


def _random_subspace(rng, field, dim=4):
    order = len(field)
    while True:
        rows = [QuadraticForm3(tuple(field[rng.randrange(order)] for _ in range(6)))
                for _ in range(dim)]
        try:
            return ConicSubspace(rows)
        except ValueError:
            continue


@pytest.mark.parametrize("field_name", ["f2", "f4"])
def test_seeded_subspaces_agree_with_oracle(field_name):
    field = F2_FIELD if field_name == "f2" else F4_FIELD
    rng = random.Random(f"conic-{field_name}")
    for _ in range(150):
        sub = _random_subspace(rng, field)
        res = find_smooth_conic_details(sub, field)
        oracle = exhaustive_smooth_conic(sub, field)
        assert (res.form is None) == (oracle is None)
        if res.form is not None:
            assert is_smooth_conic(res.form, field)
            assert _combo_matches(res, sub)
        assert find_smooth_conic(sub, field) == res.form


def test_case_split_regression_span():
    sub = ConicSubspace([
        form((0, 0, 0, 0, 0, 1)),  # xy
        form((0, 0, 0, 1, 0, 0)),  # yz
        form((0, 0, 0, 0, 1, 0)),  # zx
        form((1, 0, 0, 0, 0, 0)),  # x^2
    ])
    res = find_smooth_conic_details(sub, F2_FIELD)
    assert res.path == "diagonal-plus-yz"
    assert res.form == form((1, 0, 0, 1, 0, 0))  # x^2 + yz
    assert is_smooth_conic(res.form, F2_FIELD)
    # the branch as printed would hand back x^2 + xy, which is singular
    assert not is_smooth_conic(form((1, 0, 0, 0, 0, 1)), F2_FIELD)


def test_char_two_guard():
    rational_field = (Fraction(0), Fraction(1))
    sub = ConicSubspace([form((1, 0, 0, 0, 0, 0))])
    with pytest.raises(ValueError):
        find_smooth_conic_details(sub, rational_field)
