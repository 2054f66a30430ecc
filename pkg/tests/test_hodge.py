"""Twisted structure-sheaf Euler characteristics, Euler-contraction kernels
for two-forms, Bott-formula agreement, and complete-intersection Hodge
diamonds."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from certkit import hodge
from certkit.exactcore import Polynomial, poly_from_string_exps
from certkit.hodge import (
    CIData,
    bott_h0,
    chi_omega1_ci,
    chi_omega1_ci_koszul,
    chi_pn,
    ci_chi_twist,
    ci_hodge_diamond,
    h0_omega_p,
    omega2_p3_certificate,
    omega2_vanishing_on_curve,
)


# ---------------------------------------------------------------------------
# chi on projective space
# ---------------------------------------------------------------------------


def test_chi_pn_samples():
    assert chi_pn(3, 3) == 20
    assert chi_pn(-1, 3) == 0
    assert chi_pn(-4, 3) == -1
    assert chi_pn(0, 5) == 1


def test_chi_pn_rejects_negative_dimension():
    with pytest.raises(ValueError):
        chi_pn(0, -1)


@given(st.integers(-12, 12), st.integers(1, 5))
def test_chi_pn_hyperplane_recursion(m, n):
    assert chi_pn(m, n) - chi_pn(m - 1, n) == chi_pn(m, n - 1)


@given(st.integers(0, 12), st.integers(0, 5))
def test_chi_pn_counts_sections_in_effective_range(d, n):
    # for d >= 0 the Euler characteristic is the binomial section count
    from math import comb
    assert chi_pn(d, n) == comb(d + n, n)


# ---------------------------------------------------------------------------
# twisted p-forms and the Bott oracle
# ---------------------------------------------------------------------------


def test_h0_omega_samples():
    assert h0_omega_p(1, 0, 3) == 0
    assert h0_omega_p(1, 2, 3) == 6
    assert h0_omega_p(0, 4, 3) == chi_pn(4, 3)


def test_h0_omega_argument_validation():
    with pytest.raises(ValueError, match="form degree out of range"):
        h0_omega_p(4, 0, 3)
    with pytest.raises(ValueError, match="ambient dimension"):
        h0_omega_p(0, 0, 0)


def test_bott_oracle_agrees_on_full_grid():
    for n in range(1, 5):
        for p in range(n + 1):
            for d in range(-6, 7):
                assert h0_omega_p(p, d, n) == bott_h0(p, d, n)


def test_bott_vanishing_range():
    # twists at or below the form degree carry no sections (p of at least 1)
    for n in range(1, 5):
        for p in range(1, n + 1):
            for d in range(-6, p + 1):
                assert h0_omega_p(p, d, n) == 0


# ---------------------------------------------------------------------------
# two-forms on projective three-space
# ---------------------------------------------------------------------------


def test_omega2_certificate():
    cert = omega2_p3_certificate()
    assert cert.source_dim == 24
    assert cert.target_dim == 40
    assert cert.rank == 20
    assert cert.kernel_dim == 4
    assert cert.basis_independent
    assert cert.basis_in_kernel
    assert cert.blockwise_count == 4
    assert cert.kernel_dim == cert.source_dim - cert.rank


def _curve(*term_dicts):
    return [poly_from_string_exps(hodge.CURVE_VARS,
                                  {k: Fraction(v) for k, v in d.items()})
            if d else Polynomial.zero(hodge.CURVE_VARS)
            for d in term_dicts]


def test_omega2_vanishing_on_quartic_curve():
    quartic = _curve({"s^4": 1}, {"s^3*t": 1}, {"s*t^3": 1}, {"t^4": 1})
    assert omega2_vanishing_on_curve(quartic) == 0


def test_omega2_vanishing_on_line():
    line = _curve({"s": 1}, {"t": 1}, {}, {})
    assert omega2_vanishing_on_curve(line) == 0


def test_omega2_vanishing_argument_validation():
    with pytest.raises(ValueError, match="expected four binary forms"):
        omega2_vanishing_on_curve(_curve({"s": 1}, {"t": 1}, {}))
    with pytest.raises(ValueError, match="unequal degrees"):
        omega2_vanishing_on_curve(_curve({"s": 1}, {"t^2": 1}, {}, {}))
    with pytest.raises(ValueError, match="zero parametrization"):
        omega2_vanishing_on_curve(_curve({}, {}, {}, {}))
    with pytest.raises(ValueError, match="constant parametrization"):
        omega2_vanishing_on_curve(_curve({"1": 1}, {"1": 2}, {}, {}))
    with pytest.raises(ValueError, match="inhomogeneous"):
        omega2_vanishing_on_curve(_curve({"s^2": 1, "s": 1},
                                         {"t^2": 1}, {}, {}))


# ---------------------------------------------------------------------------
# complete intersections
# ---------------------------------------------------------------------------


QUADRIC = CIData(4, (2,))
CUBIC = CIData(4, (3,))
QUARTIC = CIData(4, (4,))
QUINTIC = CIData(4, (5,))
CI23 = CIData(5, (2, 3))
CI222 = CIData(6, (2, 2, 2))

FANO_CIS = (QUADRIC, CUBIC, QUARTIC, CI23, CI222)


def test_cidata_validation():
    assert CI23.dim == 3
    with pytest.raises(ValueError, match="ambient dimension"):
        CIData(0, (2,))
    with pytest.raises(ValueError, match="positive integers"):
        CIData(4, (0,))
    with pytest.raises(ValueError, match="too many hypersurfaces"):
        CIData(3, (2, 2, 2))


def test_ci_chi_twist_structure_sheaf():
    for ci in FANO_CIS:
        assert ci_chi_twist(ci, 0) == 1
    assert ci_chi_twist(QUINTIC, 0) == 0


def test_ci_chi_twist_serre_pairing():
    # chi(O(m)) = -chi(O(k - m)) with k the canonical twist, on threefolds
    for ci in FANO_CIS + (QUINTIC,):
        k = sum(ci.degrees) - ci.ambient_dim - 1
        for m in range(-4, 5):
            assert ci_chi_twist(ci, m) == -ci_chi_twist(ci, k - m)


def test_chi_omega1_routes_agree():
    for ci in FANO_CIS + (QUINTIC,):
        assert chi_omega1_ci(ci) == chi_omega1_ci_koszul(ci)


DIAMOND_PAIRS = {
    "quadric": (QUADRIC, 1, 0),
    "cubic": (CUBIC, 1, 5),
    "quartic": (QUARTIC, 1, 30),
    "ci23": (CI23, 1, 20),
    "ci222": (CI222, 1, 14),
}


def test_fano_diamond_middle_numbers():
    for ci, h11, h12 in DIAMOND_PAIRS.values():
        d = ci_hodge_diamond(ci)
        assert d.h(1, 1) == h11
        assert d.h(1, 2) == h12


def test_fano_diamond_structure_row():
    for ci, _, _ in DIAMOND_PAIRS.values():
        d = ci_hodge_diamond(ci)
        assert d.h(0, 0) == 1
        assert d.h(0, 1) == 0 and d.h(0, 2) == 0 and d.h(0, 3) == 0


def test_diamond_serre_duality():
    for ci, _, _ in DIAMOND_PAIRS.values():
        d = ci_hodge_diamond(ci)
        for p in range(4):
            for q in range(4):
                assert d.h(p, q) == d.h(3 - p, 3 - q)


def test_cubic_euler_number():
    assert ci_hodge_diamond(CUBIC).euler_number() == -6


def test_quintic_known_values():
    d = ci_hodge_diamond(QUINTIC)
    assert d.h(0, 3) == 1
    assert d.h(1, 1) == 1
    assert d.h(1, 2) == 101
    assert d.euler_number() == -200


def test_diamond_betti_numbers():
    d = ci_hodge_diamond(CUBIC)
    assert d.betti(0) == 1
    assert d.betti(2) == 1
    assert d.betti(3) == 10
    assert len(d.rows()) == 4


def test_diamond_requires_threefold():
    with pytest.raises(ValueError, match="not a threefold"):
        ci_hodge_diamond(CIData(4, (2, 2)))
