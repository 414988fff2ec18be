"""Singularity constants, the cyclotomic obstruction, growth fitting."""

import math
from fractions import Fraction

import pytest

from tandemwalks import (
    DegenerateInput,
    OutOfRange,
    TooShort,
    b_sequence,
    central_charge,
    cyclotomic_root_scan,
    e_sequence,
    growth_fit,
    non_dfinite_check,
    solve_constants,
    t_sequence,
    xi_polynomial,
    zeta_numerator,
)

SQRT5 = math.sqrt(5)


def test_posets_vertices_closed_forms():
    c = solve_constants("posets-vertices")
    assert c.rho == pytest.approx(0.5, abs=1e-12)
    assert c.z0 == pytest.approx((3 - SQRT5) / 2, abs=1e-10)
    assert c.gamma == pytest.approx((11 + 5 * SQRT5) / 2, abs=1e-10)
    assert c.xi == pytest.approx((1 + SQRT5) / 4, abs=1e-10)
    assert c.alpha == pytest.approx(6.0, abs=1e-10)


def test_posets_edges_closed_forms():
    c = solve_constants("posets-edges")
    assert c.rho == pytest.approx(1.0, abs=1e-12)
    z = c.z0
    # the saddle solves this quartic
    assert z**4 + z**3 - 3 * z**2 + 3 * z - 1 == pytest.approx(0, abs=1e-10)
    assert c.gamma == pytest.approx(5 * z**3 + 7 * z**2 - 13 * z + 9, abs=1e-10)
    assert c.xi == pytest.approx(1 - z / 2, abs=1e-10)
    assert c.alpha == pytest.approx(1 + math.pi / math.acos(c.xi), abs=1e-12)


def test_transversal_closed_forms():
    c0 = solve_constants("transversal", 0)
    assert c0.rho == pytest.approx(math.sqrt(2) - 1, abs=1e-10)
    assert c0.z0 == pytest.approx(1 / 3, abs=1e-10)
    assert c0.gamma == pytest.approx(13.5, abs=1e-10)
    assert c0.xi == pytest.approx(7 / 8, abs=1e-10)
    c1 = solve_constants("transversal", 1)
    assert c1.rho == pytest.approx((math.sqrt(3) - 1) / 2, abs=1e-10)
    assert c1.z0 == pytest.approx((math.sqrt(13) - 3) / 2, abs=1e-10)
    assert c1.gamma == pytest.approx((47 + 13 * math.sqrt(13)) / 6, abs=1e-10)
    assert c1.xi == pytest.approx((29 + math.sqrt(13)) / 36, abs=1e-10)


def test_transversal_v_grid():
    """The v-dependent formulas hold across a spread of weights."""
    for v in (0, Fraction(1, 2), 1, 2, 10):
        c = solve_constants("transversal", v)
        vf = float(v)
        assert c.rho == pytest.approx(
            (math.sqrt(2 + vf) - 1) / (1 + vf), abs=1e-10
        )
        if vf > 0:
            assert c.z0 == pytest.approx(
                (-3 + math.sqrt(9 + 4 * vf)) / (2 * vf), abs=1e-10
            )
        r = 4 * vf * vf + 14 * vf + 11
        assert c.xi == pytest.approx(
            (r + math.sqrt(9 + 4 * vf)) / (4 * (2 + vf) ** 2), abs=1e-10
        )
        assert c.gamma == pytest.approx(
            (2 * vf * vf + 18 * vf + 27 + (9 + 4 * vf) ** 1.5) / (2 * (2 + vf)),
            abs=1e-8,
        )
        assert 0 < c.xi < 1
        assert c.alpha == pytest.approx(1 + math.pi / math.acos(c.xi), abs=1e-12)


def test_xi_and_alpha_increase_with_v():
    xs = [solve_constants("transversal", Fraction(k, 4)) for k in range(9)]
    for a, b in zip(xs, xs[1:]):
        assert a.xi < b.xi
        assert a.alpha < b.alpha
        assert a.gamma < b.gamma


def test_solve_constants_rejects_unknown_model():
    with pytest.raises(ValueError):
        solve_constants("nonsense")


# the xi polynomial and its zeta numerator ------------------------------------


def test_xi_polynomial_coefficients():
    assert xi_polynomial("posets-edges") == [17, -70, 108, -72, 16]
    assert xi_polynomial("posets-vertices") == [-1, -2, 4]
    assert xi_polynomial("transversal", 0) == [-7, 8]
    assert xi_polynomial("transversal", 1) == [23, -58, 36]


def test_xi_is_a_root_of_its_polynomial():
    for model, v in (
        ("posets-edges", 0),
        ("posets-vertices", 0),
        ("transversal", 0),
        ("transversal", 1),
        ("transversal", Fraction(3, 2)),
    ):
        coeffs = xi_polynomial(model, v)
        xi = solve_constants(model, v).xi
        val = sum(float(c) * xi**k for k, c in enumerate(coeffs))
        assert val == pytest.approx(0, abs=1e-8)


def test_zeta_numerators():
    assert zeta_numerator([-1, -2, 4]) == [1, -1, 1, -1, 1]
    assert zeta_numerator([-7, 8]) == [4, -7, 4]
    assert zeta_numerator([-1, 2]) == [1, -1, 1]
    n_e = zeta_numerator([17, -70, 108, -72, 16])
    assert n_e == [1, -9, 31, -62, 77, -62, 31, -9, 1]
    assert n_e == n_e[::-1]
    assert math.gcd(*[abs(c) for c in n_e]) == 1


def test_cyclotomic_scan():
    # the degree-8 numerator of the edges model has no cyclotomic factor
    scan = cyclotomic_root_scan([1, -9, 31, -62, 77, -62, 31, -9, 1])
    assert scan["has_cyclotomic_factor"] is False
    assert scan["witness_order"] is None
    # the tenth cyclotomic polynomial itself
    scan = cyclotomic_root_scan([1, -1, 1, -1, 1])
    assert scan["has_cyclotomic_factor"] is True
    assert scan["witness_order"] == 10
    # control: 2s - 1 gives xi = 1/2, a rational exponent, and a factor
    scan = cyclotomic_root_scan(zeta_numerator([-1, 2]))
    assert scan["has_cyclotomic_factor"] is True
    assert scan["witness_order"] == 6
    with pytest.raises(DegenerateInput):
        cyclotomic_root_scan([5])


def test_non_dfinite_check():
    e = non_dfinite_check("posets-edges")
    assert e["certified_non_dfinite"] is True
    assert e["degree"] == 8
    b = non_dfinite_check("posets-vertices")
    assert b["certified_non_dfinite"] is False
    assert b["witness_order"] == 10
    assert b["alpha_is_rational"] is True
    for v in (0, 1):
        t = non_dfinite_check("transversal", v)
        assert t["certified_non_dfinite"] is True
    assert non_dfinite_check("transversal", 0)["zeta_numerator"] == [4, -7, 4]


# the central charge ----------------------------------------------------------


def test_central_charge_values():
    assert central_charge(6.0) == pytest.approx(-18.2, abs=1e-9)
    assert central_charge(2.0) == pytest.approx(1.0, abs=1e-9)


def test_central_charge_defining_equation():
    for alpha in (2.5, 3.0, 5.14, 6.0, 7.22, 9.0):
        c = central_charge(alpha)
        lhs = 12 * (2 - alpha)
        rhs = c - 1 - math.sqrt((1 - c) * (25 - c))
        assert lhs == pytest.approx(rhs, abs=1e-8)


def test_central_charge_decreases():
    cs = [central_charge(a) for a in (2.5, 3.5, 5.0, 6.5, 8.0)]
    assert all(x > y for x, y in zip(cs, cs[1:]))


def test_central_charge_out_of_range():
    with pytest.raises(OutOfRange):
        central_charge(1.5)


# growth fitting ---------------------------------------------------------------


def test_growth_fit_geometric():
    gamma, alpha = growth_fit([3.0 * 2.5**n for n in range(1, 40)])
    assert gamma == pytest.approx(2.5, abs=1e-9)
    assert alpha == pytest.approx(0.0, abs=1e-6)


def test_growth_fit_short_input():
    with pytest.raises(TooShort):
        growth_fit([1, 2, 3, 4, 5, 6, 7])
    with pytest.raises(ValueError):
        growth_fit([1, -2, 3, 4, 5, 6, 7, 8])


def test_growth_fit_on_real_sequences():
    g, _ = growth_fit(e_sequence(120))
    assert g == pytest.approx(solve_constants("posets-edges").gamma, rel=5e-3)
    g, _ = growth_fit(b_sequence(120))
    assert g == pytest.approx(solve_constants("posets-vertices").gamma, rel=5e-3)
    g, _ = growth_fit(t_sequence(120, 0))
    assert g == pytest.approx(13.5, rel=5e-3)
