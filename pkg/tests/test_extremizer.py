import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from a3extremal.cases import ExtremalCase, ParityMismatch, classify
from a3extremal.extremizer import (
    DegenerateNormalizer,
    GammaChain,
    NegativityDetected,
    UnsupportedCase,
    coeffs_closed_form,
    coeffs_from_eigvec,
    coeffs_from_gamma,
    coeffs_recurrence,
    extremizer,
    fejer_riesz_factor,
    gamma_from_vector,
    lift_odd_to_even,
)
from a3extremal.oracle import eigenspace_dimension, rayleigh_search
from a3extremal.pencil import bounds
from a3extremal.sine import royster_suffridge_R
from a3extremal.spectra import eigvec_basis

S5 = math.sqrt(5)
TAUS = (-1.0, -0.5, 0.0, 0.5, 1.0)
EX_I = [1, 0, (1 + S5) / 2, 0, (5 + S5) / 10]
EX_II = [1, 0, (1 - S5) / 2, 0, (5 - S5) / 10]
# even parts at tau = 1 obtained by lifting the two N = 5 polynomials above
LIFT_MAX_EVEN = [(3 + S5) / 4, (5 + 3 * S5) / 10, (5 + S5) / 20]
LIFT_MIN_EVEN = [(3 - S5) / 4, (5 - 3 * S5) / 10, (5 - S5) / 20]

CASES = [(c, n) for n in range(3, 31) for c in ExtremalCase if c.admits(n)]


def test_hand_chain_n3():
    z = [math.sqrt(2), 0, math.sqrt(2)]
    assert np.allclose(gamma_from_vector(z), [4, 0, 2])
    assert np.allclose(coeffs_from_gamma([4, 0, 2]), [1, 0, 1])
    assert np.allclose(coeffs_from_eigvec(eigvec_basis(ExtremalCase.AmaxBmax, 3)).coeffs, [1, 0, 1])


def test_worked_examples_n5():
    for route in ("eigvec", "recurrence", "closed", "compact"):
        assert np.allclose(extremizer(5, "max", route=route).coeffs, EX_I, atol=1e-12, rtol=0)
        assert np.allclose(extremizer(5, "min", route=route).coeffs, EX_II, atol=1e-12, rtol=0)


@pytest.mark.parametrize("route", ["eigvec", "recurrence", "closed", "compact"])
def test_n6_family_matches_lifted_examples(route):
    for want, odd, even in (("max", EX_I, LIFT_MAX_EVEN), ("min", EX_II, LIFT_MIN_EVEN)):
        p = extremizer(6, want, 1.0, route)
        assert np.allclose(p.odd_coeffs, [odd[0], odd[2], odd[4]], atol=1e-12, rtol=0)
        assert np.allclose(p.even_coeffs, even, atol=1e-12, rtol=0)
        assert np.allclose(p.even_coeffs_unit, even, atol=1e-12, rtol=0)


def test_royster_suffridge_polynomial():
    for tau in TAUS:
        p = extremizer(4, "max", tau, "eigvec")
        assert np.allclose(p.coeffs, [1, tau, 1, tau / 2], atol=1e-12)


def test_small_recurrences():
    assert np.allclose(coeffs_recurrence(ExtremalCase.AmaxBmax, 3).coeffs, [1, 0, 1])
    assert np.allclose(coeffs_recurrence(ExtremalCase.Amin, 3).coeffs, [1, 0, -1 / 3])
    with pytest.raises(ParityMismatch):
        coeffs_recurrence(ExtremalCase.Amin, 5)


def test_closed_form_examples():
    assert np.allclose(coeffs_closed_form(ExtremalCase.AmaxBmax, 5).coeffs, EX_I, atol=1e-12)
    p6 = coeffs_closed_form(ExtremalCase.CmaxDmax, 6, 0.0)
    assert np.allclose(p6.coeffs, EX_I + [0], atol=1e-12)
    assert p6.degree_drops
    with pytest.raises(UnsupportedCase):
        coeffs_closed_form(ExtremalCase.Amin, 7)
    with pytest.raises(UnsupportedCase):
        coeffs_closed_form(ExtremalCase.Cmin, 4)


def test_n4_min_family():
    for tau in TAUS:
        for route in ("eigvec", "recurrence", "compact"):
            p = extremizer(4, "min", tau, route)
            assert np.allclose(p.coeffs, [1, tau / 3, -1 / 3, -tau / 6], atol=1e-12)


def test_lift_examples():
    p3 = extremizer(3, "min")
    lifted = lift_odd_to_even(p3, 1.0)
    assert lifted.case is ExtremalCase.Cmin
    assert np.allclose(lifted.coeffs, [1, 1 / 3, -1 / 3, -1 / 6], atol=1e-14)
    p5 = extremizer(5, "max")
    assert np.allclose(lift_odd_to_even(p5, 0.0).coeffs, EX_I + [0])
    with pytest.raises(ParityMismatch):
        lift_odd_to_even(extremizer(6, "max"), 1.0)


@pytest.mark.parametrize("case, n", CASES)
def test_three_routes_agree(case, n):
    taus = TAUS if n % 2 == 0 else (0.0,)
    basis = eigvec_basis(case, n)
    b = bounds(n)
    for tau in taus:
        e = coeffs_from_eigvec(basis, tau)
        r = coeffs_recurrence(case, n, tau)
        assert np.abs(e.coeffs - r.coeffs).max() < 1e-10
        if not case.uses_derivative_root:
            assert np.abs(coeffs_closed_form(case, n, tau).coeffs - e.coeffs).max() < 1e-10
        assert e.coeffs[0] == pytest.approx(1.0, abs=1e-14)
        if n % 2:
            assert np.all(e.coeffs[1::2] == 0)
        target = b.a3_max if case.is_max else b.a3_min
        assert abs(e.a3 - target) < 1e-12
        assert abs(e.a3 - (4 * e.y**2 - 1)) < 1e-12


@given(n=st.integers(2, 15).map(lambda m: 2 * m), tau=st.floats(-1, 1), want=st.sampled_from(["max", "min"]))
def test_family_is_affine_in_tau(n, tau, want):
    p = extremizer(n, want, tau, "recurrence")
    base = extremizer(n, want, 0.0, "recurrence")
    assert np.allclose(p.odd_coeffs, base.odd_coeffs, atol=1e-12)
    assert np.allclose(p.even_coeffs, tau * p.even_coeffs_unit, atol=1e-12)
    assert p.coeffs[1] == pytest.approx(2 * tau * p.y**2, abs=1e-12)


@pytest.mark.parametrize("n", range(3, 15))
def test_oracle_optimality(n):
    b = bounds(n)
    for want in ("max", "min"):
        best = rayleigh_search(n, want, restarts=8, seed=n)
        if want == "max":
            assert best.value <= b.a3_max + 1e-7
        else:
            assert best.value >= b.a3_min - 1e-7
        assert extremizer(n, want).a3 == pytest.approx(best.value, abs=1e-8)


@pytest.mark.parametrize("case, n", [(c, n) for c, n in CASES if n <= 24])
def test_nullspace_dimension(case, n):
    lam = 4 * eigvec_basis(case, n).abscissa ** 2 - 1
    assert eigenspace_dimension(n, lam) == (1 if n % 2 else 2)


def test_royster_suffridge_counterexample():
    p = extremizer(4, "max", 0.5)
    R = royster_suffridge_R(p)
    assert np.allclose(R, [0, 0, 4, 2], atol=1e-12)
    roots = np.roots(R[::-1])
    assert np.isclose(roots, -2).any()


def test_degenerate_normalizer():
    with pytest.raises(DegenerateNormalizer):
        coeffs_from_gamma([1, 0, 1])


def test_fejer_riesz_small():
    assert np.allclose(fejer_riesz_factor([1.0]), [1.0])
    assert np.allclose(fejer_riesz_factor([2.0, 1.0]), [1.0, 1.0])
    d = fejer_riesz_factor([4.0, 0.0, 2.0])
    assert d @ d == pytest.approx(4, abs=1e-8) and d[0] * d[2] == pytest.approx(2, abs=1e-8)
    with pytest.raises(NegativityDetected):
        fejer_riesz_factor([1.0, 1.0])


@pytest.mark.parametrize("case, n", CASES)
def test_fejer_riesz_round_trip(case, n):
    z = eigvec_basis(case, n).vectors[0]
    chain = GammaChain(gamma_from_vector(z))
    back = GammaChain.from_delta(fejer_riesz_factor(chain.gamma))
    assert np.abs(back.gamma - chain.gamma).max() < 1e-8 * chain.gamma[0]
    assert np.allclose(back.coeffs(), chain.coeffs(), atol=1e-6)


def test_unknown_route():
    with pytest.raises(ValueError):
        extremizer(5, "max", route="guess")


def test_tau_range_checked():
    with pytest.raises(ValueError):
        coeffs_from_eigvec(eigvec_basis(classify(6, "max"), 6), 1.5)
