import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from a3extremal.cases import ExtremalCase, ParityMismatch, classify, critical_abscissa
from a3extremal.chebyshev import eval_U, eval_U_prime
from a3extremal.pencil import (
    InsufficientSamples,
    OrderTooSmall,
    block_permutation,
    bounds,
    build_pencil,
    classical_bounds,
    d_matrix,
    det_d_formula,
    det_exact,
    det_phi,
    det_phi_formula,
    extremal_abscissas,
    phi_matrix,
    verify_factorization,
)

SQRT5 = math.sqrt(5)


# --- case table -------------------------------------------------------------

def test_classify_examples():
    assert classify(5, "max") is ExtremalCase.AmaxBmax
    assert classify(5, "min") is ExtremalCase.Bmin
    assert classify(6, "min") is ExtremalCase.Dmin
    assert classify(3, "min") is ExtremalCase.Amin
    assert classify(4, "min") is ExtremalCase.Cmin


@given(n=st.integers(3, 200), want=st.sampled_from(["max", "min"]))
def test_exactly_one_case_admits(n, want):
    cases = [c for c in ExtremalCase if c.is_max == (want == "max") and c.admits(n)]
    assert cases == [classify(n, want)]


def test_parity_mismatch():
    with pytest.raises(ParityMismatch):
        critical_abscissa(ExtremalCase.Dmin, 4)
    with pytest.raises(ValueError):
        classify(2, "max")
    with pytest.raises(ValueError):
        classify(5, "both")


# --- matrices ---------------------------------------------------------------

def test_band_rows():
    p = build_pencil(5)
    A, B = p.a_dense(exact=True), p.b_dense(exact=True)
    assert A[0] == [0, 0, Fraction(1, 2), 0, Fraction(-1, 2)]
    assert B[0] == [1, 0, Fraction(-1, 2), 0, 0]
    assert build_pencil(3).a_dense(exact=True)[0] == [0, 0, Fraction(1, 2)]
    with pytest.raises(OrderTooSmall):
        build_pencil(2)


@pytest.mark.parametrize("n", range(3, 41))
def test_symmetry_and_positive_definite_b(n):
    p = build_pencil(n)
    A, B = np.array(p.a_dense()), np.array(p.b_dense())
    assert np.array_equal(A, A.T) and np.array_equal(B, B.T)
    assert np.all(np.diag(A) == 0)
    Bx = p.b_dense(exact=True)
    for k in range(1, n + 1):
        assert det_exact([row[:k] for row in Bx[:k]]) > 0


@given(n=st.integers(3, 12), x=st.fractions(-2, 2, max_denominator=50))
def test_phi_is_a_minus_lambda_b(n, x):
    p = build_pencil(n)
    lam = 4 * x * x - 1
    A, B = p.a_dense(exact=True), p.b_dense(exact=True)
    phi = phi_matrix(n, x)
    assert all(phi[i][j] == A[i][j] - lam * B[i][j] for i in range(n) for j in range(n))


@given(n=st.integers(3, 14), x=st.fractions(-1, 1, max_denominator=40))
def test_block_permutation_gives_d_blocks(n, x):
    perm = block_permutation(n)
    phi = phi_matrix(n, x)
    P = [[phi[i][j] for j in perm] for i in perm]
    h = (n + 1) // 2
    assert [row[:h] for row in P[:h]] == d_matrix(h, x)
    assert [row[h:] for row in P[h:]] == d_matrix(n - h, x)
    assert all(P[i][j] == 0 for i in range(h) for j in range(h, n))


@given(n=st.integers(1, 14), x=st.fractions(-1, 1, max_denominator=40).filter(lambda v: v != 0))
def test_d_determinant_formula(n, x):
    assert det_exact(d_matrix(n, x)) == det_d_formula(n, x)


def test_det_examples():
    x = Fraction(1, 2)
    rhs = -eval_U(2, x) * eval_U_prime(2, x) * eval_U(3, x) * eval_U_prime(3, x) / (2**7 * x * x)
    assert det_phi(3, x) == rhs
    x = Fraction(1, 3)
    assert det_phi(4, x) == (eval_U(3, x) * eval_U_prime(3, x)) ** 2 / (2**8 * x * x)
    assert det_phi(4, x) == det_phi_formula(4, x)


def test_factorization_reports():
    assert verify_factorization(3, 30).passed
    assert verify_factorization(6, 40).passed
    with pytest.raises(InsufficientSamples):
        verify_factorization(4, 1)


def test_factorization_detects_a_wrong_formula(monkeypatch):
    import a3extremal.pencil as pencil

    monkeypatch.setattr(pencil, "det_phi_formula", lambda n, x: Fraction(0))
    rep = pencil.verify_factorization(5)
    assert not rep.passed and rep.mismatches[0][0] == 5


# --- abscissas and bounds ---------------------------------------------------

def test_abscissa_examples():
    a = extremal_abscissas(3)
    assert a.x_max == pytest.approx(math.cos(math.pi / 4), abs=1e-15)
    assert a.x_min == pytest.approx(math.sqrt(1 / 6), abs=1e-14)
    for n in (5, 6):
        a = extremal_abscissas(n)
        assert a.x_max == pytest.approx(math.cos(math.pi / 5), abs=1e-15)
        assert a.x_min == pytest.approx(math.sin(math.pi / 10), abs=1e-15)


@pytest.mark.parametrize(
    "n, lo, hi",
    [(3, -1 / 3, 1.0), (4, -1 / 3, 1.0), (5, (1 - SQRT5) / 2, (1 + SQRT5) / 2), (6, (1 - SQRT5) / 2, (1 + SQRT5) / 2)],
)
def test_bounds_examples(n, lo, hi):
    b = bounds(n)
    assert b.a3_min == pytest.approx(lo, abs=1e-12)
    assert b.a3_max == pytest.approx(hi, abs=1e-12)
    assert b.agrees


@pytest.mark.parametrize("n", range(3, 61))
def test_trigonometric_bounds_agree(n):
    assert bounds(n).cross_check < 1e-10


def test_monotone_upper_bound():
    tops = [bounds(n).a3_max for n in range(3, 41)]
    assert all(b >= a - 1e-15 for a, b in zip(tops, tops[1:]))
    assert tops[-1] > 2.9


@pytest.mark.parametrize("m", range(2, 16))
def test_parity_pairs_share_extremes(m):
    odd, even = bounds(2 * m - 1), bounds(2 * m)
    assert even.a3_max == pytest.approx(odd.a3_max, abs=1e-12)
    assert even.a3_min == pytest.approx(odd.a3_min, abs=1e-12)


def test_classical_lower_bound_small_cases():
    # n' = 1 (N = 3, 4) uses the transcendental branch; n' = 2 the cosine branch
    assert classical_bounds(3)[0] == pytest.approx(-1 / 3, abs=1e-12)
    assert classical_bounds(5)[0] == pytest.approx(1 - 2 * math.cos(math.pi / 5), abs=1e-15)
