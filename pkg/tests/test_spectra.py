import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antireg import eigensolver
from antireg.errors import InvalidInputError, NumericFailureError
from antireg.graph_core import adjacency_matrix, antiregular_connected, antiregular_disconnected
from antireg.matrix_ops import IntMatrix, hankel_m, x_matrix
from antireg.spectra import (
    Spectrum,
    closed_form_spectrum_g,
    closed_form_spectrum_x,
    closed_form_values_g,
    closure_density_report,
    forbidden_interval_check,
    max_discrepancy,
    numeric_spectrum,
    oracle_spectrum,
    spectrum_h,
)

PHI = (1 + 5**0.5) / 2


def plain_closed_form(n):
    """Straight transcription with math.cos, as an independent reference."""
    sign = (-1) ** (n + 1)
    return sorted(sign / (2 * math.cos((2 * j - 1) * math.pi / (2 * n + 1))) for j in range(1, n + 1))


# -- closed forms -------------------------------------------------------------


def test_g1_and_g2():
    assert closed_form_spectrum_g(1).values == (1.0,)
    assert closed_form_spectrum_g(2).values == pytest.approx([1 - PHI, PHI], abs=1e-12)


def test_x_examples():
    assert closed_form_spectrum_x(1).values == (1.0,)
    # X_2 = [[0,-1],[-1,-1]], char poly x^2 + x - 1
    vals = closed_form_spectrum_x(2).values
    assert vals == pytest.approx([-PHI, PHI - 1], abs=1e-12)
    assert all(abs(v * v + v - 1) < 1e-12 for v in vals)


@pytest.mark.parametrize("n", range(1, 60))
def test_closed_form_matches_plain_transcription(n):
    ref = plain_closed_form(n)
    got = closed_form_spectrum_g(n).values
    scale = max(1.0, max(abs(v) for v in ref))
    assert np.max(np.abs(np.array(got) - ref)) < 1e-12 * scale


@pytest.mark.parametrize("n", range(1, 80))
def test_g_and_x_are_reciprocal(n):
    # X_n is similar to M_n^-1, which is similar to A(G_n)^-1
    g = np.sort(1.0 / closed_form_spectrum_g(n).as_array())
    assert np.allclose(g, closed_form_spectrum_x(n).as_array(), atol=1e-12)


@given(st.integers(1, 1000))
def test_trace_is_ceil_half(n):
    assert abs(sum(closed_form_spectrum_g(n).values) - math.ceil(n / 2)) < 1e-10 * n


def test_one_is_exact_for_n_congruent_1_mod_3():
    # cos(pi/3) = 1/2 happens when 3(2j-1) = 2n+1
    for n in (1, 4, 7, 10, 301):
        assert 1.0 in closed_form_spectrum_g(n).values or -1.0 in closed_form_spectrum_g(n).values


@pytest.mark.parametrize(
    "n, expected",
    [(1, [0.0]), (2, [0.0, 1.0]), (3, [1 - PHI, 0.0, PHI])],
)
def test_spectrum_h_examples(n, expected):
    assert spectrum_h(n).values == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("n", range(1, 40))
def test_spectrum_h_matches_numeric(n):
    A = adjacency_matrix(antiregular_disconnected(n))
    assert max_discrepancy(spectrum_h(n), numeric_spectrum(A)) < 1e-10


def test_closed_forms_reject_bad_n():
    for bad in (0, -1, 2.5, True):
        with pytest.raises(InvalidInputError):
            closed_form_spectrum_g(bad)


# -- numeric ------------------------------------------------------------------


symmetric_float = st.integers(1, 12).flatmap(
    lambda n: st.lists(
        st.lists(st.floats(-100, 100, allow_nan=False), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@settings(max_examples=60, deadline=None)
@given(symmetric_float)
def test_numeric_matches_numpy(rows):
    a = np.array(rows)
    a = (a + a.T) / 2
    s = numeric_spectrum(a, 1e-12)
    expected = np.linalg.eigvalsh(a)
    scale = max(1.0, np.max(np.sum(np.abs(a), axis=1)))
    assert np.max(np.abs(s.as_array() - expected)) < 1e-10 * scale
    assert s.tolerance == pytest.approx(1e-12 * scale)


@pytest.mark.parametrize("n", [1, 2, 3, 17, 100, 257])
def test_numeric_g_against_closed_form(n):
    A = adjacency_matrix(antiregular_connected(n))
    assert max_discrepancy(numeric_spectrum(A), closed_form_spectrum_g(n)) < 1e-10


@pytest.mark.parametrize("n", [1, 2, 9, 64])
def test_numeric_x_against_closed_form(n):
    assert max_discrepancy(numeric_spectrum(x_matrix(n)), closed_form_spectrum_x(n)) < 1e-10


def test_numeric_rejects_non_symmetric():
    with pytest.raises(InvalidInputError):
        numeric_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(InvalidInputError):
        numeric_spectrum(hankel_m(3), tol=0)


def test_numeric_failure_carries_diagnostics(monkeypatch):
    monkeypatch.setattr(eigensolver, "MAX_QL_ITERATIONS", 0)
    with pytest.raises(NumericFailureError) as info:
        numeric_spectrum(adjacency_matrix(antiregular_connected(6)))
    assert info.value.n == 6
    assert info.value.index is not None


# -- oracle -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_oracle_matches_closed_form(n):
    assert max_discrepancy(oracle_spectrum(hankel_m(n)), closed_form_spectrum_g(n)) < 1e-9


def test_oracle_rejects_non_symmetric():
    with pytest.raises(InvalidInputError):
        oracle_spectrum(IntMatrix([[0, 1], [0, 0]]))


def test_all_eigenvalues_simple():
    for n in range(2, 200):
        v = closed_form_spectrum_g(n).as_array()
        assert np.min(np.diff(v)) > 1e-6


# -- forbidden interval -------------------------------------------------------


def test_forbidden_interval_examples():
    assert forbidden_interval_check(closed_form_spectrum_g(5))
    assert not forbidden_interval_check(Spectrum((0.4,), "numeric"))
    assert forbidden_interval_check(Spectrum((-0.5, 0.5), "numeric"))
    assert not forbidden_interval_check(spectrum_h(3))
    assert forbidden_interval_check(spectrum_h(3), allow_zero=True)
    assert not forbidden_interval_check(Spectrum((0.0, 0.0), "numeric"), allow_zero=True)


@given(st.integers(1, 1000))
def test_forbidden_interval_holds(n):
    assert np.min(np.abs(closed_form_values_g(n))) > 0.5


# -- Spectrum -----------------------------------------------------------------


def test_spectrum_validation():
    with pytest.raises(InvalidInputError):
        Spectrum((2.0, 1.0), "numeric")
    with pytest.raises(InvalidInputError):
        Spectrum((1.0,), "guess")
    with pytest.raises(InvalidInputError):
        Spectrum((1.0,), "oracle", -1.0)


def test_max_discrepancy_length_mismatch():
    with pytest.raises(InvalidInputError):
        max_discrepancy(closed_form_spectrum_g(2), closed_form_spectrum_g(3))


# -- closure density ----------------------------------------------------------


def test_density_hits_one_exactly():
    rows = {r.grid_point: r for r in closure_density_report(10, -2, 2, 0.25)}
    assert rows[1.0].min_distance == 0.0
    assert (rows[1.0].witness_n, rows[1.0].witness_j) == (1, 1)
    assert rows[-1.0].min_distance == 0.0


def test_density_grid_skips_forbidden_interval():
    rows = closure_density_report(20, -3, 3, 0.01)
    assert all(abs(r.grid_point) >= 0.5 for r in rows)
    assert any(r.grid_point == 0.5 for r in rows) and any(r.grid_point == -0.5 for r in rows)


def test_density_witness_is_a_real_eigenvalue():
    for r in closure_density_report(30, -5, 5, 0.1):
        lam = closed_form_values_g(r.witness_n)[r.witness_j - 1]
        assert abs(abs(r.grid_point - lam) - r.min_distance) < 1e-15


def test_density_matches_brute_force():
    N = 25
    vals = [(v, n, j) for n in range(1, N + 1) for j, v in enumerate(closed_form_values_g(n), start=1)]
    for r in closure_density_report(N, -4, 4, 0.05):
        best = min((abs(r.grid_point - v), n, j) for v, n, j in vals)
        assert (r.min_distance, r.witness_n, r.witness_j) == (best[0], best[1], best[2])


def test_density_improves_with_n():
    worst = []
    previous = None
    for N in (50, 100, 200, 400):
        d = np.array([r.min_distance for r in closure_density_report(N, -10, 10, 0.01)])
        if previous is not None:
            assert np.all(d <= previous)
        previous = d
        worst.append(d.max())
    assert worst == sorted(worst, reverse=True) and worst[-1] < worst[0]
    half = {r.grid_point: r.min_distance for r in closure_density_report(400, -1, 1, 0.5)}
    assert 0 < half[0.5] < 0.01 and 0 < half[-0.5] < 0.01


@pytest.mark.parametrize("lo, hi, step", [(1, 1, 0.1), (2, 1, 0.1), (0, 1, 0), (0, math.inf, 0.1)])
def test_density_rejects_bad_range(lo, hi, step):
    with pytest.raises(InvalidInputError):
        closure_density_report(5, lo, hi, step)
