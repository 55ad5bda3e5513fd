"""Adjacency spectra of ``G_n``, ``H_n`` and ``X_n`` by three independent routes.

* closed form: ``lambda_j(G_n) = (-1)^(n+1) / (2 cos((2j-1) pi / (2n+1)))``
  and ``mu_j(X_n) = -2 (-1)^n cos((2j-1) pi / (2n+1))`` for ``j = 1..n``;
  ``spec(H_n) = {0} U spec(G_{n-1})`` with ``spec(G_0)`` empty.
* numeric: Householder + implicit QL (:mod:`antireg.eigensolver`).
* oracle: Sturm-isolated roots of the exact integer characteristic
  polynomial (:mod:`antireg.charpoly`).

Spectra are always sorted ascending.  The index ``j`` of the closed form does
not order the values, so nothing compares in ``j`` order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from antireg.charpoly import char_poly_exact
from antireg.eigensolver import symmetric_eigenvalues
from antireg.errors import InvalidInputError

__all__ = [
    "DensityRow",
    "Spectrum",
    "closed_form_spectrum_g",
    "closed_form_spectrum_x",
    "closed_form_values_g",
    "closed_form_values_x",
    "closure_density_report",
    "forbidden_interval_check",
    "max_discrepancy",
    "numeric_spectrum",
    "oracle_spectrum",
    "spectrum_h",
]

METHODS = ("closed-form", "numeric", "oracle")


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues plus how they were obtained.

    ``tolerance`` is the absolute accuracy bound of each value: 0 for the
    closed form (exact up to float rounding), the certified bound for
    ``numeric``, the bisection width for ``oracle``.
    """

    values: tuple[float, ...]
    method: str
    tolerance: float = 0.0

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if any(b < a for a, b in zip(values, values[1:])):
            raise InvalidInputError("spectrum values must be sorted ascending")
        if self.method not in METHODS:
            raise InvalidInputError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.tolerance < 0:
            raise InvalidInputError("tolerance must be non-negative")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values)


def _check_n(n, minimum: int = 1) -> int:
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise InvalidInputError(f"n must be an integer >= {minimum}, got {n!r}")
    return int(n)


def _cos_pi_ratio(num: np.ndarray, den: int) -> np.ndarray:
    """``cos(pi * num / den)`` for integers ``0 < num < den``.

    Evaluated as ``sin(pi * (den - 2 num) / (2 den))`` so values near zero keep
    full relative accuracy.  By Niven's theorem the only rational values in
    range are 0 and +-1/2; the +-1/2 cases are set exactly.
    """
    num = np.asarray(num, dtype=np.int64)
    out = np.sin(np.pi * (den - 2 * num) / (2.0 * den))
    out[3 * num == den] = 0.5
    out[3 * num == 2 * den] = -0.5
    out[2 * num == den] = 0.0
    return out


def closed_form_values_g(n: int) -> np.ndarray:
    """``lambda_j(G_n)`` in index order ``j = 1..n`` (not sorted)."""
    n = _check_n(n)
    j = np.arange(1, n + 1)
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign / (2.0 * _cos_pi_ratio(2 * j - 1, 2 * n + 1))


def closed_form_values_x(n: int) -> np.ndarray:
    """``mu_j(X_n)`` in index order ``j = 1..n`` (not sorted)."""
    n = _check_n(n)
    j = np.arange(1, n + 1)
    sign = 1.0 if n % 2 == 1 else -1.0  # -2 (-1)^n = 2 (-1)^(n+1)
    return sign * 2.0 * _cos_pi_ratio(2 * j - 1, 2 * n + 1)


def closed_form_spectrum_g(n: int) -> Spectrum:
    return Spectrum(tuple(np.sort(closed_form_values_g(n))), "closed-form", 0.0)


def closed_form_spectrum_x(n: int) -> Spectrum:
    return Spectrum(tuple(np.sort(closed_form_values_x(n))), "closed-form", 0.0)


def spectrum_h(n: int) -> Spectrum:
    n = _check_n(n)
    rest = closed_form_values_g(n - 1) if n > 1 else np.empty(0)
    return Spectrum(tuple(np.sort(np.append(rest, 0.0))), "closed-form", 0.0)


def numeric_spectrum(A, tol: float = 1e-12) -> Spectrum:
    """All eigenvalues of a symmetric matrix, each within ``tol * max(1, ||A||_inf)``."""
    a = A.entries if hasattr(A, "entries") else A
    values, delta = symmetric_eigenvalues(a, tol)
    return Spectrum(tuple(values), "numeric", delta)


def oracle_spectrum(A, tol: float = 1e-12) -> Spectrum:
    """Eigenvalues as exact-polynomial roots located to absolute width ``tol``."""
    a = np.asarray(A.entries if hasattr(A, "entries") else A)
    if not np.array_equal(a, a.T):
        raise InvalidInputError("oracle_spectrum requires a symmetric matrix")
    roots = char_poly_exact(a).real_roots(tol)
    if len(roots) != a.shape[0]:
        raise InvalidInputError(
            f"found {len(roots)} real roots for a {a.shape[0]}x{a.shape[0]} symmetric matrix"
        )
    return Spectrum(tuple(roots), "oracle", tol)


def max_discrepancy(*spectra: Spectrum) -> float:
    """Largest entrywise gap between any two sorted spectra of equal length."""
    arrays = [s.as_array() for s in spectra]
    if len({len(a) for a in arrays}) > 1:
        raise InvalidInputError("spectra have different lengths")
    worst = 0.0
    for i in range(len(arrays)):
        for k in range(i + 1, len(arrays)):
            worst = max(worst, float(np.max(np.abs(arrays[i] - arrays[k]), initial=0.0)))
    return worst


def forbidden_interval_check(s: Spectrum, allow_zero: bool = False) -> bool:
    """True iff every value has ``|lambda| >= 1/2``, apart from one exact 0 when ``allow_zero``."""
    zeros = 0
    for v in s.values:
        if v == 0.0 and allow_zero:
            zeros += 1
            continue
        if abs(v) < 0.5:
            return False
    return zeros <= 1


class DensityRow(NamedTuple):
    grid_point: float
    min_distance: float
    witness_n: int
    witness_j: int


def density_grid(lo: float, hi: float, step: float) -> np.ndarray:
    """Grid ``lo + k*step`` within ``[lo, hi]``, restricted to ``|g| >= 1/2``.

    Points are rounded to 12 decimals so ``0.5`` and ``1.0`` land exactly.
    """
    if not (math.isfinite(lo) and math.isfinite(hi) and math.isfinite(step)):
        raise InvalidInputError("grid bounds and step must be finite")
    if not lo < hi:
        raise InvalidInputError(f"need lo < hi, got lo={lo}, hi={hi}")
    if not step > 0:
        raise InvalidInputError(f"step must be positive, got {step}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    grid = np.round(lo + step * np.arange(count), 12)
    grid = grid[grid <= hi]
    return grid[np.abs(grid) >= 0.5]


def closure_density_report(N: int, lo: float, hi: float, step: float) -> list[DensityRow]:
    """Distance from each grid point to the nearest eigenvalue of ``G_1 .. G_N``.

    Ties go to the smallest ``n``, then the smallest ``j``.  ``witness_j`` is
    the closed-form index, not a sorted position.
    """
    N = _check_n(N)
    grid = density_grid(lo, hi, step)
    vals, ns, js = [], [], []
    for n in range(1, N + 1):
        vals.append(closed_form_values_g(n))
        ns.append(np.full(n, n))
        js.append(np.arange(1, n + 1))
    vals = np.concatenate(vals)
    ns = np.concatenate(ns)
    js = np.concatenate(js)
    order = np.lexsort((js, ns, vals))
    vals, ns, js = vals[order], ns[order], js[order]

    right = np.searchsorted(vals, grid, side="left")
    left = np.clip(right - 1, 0, len(vals) - 1)
    right = np.clip(right, 0, len(vals) - 1)
    # first entry of the left neighbour's run of equal values carries the smallest (n, j)
    left = np.searchsorted(vals, vals[left], side="left")

    rows = []
    for g, a, b in zip(grid, left, right):
        best = None
        for idx in (a, b):
            key = (abs(g - vals[idx]), ns[idx], js[idx])
            if best is None or key < best:
                best = key
        rows.append(DensityRow(float(g), float(best[0]), int(best[1]), int(best[2])))
    return rows
