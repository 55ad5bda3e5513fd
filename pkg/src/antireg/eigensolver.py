"""Dense symmetric eigenvalues: Householder tridiagonalization + implicit QL.

The kernels are compiled with numba; they work on float64 copies and never
form eigenvectors.  After QL converges, every eigenvalue is certified against
the tridiagonal matrix with Sturm (inertia) counts: the k-th smallest computed
value ``mu_k`` must satisfy ``#{eig < mu_k + delta} >= k + 1`` and
``#{eig < mu_k - delta} <= k``.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from antireg.errors import InvalidInputError, NumericFailureError

MAX_QL_ITERATIONS = 60  # per eigenvalue

_EPS = np.finfo(np.float64).eps


@njit(cache=True)
def _householder_tridiagonalize(a):
    # a is overwritten; returns diagonal d and off-diagonal e (e[k] couples k, k+1)
    n = a.shape[0]
    d = np.empty(n)
    e = np.zeros(max(n - 1, 1))
    for k in range(n - 2):
        m = n - k - 1
        u = a[k + 1 :, k].copy()
        alpha = math.sqrt(np.dot(u, u))
        if alpha == 0.0:
            e[k] = 0.0
            continue
        if u[0] < 0.0:
            alpha = -alpha
        u[0] += alpha
        h = alpha * u[0]
        sub = np.ascontiguousarray(a[k + 1 :, k + 1 :])
        p = np.dot(sub, u) / h
        q = p - (np.dot(u, p) / (2.0 * h)) * u
        for i in range(m):
            qi = q[i]
            ui = u[i]
            for j in range(m):
                a[k + 1 + i, k + 1 + j] = sub[i, j] - qi * u[j] - ui * q[j]
        e[k] = -alpha
    for k in range(n):
        d[k] = a[k, k]
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    return d, e


@njit(cache=True)
def _implicit_ql(d, e, max_iter):
    # tridiagonal QL with Wilkinson-style shifts; d overwritten with eigenvalues.
    # returns (-1, total_iterations) on success, else (index, iterations) of the stuck value
    n = d.shape[0]
    ee = np.zeros(n)
    ee[: n - 1] = e[: n - 1]
    total = 0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(ee[m]) <= 2.220446049250313e-16 * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            total += 1
            if it > max_iter:
                return l, total
            g = (d[l + 1] - d[l]) / (2.0 * ee[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + ee[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * ee[i]
                b = c * ee[i]
                r = math.hypot(f, g)
                ee[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    ee[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            ee[l] = g
            ee[m] = 0.0
    return -1, total


@njit(cache=True)
def _count_below(d, e, x):
    # number of eigenvalues of the tridiagonal (d, e) strictly below x (LDL^T inertia)
    n = d.shape[0]
    count = 0
    q = d[0] - x
    tiny = 1e-300
    if q == 0.0:
        q = -tiny
    if q < 0.0:
        count += 1
    for k in range(1, n):
        q = d[k] - x - e[k - 1] * e[k - 1] / q
        if q == 0.0:
            q = -tiny
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _certify(d, e, values, delta):
    # index of the first value that fails the inertia bracket, or -1
    for k in range(values.shape[0]):
        if _count_below(d, e, values[k] + delta) < k + 1:
            return k
        if _count_below(d, e, values[k] - delta) > k:
            return k
    return -1


def symmetric_eigenvalues(A, tol: float) -> tuple[np.ndarray, float]:
    """Sorted eigenvalues of a symmetric matrix and the absolute bound they were certified to.

    The bound is ``tol * max(1, ||A||_inf)``.
    """
    a = np.array(A, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise InvalidInputError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise InvalidInputError("numeric_spectrum requires a symmetric matrix")
    if not tol > 0:
        raise InvalidInputError("tol must be positive")
    n = a.shape[0]
    norm_inf = float(np.max(np.sum(np.abs(a), axis=1)))
    delta = tol * max(1.0, norm_inf)
    if n == 1:
        return a[0].copy(), delta

    d, e = _householder_tridiagonalize(np.ascontiguousarray(a))
    d_t, e_t = d.copy(), e.copy()
    stuck, iterations = _implicit_ql(d, e, MAX_QL_ITERATIONS)
    if stuck >= 0:
        raise NumericFailureError(
            f"implicit QL did not converge for eigenvalue {stuck} of a {n}x{n} matrix "
            f"after {MAX_QL_ITERATIONS} iterations (total {iterations})",
            n=n,
            index=stuck,
            iterations=iterations,
        )
    values = np.sort(d)
    bad = _certify(d_t, e_t, values, delta)
    if bad >= 0:
        raise NumericFailureError(
            f"eigenvalue {bad} = {values[bad]!r} not certified within {delta:.3e} "
            f"by Sturm counts on the tridiagonal form",
            n=n,
            index=int(bad),
            iterations=iterations,
        )
    return values, delta
