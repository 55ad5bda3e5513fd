"""Exact characteristic polynomials and exact real-root isolation.

``char_poly_exact`` returns the integer coefficients of ``det(xI - A)``.  The
general route is the Faddeev-LeVerrier recurrence carried out modulo a set of
primes and recombined by the Chinese remainder theorem; the number of primes
comes from a rigorous coefficient bound, so the result is exact, not a
floating-point reconstruction.  Tridiagonal input can instead use the
three-term determinant recurrence on Python integers.

``CharPoly.real_roots`` isolates roots with Sturm sequences in exact rational
arithmetic and refines them by bisection.  It uses no floating-point
eigenvalue information, which keeps it independent of the closed forms and
of the numeric solver it is used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from antireg.errors import InvalidInputError

__all__ = ["CharPoly", "char_poly_exact", "faddeev_leverrier", "tridiagonal_char_poly"]


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial ``det(xI - A)``, coefficients highest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) < 2 or coeffs[0] != 1:
            raise InvalidInputError(f"characteristic polynomial must be monic of degree >= 1: {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def constant(self) -> int:
        return self.coefficients[-1]

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            p = d - k
            mag = abs(c)
            body = {0: str(mag), 1: "x" if mag == 1 else f"{mag}x"}.get(
                p, f"x^{p}" if mag == 1 else f"{mag}x^{p}"
            )
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def real_roots(self, tol: float = 1e-12) -> list[float]:
        """All real roots, ascending, repeated by multiplicity, each to absolute ``tol``."""
        return [float(r) for r in self.exact_real_roots(tol)]

    def exact_real_roots(self, tol: float = 1e-12) -> list[Fraction]:
        """Rational midpoints of isolating intervals of width at most ``tol``."""
        if tol <= 0:
            raise InvalidInputError("tol must be positive")
        p = [Fraction(c) for c in reversed(self.coefficients)]  # ascending
        out = []
        for factor, mult in _square_free_factors(p):
            if len(factor) < 2:
                continue
            for root in _isolate_and_refine(_to_int_poly(factor), Fraction(tol)):
                out.extend([root] * mult)
        out.sort()
        return out


# ---------------------------------------------------------------------------
# Faddeev-LeVerrier modulo primes


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    r = math.isqrt(p)
    f = 17
    while f <= r:
        if p % f == 0 or p % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=None)
def _primes_below(limit: int, count: int) -> tuple[int, ...]:
    primes = []
    p = limit - 1
    while len(primes) < count:
        if _is_prime(p):
            primes.append(p)
        p -= 1
    return tuple(primes)


def _coefficient_bound(A: np.ndarray) -> int:
    # |coefficient of x^(n-k)| = |e_k(eigenvalues)| <= C(n, k) * rho^k, rho = max abs row sum
    n = A.shape[0]
    rho = max(sum(abs(int(x)) for x in row) for row in A)
    return max(math.comb(n, k) * rho**k for k in range(n + 1))


def _fl_mod(A: np.ndarray, p: int) -> list[int]:
    n = A.shape[0]
    Am = np.array([[int(x) % p for x in row] for row in A], dtype=np.int64)
    coeffs = [1]
    M = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        AM = (Am @ M) % p
        c = (-int(np.trace(AM) % p) * pow(k, -1, p)) % p
        coeffs.append(c)
        M = AM
        M[np.diag_indices(n)] = (M[np.diag_indices(n)] + c) % p
    return coeffs


def faddeev_leverrier(A) -> CharPoly:
    """Faddeev-LeVerrier over the integers, via residues modulo several primes."""
    a = np.asarray(A.entries if hasattr(A, "entries") else A)
    n = a.shape[0]
    if n >= 2**15:
        raise InvalidInputError("matrix too large for the modular Faddeev-LeVerrier kernel")
    # n * p^2 < 2^63 keeps every int64 dot product exact
    prime_bits = min(30, (63 - n.bit_length()) // 2)
    bound = _coefficient_bound(a)
    need = 2 * bound + 1
    count = 1
    while (2 ** (prime_bits - 1)) ** count <= need:
        count += 1
    primes = _primes_below(max(2**prime_bits, n + 2), count)

    modulus = 1
    residues = [0] * (n + 1)
    for p in primes:
        r = _fl_mod(a, p)
        if modulus == 1:
            residues, modulus = r, p
            continue
        inv = pow(modulus, -1, p)
        residues = [x + modulus * (((y - x) * inv) % p) for x, y in zip(residues, r)]
        modulus *= p
    half = modulus // 2
    return CharPoly(tuple(x - modulus if x > half else x for x in residues))


def tridiagonal_char_poly(A) -> CharPoly:
    """Three-term recurrence ``p_k = (x - a_kk) p_{k-1} - a_{k,k-1} a_{k-1,k} p_{k-2}``."""
    a = np.asarray(A.entries if hasattr(A, "entries") else A)
    n = a.shape[0]
    if not _is_tridiagonal(a):
        raise InvalidInputError("matrix is not tridiagonal")
    # ascending coefficient lists
    prev = [1]
    cur = [-int(a[0, 0]), 1]
    for k in range(1, n):
        d = int(a[k, k])
        off = int(a[k, k - 1]) * int(a[k - 1, k])
        nxt = [0] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += c
            nxt[i] -= d * c
        for i, c in enumerate(prev):
            nxt[i] -= off * c
        prev, cur = cur, nxt
    return CharPoly(tuple(reversed(cur)))


def _is_tridiagonal(a: np.ndarray) -> bool:
    n = a.shape[0]
    i, j = np.indices((n, n))
    return not np.any(a[np.abs(i - j) > 1])


def char_poly_exact(A, method: str = "auto") -> CharPoly:
    """Exact ``det(xI - A)`` for an integer matrix.

    ``method`` is ``"faddeev"``, ``"tridiagonal"`` or ``"auto"`` (the
    recurrence for tridiagonal input, Faddeev-LeVerrier otherwise).
    """
    a = np.asarray(A.entries if hasattr(A, "entries") else A)
    if method == "auto":
        method = "tridiagonal" if _is_tridiagonal(a) else "faddeev"
    if method == "faddeev":
        return faddeev_leverrier(a)
    if method == "tridiagonal":
        return tridiagonal_char_poly(a)
    raise InvalidInputError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# exact polynomial arithmetic (ascending coefficient lists of Fractions)


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _deriv(p):
    return _trim([k * c for k, c in enumerate(p)][1:] or [Fraction(0)])


def _divmod(num, den):
    num = list(num)
    den = _trim(den)
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return _trim(q), _trim(num[: len(den) - 1] or [Fraction(0)])


def _monic(p):
    return [c / p[-1] for c in p]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _is_one(p):
    return len(p) == 1 and p[0] == 1


def _square_free_factors(p):
    """Yun's algorithm: monic factors ``f_i`` with ``p = lead * prod f_i^i``."""
    p = _monic(_trim(p))
    if len(p) == 1:
        return []
    dp = _deriv(p)
    a = _gcd(p, dp)
    b = _divmod(p, a)[0]
    c = _divmod(dp, a)[0]
    out = []
    i = 1
    while not _is_one(b):
        d = [x - y for x, y in zip(c + [0] * (len(b) - len(c)), _deriv(b) + [0] * len(b))]
        d = _trim(d)
        f = _gcd(b, d)
        out.append((f, i))
        b = _divmod(b, f)[0]
        c = _divmod(d, f)[0]
        i += 1
    return out


def _to_int_poly(p):
    # scale by a positive rational so the coefficients are coprime integers
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = math.gcd(*ints)
    return [x // g for x in ints]


def _sign_at(p, x: Fraction) -> int:
    # sign of p(m/s) from s^d p(m/s) = Horner with powers of s folded in
    m, s = x.numerator, x.denominator
    d = len(p) - 1
    h = p[d]
    spow = 1
    for i in range(d - 1, -1, -1):
        spow *= s
        h = h * m + p[i] * spow
    return (h > 0) - (h < 0)


def _sturm_chain(p):
    chain = [p, _to_int_poly(_deriv([Fraction(c) for c in p]))]
    while len(chain[-1]) > 1:
        _, r = _divmod([Fraction(c) for c in chain[-2]], [Fraction(c) for c in chain[-1]])
        if len(r) == 1 and r[0] == 0:
            break
        chain.append([-x for x in _to_int_poly(r)])
    return chain


def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _isolate_and_refine(p, tol: Fraction) -> list[Fraction]:
    """Roots of a square-free integer polynomial, each located to width ``tol``."""
    chain = _sturm_chain(p)
    lead = abs(p[-1])
    cauchy = 1 + max(abs(c) for c in p[:-1]) // lead + 1
    work = [(Fraction(-cauchy), Fraction(cauchy))]
    roots = []
    while work:
        a, b = work.pop()
        count = _variations(chain, a) - _variations(chain, b)  # roots in (a, b]
        if count == 0:
            continue
        if count > 1:
            mid = (a + b) / 2
            work.append((a, mid))
            work.append((mid, b))
            continue
        roots.append(_bisect_single(p, a, b, tol))
    roots.sort()
    return roots


def _bisect_single(p, a: Fraction, b: Fraction, tol: Fraction) -> Fraction:
    # exactly one simple root in (a, b]; p changes sign exactly once there
    sb = _sign_at(p, b)
    if sb == 0:
        return b
    while b - a > tol:
        mid = (a + b) / 2
        sm = _sign_at(p, mid)
        if sm == 0:
            return mid
        if sm == sb:
            b = mid
        else:
            a = mid
    return (a + b) / 2
