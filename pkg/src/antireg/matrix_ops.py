"""Exact integer matrices and the similarity chain from ``A(G_n)`` to ``X_n``.

The chain is::

    A(G_n)  --Q-->  M_n  --inverse-->  M_n^-1  --D-->  Y_n = D M_n^-1 D  --P-->  X_n = P^T Y_n P

where ``M_n`` is the 0/1 Hankel matrix with ones on and below the
anti-diagonal and ``X_n = (-1)^(n+1) T_n`` with ``T_n`` tridiagonal (ones
off the diagonal, zero diagonal except a 1 in the bottom-right corner).
Every matrix here holds exact integers and every claimed identity is checked
with ``==``; no floating point is involved.

Permutation matrices follow ``P[i, j] = 1  iff  j = sigma(i)`` so that
``(P x)_i = x_sigma(i)``.  Under that convention ``P^T A P`` equals
``A`` with rows and columns reordered by ``sigma^-1``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from antireg.errors import InvalidInputError, InvariantViolationError

__all__ = [
    "IntMatrix",
    "Permutation",
    "conjugate",
    "determinant_exact",
    "hankel_m",
    "identity",
    "m_inverse",
    "permutation_sigma",
    "sign_diag",
    "similarity_to_hankel",
    "tridiagonal_t",
    "x_matrix",
    "y_matrix",
]

_INT64_SAFE = 2**62
_FLOAT_EXACT = 2**53


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    return int(n)


class IntMatrix:
    """Immutable square matrix of exact integers.

    Small entries live in an ``int64`` array; products that could overflow
    are promoted to Python integers (``dtype=object``) before multiplying.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise InvalidInputError(f"expected a non-empty square matrix, got shape {a.shape}")
        if a.dtype == object:
            if not all(isinstance(x, (int, np.integer)) for x in a.flat):
                raise InvalidInputError("IntMatrix entries must be integers")
            a = np.array([[int(x) for x in row] for row in a], dtype=object)
            if all(abs(x) < _INT64_SAFE for x in a.flat):
                a = a.astype(np.int64)
        elif np.issubdtype(a.dtype, np.integer) or a.dtype == bool:
            a = a.astype(np.int64)
        else:
            raise InvalidInputError(f"IntMatrix entries must be integers, got dtype {a.dtype}")
        a.setflags(write=False)
        self._a = a

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self._a.T)

    def __getitem__(self, ij):
        """1-based access, ``M[i, j]``."""
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside a {self.n}x{self.n} matrix")
        return int(self._a[i - 1, j - 1])

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def max_abs(self) -> int:
        if self._a.dtype == object:
            return int(max(abs(x) for x in self._a.flat))
        return int(np.max(np.abs(self._a)))

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._a, self._a.T))

    def _wide(self):
        return self._a.astype(object)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if other.n != self.n:
            raise InvalidInputError(f"dimension mismatch: {self.n} vs {other.n}")
        bound = self.max_abs() * other.max_abs() * self.n
        if bound < _FLOAT_EXACT:
            # every partial sum is an integer below 2^53, so float64 BLAS is exact
            return IntMatrix((self._a.astype(np.float64) @ other._a.astype(np.float64)).astype(np.int64))
        if bound < _INT64_SAFE:
            return IntMatrix(self._a @ other._a)
        return IntMatrix(self._wide() @ other._wide())

    def __mul__(self, k: int) -> IntMatrix:
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return IntMatrix(self._wide() * int(k))

    __rmul__ = __mul__

    def __neg__(self) -> IntMatrix:
        return self * -1

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if other.n != self.n:
            raise InvalidInputError(f"dimension mismatch: {self.n} vs {other.n}")
        return IntMatrix(self._wide() + other._wide())

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.all(self._a == other._a))

    def __hash__(self):
        return hash(tuple(map(tuple, self.tolist())))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"


class Permutation:
    """A bijection of ``{1, ..., n}`` stored as ``images[i-1] = sigma(i)``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        arr = np.asarray(images if isinstance(images, np.ndarray) else list(images), dtype=np.int64).ravel()
        n = arr.size
        if n == 0:
            raise InvalidInputError("permutation must act on at least one point")
        if arr.min() < 1 or arr.max() > n or np.any(np.bincount(arr, minlength=n + 1)[1:] != 1):
            raise InvalidInputError(f"not a permutation of 1..{n}: {arr.tolist()!r}")
        self.images = tuple(arr.tolist())

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, _check_n(n) + 1))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> Permutation:
        """The permutation whose conjugation lists vertices in ``order`` (1-based labels).

        ``conjugate(Permutation.from_order(order), A)`` is ``A`` with rows and
        columns taken in the sequence ``order``.
        """
        return cls(order).inverse()

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, s in enumerate(self.images, start=1):
            inv[s - 1] = i
        return Permutation(inv)

    def compose(self, other: Permutation) -> Permutation:
        """``(self o other)(i) = self(other(i))``; matrices satisfy ``P(s o t) = P(t) P(s)``."""
        if other.n != self.n:
            raise InvalidInputError(f"dimension mismatch: {self.n} vs {other.n}")
        return Permutation(self(other(i)) for i in range(1, self.n + 1))

    def matrix(self) -> IntMatrix:
        P = np.zeros((self.n, self.n), dtype=np.int64)
        P[np.arange(self.n), np.asarray(self.images) - 1] = 1
        return IntMatrix(P)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"


def identity(n: int) -> IntMatrix:
    return IntMatrix(np.eye(_check_n(n), dtype=np.int64))


def conjugate(P: Permutation, A: IntMatrix) -> IntMatrix:
    """``P^T A P`` for the permutation matrix of ``P``, done by reindexing."""
    if P.n != A.n:
        raise InvalidInputError(f"dimension mismatch: permutation on {P.n} points, matrix {A.n}x{A.n}")
    idx = np.asarray(P.inverse().images) - 1
    return IntMatrix(A.entries[np.ix_(idx, idx)])


def hankel_m(n: int) -> IntMatrix:
    """``M_n[i, j] = 1`` iff ``i + j >= n + 1`` (1-based)."""
    n = _check_n(n)
    i = np.arange(1, n + 1)
    return IntMatrix((np.add.outer(i, i) >= n + 1).astype(np.int64))


def m_inverse(n: int) -> IntMatrix:
    """``+1`` where ``i + j = n + 1``, ``-1`` where ``i + j = n``, else 0."""
    n = _check_n(n)
    i = np.arange(1, n + 1)
    s = np.add.outer(i, i)
    return IntMatrix((s == n + 1).astype(np.int64) - (s == n).astype(np.int64))


def sign_diag(n: int) -> IntMatrix:
    """``D = diag(1, -1, 1, ..., (-1)^(n+1))``."""
    n = _check_n(n)
    return IntMatrix(np.diag([1 if i % 2 == 1 else -1 for i in range(1, n + 1)]).astype(np.int64))


def y_matrix(n: int) -> IntMatrix:
    """``D M_n^-1 D`` by exact multiplication.

    The entries are ``(-1)^(n+1)`` on both anti-diagonals ``i + j = n`` and
    ``i + j = n + 1``; the all-``+1`` picture is the odd-``n`` case.
    """
    D = sign_diag(n)
    return D @ m_inverse(n) @ D


def permutation_sigma(n: int) -> Permutation:
    """Evens ascending, then odds descending: ``(2, 4, ..., <largest even>, <largest odd>, ..., 3, 1)``.

    Even ``n``: ``sigma(k) = 2k`` for ``k <= n/2`` and ``sigma(n/2 + j) = n - (2j - 1)``.
    Odd ``n``: ``sigma(k) = 2k`` for ``k <= (n-1)/2``, ``sigma((n+1)/2) = n``, then
    the remaining odd values descending down to ``sigma(n) = 1``.
    """
    n = _check_n(n)
    if n % 2 == 0:
        h = n // 2
        j = np.arange(1, h + 1)
        images = np.concatenate([2 * j, n - (2 * j - 1)])
    else:
        h = (n - 1) // 2
        j = np.arange(1, h + 1)
        images = np.concatenate([2 * j, [n], n - 2 * j])
    return Permutation(images)


def tridiagonal_t(n: int) -> IntMatrix:
    """``T_n``: ones on the sub/super-diagonals, zero diagonal except ``T[n, n] = 1``."""
    n = _check_n(n)
    T = np.eye(n, k=1, dtype=np.int64) + np.eye(n, k=-1, dtype=np.int64)
    T[n - 1, n - 1] = 1
    return IntMatrix(T)


def x_matrix(n: int) -> IntMatrix:
    """``P^T Y_n P`` with ``P`` from :func:`permutation_sigma`, checked against ``(-1)^(n+1) T_n``."""
    X = conjugate(permutation_sigma(n), y_matrix(n))
    expected = tridiagonal_t(n) * (-1) ** (n + 1)
    if X != expected:
        raise InvariantViolationError(f"P^T Y_{n} P is not (-1)^(n+1) T_{n}")
    return X


def similarity_to_hankel(n: int) -> Permutation:
    """A permutation ``Q`` with ``Q^T A(G_n) Q = M_n``, verified exactly before returning.

    Built by unrolling the induction that peels the isolated vertex of
    ``H_{n-1}`` to the front and the dominating vertex ``v_n`` to the back.
    """
    from antireg.graph_core import adjacency_matrix, antiregular_connected

    n = _check_n(n)
    # G_{k+1} = H_k + dominating v_{k+1} and H_k = G_{k-1} + isolated v_k, so
    # order(k+1) = [v_k] + order(k-1) + [v_{k+1}], with order(1), order(2) the identity.
    k = n
    front, back = [], []
    while k > 2:
        front.append(k - 1)
        back.append(k)
        k -= 2
    order = front + list(range(1, k + 1)) + back[::-1]
    Q = Permutation.from_order(order)
    if conjugate(Q, adjacency_matrix(antiregular_connected(n))) != hankel_m(n):
        raise InvariantViolationError(f"Q^T A(G_{n}) Q != M_{n}")
    return Q


def determinant_exact(A: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination on Python integers."""
    n = A.n
    M = [[int(x) for x in row] for row in A.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]
