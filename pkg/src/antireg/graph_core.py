"""Threshold graphs with loops, built from binary creation sequences.

A creation sequence ``b = (b_1, ..., b_n)`` builds the graph one vertex at a
time: vertex ``v_j`` is *dominating* when ``b_j = 1`` (it carries a loop and is
joined to every earlier vertex) and *isolated* when ``b_j = 0``.  Everything
about the graph (edges, degrees, adjacency, connectivity) is a function of
the sequence, so the sequence is the only stored state.

Vertex labels are 1-based in everything a human reads (``v1 ... vn``); list
positions are 0-based internally.  A loop contributes a single 1 on the
adjacency diagonal and exactly 1 to its vertex's degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator

import numpy as np

from antireg.errors import InvalidInputError

__all__ = [
    "BinarySequence",
    "DegreeSequence",
    "ThresholdGraph",
    "adjacency_matrix",
    "antiregular_connected",
    "antiregular_disconnected",
    "complement",
    "degree_sequence",
    "delete_vertex",
    "edges",
    "from_binary_sequence",
    "is_antiregular",
    "is_connected",
]


@dataclass(frozen=True)
class BinarySequence:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise InvalidInputError("creation sequence must contain at least one bit")
        if any(b not in (0, 1) for b in bits):
            raise InvalidInputError(f"creation sequence entries must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> BinarySequence:
        """Accept ``"101"``, ``"1,0,1"`` or ``"1 0 1"``."""
        cleaned = text.replace(",", "").replace(" ", "").strip()
        if not cleaned or set(cleaned) - {"0", "1"}:
            raise InvalidInputError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in cleaned))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.bits)) + ")"


@dataclass(frozen=True)
class ThresholdGraph:
    """A threshold graph with loops; equality is creation-sequence equality."""

    sequence: BinarySequence

    @property
    def n(self) -> int:
        return len(self.sequence)

    @property
    def bits(self) -> tuple[int, ...]:
        return self.sequence.bits

    def has_loop(self, j: int) -> bool:
        """Loop test for the 1-based vertex ``v_j``."""
        return self.bits[j - 1] == 1

    def adjacent(self, i: int, j: int) -> bool:
        """Adjacency of 1-based vertices ``v_i`` and ``v_j`` (``i == j`` asks about a loop)."""
        return self.bits[max(i, j) - 1] == 1


@dataclass(frozen=True)
class DegreeSequence:
    """Sorted degrees ``d(G)`` together with the vertex-indexed raw degrees."""

    degrees: tuple[int, ...]
    by_vertex: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.degrees)) + ")"


def _as_sequence(b) -> BinarySequence:
    if isinstance(b, BinarySequence):
        return b
    if isinstance(b, str):
        return BinarySequence.parse(b)
    return BinarySequence(tuple(b))


def from_binary_sequence(b: BinarySequence | Iterable[int] | str) -> ThresholdGraph:
    return ThresholdGraph(_as_sequence(b))


def edges(G: ThresholdGraph) -> list[tuple[int, int]]:
    """Edge list with 1-based labels, sorted by (min, max); loops appear as ``(j, j)``.

    ``{v_i, v_j}`` with ``i <= j`` is an edge exactly when ``b_j = 1``.
    """
    out = []
    bits = G.bits
    for i in range(1, G.n + 1):
        for j in range(i, G.n + 1):
            if bits[j - 1]:
                out.append((i, j))
    return out


def adjacency_matrix(G: ThresholdGraph):
    """``A(G)`` with entry ``(i, j) = b_max(i, j)``; a loop is a single diagonal 1."""
    from antireg.matrix_ops import IntMatrix

    b = np.asarray(G.bits, dtype=np.int64)
    idx = np.arange(G.n)
    return IntMatrix(b[np.maximum.outer(idx, idx)])


def degree_sequence(G: ThresholdGraph) -> DegreeSequence:
    # deg(v_j) = j*b_j (loop + earlier vertices) + number of later dominating vertices
    bits = G.bits
    later = list(accumulate(reversed(bits)))[::-1]  # later[j] = sum(bits[j:])
    raw = tuple(
        (j + 1) * bits[j] + (later[j + 1] if j + 1 < G.n else 0) for j in range(G.n)
    )
    return DegreeSequence(tuple(sorted(raw)), raw)


def complement(G: ThresholdGraph) -> ThresholdGraph:
    """Flip every bit. ``A(G) + A(complement(G))`` is the all-ones matrix, diagonal included."""
    return ThresholdGraph(BinarySequence(tuple(1 - b for b in G.bits)))


def delete_vertex(G: ThresholdGraph, j: int) -> ThresholdGraph:
    """Remove the 1-based vertex ``v_j``; the remaining adjacencies keep their bits."""
    if not 1 <= j <= G.n:
        raise InvalidInputError(f"vertex v{j} does not exist in a graph on {G.n} vertices")
    if G.n == 1:
        raise InvalidInputError("cannot delete the only vertex")
    return ThresholdGraph(BinarySequence(G.bits[: j - 1] + G.bits[j:]))


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    return int(n)


def antiregular_connected(n: int) -> ThresholdGraph:
    """``G_n``: alternating sequence starting at ``n mod 2`` and ending at 1."""
    n = _check_n(n)
    return ThresholdGraph(BinarySequence(tuple((n - j) % 2 == 0 for j in range(1, n + 1))))


def antiregular_disconnected(n: int) -> ThresholdGraph:
    """``H_n``, the complement of ``G_n``; its sequence starts at ``(n+1) mod 2``."""
    return complement(antiregular_connected(n))


def is_antiregular(G: ThresholdGraph) -> bool:
    raw = degree_sequence(G).by_vertex
    return len(set(raw)) == len(raw)


def is_connected(G: ThresholdGraph) -> bool:
    """``b_n = 1``. On one vertex this makes the bare vertex ``H_1`` disconnected."""
    return G.bits[-1] == 1
