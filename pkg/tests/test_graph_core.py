import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from antireg.errors import InvalidInputError
from antireg.graph_core import (
    BinarySequence,
    adjacency_matrix,
    antiregular_connected,
    antiregular_disconnected,
    complement,
    degree_sequence,
    delete_vertex,
    edges,
    from_binary_sequence,
    is_antiregular,
    is_connected,
)

bit_lists = st.lists(st.integers(0, 1), min_size=1, max_size=40)


def build_by_process(bits):
    """Replay the vertex-by-vertex construction: a dominating vertex gets a loop
    and an edge to every earlier vertex, an isolated vertex gets nothing."""
    E = set()
    for j, b in enumerate(bits, start=1):
        if b:
            E.add((j, j))
            E.update((i, j) for i in range(1, j))
    return E


def degrees_from_edges(n, E):
    deg = [0] * (n + 1)
    for i, j in E:
        deg[i] += 1
        if i != j:
            deg[j] += 1
    return deg[1:]


def as_networkx(G):
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(edges(G))
    return g


# -- examples -----------------------------------------------------------------


def test_single_loop_vertex():
    G = from_binary_sequence([1])
    assert edges(G) == [(1, 1)]
    assert degree_sequence(G).degrees == (1,)
    assert is_connected(G)


def test_single_isolated_vertex():
    G = from_binary_sequence([0])
    assert edges(G) == []
    assert degree_sequence(G).degrees == (0,)
    assert not is_connected(G)


def test_edge_plus_loop():
    G = from_binary_sequence([0, 1])
    assert set(edges(G)) == build_by_process([0, 1]) == {(1, 2), (2, 2)}
    assert degree_sequence(G).degrees == (1, 2)


@pytest.mark.parametrize(
    "bits, expected",
    [
        ((1, 0, 1), [[1, 0, 1], [0, 0, 1], [1, 1, 1]]),
        ((0, 1), [[0, 1], [1, 1]]),
        ((0,), [[0]]),
    ],
)
def test_adjacency_examples(bits, expected):
    assert adjacency_matrix(from_binary_sequence(bits)).tolist() == expected


@pytest.mark.parametrize(
    "bits, expected",
    [((1, 0, 1), (1, 2, 3)), ((0, 1, 0), (0, 1, 2)), ((1,), (1,))],
)
def test_degree_examples(bits, expected):
    assert degree_sequence(from_binary_sequence(bits)).degrees == expected


def test_complement_examples():
    assert complement(from_binary_sequence("101")).bits == (0, 1, 0)
    assert complement(from_binary_sequence("0")).bits == (1,)


@pytest.mark.parametrize("n, bits", [(1, (1,)), (2, (0, 1)), (4, (0, 1, 0, 1))])
def test_connected_antiregular_sequences(n, bits):
    G = antiregular_connected(n)
    assert G.bits == bits
    assert degree_sequence(G).degrees == tuple(range(1, n + 1))


@pytest.mark.parametrize("n, bits", [(1, (0,)), (3, (0, 1, 0))])
def test_disconnected_antiregular_sequences(n, bits):
    assert antiregular_disconnected(n).bits == bits


@pytest.mark.parametrize("bad", [0, -3])
def test_generators_reject_n_below_one(bad):
    with pytest.raises(InvalidInputError):
        antiregular_connected(bad)
    with pytest.raises(InvalidInputError):
        antiregular_disconnected(bad)


@pytest.mark.parametrize("bad", [[], (), "", [0, 2], "10x"])
def test_rejects_invalid_sequences(bad):
    with pytest.raises(InvalidInputError):
        from_binary_sequence(bad)


def test_is_antiregular_examples():
    assert is_antiregular(antiregular_connected(5))
    assert not is_antiregular(from_binary_sequence("11"))
    assert is_antiregular(from_binary_sequence("0"))


@pytest.mark.parametrize("bits, expected", [("01", True), ("10", False), ("1", True)])
def test_is_connected_examples(bits, expected):
    assert is_connected(from_binary_sequence(bits)) is expected


def test_parse_accepts_separators():
    assert BinarySequence.parse("1, 0 ,1").bits == (1, 0, 1)


def test_equality_is_sequence_equality():
    assert from_binary_sequence("0101") == antiregular_connected(4)
    assert from_binary_sequence("0101") != from_binary_sequence("1010")


def test_edges_are_lexicographic():
    E = edges(from_binary_sequence("1011"))
    assert E == sorted(E)


# -- properties ---------------------------------------------------------------


@given(bit_lists)
def test_adjacency_rule(bits):
    A = adjacency_matrix(from_binary_sequence(bits)).entries
    n = len(bits)
    assert np.array_equal(A, A.T)
    assert set(np.unique(A)) <= {0, 1}
    for i in range(n):
        for j in range(n):
            assert A[i, j] == bits[max(i, j)]


@given(bit_lists)
def test_edges_match_construction_process(bits):
    G = from_binary_sequence(bits)
    assert set(edges(G)) == build_by_process(bits)


@given(bit_lists)
def test_degrees_match_edges_and_adjacency(bits):
    G = from_binary_sequence(bits)
    n = len(bits)
    raw = degree_sequence(G).by_vertex
    assert list(raw) == degrees_from_edges(n, build_by_process(bits))
    A = adjacency_matrix(G).entries
    off_diagonal = A.sum(axis=1) - np.diag(A)
    assert list(raw) == list(off_diagonal + np.asarray(bits))
    assert degree_sequence(G).degrees == tuple(sorted(raw))


@given(bit_lists)
def test_complement_sums_to_all_ones(bits):
    G = from_binary_sequence(bits)
    total = adjacency_matrix(G).entries + adjacency_matrix(complement(G)).entries
    assert np.all(total == 1)
    assert complement(complement(G)) == G


@given(bit_lists.filter(lambda b: len(b) > 1))
def test_connectivity_agrees_with_bfs(bits):
    G = from_binary_sequence(bits)
    assert is_connected(G) == nx.is_connected(as_networkx(G))


def test_single_vertex_connectivity_follows_last_bit():
    # one loopless vertex counts as disconnected (H_1), one looped vertex as connected (G_1)
    assert not is_connected(antiregular_disconnected(1))
    assert is_connected(antiregular_connected(1))


@given(bit_lists.filter(lambda b: len(b) > 1), st.data())
def test_delete_vertex_is_induced_subgraph(bits, data):
    G = from_binary_sequence(bits)
    j = data.draw(st.integers(1, len(bits)))
    A = adjacency_matrix(G).entries
    keep = [k for k in range(len(bits)) if k != j - 1]
    assert np.array_equal(adjacency_matrix(delete_vertex(G, j)).entries, A[np.ix_(keep, keep)])


@given(st.integers(1, 300))
def test_antiregular_pair_structure(n):
    G, H = antiregular_connected(n), antiregular_disconnected(n)
    assert degree_sequence(G).degrees == tuple(range(1, n + 1))
    assert degree_sequence(H).degrees == tuple(range(n))
    assert all(a != b for a, b in zip(G.bits, G.bits[1:]))
    assert complement(G) == H
    assert G.bits[0] == n % 2 and H.bits[0] == (n + 1) % 2
    assert is_connected(G) and not is_connected(H)


@given(st.integers(1, 200))
def test_deletion_property(n):
    assert degree_sequence(delete_vertex(antiregular_connected(n + 1), n + 1)).degrees == tuple(range(n))
    H = antiregular_disconnected(n + 1)
    v = degree_sequence(H).by_vertex.index(0) + 1
    assert degree_sequence(delete_vertex(H, v)).degrees == tuple(range(1, n + 1))
    assert delete_vertex(H, v) == antiregular_connected(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_only_antiregular_sequences_have_distinct_degrees(n):
    from itertools import product

    hits = {
        bits
        for bits in product((0, 1), repeat=n)
        if len(set(degrees_from_edges(n, build_by_process(bits)))) == n
    }
    assert hits == {antiregular_connected(n).bits, antiregular_disconnected(n).bits}
