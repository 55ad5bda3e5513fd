"""File formats: DOT, Matrix Market, CSV, JSON.

All writers are byte-stable: fixed ordering, LF line endings, floats with 17
significant digits, no timestamps.
"""

from __future__ import annotations

import json

from antireg.errors import InvalidInputError
from antireg.graph_core import ThresholdGraph, adjacency_matrix, degree_sequence, edges, is_connected
from antireg.matrix_ops import IntMatrix

FORMATS = ("dot", "matrix-market", "csv", "json")
JSON_SCHEMA_VERSION = 1


def fmt_float(x: float) -> str:
    return f"{x:.17g}"


def to_dot(G: ThresholdGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  v{j};" for j in range(1, G.n + 1)]
    lines += [f"  v{i} -- v{j};" for i, j in edges(G)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_matrix_market(A: IntMatrix) -> str:
    """Coordinate / integer / symmetric; lower triangle, column-major, nonzeros only."""
    if not A.is_symmetric():
        raise InvalidInputError("Matrix Market symmetric export needs a symmetric matrix")
    a = A.entries
    n = A.n
    entries = [(i + 1, j + 1, int(a[i, j])) for j in range(n) for i in range(j, n) if a[i, j] != 0]
    lines = ["%%MatrixMarket matrix coordinate integer symmetric", f"{n} {n} {len(entries)}"]
    lines += [f"{i} {j} {v}" for i, j, v in entries]
    return "\n".join(lines) + "\n"


def read_matrix_market(text: str) -> IntMatrix:
    """Parse a coordinate integer Matrix Market file (``general`` or ``symmetric``)."""
    lines = text.splitlines()
    if not lines or not lines[0].lower().startswith("%%matrixmarket"):
        raise InvalidInputError("missing %%MatrixMarket header")
    header = lines[0].lower().split()
    if len(header) != 5 or header[1:4] != ["matrix", "coordinate", "integer"]:
        raise InvalidInputError(f"unsupported Matrix Market header: {lines[0]!r}")
    symmetry = header[4]
    if symmetry not in ("general", "symmetric"):
        raise InvalidInputError(f"unsupported symmetry {symmetry!r}")
    body = [ln for ln in lines[1:] if ln.strip() and not ln.startswith("%")]
    rows, cols, nnz = (int(t) for t in body[0].split())
    if rows != cols:
        raise InvalidInputError("matrix is not square")
    if len(body) - 1 != nnz:
        raise InvalidInputError(f"expected {nnz} entries, found {len(body) - 1}")
    a = [[0] * rows for _ in range(rows)]
    for ln in body[1:]:
        i, j, v = (int(t) for t in ln.split())
        a[i - 1][j - 1] = v
        if symmetry == "symmetric":
            a[j - 1][i - 1] = v
    return IntMatrix(a)


def to_csv_edges(G: ThresholdGraph) -> str:
    """Edge list ``u,v`` with 1-based labels; loops appear as ``j,j``."""
    return "u,v\n" + "".join(f"{i},{j}\n" for i, j in edges(G))


def to_json(G: ThresholdGraph) -> str:
    doc = {
        "schema": JSON_SCHEMA_VERSION,
        "n": G.n,
        "sequence": list(G.bits),
        "degrees": list(degree_sequence(G).degrees),
        "connected": is_connected(G),
        "adjacency": adjacency_matrix(G).tolist(),
    }
    return json.dumps(doc) + "\n"


def render_graph(G: ThresholdGraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(G)
    if fmt == "matrix-market":
        return to_matrix_market(adjacency_matrix(G))
    if fmt == "csv":
        return to_csv_edges(G)
    if fmt == "json":
        return to_json(G)
    raise InvalidInputError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def spectrum_csv_rows(spectrum) -> list[str]:
    return [f"{k},{fmt_float(v)},{spectrum.method}" for k, v in enumerate(spectrum.values, start=1)]


def density_csv(rows) -> str:
    out = ["grid_point,min_distance,witness_n,witness_j"]
    out += [f"{fmt_float(r.grid_point)},{fmt_float(r.min_distance)},{r.witness_n},{r.witness_j}" for r in rows]
    return "\n".join(out) + "\n"
