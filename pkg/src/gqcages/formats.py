"""Graph file formats: graph6, DIMACS, edge list, and the labels sidecar."""

from __future__ import annotations

import json
import math

from .cage import format_label
from .graph import Graph

__all__ = ["FORMATS", "GRAPH_FORMATS", "encode", "decode", "encode_labels", "decode_labels"]

GRAPH_FORMATS = ("graph6", "dimacs", "edgelist")
FORMATS = GRAPH_FORMATS + ("labels-json", "cert-json")


def _graph6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 1 << 18:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode {n} vertices")


def encode_graph6(g: Graph) -> bytes:
    """Standard graph6 line (with trailing newline).

    >>> from gqcages.graph import Graph
    >>> encode_graph6(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    b'Bw\\n'
    """
    n = g.n
    body = bytearray((n * (n - 1) // 2 + 5) // 6)
    for i, j in g.edges():
        k = j * (j - 1) // 2 + i  # column-wise upper triangle
        body[k // 6] |= 32 >> (k % 6)
    return _graph6_size(n) + bytes(b + 63 for b in body) + b"\n"


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        n, rest = data[0] - 63, data[1:]
    elif len(data) > 1 and data[1] == 126:
        n, rest = _sixes(data[2:8]), data[8:]
    else:
        n, rest = _sixes(data[1:4]), data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {need}")
    if any(not 63 <= b <= 126 for b in rest):
        raise ValueError("invalid graph6 byte")
    edges = []
    j = 1
    for pos, b in enumerate(rest):
        b -= 63
        if not b:
            continue
        for s in range(6):
            if b & (32 >> s):
                k = 6 * pos + s
                # recover column j from the triangular index
                j = (1 + math.isqrt(8 * k + 1)) // 2
                if j * (j - 1) // 2 > k:
                    j -= 1
                edges.append((k - j * (j - 1) // 2, j))
    if edges and edges[-1][1] >= n:
        raise ValueError("graph6 padding bits are set")
    return Graph.from_edges(n, edges)


def _sixes(chunk: bytes) -> int:
    val = 0
    for b in chunk:
        val = val << 6 | (b - 63)
    return val


def encode_dimacs(g: Graph) -> bytes:
    """``p edge n m`` then 1-based ``e u v`` lines, u < v.

    Edges are grouped by their larger endpoint, nearest smaller endpoint
    first, so a triangle reads ``e 1 2``, ``e 2 3``, ``e 1 3``.
    """
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in sorted(g.edges(), key=lambda e: (e[1], -e[0]))]
    return ("\n".join(lines) + "\n").encode("ascii")


def decode_dimacs(data: bytes | str) -> Graph:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    n = None
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            n = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"unexpected DIMACS line {line!r}")
    if n is None:
        raise ValueError("DIMACS input has no problem line")
    return Graph.from_edges(n, edges)


def encode_edgelist(g: Graph) -> bytes:
    """One ``u v`` line per edge, 0-based, ``u < v``, sorted.

    Isolated trailing vertices are not representable; the vertex count is
    taken as one more than the largest index on decode.
    """
    return "".join(f"{u} {v}\n" for u, v in g.edges()).encode("ascii")


def decode_edgelist(data: bytes | str, n: int | None = None) -> Graph:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    edges = [tuple(map(int, line.split())) for line in text.splitlines() if line.strip()]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def encode_labels(g: Graph) -> bytes:
    """JSON object mapping each index to its ``(a,b,c)_r`` label."""
    if g.labels is None:
        raise ValueError("graph carries no labels")
    mapping = {str(i): format_label(lab) for i, lab in enumerate(g.labels)}
    return (json.dumps(mapping, indent=1) + "\n").encode("utf-8")


def decode_labels(data: bytes | str) -> dict[int, str]:
    return {int(k): v for k, v in json.loads(data).items()}


_ENCODERS = {"graph6": encode_graph6, "dimacs": encode_dimacs, "edgelist": encode_edgelist, "labels-json": encode_labels}
_DECODERS = {"graph6": decode_graph6, "dimacs": decode_dimacs, "edgelist": decode_edgelist}


def encode(g: Graph, fmt: str) -> bytes:
    """Serialize ``g`` in one of the graph formats or ``labels-json``."""
    try:
        return _ENCODERS[fmt](g)
    except KeyError:
        raise ValueError(f"unsupported format {fmt!r}; choose from {sorted(_ENCODERS)}") from None


def decode(data: bytes | str, fmt: str) -> Graph:
    try:
        return _DECODERS[fmt](data)
    except KeyError:
        raise ValueError(f"no decoder for format {fmt!r}; choose from {sorted(_DECODERS)}") from None
