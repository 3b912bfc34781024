"""The (q+1, 8)-cage as the incidence graph of the generalized quadrangle
W(q), in the (a, b, c)_r coordinatization, and the Moore bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .gf import Field, FieldElement, make_field
from .graph import Graph

__all__ = [
    "INF",
    "Infinity",
    "VertexLabel",
    "moore_bound",
    "cage_labels",
    "neighbors",
    "build_cage",
    "cage_order",
    "format_label",
    "parse_label",
]


class Infinity:
    """The extra coordinate symbol; it takes part in no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

Coord = Union[FieldElement, Infinity]


def _coord_key(c: Coord):
    return (1,) if c is INF else (0, c.coeffs)


@dataclass(frozen=True)
class VertexLabel:
    """Coordinate triple ``(a, b, c)_side``.

    Valid shapes are ``(a, b, c)`` with ``a`` finite or infinite and ``b, c``
    finite, and ``(inf, inf, a)`` with ``a`` finite or infinite.
    """

    a: Coord
    b: Coord
    c: Coord
    side: int

    def __post_init__(self):
        if self.side not in (0, 1):
            raise ValueError(f"side must be 0 or 1, got {self.side}")
        if self.b is INF:
            if self.a is not INF:
                raise ValueError(f"malformed label {self}: b = inf requires a = inf")
        elif self.c is INF:
            raise ValueError(f"malformed label {self}: c = inf requires a = b = inf")

    def sort_key(self):
        return (self.side, _coord_key(self.a), _coord_key(self.b), _coord_key(self.c))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_label(self)


def format_label(v: VertexLabel) -> str:
    """``(a,b,c)_r`` with ``inf`` for the infinite symbol."""
    return f"({v.a},{v.b},{v.c})_{v.side}"


def parse_label(text: str, field: Field) -> VertexLabel:
    """Inverse of :func:`format_label` for the given field."""
    body, side = text.rsplit("_", 1)
    parts = body.strip("()").split(",")
    if len(parts) != 3:
        raise ValueError(f"cannot parse label {text!r}")
    lookup = {str(e): e for e in field}
    coords = [INF if t == "inf" else lookup[t] for t in parts]
    return VertexLabel(*coords, int(side))


def moore_bound(k: int, g: int) -> int:
    """Moore lower bound n0(k, g) on the order of a k-regular graph of girth g.

    >>> moore_bound(3, 8)
    30
    >>> moore_bound(6, 7)
    187
    """
    if k < 2 or g < 3:
        raise ValueError(f"moore_bound needs k >= 2 and g >= 3, got k={k}, g={g}")
    if g % 2:
        return 1 + k * sum((k - 1) ** i for i in range((g - 3) // 2 + 1))
    return 2 * sum((k - 1) ** i for i in range(g // 2))


def cage_order(q: int) -> int:
    return 2 * (q**3 + q**2 + q + 1)


def cage_labels(field: Field, side: int) -> list[VertexLabel]:
    """All labels of one side, in ascending order (infinity greatest)."""
    fin = list(field.elements())
    first = fin + [INF]
    labels = [VertexLabel(a, b, c, side) for a in first for b in fin for c in fin]
    labels += [VertexLabel(INF, INF, a, side) for a in first]
    return sorted(labels, key=VertexLabel.sort_key)


def neighbors(field: Field, v: VertexLabel) -> set[VertexLabel]:
    """Side-0 neighbours of the side-1 vertex ``v``."""
    if v.side != 1:
        raise ValueError(f"neighbors() expects a side-1 label, got {v}")
    a, b, c = v.a, v.b, v.c
    if b is INF:
        # (inf, inf, a): lines through the point (inf, inf, inf)
        return {VertexLabel(INF, c, x, 0) for x in field} | {VertexLabel(INF, INF, INF, 0)}
    if a is INF:
        return {VertexLabel(c, b, x, 0) for x in field} | {VertexLabel(INF, INF, c, 0)}
    two_ab_c = 2 * a * b + c
    a2 = a * a
    out = {VertexLabel(x, a * x + b, a2 * x + two_ab_c, 0) for x in field}
    out.add(VertexLabel(INF, a, c, 0))
    return out


def build_cage(q: int | Field) -> Graph:
    """Incidence graph of W(q): (q+1)-regular, bipartite, girth 8.

    Indices follow the label order: all of side 0, then side 1, each
    ascending with infinity the greatest coordinate value.  Side-0
    adjacency is the inverse of the side-1 rule.
    """
    field = q if isinstance(q, Field) else make_field(q)
    labels = cage_labels(field, 0) + cage_labels(field, 1)
    index = {lab: i for i, lab in enumerate(labels)}
    adj: list[list[int]] = [[] for _ in labels]
    half = len(labels) // 2
    for i in range(half, len(labels)):
        for u in neighbors(field, labels[i]):
            j = index[u]
            adj[i].append(j)
            adj[j].append(i)
    k = field.q + 1
    for v, nbrs in enumerate(adj):
        if len(nbrs) != k or len(set(nbrs)) != k:
            raise AssertionError(f"cage vertex {labels[v]} has degree {len(set(nbrs))}, expected {k}")
    return Graph(adj, labels=labels)
