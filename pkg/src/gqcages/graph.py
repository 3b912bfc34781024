"""Immutable indexed graphs plus the distance, girth and surgery routines
shared by the cage and both excision constructions."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

__all__ = [
    "Graph",
    "SurgerySpec",
    "INFINITE",
    "girth",
    "girth_with_witness",
    "bfs_distances",
    "bfs_tree",
    "second_neighborhood",
    "mutual_second_neighbors",
    "common_neighbors",
    "apply_surgery",
    "is_perfect_matching",
    "matching_violation",
    "cycle_graph",
    "canonical_cycle",
]

INFINITE = math.inf

# roots processed per bit-parallel BFS sweep; bounds big-int width
_ROOT_BATCH = 2048


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as sorted tuples.  ``labels`` optionally maps each
    index to a hashable vertex label (cage coordinates); derived graphs keep
    ``origin``, the index of each vertex in the graph they were cut from.
    """

    __slots__ = ("n", "adj", "labels", "origin", "_index", "_edge_count")

    def __init__(self, adj: Sequence[Iterable[int]], labels=None, origin=None):
        adj = [list(nbrs) for nbrs in adj]
        self.n = len(adj)
        self.adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adj)
        self.labels = tuple(labels) if labels is not None else None
        self.origin = tuple(origin) if origin is not None else None
        self._index = None
        deg_sum = 0
        for v, nbrs in enumerate(self.adj):
            deg_sum += len(nbrs)
            if len(nbrs) != len(adj[v]):
                raise ValueError(f"multi-edge at vertex {v}")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
        sets = [set(nbrs) for nbrs in self.adj]
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in sets[u]:
                    raise ValueError(f"adjacency not symmetric: {v}->{u}")
        self._edge_count = deg_sum // 2
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels are not distinct")
        if self.origin is not None and len(self.origin) != self.n:
            raise ValueError("origin map does not match vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj, labels=labels)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in ascending order."""
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj[u]
        # adjacency lists are sorted; bisect is overkill for degree ~ q+1
        return v in nbrs

    def index(self, label: Hashable) -> int:
        """Vertex index of ``label``."""
        if self.labels is None:
            raise ValueError("graph carries no labels")
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v


@dataclass(frozen=True)
class SurgerySpec:
    """Vertices to delete and edges to add, in the indices of the input graph."""

    delete: frozenset = field(default_factory=frozenset)
    add_edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "delete", frozenset(self.delete))
        object.__setattr__(self, "add_edges", tuple(tuple(e) for e in self.add_edges))


# -- distances ---------------------------------------------------------------


def bfs_distances(g: Graph, root: int, cutoff: int | None = None) -> list[float]:
    """Unweighted distances from ``root``; vertices beyond ``cutoff`` get ``inf``."""
    dist = [INFINITE] * g.n
    dist[root] = 0
    queue = deque([root])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u]
        if cutoff is not None and du >= cutoff:
            continue
        for w in adj[u]:
            if dist[w] == INFINITE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_tree(g: Graph, root: int) -> tuple[list[float], list[int]]:
    """Distances and BFS parents (smallest-index parent wins) from ``root``."""
    dist = [INFINITE] * g.n
    parent = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == INFINITE:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    return set(g.adj[u]).intersection(g.adj[v])


def second_neighborhood(g: Graph, v: int) -> set[int]:
    """Vertices at distance exactly two from ``v``."""
    first = set(g.adj[v])
    out = set()
    for u in first:
        out.update(g.adj[u])
    out.discard(v)
    return out - first


def mutual_second_neighbors(g: Graph, vertices: Iterable[int]) -> set[int]:
    """Intersection of the second neighbourhoods of ``vertices``."""
    vertices = list(vertices)
    if not vertices:
        raise ValueError("mutual_second_neighbors needs a nonempty vertex set")
    result = second_neighborhood(g, vertices[0])
    for v in vertices[1:]:
        if not result:
            break
        result &= second_neighborhood(g, v)
    return result


# -- girth -------------------------------------------------------------------


def _shortest_cycle_roots(g: Graph, roots: Sequence[int], bound: float):
    """Bit-parallel BFS from every root in ``roots`` at once.

    Returns ``(length, mask)`` where ``length`` is the shortest cycle length
    detected from any of the roots (``inf`` if none below ``bound``) and bit
    ``k`` of ``mask`` is set when ``roots[k]`` detects a cycle of that length.

    For a root r, a cycle of length 2d+1 is detected when an edge joins two
    vertices at BFS level d, and one of length 2d+2 when a vertex at level
    d+1 has two parents at level d.  Each detection certifies a closed walk
    containing a cycle no longer than the detected length, and every root on
    a shortest cycle detects it at exactly that length.
    """
    adj = g.adj
    n = g.n
    frontier = [0] * n
    for k, r in enumerate(roots):
        frontier[r] |= 1 << k
    visited = list(frontier)
    edges = g.edges()
    d = 0
    while 2 * d + 1 < bound:
        # odd cycles closed inside level d
        mask = 0
        for u, v in edges:
            both = frontier[u] & frontier[v]
            if both:
                mask |= both
        if mask:
            return 2 * d + 1, mask
        if 2 * d + 2 >= bound:
            break
        new_frontier = [0] * n
        mask = 0
        alive = False
        for v in range(n):
            once = twice = 0
            for u in adj[v]:
                f = frontier[u]
                if f:
                    twice |= once & f
                    once |= f
            fresh = once & ~visited[v]
            if fresh:
                alive = True
                new_frontier[v] = fresh
                visited[v] |= fresh
                mask |= twice & fresh
        if mask:
            return 2 * d + 2, mask
        if not alive:
            break
        frontier = new_frontier
        d += 1
    return INFINITE, 0


def _girth_and_roots(g: Graph, batch: int = _ROOT_BATCH):
    best = INFINITE
    on_cycle: list[int] = []
    for start in range(0, g.n, batch):
        roots = list(range(start, min(start + batch, g.n)))
        # a root on a shortest cycle detects it exactly; bound+1 keeps ties
        length, mask = _shortest_cycle_roots(g, roots, best + 1)
        if length < best:
            best, on_cycle = length, []
        if length == best and mask:
            on_cycle.extend(r for k, r in enumerate(roots) if mask >> k & 1)
    return best, on_cycle


def girth(g: Graph) -> float:
    """Exact girth; ``inf`` for forests."""
    return _girth_and_roots(g)[0]


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a vertex cycle to start at its minimum, smaller neighbour second."""
    c = list(cycle)
    k = c.index(min(c))
    c = c[k:] + c[:k]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def _least_cycle_through(g: Graph, root: int, length: int) -> tuple[int, ...] | None:
    # DFS in ascending neighbour order, pruned by the distance back to root;
    # the first closed cycle found is the lexicographically least
    dist = bfs_distances(g, root, cutoff=length)
    path = [root]
    on_path = {root}
    stack = [iter(g.adj[root])]
    while stack:
        step = len(path)
        for w in stack[-1]:
            if w == root:
                if step == length:
                    return tuple(path)
                continue
            if w < root or w in on_path or step == length or step + dist[w] > length:
                continue
            path.append(w)
            on_path.add(w)
            stack.append(iter(g.adj[w]))
            break
        else:
            stack.pop()
            on_path.discard(path.pop())
    return None


def girth_with_witness(g: Graph) -> tuple[float, tuple[int, ...] | None]:
    """Girth together with the lexicographically least shortest cycle.

    The witness starts at the smallest vertex lying on any shortest cycle
    and, among the shortest cycles through it, is lexicographically least.
    """
    best, roots = _girth_and_roots(g)
    if best == INFINITE:
        return best, None
    witness = _least_cycle_through(g, min(roots), int(best))
    if witness is None:  # pragma: no cover - every detecting root lies on a shortest cycle
        raise AssertionError(f"no {best}-cycle through vertex {min(roots)}")
    return best, witness


# -- surgery -----------------------------------------------------------------


def apply_surgery(g: Graph, spec: SurgerySpec) -> Graph:
    """Delete ``spec.delete`` and add ``spec.add_edges``; returns a new graph.

    Surviving vertices are renumbered densely in their original order; the
    result's ``origin`` maps back to ``g`` (composed with ``g.origin`` when
    ``g`` was itself derived) and labels are inherited.
    """
    deleted = spec.delete
    for v in deleted:
        if not 0 <= v < g.n:
            raise ValueError(f"deleted vertex {v} out of range")
    keep = [v for v in range(g.n) if v not in deleted]
    new_index = {v: i for i, v in enumerate(keep)}
    adj = [[new_index[u] for u in g.adj[v] if u not in deleted] for v in keep]
    existing = set()
    for u, v in spec.add_edges:
        if u in deleted or v in deleted:
            raise ValueError(f"added edge ({u}, {v}) touches a deleted vertex")
        if u == v:
            raise ValueError(f"added edge ({u}, {v}) is a loop")
        key = (min(u, v), max(u, v))
        if key in existing or g.has_edge(u, v):
            raise ValueError(f"duplicate edge {key}")
        existing.add(key)
        adj[new_index[u]].append(new_index[v])
        adj[new_index[v]].append(new_index[u])
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    origin = [g.origin[v] for v in keep] if g.origin is not None else keep
    return Graph(adj, labels=labels, origin=origin)


def matching_violation(pairs: Iterable[tuple[int, int]], on: Iterable) -> str | None:
    """First reason ``pairs`` is not a perfect matching of ``on`` (``None`` if it is)."""
    on = set(on)
    covered = set()
    for u, v in pairs:
        for w in (u, v):
            if w not in on:
                return f"vertex {w} is outside the matched set"
            if w in covered:
                return f"vertex {w} is covered twice"
            covered.add(w)
        if u == v:
            return f"loop at {u}"
    missing = on - covered
    if missing:
        return f"vertex {min(missing)} is not covered"
    return None


def is_perfect_matching(pairs: Iterable[tuple[int, int]], on: Iterable) -> bool:
    return matching_violation(pairs, on) is None


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
