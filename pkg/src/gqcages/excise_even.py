"""Girth-7 graphs of order 2q^3 + q^2 + 2q from the cage, for q >= 4 a power of two.

A vertex x is removed together with its neighbourhood and the
neighbourhoods of q-1 of its neighbours.  The survivors that lost a
neighbour fall into sets X_{q-1}, X_q and X_ij (i < q-1, j < q), each of
even size q, and a perfect matching is added on every set.

The lines of X_ij are indexed by h through the points w_jh of the common
perp W_j.  For i != k every line of X_ij meets exactly one line of X_kl
outside H, which defines a "transport" permutation of the h-indices.  Two
matching edges related by a transport close a 6-cycle, so row i uses the
factor of a 1-factorization of K_q and the factors must stay disjoint under
every transport.  For j == l the transport is the identity and any
factorization works; for j != l it is not, and the round-robin
factorization already fails at q = 8.  The transports form a regular
elementary abelian 2-group, and the factorization by its orbits is
invariant under all of them, which is what :func:`build_matchings_even`
uses by default.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .cage import build_cage
from .exceptions import AmbiguousPortError, GirthViolationError, SpanDegenerateError
from .factorization import OneFactorization, one_factorize, translation_one_factorize
from .gf import make_field
from .graph import Graph, SurgerySpec, apply_surgery, girth_with_witness, mutual_second_neighbors
from .zsets import ZSet

__all__ = [
    "NeighborhoodLabeling",
    "ExcisionPlanEven",
    "EvenConstruction",
    "label_neighborhoods",
    "choose_labeling",
    "build_matchings_even",
    "port_indices",
    "transport_permutations",
    "construct_even",
    "build_gamma_q1_even",
    "even_order",
]

log = logging.getLogger(__name__)


def even_order(q: int) -> int:
    return 2 * q**3 + q**2 + 2 * q


def _check_even_q(q: int) -> None:
    field = make_field(q)
    if field.p != 2 or q < 4:
        raise ValueError(f"the even construction needs q >= 4 a power of two, got {q}")


@dataclass(frozen=True)
class NeighborhoodLabeling:
    """Labels around the excised vertex ``x``.

    ``xs[i]`` are the neighbours of ``x`` (ascending); ``xij[i][j]`` for
    ``j < q`` are the other neighbours of ``xs[i]``, and ``W[j]`` is the common
    perp of ``xij[0][j]`` and ``xij[1][j]`` without ``x``.
    """

    q: int
    x: int
    xs: tuple[int, ...]
    xij: tuple[tuple[int, ...], ...]
    W: tuple[tuple[int, ...], ...]

    def at(self, i: int, j: int) -> int:
        """``x_ij`` with the convention ``x_iq = x``."""
        return self.x if j == self.q else self.xij[i][j]


@dataclass(frozen=True)
class ExcisionPlanEven:
    H: frozenset
    zsets: tuple[ZSet, ...]

    def matching_edges(self) -> list[tuple[int, int]]:
        return [e for z in self.zsets for e in z.matching]

    def surgery(self) -> SurgerySpec:
        return SurgerySpec(self.H, tuple(self.matching_edges()))


def _pencil_partner(cage: Graph, x: int, a: int, z: int, line: int) -> int:
    # the point of ``line`` on the hyperbolic line through a and z
    perp = mutual_second_neighbors(cage, (a, z)) - {x}
    span = mutual_second_neighbors(cage, perp)
    hit = span.intersection(cage.adj[line])
    if len(hit) != 1:
        raise SpanDegenerateError(f"span of {a} and {z} meets N({line}) in {sorted(hit)}")
    return hit.pop()


def label_neighborhoods(cage: Graph, x: int, pairing: str = "sorted") -> NeighborhoodLabeling:
    """Label N(x) and the second neighbourhood of ``x`` through spans.

    ``pairing="sorted"`` matches the j-th neighbours of x_0 and x_1 in index
    order.  ``pairing="pencil"`` instead pairs x_0j with the point of x_1 on
    the hyperbolic line through x_0j and the first point z of x_q, so that
    all spans pass through z.

    The spans lie in x-perp and pairwise meet on some line through x, so
    x_ij cannot be distinct on every line; they must be distinct (and hence
    enumerate N(x_i) - x) for the excised lines i <= q-2.

    Raises
    ------
    SpanDegenerateError
        If some W_j does not have q elements, some x_ij is not unique, or two
        spans meet on an excised line.  The first two mean ``x`` is not a
        regular point of the quadrangle.
    """
    q = cage.degree(x) - 1
    xs = cage.adj[x]
    rest = [tuple(u for u in cage.adj[xi] if u != x) for xi in xs]
    if pairing == "sorted":
        partners = rest[1]
    elif pairing == "pencil":
        z = rest[q][0]
        partners = tuple(_pencil_partner(cage, x, a, z, xs[1]) for a in rest[0])
    else:
        raise ValueError(f"unknown pairing {pairing!r}")
    W = []
    xij = [[None] * q for _ in range(q + 1)]
    for j in range(q):
        a, b = rest[0][j], partners[j]
        w = mutual_second_neighbors(cage, (a, b)) - {x}
        if len(w) != q:
            raise SpanDegenerateError(f"|W_{j}| = {len(w)} at x = {x}, expected {q}")
        w = tuple(sorted(w))
        W.append(w)
        span = mutual_second_neighbors(cage, w)
        for i, xi in enumerate(xs):
            hit = span.intersection(cage.adj[xi])
            if len(hit) != 1:
                raise SpanDegenerateError(f"x_{i}{j} is not unique at x = {x}: {sorted(hit)}")
            xij[i][j] = hit.pop()
    if tuple(xij[0]) != rest[0] or tuple(xij[1]) != tuple(partners):
        raise SpanDegenerateError("span labeling does not reproduce x_0j and x_1j")
    for i in range(q - 1):
        if sorted(xij[i]) != sorted(rest[i]):
            raise SpanDegenerateError(f"two spans meet on the excised line x_{i} at x = {x}")
    return NeighborhoodLabeling(q, x, tuple(xs), tuple(tuple(r) for r in xij), tuple(W))


def choose_labeling(cage: Graph) -> NeighborhoodLabeling:
    """Label around the first side-0 vertex, then the first side-1 vertex.

    On each side the sorted pairing is tried before the pencil pairing.
    """
    errors = []
    for x in (0, cage.n // 2):
        for pairing in ("sorted", "pencil"):
            try:
                return label_neighborhoods(cage, x, pairing)
            except SpanDegenerateError as exc:
                log.info("labeling at x=%d with %s pairing failed: %s", x, pairing, exc)
                errors.append(str(exc))
    raise SpanDegenerateError("no regular labeling found: " + "; ".join(errors))


def _consecutive_pairs(vertices):
    vs = sorted(vertices)
    return tuple((vs[k], vs[k + 1]) for k in range(0, len(vs), 2))


def excised_set(cage: Graph, lab: NeighborhoodLabeling) -> frozenset:
    """H = {x} + N(x) + N(x_0) + ... + N(x_{q-2}), of size q^2 + 2."""
    H = {lab.x, *lab.xs}
    for i in range(lab.q - 1):
        H.update(cage.adj[lab.xs[i]])
    if len(H) != lab.q**2 + 2:
        raise AssertionError(f"|H| = {len(H)}, expected {lab.q**2 + 2}")
    return frozenset(H)


def port_indices(cage: Graph, lab: NeighborhoodLabeling) -> dict[tuple[int, int], tuple[int, ...]]:
    """``ports[i, j][h]`` is the line x_ijh of X_ij through w_jh, for i <= q-2."""
    q = lab.q
    ports = {}
    for i in range(q - 1):
        xi = lab.xs[i]
        for j in range(q):
            verts = {u for u in cage.adj[lab.xij[i][j]] if u != xi}
            row = []
            for h, w in enumerate(lab.W[j]):
                hits = verts.intersection(cage.adj[w])
                if len(hits) != 1:
                    raise AmbiguousPortError(f"w_{j}{h} has {len(hits)} neighbours in X_{i}{j}")
                row.append(hits.pop())
            if set(row) != verts:
                raise AmbiguousPortError(f"the points of W_{j} do not index X_{i}{j}")
            ports[i, j] = tuple(row)
    return ports


def transport_permutations(cage: Graph, lab: NeighborhoodLabeling, H=None, ports=None) -> set[tuple[int, ...]]:
    """All transports X_ij -> X_kl (i != k) as permutations of the h-indices.

    The line with index h in X_ij is sent to the line of X_kl sharing a
    surviving point with it.
    """
    q = lab.q
    H = excised_set(cage, lab) if H is None else H
    ports = port_indices(cage, lab) if ports is None else ports
    hindex = {}
    for (i, j), row in ports.items():
        for h, u in enumerate(row):
            hindex[i, j, u] = h
    # the surviving points on each line, once
    points = {u: {p for p in cage.adj[u] if p not in H} for row in ports.values() for u in row}
    perms = set()
    for (i, j), row in ports.items():
        for (k, l), other in ports.items():
            if i == k:
                continue
            perm = []
            for u in row:
                hit = [v for v in other if not points[u].isdisjoint(points[v])]
                if len(hit) != 1:
                    raise AmbiguousPortError(f"a line of X_{i}{j} meets {len(hit)} lines of X_{k}{l}")
                perm.append(hindex[k, l, hit[0]])
            perms.add(tuple(perm))
    return perms


def build_matchings_even(
    cage: Graph, lab: NeighborhoodLabeling, factorization: str | OneFactorization = "translation"
) -> ExcisionPlanEven:
    """Deleted set H and one perfect matching per Z-set.

    ``factorization`` selects the 1-factorization of K_q whose factor i is
    laid on the h-indices of every X_ij: ``"translation"`` (default) uses the
    orbits of the transport group, ``"circle"`` the round-robin method, and a
    :class:`OneFactorization` instance is used as given.
    """
    q, x = lab.q, lab.x
    H = excised_set(cage, lab)
    ports = port_indices(cage, lab)
    if factorization == "translation":
        fact = translation_one_factorize(transport_permutations(cage, lab, H, ports))
    elif factorization == "circle":
        fact = one_factorize(q)
    elif isinstance(factorization, OneFactorization):
        fact = factorization
    else:
        raise ValueError(f"unknown factorization {factorization!r}")
    if fact.n != q:
        raise ValueError(f"factorization of K_{fact.n} given, K_{q} needed")
    zsets = []
    for i in (q - 1, q):
        verts = tuple(u for u in cage.adj[lab.xs[i]] if u != x)
        zsets.append(ZSet(f"X{i}", "X", verts, _consecutive_pairs(verts)))
    for i in range(q - 1):
        for j in range(q):
            port = ports[i, j]
            matching = tuple((port[h], port[k]) for h, k in fact.factors[i])
            zsets.append(ZSet(f"X{i},{j}", "Xij", port, matching))
    for z in zsets:
        z.check()
    return ExcisionPlanEven(H, tuple(zsets))


@dataclass(frozen=True)
class EvenConstruction:
    """Every artifact of the even-q pipeline.

    ``minus_h`` is the cage with H deleted; ``local_zsets`` are the Z-sets in
    its indices, which are also the indices of ``graph``.
    """

    q: int
    cage: Graph
    labeling: NeighborhoodLabeling
    plan: ExcisionPlanEven
    minus_h: Graph
    local_zsets: tuple[ZSet, ...]
    graph: Graph
    witness: tuple[int, ...] | None = None


def construct_even(q: int, verify: bool = True, factorization="translation") -> EvenConstruction:
    """Run the even pipeline; with ``verify`` the result must have girth exactly 7."""
    _check_even_q(q)
    cage = build_cage(q)
    lab = choose_labeling(cage)
    plan = build_matchings_even(cage, lab, factorization)
    minus_h = apply_surgery(cage, SurgerySpec(plan.H))
    local = {old: new for new, old in enumerate(minus_h.origin)}
    local_zsets = tuple(z.relabel(local) for z in plan.zsets)
    graph = apply_surgery(cage, plan.surgery())
    if graph.n != even_order(q):
        raise AssertionError(f"order {graph.n}, expected {even_order(q)}")
    witness = None
    if verify:
        g, witness = girth_with_witness(graph)
        if g != 7:
            raise GirthViolationError(f"Gamma_{q}1 has girth {g}, expected 7", witness)
    return EvenConstruction(q, cage, lab, plan, minus_h, local_zsets, graph, witness)


def build_gamma_q1_even(q: int) -> Graph:
    """(q+1)-regular graph of girth 7 and order 2q^3 + q^2 + 2q."""
    return construct_even(q).graph
