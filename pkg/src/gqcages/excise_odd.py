"""Girth-7 graphs from the cage for odd prime powers q >= 5.

The excised set is built on a subdivided K_{2,q+1}: two centres
x = (inf,inf,inf)_1 and y = (0,0,0)_1, their neighbours x_i, y_i, and the
middle vertices s_i with N(x_i) & N(y_i) = {s_i}.  Deleting x, y, N(x),
N(y) and s_3..s_q leaves the deficient sets X_i, Y_i (side 1) and S_i
(side 0), each of even size q-1.  Perfect matchings are added on all of
them (Gamma_q1); s_0, s_1, s_2 are then spliced into one matching edge of
X_0, X_1, X_2 each (Gamma_q2), which is (q+1)-regular of girth 7.

Frame index i in 0..q is tied to a coordinate: i itself for prime q,
and 0, alpha^0, ..., alpha^(q-2) for a proper prime power, with q always
standing for infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cage import INF, VertexLabel, build_cage, cage_order
from .exceptions import (
    AmbiguousPortError,
    FrameMismatchError,
    GirthViolationError,
    HyperbolicLineDegenerateError,
)
from .factorization import one_factorize
from .gf import Field, make_field
from .graph import Graph, SurgerySpec, apply_surgery, girth_with_witness
from .zsets import ZSet

__all__ = [
    "AnchorFrame",
    "ExcisionPlanOdd",
    "OddConstruction",
    "LatinSquare",
    "frame_coordinate",
    "build_anchor_frame",
    "excised_set_odd",
    "deficient_sets",
    "build_matchings_S",
    "build_matchings_XY",
    "latin_symbol",
    "latin_square",
    "graph_latin_symbol",
    "construct_odd",
    "build_gamma_q1_odd",
    "build_gamma_q2",
    "odd_order",
    "stated_odd_order",
    "deficient_sets",
    "build_matchings_S",
    "build_matchings_XY",
    "plan_odd",
    "latin_symbol",
    "latin_square",
    "graph_latin_symbol",
    "construct_odd",
    "build_gamma_q1_odd",
    "build_gamma_q2",
]


def odd_order(q: int) -> int:
    """Order of Gamma_q2 as counted from the construction: 2q^3 + 2q^2 - q."""
    return cage_order(q) - (3 * q + 2)


def stated_odd_order(q: int) -> int:
    """The commonly quoted order for this family, one more than :func:`odd_order`."""
    return 2 * q**3 + 2 * q**2 - q + 1


def _check_odd_q(q: int) -> Field:
    field = make_field(q)
    if field.p == 2 or q < 5:
        raise ValueError(f"the odd construction needs an odd prime power q >= 5, got {q}")
    return field


def frame_coordinate(field: Field, i: int):
    """Coordinate attached to frame index ``i``."""
    q = field.q
    if not 0 <= i <= q:
        raise ValueError(f"frame index {i} outside 0..{q}")
    if i == q:
        return INF
    if field.is_prime:
        return field(i)
    return field.zero if i == 0 else field.exp(i - 1)


@dataclass(frozen=True)
class AnchorFrame:
    """Vertex indices of the subdivided K_{2,q+1} inside the cage."""

    q: int
    x: int
    y: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    ss: tuple[int, ...]


def build_anchor_frame(cage: Graph, field: Field) -> AnchorFrame:
    """Place the frame at x = (inf,inf,inf)_1, y = (0,0,0)_1.

    Raises
    ------
    FrameMismatchError
        If a coordinate formula disagrees with the cage's adjacency.
    """
    q = field.q
    zero = field.zero
    x = cage.index(VertexLabel(INF, INF, INF, 1))
    y = cage.index(VertexLabel(zero, zero, zero, 1))
    xs, ys, ss = [], [], []
    for i in range(q + 1):
        e = frame_coordinate(field, i)
        xs.append(cage.index(VertexLabel(INF, INF, e, 0)))
        ys.append(cage.index(VertexLabel(e, zero, zero, 0) if e is not INF else VertexLabel(INF, zero, zero, 0)))
        s_label = VertexLabel(INF, zero, e, 1) if e is not INF else VertexLabel(INF, INF, zero, 1)
        ss.append(cage.index(s_label))
    if sorted(xs) != list(cage.adj[x]) or sorted(ys) != list(cage.adj[y]):
        raise FrameMismatchError("x_i / y_i do not enumerate N(x) / N(y)")
    for i in range(q + 1):
        common = set(cage.adj[xs[i]]).intersection(cage.adj[ys[i]])
        if common != {ss[i]}:
            raise FrameMismatchError(f"N(x_{i}) & N(y_{i}) = {sorted(common)}, expected {{{ss[i]}}}")
    return AnchorFrame(q, x, y, tuple(xs), tuple(ys), tuple(ss))


def excised_set_odd(frame: AnchorFrame, cage: Graph) -> frozenset:
    """H = {x, y, s_3, ..., s_q} + N(x) + N(y), of size 3q + 2."""
    H = {frame.x, frame.y, *frame.ss[3:], *cage.adj[frame.x], *cage.adj[frame.y]}
    if len(H) != 3 * frame.q + 2:
        raise AssertionError(f"|H| = {len(H)}, expected {3 * frame.q + 2}")
    return frozenset(H)


def deficient_sets(cage: Graph, frame: AnchorFrame):
    """X_i, Y_i (i = 0..q) and S_i (i = 3..q) from adjacency.

    X_i and Y_i leave out s_i, which survives for i <= 2 but loses two
    neighbours rather than one.
    """
    q = frame.q
    X = [tuple(u for u in cage.adj[frame.xs[i]] if u not in (frame.x, frame.ss[i])) for i in range(q + 1)]
    Y = [tuple(u for u in cage.adj[frame.ys[i]] if u not in (frame.y, frame.ss[i])) for i in range(q + 1)]
    S = {
        i: tuple(u for u in cage.adj[frame.ss[i]] if u not in (frame.xs[i], frame.ys[i]))
        for i in range(3, q + 1)
    }
    return X, Y, S


# -- coordinate parametrisations of the deficient sets --------------------------


def _x_label(field: Field, i: int, t) -> VertexLabel:
    e = frame_coordinate(field, i)
    return VertexLabel(INF, INF, t, 1) if e is INF else VertexLabel(INF, t, e, 1)


def _y_label(field: Field, i: int, t) -> VertexLabel:
    e = frame_coordinate(field, i)
    if e is INF:
        return VertexLabel(field.zero, t, field.zero, 1)
    return VertexLabel(t, -(e * t), e * t * t, 1)


def _s_label(field: Field, i: int, t) -> VertexLabel:
    e = frame_coordinate(field, i)
    return VertexLabel(INF, field.zero, t, 0) if e is INF else VertexLabel(e, field.zero, t, 0)


def _assert_parametrised(cage, field, verts, param: Callable, name: str) -> None:
    expected = sorted(cage.index(param(t)) for t in field.nonzero())
    if expected != sorted(verts):
        raise FrameMismatchError(f"{name} does not match its coordinate formula")


# -- matchings ----------------------------------------------------------------


def build_matchings_S(cage: Graph, frame: AnchorFrame, H: frozenset | None = None) -> list[ZSet]:
    """M_{S_i} for i = 3..q through the hyperbolic line {w_1, ..., w_{q-1}}."""
    q = frame.q
    H = excised_set_odd(frame, cage) if H is None else H
    _, _, S = deficient_sets(cage, frame)
    common = None
    for i, verts in S.items():
        nbrs = {w for u in verts for w in cage.adj[u] if w not in H}
        common = nbrs if common is None else common & nbrs
    if len(common) != q - 1:
        raise HyperbolicLineDegenerateError(f"common neighbourhood of the S_i has {len(common)} elements")
    ws = sorted(common)
    factors = one_factorize(q - 1).factors
    zsets = []
    for i, verts in S.items():
        vset = set(verts)
        port = []
        for j, w in enumerate(ws):
            hits = vset.intersection(cage.adj[w])
            if len(hits) != 1:
                raise AmbiguousPortError(f"w_{j} has {len(hits)} neighbours in S_{i}")
            port.append(hits.pop())
        matching = tuple((port[a], port[b]) for a, b in factors[i - 3])
        zsets.append(ZSet(f"S{i}", "S", verts, matching))
    return zsets


def _x_pairs(field: Field):
    # pairs of nonzero parameters matched inside every X_i
    if field.is_prime:
        pairs = {frozenset((field(l), -field(l + 2))) for l in range(1, field.q - 2)}
        pairs.add(frozenset((field(-2), field(-1))))
    else:
        pairs = {frozenset((field.exp(2 * l), field.exp(2 * l + 1))) for l in range(1, (field.q - 1) // 2 + 1)}
    return sorted(tuple(sorted(p)) for p in pairs)


def _y_pairs(field: Field):
    if field.is_prime:
        pairs = {frozenset((field(t), -field(t))) for t in range(1, field.q)}
    else:
        pairs = {frozenset((field.exp(2 * t), field.exp(2 * t + 3))) for t in range(1, (field.q - 1) // 2 + 1)}
    return sorted(tuple(sorted(p)) for p in pairs)


def build_matchings_XY(cage: Graph, frame: AnchorFrame, field: Field) -> tuple[list[ZSet], list[ZSet]]:
    """M_{X_i} and M_{Y_i} (i = 0..q) from the coordinate pairings.

    Prime q pairs the X-parameter l with -(l+2) (plus -2 with -1) and the
    Y-parameter t with -t; other q pair alpha^(2l) with alpha^(2l+1) in X and
    alpha^(2t) with alpha^(2t+3) in Y.
    """
    q = frame.q
    X, Y, _ = deficient_sets(cage, frame)
    xp, yp = _x_pairs(field), _y_pairs(field)
    mx, my = [], []
    for i in range(q + 1):
        _assert_parametrised(cage, field, X[i], lambda t: _x_label(field, i, t), f"X_{i}")
        _assert_parametrised(cage, field, Y[i], lambda t: _y_label(field, i, t), f"Y_{i}")
        m = [(cage.index(_x_label(field, i, a)), cage.index(_x_label(field, i, b))) for a, b in xp]
        z = ZSet(f"X{i}", "X", X[i], m)
        z.check()
        mx.append(z)
        m = [(cage.index(_y_label(field, i, a)), cage.index(_y_label(field, i, b))) for a, b in yp]
        z = ZSet(f"Y{i}", "Y", Y[i], m)
        z.check()
        my.append(z)
    return mx, my


@dataclass(frozen=True)
class ExcisionPlanOdd:
    H: frozenset
    zsets: tuple[ZSet, ...]
    # (s_i, u_i, v_i) for i = 0, 1, 2, in cage indices
    rewires: tuple[tuple[int, int, int], ...]

    def matching_edges(self) -> list[tuple[int, int]]:
        return [e for z in self.zsets for e in z.matching]

    def surgery(self, rewired: bool) -> SurgerySpec:
        edges = self.matching_edges()
        if rewired:
            cut = {(u, v) for _, u, v in self.rewires}
            edges = [e for e in edges if e not in cut]
            for s, u, v in self.rewires:
                edges += [(s, u), (s, v)]
        return SurgerySpec(self.H, tuple(edges))


def plan_odd(cage: Graph, field: Field, frame: AnchorFrame) -> ExcisionPlanOdd:
    H = excised_set_odd(frame, cage)
    S = build_matchings_S(cage, frame, H)
    for z in S:
        i = int(z.name[1:])
        _assert_parametrised(cage, field, z.vertices, lambda t: _s_label(field, i, t), z.name)
        z.check()
    mx, my = build_matchings_XY(cage, frame, field)
    rewires = tuple((frame.ss[i], *mx[i].matching[0]) for i in range(3))
    return ExcisionPlanOdd(H, tuple(S + mx + my), rewires)


# -- Latin squares --------------------------------------------------------------


@dataclass(frozen=True)
class LatinSquare:
    """Square ``cells[r][c]`` with row labels ``rows`` and column labels ``cols``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.cells)

    def row(self, label: int) -> tuple[int, ...]:
        return self.cells[self.rows.index(label)]


def latin_symbol(field: Field, i: int, l: int, j: int) -> int:
    """Symbol s_{i l j}: the X_q parameter reached from y_i through X_j.

    Prime q solves ``s * (j - i) = l`` in GF(q), with ``i, l, j`` field
    values.  Other q solve ``alpha^s * (e_j - e_i) = alpha^l`` for the
    exponent s, with ``i, j`` frame indices in 0..q-1 (``e_0 = 0``,
    ``e_i = alpha^(i-1)``) and ``l`` an exponent.
    """
    if field.is_prime:
        if (i - j) % field.q == 0:
            raise ValueError(f"latin_symbol is undefined for i = j = {i}")
        return int(field(l) / (field(j) - field(i)))
    if i == j:
        raise ValueError(f"latin_symbol is undefined for i = j = {i}")
    diff = frame_coordinate(field, j) - frame_coordinate(field, i)
    return (l - field.log(diff)) % (field.q - 1)


def latin_square(field: Field, j: int) -> LatinSquare:
    """The j-th square: rows i != j, columns over the nonzero parameters.

    Prime q uses columns and symbols 1..q-1; other q use exponents 0..q-2.
    """
    q = field.q
    rows = tuple(i for i in range(q) if i != j)
    cols = tuple(range(1, q)) if field.is_prime else tuple(range(q - 1))
    cells = tuple(tuple(latin_symbol(field, i, l, j) for l in cols) for i in rows)
    return LatinSquare(rows, cols, cells)


def graph_latin_symbol(cage: Graph, field: Field, frame: AnchorFrame, i: int, l: int, j: int) -> int:
    """The same symbol read off the cage: the unique w in N(y_i) at distance two
    from the X_j vertex with parameter l, mapped to its X_q partner."""
    col = field(l) if field.is_prime else field.exp(l)
    target = cage.index(_x_label(field, j, col))
    second = {v for u in cage.adj[target] for v in cage.adj[u]} - {target}
    hits = [w for w in cage.adj[frame.ys[i]] if w in second]
    if len(hits) != 1:
        raise AmbiguousPortError(f"y_{i} reaches X_{j} vertex {l} through {len(hits)} vertices")
    w = hits[0]
    xq = {cage.index(_x_label(field, field.q, t)): t for t in field.nonzero()}
    second_w = {v for u in cage.adj[w] for v in cage.adj[u]}
    found = [t for v, t in xq.items() if v in second_w]
    if len(found) != 1:
        raise AmbiguousPortError(f"w reaches {len(found)} vertices of X_q")
    t = found[0]
    return int(t) if field.is_prime else field.log(t)


# -- pipeline -------------------------------------------------------------------


@dataclass(frozen=True)
class OddConstruction:
    """Every artifact of the odd pipeline; ``local_zsets`` index ``minus_h``,
    ``graph1`` and ``graph2`` alike."""

    q: int
    field: Field
    cage: Graph
    frame: AnchorFrame
    plan: ExcisionPlanOdd
    minus_h: Graph
    local_zsets: tuple[ZSet, ...]
    local_rewires: tuple[tuple[int, int, int], ...]
    graph1: Graph
    graph2: Graph
    witness: tuple[int, ...] | None = None


def construct_odd(q: int, verify: bool = True) -> OddConstruction:
    """Run the odd pipeline; with ``verify`` Gamma_q2 must have girth exactly 7."""
    field = _check_odd_q(q)
    cage = build_cage(field)
    frame = build_anchor_frame(cage, field)
    plan = plan_odd(cage, field, frame)
    minus_h = apply_surgery(cage, SurgerySpec(plan.H))
    local = {old: new for new, old in enumerate(minus_h.origin)}
    local_zsets = tuple(z.relabel(local) for z in plan.zsets)
    local_rewires = tuple(tuple(local[v] for v in r) for r in plan.rewires)
    graph1 = apply_surgery(cage, plan.surgery(rewired=False))
    graph2 = apply_surgery(cage, plan.surgery(rewired=True))
    if graph2.n != odd_order(q):
        raise AssertionError(f"order {graph2.n}, expected {odd_order(q)}")
    witness = None
    if verify:
        g, witness = girth_with_witness(graph2)
        if g != 7:
            raise GirthViolationError(f"Gamma_{q}2 has girth {g}, expected 7", witness)
    return OddConstruction(q, field, cage, frame, plan, minus_h, local_zsets, local_rewires, graph1, graph2, witness)


def build_gamma_q1_odd(q: int) -> Graph:
    """Gamma_q1: degree q+1 except s_0, s_1, s_2 at degree q-1."""
    return construct_odd(q, verify=False).graph1


def build_gamma_q2(q: int) -> Graph:
    """(q+1)-regular graph of girth 7 and order 2q^3 + 2q^2 - q."""
    return construct_odd(q).graph2
