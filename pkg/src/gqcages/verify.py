"""Independent certification of constructed graphs.

Certificates bundle degrees, exact girth with a witness cycle, the Moore
bound and the excess, plus named checks against expected values.  The
matching-condition checker and the Latin-square predicates work on the raw
construction data rather than on the finished graph.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .cage import moore_bound
from .graph import INFINITE, Graph, bfs_distances, girth_with_witness
from .zsets import ZSet

__all__ = [
    "Check",
    "Certificate",
    "certify",
    "is_cycle_in",
    "Violation",
    "MatchingReport",
    "check_matching_conditions",
    "check_latin",
    "rows_shift",
    "prime_row_shift_holds",
    "is_row_permuted_cyclic",
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    graph_id: str
    order: int
    size: int
    degree_profile: tuple[tuple[int, int], ...]
    girth: float
    girth_exact: bool
    girth_witness: tuple[int, ...] | None
    moore_bound_for: tuple[int, int] | None
    moore_bound: int | None
    excess: int | None
    checks: tuple[Check, ...]
    annotations: tuple[tuple[str, object], ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def regular_degree(self) -> int | None:
        return self.degree_profile[0][0] if len(self.degree_profile) == 1 else None

    def to_dict(self) -> dict:
        """Plain dict in the fixed serialization order; infinite girth becomes ``"inf"``."""
        return {
            "graph_id": self.graph_id,
            "order": self.order,
            "size": self.size,
            "degree_profile": [[d, c] for d, c in self.degree_profile],
            "girth": "inf" if self.girth == INFINITE else int(self.girth),
            "girth_exact": self.girth_exact,
            "girth_witness": list(self.girth_witness) if self.girth_witness is not None else None,
            "moore_bound_for": list(self.moore_bound_for) if self.moore_bound_for else None,
            "moore_bound": self.moore_bound,
            "excess": self.excess,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "annotations": dict(self.annotations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists distinct vertices, consecutive ones (cyclically) adjacent."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle)))


def certify(
    g: Graph,
    expected: Mapping[str, int] | None = None,
    graph_id: str = "graph",
    annotations: Mapping[str, object] | None = None,
) -> Certificate:
    """Compute every certificate field; each expectation mismatch is a failed check.

    ``expected`` may hold ``degree`` (regularity), ``girth`` and ``order``.
    A girth claim only counts as exact when a witness cycle of that length
    has been checked against the graph.
    """
    expected = dict(expected or {})
    unknown = set(expected) - {"degree", "girth", "order"}
    if unknown:
        raise ValueError(f"unknown expectations: {sorted(unknown)}")
    degs = Counter(g.degrees())
    profile = tuple(sorted(degs.items()))
    gval, witness = girth_with_witness(g)
    checks = []
    exact = False
    if witness is not None:
        exact = is_cycle_in(g, witness) and len(witness) == gval
        checks.append(Check("girth_witness", exact, f"{len(witness)}-cycle starting at {witness[0]}"))
    k = profile[0][0] if len(profile) == 1 else None
    mb_for = mb = excess = None
    if k is not None and k >= 2 and gval != INFINITE:
        mb_for = (k, int(gval))
        mb = moore_bound(k, int(gval))
        excess = g.n - mb
    if "degree" in expected:
        want = expected["degree"]
        ok = k == want
        detail = f"{want}-regular" if ok else f"expected {want}-regular, degree profile {dict(profile)}"
        checks.append(Check("degree", ok, detail))
    if "girth" in expected:
        want = expected["girth"]
        if gval != want:
            checks.append(Check("girth", False, f"expected {want}, computed {_fmt_girth(gval)}"))
        elif not exact:
            checks.append(Check("girth", False, f"girth >= {want}, exactness unconfirmed"))
        else:
            checks.append(Check("girth", True, f"exactly {want}"))
    if "order" in expected:
        want = expected["order"]
        checks.append(Check("order", g.n == want, f"expected {want}, got {g.n}"))
    return Certificate(
        graph_id=graph_id,
        order=g.n,
        size=g.edge_count,
        degree_profile=profile,
        girth=gval,
        girth_exact=exact,
        girth_witness=witness,
        moore_bound_for=mb_for,
        moore_bound=mb,
        excess=excess,
        checks=tuple(checks),
        annotations=tuple((annotations or {}).items()),
    )


def _fmt_girth(g: float) -> str:
    return "inf" if g == INFINITE else str(int(g))


# -- matching conditions --------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """A short cycle closed by one or two added matching edges.

    ``kind`` is ``"edge"`` when ``u v`` are already close in the excised
    graph, ``"pair"`` when two matching edges are joined at both ends by short
    paths.  ``length`` is the length of the cycle so formed.
    """

    kind: str
    first: str
    edge1: tuple[int, int]
    second: str | None
    edge2: tuple[int, int] | None
    length: int


@dataclass
class MatchingReport:
    violations: list[Violation] = field(default_factory=list)
    edges_checked: int = 0
    pairs_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return f"{len(self.violations)} violations over {self.edges_checked} edges, {self.pairs_checked} pairs"


def check_matching_conditions(
    g_minus_h: Graph,
    zsets: Iterable[ZSet],
    scope: Iterable[tuple[str, str]] | None = None,
    girth: int = 7,
) -> MatchingReport:
    """Brute-force search for cycles shorter than ``girth`` through the matchings.

    Distances are taken in ``g_minus_h``, before any matching edge is added.
    Each matching edge ``uv`` must have ``d(u, v) >= girth - 1``.  For each
    pair of matching edges ``u1v1``, ``u2v2`` with distinct endpoints,
    ``d(u1, u2) + d(v1, v2) + 2`` must reach ``girth`` in both orientations;
    with girth 7 this forbids in particular ``d(u1, u2) = d(v1, v2) = 2``.

    ``scope`` restricts the pair test to the given (family, family) pairs,
    unordered; by default every pair of edges is examined, within a set too.
    """
    zsets = list(zsets)
    edges = [(z.name, z.family, e) for z in zsets for e in z.matching]
    report = MatchingReport()
    if not edges:
        return report
    allowed = None
    if scope is not None:
        allowed = {frozenset(p) for p in scope}
    cutoff = girth - 2
    touched = sorted({v for _, _, e in edges for v in e})
    dist = {v: bfs_distances(g_minus_h, v, cutoff=cutoff) for v in touched}
    for name, _, (u, v) in edges:
        report.edges_checked += 1
        d = dist[u][v]
        if d + 1 < girth:
            report.violations.append(Violation("edge", name, (u, v), None, None, int(d) + 1))
    for (n1, f1, (u1, v1)), (n2, f2, (u2, v2)) in combinations(edges, 2):
        if allowed is not None and frozenset((f1, f2)) not in allowed:
            continue
        if {u1, v1} & {u2, v2}:
            continue
        report.pairs_checked += 1
        best = min(dist[u1][u2] + dist[v1][v2], dist[u1][v2] + dist[v1][u2]) + 2
        if best < girth:
            report.violations.append(Violation("pair", n1, (u1, v1), n2, (u2, v2), int(best)))
    return report


# -- Latin squares --------------------------------------------------------------


def _cells(sq) -> list[list]:
    cells = getattr(sq, "cells", sq)
    return [list(r) for r in cells]


def check_latin(sq) -> bool:
    """True iff ``sq`` (a LatinSquare or a list of rows) is Latin.

    The square must be n x n with exactly n symbols, each once per row and
    once per column.

    >>> check_latin([[0, 1], [1, 0]]), check_latin([[0, 0], [1, 1]])
    (True, False)
    """
    rows = _cells(sq)
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    if n == 0:
        return True
    symbols = set(rows[0])
    if len(symbols) != n:
        return False
    if any(set(r) != symbols for r in rows):
        return False
    return all(len({r[c] for r in rows}) == n for c in range(n))


def rows_shift(square_j, square_next) -> bool:
    """Row ``i+1`` of ``square_next`` equals row ``i`` of ``square_j`` wherever both exist."""
    ok = True
    for i in square_j.rows:
        if i + 1 in square_next.rows:
            ok &= square_next.row(i + 1) == square_j.row(i)
    return ok


def prime_row_shift_holds(field, symbol) -> bool:
    """``symbol(i+1, l, j+1) == symbol(i, l, j)`` for all in-range prime-case indices."""
    q = field.q
    for i in range(q - 1):
        for j in range(q - 1):
            if i == j:
                continue
            for l in range(1, q):
                if symbol(field, i + 1, l, j + 1) != symbol(field, i, l, j):
                    return False
    return True


def is_row_permuted_cyclic(sq, modulus: int | None = None) -> bool:
    """True iff every row reads ``c -> (shift + c) mod n`` over the column labels,
    with distinct shifts: a row-permuted cyclic addition table."""
    n = modulus if modulus is not None else sq.order
    shifts = []
    for row in sq.cells:
        offs = {(s - c) % n for s, c in zip(row, sq.cols)}
        if len(offs) != 1:
            return False
        shifts.append(offs.pop())
    return len(set(shifts)) == len(shifts)
