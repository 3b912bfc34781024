from itertools import combinations

import pytest

from gqcages.cage import INF, VertexLabel, cage_order
from gqcages.excise_odd import (
    build_gamma_q2,
    construct_odd,
    deficient_sets,
    frame_coordinate,
    graph_latin_symbol,
    latin_square,
    latin_symbol,
    odd_order,
    stated_odd_order,
)
from gqcages.gf import make_field
from gqcages.graph import bfs_distances, girth_with_witness
from gqcages.verify import check_latin, check_matching_conditions, is_cycle_in, is_row_permuted_cyclic, prime_row_shift_holds
from builds import odd_build

ODD_Q = [5, 7, 9]


def _labels(c, vertices):
    return {c.minus_h.labels[v] for v in vertices}


def test_frame_q5(odd5):
    F = make_field(5)
    cage, fr = odd5.cage, odd5.frame
    assert cage.labels[fr.x] == VertexLabel(INF, INF, INF, 1)
    assert cage.labels[fr.y] == VertexLabel(F.zero, F.zero, F.zero, 1)
    common = set(cage.adj[fr.xs[2]]) & set(cage.adj[fr.ys[2]])
    assert {cage.labels[v] for v in common} == {VertexLabel(INF, F.zero, F(2), 1)}
    assert cage.labels[fr.ss[5]] == VertexLabel(INF, INF, F.zero, 1)


@pytest.mark.parametrize("q", ODD_Q)
def test_frame_is_subdivided_k2(q):
    c = odd_build(q)
    cage, fr = c.cage, c.frame
    for i in range(q + 1):
        assert cage.has_edge(fr.x, fr.xs[i]) and cage.has_edge(fr.y, fr.ys[i])
        assert cage.has_edge(fr.xs[i], fr.ss[i]) and cage.has_edge(fr.ys[i], fr.ss[i])
    assert len(set(fr.ss)) == q + 1


def test_frame_coordinates():
    F9 = make_field(9)
    assert frame_coordinate(F9, 0) == F9.zero
    assert frame_coordinate(F9, 1) == F9.one
    assert frame_coordinate(F9, 2) == F9.alpha
    assert frame_coordinate(F9, 9) is INF
    assert frame_coordinate(make_field(7), 3) == 3
    with pytest.raises(ValueError):
        frame_coordinate(F9, 10)


def test_s_sets_prime(odd5):
    F = make_field(5)
    _, _, S = deficient_sets(odd5.cage, odd5.frame)
    for i in (3, 4):
        got = {odd5.cage.labels[v] for v in S[i]}
        assert got == {VertexLabel(F(i), F.zero, F(t), 0) for t in range(1, 5)}


def test_excised_set_size(odd5):
    assert len(odd5.plan.H) == 17
    assert odd5.minus_h.n == 312 - 17


@pytest.mark.parametrize("q", ODD_Q)
def test_set_sizes_and_degrees(q):
    c = odd_build(q)
    sizes = {z.name: len(z.vertices) for z in c.local_zsets}
    assert all(s == q - 1 for s in sizes.values())
    assert sorted(n for n in sizes if n[0] == "S") == sorted(f"S{i}" for i in range(3, q + 1))
    deficient = {v for z in c.local_zsets for v in z.vertices}
    low = {c.minus_h.origin.index(s) for s in c.frame.ss[:3]}
    for v in range(c.minus_h.n):
        want = q - 1 if v in low else q if v in deficient else q + 1
        assert c.minus_h.degree(v) == want


def test_common_neighbours_of_s_sets_prime(odd5):
    F = make_field(5)
    S = [z for z in odd5.local_zsets if z.family == "S"]
    common = set.intersection(*({w for u in z.vertices for w in odd5.minus_h.adj[u]} for z in S))
    assert _labels(odd5, common) == {VertexLabel(F.zero, F.zero, F(t), 1) for t in range(1, 5)}


def _pairs_by(c, name, coord):
    z = next(z for z in c.local_zsets if z.name == name)
    return {frozenset(int(getattr(c.minus_h.labels[v], coord)) for v in e) for e in z.matching}


def test_q5_explicit_matchings(odd5):
    for i in range(5):
        assert _pairs_by(odd5, f"X{i}", "b") == {frozenset({1, 2}), frozenset({3, 4})}
        assert _pairs_by(odd5, f"Y{i}", "a") == {frozenset({1, 4}), frozenset({2, 3})}
    assert _pairs_by(odd5, "X5", "c") == {frozenset({1, 2}), frozenset({3, 4})}
    assert _pairs_by(odd5, "Y5", "b") == {frozenset({1, 4}), frozenset({2, 3})}


def test_q9_exponent_matchings():
    c = odd_build(9)
    F = c.field
    z = next(z for z in c.local_zsets if z.name == "X3")
    exps = {frozenset(F.log(c.minus_h.labels[v].b) for v in e) for e in z.matching}
    assert exps == {frozenset({2 * l % 8, (2 * l + 1) % 8}) for l in range(4)}
    z = next(z for z in c.local_zsets if z.name == "Y3")
    exps = {frozenset(F.log(c.minus_h.labels[v].a) for v in e) for e in z.matching}
    assert exps == {frozenset({2 * t % 8, (2 * t + 3) % 8}) for t in range(4)}


@pytest.mark.parametrize("q", ODD_Q)
def test_matchings_are_perfect_and_conditions_hold(q):
    c = odd_build(q)
    for z in c.local_zsets:
        z.check()
    report = check_matching_conditions(c.minus_h, c.local_zsets)
    assert report.ok, report.violations[:3]
    # conditions (a) and (b) restricted to their own scopes
    assert check_matching_conditions(c.minus_h, c.local_zsets, scope=[("S", "S")]).ok
    assert check_matching_conditions(c.minus_h, c.local_zsets, scope=[("X", "Y")]).ok


def test_condition_b_detects_mirrored_matching(odd5):
    # pairing Y_j like X_i lets some matched X pair reach a matched Y pair at distance 2 on both ends
    zs = list(odd5.local_zsets)
    names = [z.name for z in zs]
    found = False
    for j in range(6):
        k = names.index(f"Y{j}")
        y = zs[k]
        verts = y.vertices
        alt = zs[:]
        alt[k] = y.with_matching([(verts[0], verts[1]), (verts[2], verts[3])])
        if not check_matching_conditions(odd5.minus_h, alt, scope=[("X", "Y")]).ok:
            found = True
    assert found


@pytest.mark.parametrize("q", [5, 7])
def test_distance_preconditions(q):
    c = odd_build(q)
    g = c.minus_h
    zs = {z.name: z for z in c.local_zsets}
    dist = {v: bfs_distances(g, v, cutoff=6) for z in zs.values() for v in z.vertices}
    for z in zs.values():
        for u, v in combinations(z.vertices, 2):
            assert dist[u][v] >= 6
    for fam in "XY":
        for i, j in combinations(range(q + 1), 2):
            for u in zs[f"{fam}{i}"].vertices:
                assert min(dist[u][v] for v in zs[f"{fam}{j}"].vertices) >= 4
    for i in range(3, q + 1):
        for j in range(q + 1):
            for u in zs[f"S{i}"].vertices:
                others = zs[f"X{j}"].vertices + zs[f"Y{j}"].vertices
                assert min(dist[u][v] for v in others) >= 3


@pytest.mark.parametrize("q", ODD_Q)
def test_gamma_q1_and_rewiring(q):
    c = odd_build(q)
    g1, g2 = c.graph1, c.graph2
    degs = sorted(g1.degrees())
    assert degs[:3] == [q - 1] * 3 and set(degs[3:]) == {q + 1}
    assert g2.n == g1.n == odd_order(q)
    assert g2.edge_count == g1.edge_count + 3
    assert set(g2.degrees()) == {q + 1}
    for s, u, v in c.local_rewires:
        assert not g2.has_edge(u, v)
        assert g2.has_edge(s, u) and g2.has_edge(s, v)


@pytest.mark.parametrize("q, n", [(5, 295), (7, 777), (9, 1611)])
def test_gamma_q2(q, n):
    c = odd_build(q)
    assert c.graph2.n == n == cage_order(q) - (3 * q + 2) == 2 * q**3 + 2 * q**2 - q
    assert stated_odd_order(q) == n + 1
    gi, w = girth_with_witness(c.graph2)
    assert gi == 7 and is_cycle_in(c.graph2, w)


def test_gamma_q1_girth(odd5):
    assert girth_with_witness(odd5.graph1)[0] == 7


def test_build_gamma_q2_deterministic():
    assert build_gamma_q2(5) == build_gamma_q2(5)


@pytest.mark.parametrize("q", [3, 4, 8, 10])
def test_rejects_unsuitable_q(q):
    with pytest.raises(ValueError):
        construct_odd(q)


# -- Latin squares ------------------------------------------------------------


def test_latin_symbol_example():
    assert latin_symbol(make_field(5), 1, 4, 3) == 2
    with pytest.raises(ValueError):
        latin_symbol(make_field(5), 2, 1, 2)
    with pytest.raises(ValueError):
        latin_symbol(make_field(9), 3, 1, 3)


@pytest.mark.parametrize("q", [5, 7, 11])
def test_prime_identities(q):
    F = make_field(q)
    assert prime_row_shift_holds(F, latin_symbol)
    for i in range(q):
        for j in range(q):
            if i != j:
                for l in range(1, q):
                    s = latin_symbol(F, i, l, j)
                    assert latin_symbol(F, i, (-l) % q, j) == (-s) % q
                    assert s * (j - i) % q == l


@pytest.mark.parametrize("q", ODD_Q + [11, 25, 27])
def test_squares_are_latin(q):
    F = make_field(q)
    for j in range(q):
        sq = latin_square(F, j)
        assert sq.order == q - 1
        assert check_latin(sq)
        if not F.is_prime:
            assert is_row_permuted_cyclic(sq, q - 1)


@pytest.mark.parametrize("q", [9, 25])
def test_prime_power_equation(q):
    F = make_field(q)
    for i in range(q):
        for j in range(q):
            if i != j:
                for l in range(q - 1):
                    s = latin_symbol(F, i, l, j)
                    diff = frame_coordinate(F, j) - frame_coordinate(F, i)
                    assert F.exp(s) * diff == F.exp(l)


@pytest.mark.parametrize("q", [5, 7, 9])
def test_symbols_agree_with_graph(q):
    c = odd_build(q)
    F = c.field
    cols = range(1, q) if F.is_prime else range(q - 1)
    for j in range(q):
        for i in range(q):
            if i != j:
                for l in cols:
                    assert graph_latin_symbol(c.cage, F, c.frame, i, l, j) == latin_symbol(F, i, l, j)
