"""1-factorizations of complete graphs: round-robin and translation-invariant."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = ["OneFactorization", "one_factorize", "affine_one_factorize", "translation_one_factorize"]


@dataclass(frozen=True)
class OneFactorization:
    n: int
    factors: tuple[tuple[tuple[int, int], ...], ...]

    def validate(self) -> None:
        """Raise ``AssertionError`` unless the factors partition E(K_n) into perfect matchings."""
        n = self.n
        assert len(self.factors) == n - 1, f"expected {n - 1} factors, got {len(self.factors)}"
        seen: set[frozenset[int]] = set()
        for r, factor in enumerate(self.factors):
            covered = sorted(v for e in factor for v in e)
            assert covered == list(range(n)), f"factor {r} is not a perfect matching"
            for e in factor:
                key = frozenset(e)
                assert key not in seen, f"edge {sorted(key)} repeated in factor {r}"
                seen.add(key)
        assert seen == {frozenset(e) for e in combinations(range(n), 2)}


def one_factorize(n: int) -> OneFactorization:
    """Circle-method factorization of K_n.

    Vertex ``n-1`` stays fixed while ``0..n-2`` rotate; factor ``r`` pairs
    ``n-1`` with ``r`` and ``r+i`` with ``r-i`` (mod ``n-1``).

    >>> one_factorize(4).factors
    (((3, 0), (1, 2)), ((3, 1), (2, 0)), ((3, 2), (0, 1)))
    """
    if n < 2 or n % 2:
        raise ValueError(f"one_factorize needs an even n >= 2, got {n}")
    m = n - 1
    factors = []
    for r in range(m):
        factor = [(n - 1, r)]
        factor += [((r + i) % m, (r - i) % m) for i in range(1, n // 2)]
        factors.append(tuple(factor))
    return OneFactorization(n, tuple(factors))


def affine_one_factorize(n: int) -> OneFactorization:
    """Factorization of K_n (n a power of two) by XOR differences.

    Factor ``d - 1`` pairs ``h`` with ``h ^ d``; every translation
    ``h -> h ^ c`` maps each factor onto itself.
    """
    if n < 2 or n & (n - 1):
        raise ValueError(f"affine_one_factorize needs a power of two, got {n}")
    return OneFactorization(n, tuple(tuple((h, h ^ d) for h in range(n) if h < h ^ d) for d in range(1, n)))


def translation_one_factorize(perms) -> OneFactorization:
    """Factorization of K_n by the orbits of a regular elementary abelian 2-group.

    ``perms`` must be the full group as permutation tuples on ``0..n-1``:
    closed under composition, commutative, and with every non-identity
    element a fixed-point-free involution.  Each non-identity element
    contributes the factor of its 2-cycles; factors are ordered by the image
    of 0.  Every group element maps every factor onto itself.
    """
    group = {tuple(p) for p in perms}
    if not group:
        raise ValueError("empty permutation group")
    n = len(next(iter(group)))
    identity = tuple(range(n))
    if len(group) != n or identity not in group:
        raise ValueError(f"expected a regular group of order {n}, got {len(group)} permutations")
    for g in group:
        if g != identity and any(g[h] == h or g[g[h]] != h for h in range(n)):
            raise ValueError(f"{g} is not a fixed-point-free involution")
        for f in group:
            gf = tuple(g[f[h]] for h in range(n))
            if gf not in group:
                raise ValueError("permutations are not closed under composition")
            if gf != tuple(f[g[h]] for h in range(n)):
                raise ValueError("permutation group is not commutative")
    factors = []
    for g in sorted((g for g in group if g != identity), key=lambda g: g[0]):
        factors.append(tuple((h, g[h]) for h in range(n) if h < g[h]))
    return OneFactorization(n, tuple(factors))
