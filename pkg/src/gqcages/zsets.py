"""Degree-deficient vertex sets left by an excision, with their matchings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .exceptions import NotPerfectMatchingError
from .graph import matching_violation

__all__ = ["ZSet"]


@dataclass(frozen=True)
class ZSet:
    """A set of survivors that lost one neighbour, and the perfect matching added on it.

    ``family`` groups sets that play the same role (``"X"``, ``"Y"``, ``"S"``,
    ``"Xij"``, ...); ``name`` identifies the set within the construction.
    """

    name: str
    family: str
    vertices: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        pairs = tuple(sorted((min(u, v), max(u, v)) for u, v in self.matching))
        object.__setattr__(self, "matching", pairs)

    def check(self) -> None:
        problem = matching_violation(self.matching, self.vertices)
        if problem is not None:
            raise NotPerfectMatchingError(f"M_{self.name}: {problem}")

    def relabel(self, mapping: Mapping[int, int]) -> ZSet:
        return ZSet(
            self.name,
            self.family,
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v]) for u, v in self.matching),
        )

    def with_matching(self, matching) -> ZSet:
        return ZSet(self.name, self.family, self.vertices, tuple(matching))
