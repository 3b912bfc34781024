"""Constructions shared between test modules, built once per session."""

from functools import lru_cache

from gqcages.cage import build_cage
from gqcages.excise_even import construct_even
from gqcages.excise_odd import construct_odd


@lru_cache(maxsize=None)
def cage(q):
    return build_cage(q)


@lru_cache(maxsize=None)
def even_build(q, factorization="translation"):
    return construct_even(q, verify=False, factorization=factorization)


@lru_cache(maxsize=None)
def odd_build(q):
    return construct_odd(q, verify=False)
