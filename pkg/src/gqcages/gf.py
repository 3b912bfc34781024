"""Arithmetic in finite fields GF(p^n).

Elements are polynomials over Z_p of degree < n, stored as coefficient
tuples (lowest degree first) and reduced modulo a fixed monic irreducible
polynomial.  Every choice is deterministic: the modulus is the
lexicographically smallest monic irreducible polynomial of degree n and the
designated primitive element ``alpha`` is the smallest generator of the
multiplicative group, where elements are ordered lexicographically on their
coefficient tuples.

>>> F = make_field(4)
>>> F.alpha
x
>>> F.alpha * F.alpha
x+1
"""

from __future__ import annotations

import functools
import itertools

from .exceptions import FieldMismatchError, NotPrimePowerError

__all__ = ["Field", "FieldElement", "make_field", "arith", "discrete_log", "factorize"]

MAX_ORDER = 2**16


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of ``m`` by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    # m is monic; a is reduced in place from the top down
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] % p
        if c:
            for t in range(dm + 1):
                a[k - dm + t] = (a[k - dm + t] - c * m[t]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _poly_mulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _poly_mod(prod, m, p)


def _has_root_factor(f: tuple[int, ...], p: int) -> bool:
    """True iff some monic polynomial of degree 1..deg(f)//2 divides ``f``."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = tuple(low) + (1,)
            if not any(_poly_mod(list(f), g, p)):
                return True
    return False


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    # itertools.product enumerates low-degree-first lexicographic order
    for low in itertools.product(range(p), repeat=n):
        f = tuple(low) + (1,)
        if n == 1 or not _has_root_factor(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {n} over Z_{p}")


@functools.total_ordering
class FieldElement:
    """An element of a :class:`Field`; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"operands from GF({self.field.q}) and GF({other.field.q})")
        return other

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __lt__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.coeffs < other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __add__(self, other):
        other = self._check(other)
        return other if other is NotImplemented else self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return other if other is NotImplemented else self.field.sub(self, other)

    def __rsub__(self, other):
        other = self._check(other)
        return other if other is NotImplemented else self.field.sub(other, self)

    def __mul__(self, other):
        other = self._check(other)
        return other if other is NotImplemented else self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return other if other is NotImplemented else self.field.mul(self, self.field.inv(other))

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, k: int):
        return self.field.pow(self, k)

    def __bool__(self):
        return any(self.coeffs)

    def __int__(self):
        if self.field.n != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.coeffs[0]

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.field.n == 1:
            return str(self.coeffs[0])
        terms = []
        for k in range(self.field.n - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(c) if (c != 1 or k == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) if terms else "0"


class Field:
    """The finite field GF(p^n).

    Parameters
    ----------
    p : int
        Prime characteristic.
    n : int
        Extension degree.
    modulus : tuple of int
        Monic irreducible polynomial of degree ``n``, low degree first.
        Stored but unused when ``n == 1``.
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = tuple(modulus)
        self._zero = FieldElement(self, (0,) * n)
        self._one = FieldElement(self, (1,) + (0,) * (n - 1))
        self._elements = tuple(FieldElement(self, c) for c in itertools.product(range(p), repeat=n))
        self.alpha = self._find_primitive()
        self._exp: list[FieldElement] = []
        self._log: dict[tuple[int, ...], int] = {}
        g = self._one
        for e in range(self.q - 1):
            self._exp.append(g)
            self._log[g.coeffs] = e
            g = self._slow_mul(g, self.alpha)
        assert len(self._log) == self.q - 1

    # -- construction helpers ---------------------------------------------

    def _slow_mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.n == 1:
            return FieldElement(self, ((a.coeffs[0] * b.coeffs[0]) % self.p,))
        return FieldElement(self, tuple(_poly_mulmod(a.coeffs, b.coeffs, self.modulus, self.p)))

    def _slow_pow(self, a: FieldElement, k: int) -> FieldElement:
        result, base = self._one, a
        while k:
            if k & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            k >>= 1
        return result

    def _find_primitive(self) -> FieldElement:
        order = self.q - 1
        primes = factorize(order) if order > 1 else {}
        for g in self._elements:
            if not g:
                continue
            if all(self._slow_pow(g, order // r) != self._one for r in primes):
                return g
        raise AssertionError("multiplicative group has no generator")

    # -- container protocol -------------------------------------------------

    def __call__(self, value) -> FieldElement:
        """Coerce an int (embedded from Z_p) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of GF({value.field.q}) used in GF({self.q})")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.n:
            raise ValueError(f"at most {self.n} coefficients expected")
        return FieldElement(self, coeffs + (0,) * (self.n - len(coeffs)))

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return self.q

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return f"Field(q={self.q}, p={self.p}, n={self.n}, modulus={self.modulus}, alpha={self.alpha})"

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    @property
    def is_prime(self) -> bool:
        return self.n == 1

    def elements(self) -> tuple[FieldElement, ...]:
        """All elements in ascending order."""
        return self._elements

    def nonzero(self) -> tuple[FieldElement, ...]:
        return self._elements[1:]

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(self, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(self, tuple((-x) % p for x in a.coeffs))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(self, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if not a or not b:
            return self._zero
        return self._exp[(self._log[a.coeffs] + self._log[b.coeffs]) % (self.q - 1)]

    def inv(self, a: FieldElement) -> FieldElement:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a.coeffs]) % (self.q - 1)]

    def pow(self, a: FieldElement, k: int) -> FieldElement:
        """Square-and-multiply power; exponents of nonzero bases are taken mod q-1."""
        if not a:
            if k < 0:
                raise ZeroDivisionError("zero raised to a negative power")
            return self._one if k == 0 else self._zero
        k %= self.q - 1
        result, base = self._one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def exp(self, e: int) -> FieldElement:
        """``alpha ** e``."""
        return self._exp[e % (self.q - 1)]

    def log(self, a: FieldElement) -> int:
        """Discrete logarithm to base ``alpha``, in ``[0, q-1)``."""
        if a.field != self:
            raise FieldMismatchError(f"element of GF({a.field.q}) used in GF({self.q})")
        if not a:
            raise ValueError("discrete logarithm of zero is undefined")
        return self._log[a.coeffs]


@functools.lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Build GF(q) with its canonical modulus and primitive element.

    Raises
    ------
    NotPrimePowerError
        If ``q`` is not a prime power.
    ValueError
        If ``q < 2`` or ``q`` exceeds the supported cap of 2**16.
    """
    if q < 2:
        raise ValueError(f"field order must be at least 2, got {q}")
    if q > MAX_ORDER:
        raise ValueError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
    factors = factorize(q)
    if len(factors) != 1:
        raise NotPrimePowerError(q, factors)
    ((p, n),) = factors.items()
    return Field(p, n, _smallest_irreducible(p, n))


_OPS = {
    "add": lambda F, a, b: F.add(a, b),
    "sub": lambda F, a, b: F.sub(a, b),
    "mul": lambda F, a, b: F.mul(a, b),
    "inv": lambda F, a, b: F.inv(a),
    "neg": lambda F, a, b: F.neg(a),
}


def arith(op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    """Apply one of ``add, sub, mul, inv, neg`` to field elements."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    if op in ("add", "sub", "mul"):
        if b is None:
            raise TypeError(f"{op} needs two operands")
        if a.field != b.field:
            raise FieldMismatchError(f"operands from GF({a.field.q}) and GF({b.field.q})")
    return fn(a.field, a, b)


def discrete_log(field: Field, a: FieldElement) -> int:
    return field.log(a)
