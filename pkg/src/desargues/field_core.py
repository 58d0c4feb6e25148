"""Exact division-ring arithmetic.

Two concrete rings sit behind one interface:

* :class:`FiniteField` -- GF(p^k).  Elements are plain ``int`` codes
  ``c0 + c1*p + ... + c_{k-1}*p^(k-1)`` of the coefficient vector
  ``(c0, ..., c_{k-1})`` (low degree first).  All arithmetic goes through
  precomputed Cayley tables.
* :class:`QuaternionRing` -- Hamilton quaternions with rational components.
  Elements are :class:`Quaternion` values holding four ``gmpy2.mpq``.

Both contexts expose ``zero``, ``one``, ``add``, ``sub``, ``neg``, ``mul``,
``inv``, ``parse`` and ``format``.  Finite contexts also support
``elements()``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
from gmpy2 import is_prime, mpq


class RingError(ValueError):
    """Invalid ring construction."""


class DomainError(ArithmeticError):
    """Operation undefined for the given input (e.g. inverting zero)."""


class UnsupportedError(TypeError):
    """Operation only available on finite rings."""


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low degree first
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo ``m`` over GF(p)."""
    r = _poly_trim([c % p for c in a])
    m = _poly_trim([c % p for c in m])
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        f = r[-1] * lead_inv % p
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - f * c) % p
        _poly_trim(r)
    return r


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility test: no monic divisor of degree 1..deg//2."""
    poly = _poly_trim([c % p for c in poly])
    n = len(poly) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``k`` over GF(p).

    Coefficient tuples are compared low degree first.
    """
    for low in itertools.product(range(p), repeat=k):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise RingError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class RingDescriptor:
    kind: str  # "finite_field" | "rational_quaternion"
    p: Optional[int] = None
    k: Optional[int] = None
    modulus: Optional[tuple[int, ...]] = None

    @classmethod
    def finite(cls, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> "RingDescriptor":
        return cls("finite_field", p, k, None if modulus is None else tuple(modulus))

    @classmethod
    def quaternion(cls) -> "RingDescriptor":
        return cls("rational_quaternion")


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

class FiniteField:
    """GF(p^k) with table-driven arithmetic on integer codes."""

    is_finite = True

    def __init__(self, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None):
        if not isinstance(p, int) or p < 2 or not is_prime(p):
            raise RingError(f"characteristic {p!r} is not prime")
        if not isinstance(k, int) or k < 1:
            raise RingError(f"degree {k!r} must be a positive integer")
        if modulus is None:
            modulus = least_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise RingError(f"modulus {modulus} is not monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise RingError(f"modulus {modulus} is reducible over GF({p})")
        self.p, self.k, self.modulus = p, k, modulus
        self.q = p ** k
        self.zero, self.one = 0, 1
        self.descriptor = RingDescriptor.finite(p, k, modulus)
        self._build_tables()

    def _build_tables(self) -> None:
        q, p, k = self.q, self.p, self.k
        coeffs = np.array([self.coeffs(e) for e in range(q)], dtype=np.int64).reshape(q, k)
        weights = p ** np.arange(k, dtype=np.int64)
        summed = (coeffs[:, None, :] + coeffs[None, :, :]) % p
        add = summed @ weights
        neg = ((-coeffs) % p) @ weights

        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            ca = coeffs[a]
            for b in range(a, q):
                prod = np.convolve(ca, coeffs[b]) % p
                r = poly_mod(prod.tolist(), self.modulus, p)
                code = sum(c * p**i for i, c in enumerate(r))
                mul[a, b] = mul[b, a] = code
        inv = np.full(q, -1, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols

        self.add_table, self.neg_table = add, neg
        self.mul_table, self.inv_table = mul, inv
        # python lists index faster than numpy scalars
        self._add = add.tolist()
        self._neg = neg.tolist()
        self._mul = mul.tolist()
        self._inv = inv.tolist()

    # -- element helpers ---------------------------------------------------
    def coeffs(self, e: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            e, c = divmod(e, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(cs)}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(cs))

    def elements(self) -> list[int]:
        return list(range(self.q))

    def contains(self, e) -> bool:
        return isinstance(e, (int, np.integer)) and 0 <= e < self.q

    # -- arithmetic --------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero")
        return self._inv[a]

    def is_zero(self, a: int) -> bool:
        return a == 0

    # -- text syntax "c0,c1,...,c{k-1}" -----------------------------------
    def parse(self, text: str) -> int:
        parts = [s.strip() for s in text.split(",")]
        try:
            cs = [int(s) for s in parts]
        except ValueError:
            raise ValueError(f"bad GF({self.q}) element {text!r}") from None
        if len(cs) != self.k or any(not 0 <= c < self.p for c in cs):
            raise ValueError(f"bad GF({self.q}) element {text!r}")
        return self.from_coeffs(cs)

    def format(self, e: int) -> str:
        return ",".join(str(c) for c in self.coeffs(e))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)


# ---------------------------------------------------------------------------
# rational quaternions
# ---------------------------------------------------------------------------

def _q(x) -> mpq:
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


class Quaternion:
    """a + b*i + c*j + d*k with exact rational components.

    ``mpq`` always holds lowest terms with a positive denominator, so
    equality and hashing are structural.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a, self.b, self.c, self.d = _q(a), _q(b), _q(c), _q(d)

    @classmethod
    def _raw(cls, a, b, c, d) -> "Quaternion":
        obj = cls.__new__(cls)
        obj.a, obj.b, obj.c, obj.d = a, b, c, d
        return obj

    def components(self) -> tuple[mpq, mpq, mpq, mpq]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion._raw(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion._raw(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Quaternion":
        return Quaternion._raw(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion._raw(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> mpq:
        """Reduced norm a^2 + b^2 + c^2 + d^2."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            assert not self, "nonzero quaternion with zero norm"
            raise DomainError("inverse of zero")
        return Quaternion._raw(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, o) -> bool:
        if not isinstance(o, Quaternion):
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self) -> str:
        return f"Quaternion({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self) -> str:
        return " ".join(f"{x.numerator}/{x.denominator}" for x in self.components())


class QuaternionRing:
    """Hamilton quaternions over Q: i^2 = j^2 = k^2 = ijk = -1."""

    is_finite = False

    def __init__(self):
        self.zero = Quaternion()
        self.one = Quaternion(1)
        self.i = Quaternion(0, 1)
        self.j = Quaternion(0, 0, 1)
        self.k = Quaternion(0, 0, 0, 1)
        self.descriptor = RingDescriptor.quaternion()

    def add(self, a: Quaternion, b: Quaternion) -> Quaternion:
        return a + b

    def sub(self, a: Quaternion, b: Quaternion) -> Quaternion:
        return a - b

    def neg(self, a: Quaternion) -> Quaternion:
        return -a

    def mul(self, a: Quaternion, b: Quaternion) -> Quaternion:
        return a * b

    def inv(self, a: Quaternion) -> Quaternion:
        return a.inverse()

    def is_zero(self, a: Quaternion) -> bool:
        return not a

    def contains(self, e) -> bool:
        return isinstance(e, Quaternion)

    def elements(self):
        raise UnsupportedError("the quaternion ring is infinite; it cannot be enumerated")

    def element(self, a=0, b=0, c=0, d=0) -> Quaternion:
        return Quaternion(a, b, c, d)

    def parse(self, text: str) -> Quaternion:
        parts = text.split()
        if len(parts) != 4:
            raise ValueError(f"quaternion needs 4 components 'a b c d', got {text!r}")
        try:
            return Quaternion(*parts)
        except ValueError:
            raise ValueError(f"bad quaternion {text!r}") from None

    def format(self, e: Quaternion) -> str:
        return str(e)

    def __repr__(self) -> str:
        return "QuaternionRing()"

    def __eq__(self, other) -> bool:
        return isinstance(other, QuaternionRing)

    def __hash__(self) -> int:
        return hash(self.descriptor)


RingContext = Union[FiniteField, QuaternionRing]


def ring_make(descriptor: RingDescriptor) -> RingContext:
    if descriptor.kind == "finite_field":
        if descriptor.p is None:
            raise RingError("finite field needs a characteristic")
        return FiniteField(descriptor.p, descriptor.k or 1, descriptor.modulus)
    if descriptor.kind == "rational_quaternion":
        return QuaternionRing()
    raise RingError(f"unknown ring kind {descriptor.kind!r}")


def ring_enumerate(ctx: RingContext) -> list:
    """All elements of a finite ring in code order; raises on infinite rings."""
    if not ctx.is_finite:
        raise UnsupportedError("cannot enumerate an infinite ring")
    return ctx.elements()

