"""Exact elements of cyclotomic fields Q(zeta_n).

An element is stored in the power basis ``1, z, ..., z^(phi(n)-1)`` of
``Q(z)/Phi_n`` as an integer numerator vector with a common positive
denominator.  Everything is reduced, so equality is structural.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "ConductorOverflow",
    "MAX_CONDUCTOR",
    "cyclotomic_poly",
    "lift_conductor",
]

#: Largest conductor a lift is allowed to produce.
MAX_CONDUCTOR = 1024


class ConductorOverflow(ArithmeticError):
    """A lift would exceed :data:`MAX_CONDUCTOR`."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


class _Ring:
    """Precomputed reduction data for one conductor."""

    __slots__ = ("n", "phi", "zpow", "red", "units")

    def __init__(self, n: int) -> None:
        phi_poly = cyclotomic_poly(n)
        phi = len(phi_poly) - 1
        self.n = n
        self.phi = phi
        # red[k] = z^k reduced, for 0 <= k < 2*phi + n
        top = 2 * phi + n
        red: list[tuple[int, ...]] = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(top):
            red.append(tuple(cur))
            # multiply by z
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for j in range(phi):
                    cur[j] -= carry * phi_poly[j]
        self.red = red
        self.zpow = [red[k] for k in range(n)]
        self.units = tuple(k for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _ring(n: int) -> _Ring:
    return _Ring(n)


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if g == 1:
            break
        g = gcd(g, c)
    if g != 1 and g != 0:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


Number = Union["Scalar", int, Fraction]


class Scalar:
    """An element of Q(zeta_n), immutable and hashable."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n: int, num: Sequence[int], den: int = 1) -> None:
        ring = _ring(n)
        if len(num) != ring.phi:
            raise ValueError(f"expected {ring.phi} coefficients for conductor {n}")
        self.n = n
        self.num, self.den = _normalize(num, den)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, n: int, num: tuple[int, ...], den: int) -> "Scalar":
        obj = object.__new__(cls)
        obj.n = n
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, q: Union[int, Fraction], n: int = 1) -> "Scalar":
        q = Fraction(q)
        phi = _ring(n).phi
        return cls(n, [q.numerator] + [0] * (phi - 1), q.denominator)

    @classmethod
    def zero(cls, n: int = 1) -> "Scalar":
        return cls.from_rational(0, n)

    @classmethod
    def one(cls, n: int = 1) -> "Scalar":
        return cls.from_rational(1, n)

    @classmethod
    def zeta(cls, k: int, n: int) -> "Scalar":
        """The root of unity exp(2 pi i k / n) in conductor n."""
        ring = _ring(n)
        return cls._raw(n, ring.zpow[k % n], 1)

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable[Union[int, Fraction]]) -> "Scalar":
        """Build from rational coefficients of z^0, z^1, ... (any length)."""
        ring = _ring(n)
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        acc = [0] * ring.phi
        for k, c in enumerate(fr):
            if c:
                v = c.numerator * (den // c.denominator)
                for j, r in enumerate(ring.zpow[k % n]):
                    if r:
                        acc[j] += v * r
        return cls(n, acc, den)

    @classmethod
    def sqrt2(cls, n: int = 8) -> "Scalar":
        if n % 8:
            raise ValueError("sqrt(2) needs a conductor divisible by 8")
        return (cls.zeta(1, 8) + cls.zeta(-1, 8)).lift(n)

    @classmethod
    def i(cls, n: int = 4) -> "Scalar":
        if n % 4:
            raise ValueError("i needs a conductor divisible by 4")
        return cls.zeta(n // 4, n)

    # -- structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def lift(self, m: int) -> "Scalar":
        """Re-express in Q(zeta_m); m must be a multiple of the conductor."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        if m > MAX_CONDUCTOR:
            raise ConductorOverflow(f"conductor {m} exceeds bound {MAX_CONDUCTOR}")
        ring = _ring(m)
        step = m // self.n
        acc = [0] * ring.phi
        for j, c in enumerate(self.num):
            if c:
                for t, r in enumerate(ring.zpow[(j * step) % m]):
                    if r:
                        acc[t] += c * r
        return Scalar(m, acc, self.den)

    def minimal_conductor(self) -> "Scalar":
        """Return the same element in the smallest cyclotomic field containing it."""
        best = self
        for d in sorted(d for d in range(1, self.n) if self.n % d == 0):
            try:
                cand = _descend(self, d)
            except ValueError:
                continue
            if cand is not None:
                return cand
        return best

    def galois(self, k: int) -> "Scalar":
        """Apply the automorphism z -> z^k (k coprime to n)."""
        ring = _ring(self.n)
        if gcd(k, self.n) != 1:
            raise ValueError("Galois exponent must be a unit")
        acc = [0] * ring.phi
        for j, c in enumerate(self.num):
            if c:
                for t, r in enumerate(ring.zpow[(j * k) % self.n]):
                    if r:
                        acc[t] += c * r
        return Scalar._raw(self.n, *_normalize(acc, self.den))

    def conjugate(self) -> "Scalar":
        if self.is_rational():
            return self
        return self.galois(-1 % self.n if self.n > 1 else 1)

    def norm(self) -> Fraction:
        """Absolute norm down to Q."""
        acc = self
        for k in _ring(self.n).units:
            if k != 1:
                acc = acc * self.galois(k)
        return acc.rational()

    def to_complex(self) -> complex:
        total = 0j
        for j, c in enumerate(self.num):
            if c:
                total += c * cmath.exp(2j * cmath.pi * j / self.n)
        return total / self.den

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other, self.n)
        return NotImplemented

    def _align(self, other: "Scalar") -> tuple["Scalar", "Scalar"]:
        if self.n == other.n:
            return self, other
        m = _lcm(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            return Scalar._raw(a.n, *_normalize(num, a.den))
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Scalar._raw(a.n, *_normalize(num, a.den * b.den))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(self.n, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        if a.is_rational():
            a, b = b, a
        if b.is_rational():
            k = b.num[0]
            if k == 0:
                return Scalar._raw(a.n, (0,) * len(a.num), 1)
            return Scalar._raw(a.n, *_normalize([k * c for c in a.num], a.den * b.den))
        ring = _ring(a.n)
        phi = ring.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        acc = conv[:phi]
        red = ring.red
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for t, r in enumerate(red[k]):
                    if r:
                        acc[t] += c * r
        return Scalar._raw(a.n, *_normalize(acc, a.den * b.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return _inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            q = other.rational()
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(q.denominator, q.numerator)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.n == other.n:
            return self.den == other.den and self.num == other.num
        a, b = self._align(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self) -> int:
        if self._hash is None:
            s = self.minimal_conductor() if self.n > 1 else self
            if s.is_rational():
                self._hash = hash(Fraction(s.num[0], s.den))
            else:
                self._hash = hash((s.n, s.num, s.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return self.to_complex()

    def __repr__(self) -> str:
        return f"Scalar({self.n}, {list(self.num)}, {self.den})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.rational())
        parts = []
        for j, c in enumerate(self.coeffs()):
            if not c:
                continue
            mono = "1" if j == 0 else (f"z{self.n}" if j == 1 else f"z{self.n}^{j}")
            if j == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=65536)
def _inverse(a: Scalar) -> Scalar:
    if a.is_rational():
        q = a.rational()
        return Scalar.from_rational(1 / q, a.n)
    prod = Scalar.one(a.n)
    for k in _ring(a.n).units:
        if k != 1:
            prod = prod * a.galois(k)
    nrm = (a * prod).rational()
    return prod * Fraction(nrm.denominator, nrm.numerator)


def _descend(a: Scalar, d: int):
    """Return a as an element of Q(zeta_d) if it lies there, else None."""
    # a lies in Q(zeta_d) iff it is fixed by units k = 1 mod d
    for k in _ring(a.n).units:
        if k % d == 1 % d and k != 1:
            if a.galois(k) != a:
                return None
    # solve in the d-basis by matching lifted basis images
    ring_d = _ring(d)
    basis = [Scalar.zeta(j, d).lift(a.n) for j in range(ring_d.phi)]
    # triangular-ish solve via rational linear algebra
    from .linalg import solve_rational

    cols = [[Fraction(c) for c in b.coeffs()] for b in basis]
    rhs = a.coeffs()
    sol = solve_rational(cols, rhs)
    if sol is None:
        return None
    den = 1
    for c in sol:
        den = _lcm(den, c.denominator)
    return Scalar(d, [int(c * den) for c in sol], den)


def lift_conductor(values: Iterable[Scalar]) -> int:
    """Least common conductor of the given scalars."""
    m = 1
    for v in values:
        m = _lcm(m, v.n)
    if m > MAX_CONDUCTOR:
        raise ConductorOverflow(f"conductor {m} exceeds bound {MAX_CONDUCTOR}")
    return m
