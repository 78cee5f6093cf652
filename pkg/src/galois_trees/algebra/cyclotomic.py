"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

A value is a residue of an integer polynomial in zeta_m modulo the m-th
cyclotomic polynomial, stored as a coefficient tuple on the power basis
1, zeta, ..., zeta^(phi(m)-1).  All arithmetic is exact; a floating-point
embedding into the complex numbers is provided for display and sanity
checks only.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import cache

from ..errors import ExactDivisionError


def _trimmed(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _dense_div_exact(num, den):
    """Divide integer polynomials (ascending dense lists), den monic, exactly."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        if any(num):
            raise ExactDivisionError("polynomial division is not exact")
        return [0]
    quot = [0] * (len(num) - dd)
    for i in reversed(range(len(quot))):
        c = num[i + dd]
        if c:
            quot[i] = c
            for j, p in enumerate(den):
                num[i + j] -= c * p
    if any(num):
        raise ExactDivisionError("polynomial division is not exact")
    return quot


@cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _dense_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(m: int, dense) -> tuple[int, ...]:
    """Reduce an arbitrary integer polynomial in zeta_m to the power basis."""
    folded = [0] * max(m, len(dense), 1)
    for i, c in enumerate(dense):
        folded[i % m] += c
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for i in reversed(range(deg, len(folded))):
        c = folded[i]
        if c:
            for j, p in enumerate(phi):
                folded[i - deg + j] -= c * p
    out = folded[:deg]
    out += [0] * (deg - len(out))
    return tuple(out)


class CycInt:
    """An element of Z[zeta_m], reduced modulo the m-th cyclotomic polynomial."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce(conductor, tuple(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("CycInt values are immutable")

    @staticmethod
    def from_int(m: int, n: int) -> CycInt:
        return CycInt(m, (n,))

    @staticmethod
    def root(m: int, power: int) -> CycInt:
        """zeta_m^power.

        >>> CycInt.root(4, 2).as_int()
        -1
        """
        dense = [0] * m
        dense[power % m] = 1
        return CycInt(m, dense)

    # -- coercion -------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, int):
            return self, CycInt.from_int(self.conductor, other)
        if isinstance(other, CycInt):
            if other.conductor == self.conductor:
                return self, other
            a, b = self.as_int(), other.as_int()
            if b is not None:
                return self, CycInt.from_int(self.conductor, b)
            if a is not None:
                return CycInt.from_int(other.conductor, a), other
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )
        return NotImplemented, None

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycInt(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        n1, n2 = len(a.coeffs), len(b.coeffs)
        prod = [0] * (n1 + n2 - 1 if n1 and n2 else 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycInt(a.conductor, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not ring elements in general")
        result = CycInt.from_int(self.conductor, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, CycInt)):
            a, b = self._pair(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        n = self.as_int()
        if n is not None:
            return hash(n)
        return hash((self.conductor, self.coeffs))

    # -- structure ------------------------------------------------------

    def conj(self) -> CycInt:
        """The automorphism zeta -> zeta^(-1); fixes rational values."""
        dense = [0] * self.conductor
        for i, c in enumerate(self.coeffs):
            dense[(-i) % self.conductor] += c
        return CycInt(self.conductor, dense)

    def as_int(self) -> int | None:
        """The rational integer this value equals, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else 0

    def embed(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(c * z**i for i, c in enumerate(self.coeffs)) if self.coeffs else 0j

    def exact_div(self, other) -> CycInt:
        """Exact division in Z[zeta_m]; raises ExactDivisionError otherwise."""
        if isinstance(other, int):
            other = CycInt.from_int(self.conductor, other)
        a, b = self._pair(other)
        if not b:
            raise ZeroDivisionError("division by zero in Z[zeta]")
        n = b.as_int()
        if n is not None:
            out = []
            for c in a.coeffs:
                q, r = divmod(c, n)
                if r:
                    raise ExactDivisionError(
                        f"{a!r} is not divisible by {n}", remainder=r
                    )
                out.append(q)
            return CycInt(a.conductor, out)
        inv = _inverse_mod_cyclotomic(b)
        prod = [Fraction(0)] * (len(a.coeffs) + len(inv) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(inv):
                    prod[i + j] += x * y
        phi = cyclotomic_polynomial(a.conductor)
        deg = len(phi) - 1
        for i in reversed(range(deg, len(prod))):
            c = prod[i]
            if c:
                for j, p in enumerate(phi):
                    prod[i - deg + j] -= c * p
        out = prod[:deg] + [Fraction(0)] * (deg - len(prod))
        if any(c.denominator != 1 for c in out):
            raise ExactDivisionError(
                f"{a!r} is not divisible by {b!r} in Z[zeta]", remainder=a
            )
        return CycInt(a.conductor, [int(c) for c in out])

    def __repr__(self):
        n = self.as_int()
        if n is not None:
            return f"CycInt({self.conductor}, {n})"
        return f"CycInt({self.conductor}, {self.coeffs})"

    def __str__(self):
        n = self.as_int()
        if n is not None:
            return str(n)
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            var = "" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(var)
            elif c == -1:
                parts.append(f"-{var}")
            else:
                parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ")


def _frac_poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    b = _trimmed(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = a[:]
    while len(_trimmed(r)) >= len(b):
        r = _trimmed(r)
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] += c
        for j, p in enumerate(b):
            r[shift + j] -= c * p
    return q, _trimmed(r)


def _inverse_mod_cyclotomic(b: CycInt):
    """Rational coefficients u with u * b == 1 modulo the cyclotomic polynomial."""
    phi = [Fraction(c) for c in cyclotomic_polynomial(b.conductor)]
    # Extended Euclid on (b, phi); phi is irreducible so the gcd is a constant.
    r0, r1 = [Fraction(c) for c in b.coeffs], phi
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while _trimmed(r1):
        q, r = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    qs[i + j] += x * y
        new_s = [Fraction(0)] * max(len(s0), len(qs))
        for i, x in enumerate(s0):
            new_s[i] += x
        for i, x in enumerate(qs):
            new_s[i] -= x
        s0, s1 = s1, _trimmed(new_s) or [Fraction(0)]
    g = _trimmed(r0)
    if len(g) != 1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    return [c / g[0] for c in s0]


def weight_of_root(m: int, power: int) -> CycInt:
    """(1 - zeta^power)(1 - zeta^(-power)) = 2 - zeta^power - zeta^(-power).

    Fixed by conjugation; zero exactly when power is divisible by m.

    >>> weight_of_root(3, 1).as_int()
    3
    >>> weight_of_root(2, 1).as_int()
    4
    """
    z = CycInt.root(m, power)
    return 2 - z - z.conj()
