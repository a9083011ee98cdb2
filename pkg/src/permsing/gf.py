"""Small finite fields GF(p^e) with exact tuple arithmetic.

Elements are coefficient tuples of length e over the prime field, reduced
modulo a monic irreducible polynomial found by brute force at construction
time.  This is deliberately elementary: the fields appearing in the oracles
have at most a few thousand elements, and the oracle code relies on the
coordinates being an F_p-basis (the Frobenius map is then F_p-linear on
coordinates).
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .primes import is_prime

Elem = tuple[int, ...]


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Divide polynomials over F_p (coefficient lists, lowest degree first)."""
    num = list(num)
    dlead = den[-1]
    dlead_inv = pow(dlead, p - 2, p)
    quot = [0] * max(len(num) - len(den) + 1, 0)
    for shift in range(len(num) - len(den), -1, -1):
        c = (num[shift + len(den) - 1] * dlead_inv) % p
        quot[shift] = c
        if c:
            for i, dc in enumerate(den):
                num[shift + i] = (num[shift + i] - c * dc) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _find_irreducible(p: int, e: int) -> list[int]:
    """A monic irreducible polynomial of degree e over F_p (lowest degree first)."""
    if e == 1:
        return [0, 1]
    divisor_degrees = range(1, e // 2 + 1)
    for tail in itertools.product(range(p), repeat=e):
        cand = list(tail) + [1]
        if cand[0] == 0:
            continue
        reducible = False
        for deg in divisor_degrees:
            for dtail in itertools.product(range(p), repeat=deg):
                den = list(dtail) + [1]
                _, rem = _poly_divmod(cand, den, p)
                if not rem:
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


class GF:
    """The field with p^e elements."""

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be positive, got {e}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = _find_irreducible(p, e)
        self.zero: Elem = (0,) * e
        self.one: Elem = (1,) + (0,) * (e - 1)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})"

    def elements(self) -> Iterator[Elem]:
        """All q elements, in a fixed order."""
        return itertools.product(range(self.p), repeat=self.e)

    def scalar(self, c: int) -> Elem:
        """Embed an integer into the prime field."""
        return (c % self.p,) + (0,) * (self.e - 1)

    def add(self, a: Elem, b: Elem) -> Elem:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        p = self.p
        return tuple((-x) % p for x in a)

    def sub(self, a: Elem, b: Elem) -> Elem:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def smul(self, c: int, a: Elem) -> Elem:
        p = self.p
        return tuple((c * x) % p for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the defining polynomial
        mod = self.modulus
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
        return tuple(prod[:e])

    def pow(self, a: Elem, k: int) -> Elem:
        if k < 0:
            raise ValueError("negative exponent")
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a: Elem) -> Elem:
        """a^p, the F_p-linear Frobenius."""
        return self.pow(a, self.p)

    def inv(self, a: Elem) -> Elem:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)
