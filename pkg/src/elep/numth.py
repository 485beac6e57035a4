"""Exact integer kernel shared by every other module.

Everything here works on Python ints, so there is no overflow and no
floating point anywhere.  Rationals are :class:`fractions.Fraction`, which
normalizes eagerly on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

__all__ = [
    "Fraction",
    "FactorizationRangeError",
    "AffineRecurrence",
    "SQUAREFREE_LIMIT",
    "isqrt",
    "perfect_square",
    "gcd",
    "val3",
    "squarefree_decompose",
    "iterate_recurrence",
    "companion",
]

SQUAREFREE_LIMIT = 10**12


class FactorizationRangeError(ValueError):
    """Raised when trial division is asked to factor something too large."""


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def perfect_square(n: int) -> Optional[int]:
    """Return ``r`` with ``r*r == n``, or ``None`` if ``n`` is not a square."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def val3(n: int) -> int:
    """3-adic valuation of a positive integer."""
    if n <= 0:
        raise ValueError("val3 is defined for n >= 1")
    e = 0
    while n % 3 == 0:
        n //= 3
        e += 1
    return e


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split ``n`` as ``f * g**2`` with ``f`` squarefree.

    Trial division only; inputs above ``SQUAREFREE_LIMIT`` raise
    :class:`FactorizationRangeError` rather than risk a slow or wrong answer.
    """
    if n <= 0:
        raise ValueError("squarefree_decompose is defined for n >= 1")
    if n > SQUAREFREE_LIMIT:
        raise FactorizationRangeError(f"{n} exceeds trial-division limit {SQUAREFREE_LIMIT}")
    f, g = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            g *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    # leftover n is 1 or a prime
    f *= n
    return f, g


Vec2 = tuple[int, int]
Mat2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class AffineRecurrence:
    """State update ``v -> matrix @ v + offset`` on integer 2-vectors."""

    matrix: Mat2
    offset: Vec2
    seed: Vec2

    def step(self, v: Vec2) -> Vec2:
        (m00, m01), (m10, m11) = self.matrix
        return (m00 * v[0] + m01 * v[1] + self.offset[0], m10 * v[0] + m11 * v[1] + self.offset[1])


def companion(c1: int, c2: int, x0: int, x1: int) -> AffineRecurrence:
    """Scalar recurrence ``x[n] = c1*x[n-1] + c2*x[n-2]`` as a state ``(x[n-1], x[n])``."""
    return AffineRecurrence(matrix=((0, 1), (c2, c1)), offset=(0, 0), seed=(x0, x1))


def iterate_recurrence(r: AffineRecurrence, count: int) -> list[Vec2]:
    """First ``count`` states, the seed included."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [tuple(r.seed)]
    while len(out) < count:
        out.append(r.step(out[-1]))
    return out
