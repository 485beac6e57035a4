"""Side-pair criterion, (a, b) <-> (s, t) correspondence and parallelogram metrics.

An ELEP (equable parallelogram on the Eisenstein lattice) has sides
``a*sqrt(3)`` and ``b*sqrt(3)``.  The pair ``(a, b)`` with ``a < b`` is
admissible exactly when ``9a^2b^2 - 12(a+b)^2`` is a perfect square, and then
``a + b = 6st`` and ``ab = 2(s^2 + 3t^2)`` for a unique pair of odd coprime
positive integers ``(s, t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .numth import gcd, isqrt, perfect_square


class NotElepPair(ValueError):
    pass


class NotOnTree(ValueError):
    pass


def check_sides(a: int, b: int) -> Optional[int]:
    """Return ``sqrt(9a^2b^2 - 12(a+b)^2)`` if it is an integer, else ``None``."""
    if a < 1 or b < 1:
        raise ValueError("side multipliers must be positive")
    return perfect_square(9 * a * a * b * b - 12 * (a + b) ** 2)


def _validate_params(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"(s, t) = ({s}, {t}) must be positive")
    if s % 2 == 0 or t % 2 == 0:
        raise ValueError(f"(s, t) = ({s}, {t}) must both be odd")
    if gcd(s, t) != 1:
        raise ValueError(f"(s, t) = ({s}, {t}) must be coprime")


def pair_to_params(a: int, b: int) -> tuple[int, int, int]:
    """Recover ``(s, t, sigma)`` from an admissible ``(a, b)`` with ``a < b``.

    ``s^2 = (3ab + sigma*disc)/12`` and ``t^2 = (3ab - sigma*disc)/36``; only
    one sign gives squares, and ``sigma = +1`` iff ``s^2 > 3t^2``.
    """
    if a >= b:
        raise NotElepPair(f"expected a < b, got ({a}, {b})")
    disc = check_sides(a, b)
    if disc is None:
        raise NotElepPair(f"({a}, {b}) is not an ELEP pair")
    found = []
    for sigma in (1, -1):
        num_s, num_t = 3 * a * b + sigma * disc, 3 * a * b - sigma * disc
        if num_s % 12 or num_t % 36:
            continue
        s, t = perfect_square(num_s // 12), perfect_square(num_t // 36)
        if s and t and s % 2 and t % 2 and gcd(s, t) == 1:
            found.append((s, t, sigma))
    if len(found) != 1:
        raise AssertionError(f"expected exactly one sign for ({a}, {b}), got {found}")
    return found[0]


def params_to_pair(s: int, t: int) -> tuple[int, int]:
    _validate_params(s, t)
    root = perfect_square(9 * s * s * t * t - 2 * (s * s + 3 * t * t))
    if root is None:
        raise NotOnTree(f"({s}, {t}) does not extend to a solution")
    return 3 * s * t - root, 3 * s * t + root


@dataclass(frozen=True)
class ElepPair:
    a: int
    b: int
    disc: int
    s: int
    t: int
    sigma: int

    @property
    def q(self) -> int:
        return self.a // 2

    @property
    def r(self) -> int:
        return self.b // 2

    @classmethod
    def from_sides(cls, a: int, b: int) -> "ElepPair":
        s, t, sigma = pair_to_params(a, b)
        return cls(a, b, check_sides(a, b), s, t, sigma)

    @classmethod
    def from_params(cls, s: int, t: int) -> "ElepPair":
        a, b = params_to_pair(s, t)
        disc = 6 * abs(s * s - 3 * t * t)
        return cls(a, b, disc, s, t, 1 if s * s > 3 * t * t else -1)

    def violations(self) -> list[str]:
        """Names of structural invariants that fail (empty for a valid pair)."""
        a, b, s, t, q = self.a, self.b, self.s, self.t, self.q
        checks = {
            "a<b": a < b,
            "a,b even": a % 2 == 0 and b % 2 == 0,
            "gcd(a,b)=2": gcd(a, b) == 2,
            "3 does not divide ab": (a * b) % 3 != 0,
            "a+b=6st": a + b == 6 * s * t,
            "ab=2(s^2+3t^2)": a * b == 2 * (s * s + 3 * t * t),
            "s,t odd coprime": s % 2 == 1 and t % 2 == 1 and gcd(s, t) == 1,
            "disc=6|s^2-3t^2|": self.disc == 6 * abs(s * s - 3 * t * t),
            "markov": s * s + 3 * t * t + 2 * q * q == 6 * s * t * q,
            "sigma": self.sigma == (1 if s * s > 3 * t * t else -1),
        }
        return [name for name, ok in checks.items() if not ok]


def sigma_from_residue(a: int, b: int) -> int:
    """Sign obtained only from ``(a, b)`` via a residue mod 3.

    ``sigma = +1`` iff ``sqrt(q^2 r^2 - (q+r)^2/3)`` is ``-1 mod 3``.
    """
    q, r = a // 2, b // 2
    rad = q * q * r * r - (q + r) ** 2 // 3
    root = isqrt(rad)
    if root * root != rad or (q + r) % 3:
        raise NotElepPair(f"({a}, {b}) is not an ELEP pair")
    return 1 if root % 3 == 2 else -1


@dataclass(frozen=True)
class ParallelogramMetrics:
    dl_sq: int
    ds_sq: int
    h_l: Fraction
    h_s: Fraction
    eta_l_sq: Fraction
    eta_s_sq: Fraction


def metrics(p: ElepPair) -> ParallelogramMetrics:
    """Squared diagonals, heights and squared altitudes, all exact."""
    s2, t2 = p.s * p.s, 3 * p.t * p.t
    base = 9 * p.s * p.s * p.t * p.t
    dl_sq = 12 * (base - 2 * min(s2, t2))
    ds_sq = 12 * (base - 2 * max(s2, t2))
    per = p.a + p.b
    return ParallelogramMetrics(
        dl_sq=dl_sq,
        ds_sq=ds_sq,
        h_l=Fraction(2 * per, p.a),
        h_s=Fraction(2 * per, p.b),
        eta_l_sq=Fraction(12 * per * per, ds_sq),
        eta_s_sq=Fraction(12 * per * per, dl_sq),
    )


def diagonals_from_sides(a: int, b: int) -> tuple[int, int]:
    """``3(a^2+b^2) +/- 2*disc``, computed without (s, t)."""
    disc = check_sides(a, b)
    if disc is None:
        raise NotElepPair(f"({a}, {b}) is not an ELEP pair")
    base = 3 * (a * a + b * b)
    return base + 2 * disc, base - 2 * disc


def rhombus_witness(a: int) -> Optional[int]:
    return perfect_square(9 * a * a - 48)
