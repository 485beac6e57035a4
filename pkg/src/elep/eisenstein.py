"""Exact geometry on the Eisenstein lattice Z[w], w = -1/2 + i*sqrt(3)/2.

A lattice point ``x + y*w`` is stored as the integer pair ``(x, y)``.  The
equability test here knows nothing about side-length structure, so it can
be used as an independent oracle for the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .numth import perfect_square


class DegenerateError(ValueError):
    pass


class EPoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return EPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return EPoint(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return EPoint(-self.x, -self.y)

    def __mul__(self, other):  # type: ignore[override]
        # w^2 = -1 - w
        x1, y1 = self
        x2, y2 = other
        return EPoint(x1 * x2 - y1 * y2, x1 * y2 + y1 * x2 - y1 * y2)

    def conj(self) -> "EPoint":
        # conj(w) = w^2 = -1 - w
        return EPoint(self.x - self.y, -self.y)

    def __str__(self) -> str:
        return omega_str(self)


ORIGIN = EPoint(0, 0)
UNITS = (EPoint(1, 0), EPoint(1, 1), EPoint(0, 1), EPoint(-1, 0), EPoint(-1, -1), EPoint(0, -1))


def omega_str(p: EPoint) -> str:
    """Render as ``x+yw`` (``w`` standing for omega)."""
    sign = "+" if p.y >= 0 else "-"
    return f"{p.x}{sign}{abs(p.y)}w"


@dataclass(frozen=True)
class LatticeParallelogram:
    """Parallelogram with vertices 0, v1, v1+v2, v2."""

    v1: EPoint
    v2: EPoint

    def vertices(self) -> tuple[EPoint, EPoint, EPoint, EPoint]:
        return (ORIGIN, self.v1, self.v1 + self.v2, self.v2)


def norm(p) -> int:
    x, y = p
    return x * x - x * y + y * y


def det(v1, v2) -> int:
    return v1[0] * v2[1] - v2[0] * v1[1]


def area2_units(pg: LatticeParallelogram) -> int:
    """``D = |x1*y2 - x2*y1|``; the area is ``D * sqrt(3) / 2``."""
    d = abs(det(pg.v1, pg.v2))
    if d == 0:
        raise DegenerateError(f"degenerate parallelogram {pg}")
    return d


def is_equable_raw(n1: int, n2: int, d: int) -> bool:
    """Perimeter == area for squared sides ``n1, n2`` and area ``d*sqrt(3)/2``.

    ``2(sqrt(n1) + sqrt(n2)) = sqrt(3)/2 * d`` squared gives
    ``16(n1+n2) + 32 sqrt(n1 n2) = 3 d^2``, which can only hold with
    ``n1*n2`` a perfect square.
    """
    k = perfect_square(n1 * n2)
    if k is None:
        return False
    return 16 * (n1 + n2) + 32 * k == 3 * d * d


def is_equable(pg: LatticeParallelogram) -> bool:
    d = area2_units(pg)
    return is_equable_raw(norm(pg.v1), norm(pg.v2), d)


def to_cartesian(p) -> tuple[Fraction, Fraction]:
    """``(cx, cy)`` such that the point is ``cx + cy*sqrt(3)*i``."""
    x, y = p
    return Fraction(2 * x - y, 2), Fraction(y, 2)


def from_sqrt3_coords(x: int, y: int) -> EPoint:
    """Lattice point ``x + y*sqrt(3)*i`` in omega coordinates."""
    return EPoint(x + y, 2 * y)


def symmetries(p: EPoint) -> Iterator[EPoint]:
    """The 12 images of ``p`` under the lattice point group."""
    for u in UNITS:
        q = p * u
        yield q
        yield q.conj()


def presentations(v1: EPoint, v2: EPoint) -> Iterator[tuple[EPoint, EPoint]]:
    """Every edge-vector pair describing a congruent copy of the parallelogram.

    Lattice point group (12) x independent edge signs x edge swap; the overlap
    between rotation by 180 degrees and the sign flips is harmless.
    """
    for u in UNITS:
        for c in (False, True):
            w1, w2 = v1 * u, v2 * u
            if c:
                w1, w2 = w1.conj(), w2.conj()
            for s1 in (w1, -w1):
                for s2 in (w2, -w2):
                    yield s1, s2
                    yield s2, s1


def canonical(v1: EPoint, v2: EPoint) -> tuple[EPoint, EPoint]:
    return min(presentations(v1, v2))
