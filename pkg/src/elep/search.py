"""Independent verification engines.

* :func:`representations` solves ``x^2 - xy + y^2 = N`` exactly.
* :func:`realize` produces explicit lattice edge vectors for an admissible
  side pair.
* :func:`scan` is the ground-truth oracle: it finds every equable lattice
  parallelogram with edge vectors in a box, without assuming anything about
  the shape of the side lengths.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .core import check_sides
from .eisenstein import (
    EPoint,
    LatticeParallelogram,
    canonical,
    det,
    is_equable,
    is_equable_raw,
    norm,
    presentations,
)
from .families import Flags, classify
from .numth import isqrt, perfect_square, squarefree_decompose

REPRESENTATION_LIMIT = 10**10
SCAN_LIMIT = 60


class StructuralError(RuntimeError):
    """Raised when a computation contradicts a proven existence result."""


def representations(n: int) -> list[EPoint]:
    """All ``(x, y)`` with ``x^2 - xy + y^2 = n``, sorted."""
    if n < 1 or n > REPRESENTATION_LIMIT:
        raise ValueError(f"N = {n} outside [1, {REPRESENTATION_LIMIT}]")
    # x = (y +/- sqrt(4N - 3y^2)) / 2
    ymax = 2 * isqrt(n // 3) + 1
    out = set()
    for y in range(-ymax, ymax + 1):
        r = perfect_square(4 * n - 3 * y * y)
        if r is None:
            continue
        for num in (y + r, y - r):
            if num % 2 == 0:
                out.add(EPoint(num // 2, y))
    return sorted(out)


@dataclass(frozen=True)
class Realization:
    v1: EPoint
    v2: EPoint
    a: int
    b: int

    @property
    def vertices(self) -> tuple[EPoint, EPoint, EPoint, EPoint]:
        return LatticeParallelogram(self.v1, self.v2).vertices()

    @property
    def determinant(self) -> int:
        return abs(det(self.v1, self.v2))

    def fits(self, max_coord: int) -> bool:
        return all(abs(c) <= max_coord for p in self.vertices for c in p)


def realize(a: int, b: int) -> Realization:
    """Lexicographically first lattice edge pair with norms ``3a^2, 3b^2`` and area ``2sqrt3(a+b)``."""
    if check_sides(a, b) is None:
        raise ValueError(f"({a}, {b}) fails the side criterion")
    target = 4 * (a + b)
    for v1 in representations(3 * a * a):
        for v2 in representations(3 * b * b):
            if abs(det(v1, v2)) == target:
                return Realization(v1, v2, a, b)
    raise StructuralError(f"no lattice realization found for admissible ({a}, {b})")


def monthly_check(side_sq: tuple[int, int, int], area_quarter_units: int) -> bool:
    """Eisenstein-lattice realizability test for a triangle.

    ``side_sq`` are the squared side lengths; the triangle qualifies when its
    area equals ``sqrt(3)/4 * area_quarter_units``, its squared sides are
    integers, and some squared side ``r^2 t`` has ``t`` free of primes that are
    ``2 mod 3``.
    """
    p, q, r = side_sq
    if min(p, q, r) <= 0:
        raise ValueError("squared sides must be positive")
    # 16 * area^2 via Heron in squared-side form
    sixteen_area_sq = 2 * (p * q + q * r + r * p) - (p * p + q * q + r * r)
    if sixteen_area_sq <= 0:
        raise ValueError(f"degenerate triangle {side_sq}")
    n = area_quarter_units
    cond_area = n >= 1 and sixteen_area_sq == 3 * n * n
    cond_int = all(isinstance(v, int) for v in side_sq)
    cond_side = any(_no_prime_2_mod_3(squarefree_decompose(v)[0]) for v in side_sq)
    return cond_area and cond_int and cond_side


def _no_prime_2_mod_3(f: int) -> bool:
    d = 2
    while d * d <= f:
        if f % d == 0:
            if d % 3 == 2:
                return False
            while f % d == 0:
                f //= d
        d += 1
    return f == 1 or f % 3 != 2


@dataclass
class FoundPair:
    a: int
    b: int
    representative: Realization
    count_of_congruence_classes: int
    presentations: int
    flags: Flags


@dataclass
class ScanReport:
    max_coord: int
    found: list[FoundPair] = field(default_factory=list)
    anomalies: list[tuple[EPoint, EPoint]] = field(default_factory=list)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(f.a, f.b) for f in self.found]

    def rhombi(self) -> list[FoundPair]:
        return [f for f in self.found if f.a == f.b]

    def with_vertical_diagonal(self) -> list[FoundPair]:
        return [f for f in self.found if f.flags.has_vertical_diagonal]


def _box_points(m: int) -> dict[int, list[EPoint]]:
    """Nonzero box points grouped by norm."""
    by_norm = defaultdict(list)
    for x, y in product(range(-m, m + 1), repeat=2):
        if x or y:
            by_norm[x * x - x * y + y * y].append(EPoint(x, y))
    return by_norm


def _norm_pairs(m: int) -> list[tuple[int, int, int]]:
    """Norm pairs ``(n1 <= n2)`` that admit an equable parallelogram, with the required ``D``.

    Equability forces ``n1*n2`` to be a perfect square, i.e. equal squarefree
    parts, so only norms inside one squarefree class are paired.
    """
    classes = defaultdict(list)
    for n in _box_points(m):
        classes[squarefree_decompose(n)[0]].append(n)
    out = []
    for norms in classes.values():
        norms.sort()
        for i, n1 in enumerate(norms):
            for n2 in norms[i:]:
                k = perfect_square(n1 * n2)
                rhs = 16 * (n1 + n2) + 32 * k
                if rhs % 3 == 0 and (d := perfect_square(rhs // 3)) is not None:
                    out.append((n1, n2, d))
    return out


def _scan_chunk(args) -> list[tuple[EPoint, EPoint]]:
    m, chunk = args
    by_norm = _box_points(m)
    hits = []
    for n1, n2, d in chunk:
        for v1 in by_norm[n1]:
            for v2 in by_norm[n2]:
                if abs(det(v1, v2)) == d:
                    hits.append((v1, v2))
    return hits


def equable_presentations(max_coord: int, jobs: int = 1) -> list[tuple[EPoint, EPoint]]:
    """Every ordered edge pair ``(v1, v2)`` in the box (norm(v1) <= norm(v2)) that is equable."""
    pairs = _norm_pairs(max_coord)
    if jobs <= 1:
        hits = _scan_chunk((max_coord, pairs))
    else:
        chunks = [pairs[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            hits = [h for part in pool.map(_scan_chunk, [(max_coord, c) for c in chunks]) for h in part]
    return sorted(hits)


def scan(max_coord: int, jobs: int = 1) -> ScanReport:
    """Exhaustive search of equable parallelograms with edge vectors in ``[-m, m]^2``."""
    if not 0 <= max_coord <= SCAN_LIMIT:
        raise ValueError(f"max_coord must be in [0, {SCAN_LIMIT}]")
    report = ScanReport(max_coord)
    groups: dict[tuple[int, int], dict] = {}
    for v1, v2 in equable_presentations(max_coord, jobs):
        assert is_equable(LatticeParallelogram(v1, v2))
        n1, n2 = norm(v1), norm(v2)
        m1 = perfect_square(n1 // 3) if n1 % 3 == 0 else None
        m2 = perfect_square(n2 // 3) if n2 % 3 == 0 else None
        if m1 is None or m2 is None:
            report.anomalies.append((v1, v2))
            continue
        key = (m1, m2)
        g = groups.setdefault(key, {"classes": set(), "count": 0})
        g["count"] += 1
        g["classes"].add(canonical(v1, v2))
    for (a, b), g in sorted(groups.items()):
        v1, v2 = min(g["classes"])
        if norm(v1) > norm(v2):
            v1, v2 = v2, v1
        flags = _class_flags(g["classes"])
        report.found.append(FoundPair(a, b, Realization(v1, v2, a, b), len(g["classes"]), g["count"], flags))
    return report


def _class_flags(classes) -> Flags:
    """Flags that hold in at least one lattice-congruent orientation."""
    seen = [
        classify(LatticeParallelogram(w1, w2).vertices())
        for v1, v2 in classes
        for w1, w2 in presentations(v1, v2)
    ]
    return Flags(*(any(getattr(f, name) for f in seen) for name in Flags.__dataclass_fields__))


def brute_equable(max_coord: int) -> list[tuple[EPoint, EPoint]]:
    """Slow reference: test every box pair with :func:`is_equable_raw`."""
    pts = [EPoint(x, y) for x, y in product(range(-max_coord, max_coord + 1), repeat=2) if x or y]
    hits = []
    for v1 in pts:
        n1 = norm(v1)
        for v2 in pts:
            n2 = norm(v2)
            if n1 > n2:
                continue
            d = abs(det(v1, v2))
            if d and is_equable_raw(n1, n2, d):
                hits.append((v1, v2))
    return sorted(hits)


__all__ = [
    "StructuralError",
    "Realization",
    "FoundPair",
    "ScanReport",
    "representations",
    "realize",
    "monthly_check",
    "scan",
    "equable_presentations",
    "brute_equable",
    "presentations",
]
