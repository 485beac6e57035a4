"""Closed-form infinite families of ELEPs and orientation classification.

Three families are built from Pell-type equations:

* horizontal diagonal, from ``q^2 - 3u^2 = 1``;
* a vertical side of length ``2*sqrt(3)``, from ``3u^2 = 2m^2 + 1``;
* a vertical side of length ``4*sqrt(3)``, from ``132w^2 + 36w + 1 = y^2``
  (two interleaved branches sharing one affine recurrence).

All vertices are stored in omega coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .core import check_sides, pair_to_params
from .eisenstein import ORIGIN, EPoint, from_sqrt3_coords, is_equable_raw, det, norm, to_cartesian
from .numth import AffineRecurrence, companion, iterate_recurrence, perfect_square

FamilyTag = Literal["horizontal", "vs2", "vs4_branch1", "vs4_branch2"]

VS4_MATRIX = ((23, 2), (264, 23))
VS4_OFFSET = (3, 36)
VS4_SEEDS = {1: (1, 13), 2: (5, 59)}

# Cells of the well-known printed tables that disagree with the construction
# formulas.  Keyed by (family, index, column): (printed, constructed).
PRINTED_ERRATA = {
    ("vs2", 9, "b"): (2486793150, 251217124),
    ("vs2", 9, "x"): (2030458102, 251217126),
    ("vs4_branch2", 1, "x"): (18, 33),
}


@dataclass(frozen=True)
class OrientedRealization:
    """Parallelogram ``O A B C`` with ``B = A + C``; sides ``|OA| = a*sqrt3``, ``|OC| = b*sqrt3``."""

    O: EPoint
    A: EPoint
    B: EPoint
    C: EPoint
    family_tag: FamilyTag
    index: int

    @property
    def vertices(self) -> tuple[EPoint, EPoint, EPoint, EPoint]:
        return (self.O, self.A, self.B, self.C)

    @property
    def sides(self) -> tuple[int, int]:
        a = _side(self.A - self.O)
        b = _side(self.C - self.O)
        return (a, b) if a <= b else (b, a)

    def is_equable(self) -> bool:
        v1, v2 = self.A - self.O, self.C - self.O
        d = abs(det(v1, v2))
        return d > 0 and self.B - self.O == v1 + v2 and is_equable_raw(norm(v1), norm(v2), d)


def _side(v: EPoint) -> int:
    n = norm(v)
    m = perfect_square(n // 3) if n % 3 == 0 else None
    if m is None:
        raise ValueError(f"{v} has squared length {n}, not of the form 3m^2")
    return m


def horizontal_u(count: int) -> list[int]:
    """``u_0 .. u_{count-1}`` of ``u_n = 4u_{n-1} - u_{n-2}``, ``u_0 = 0, u_1 = 1``."""
    return [state[0] for state in iterate_recurrence(companion(4, -1, 0, 1), count)]


def pell_q_u(count: int) -> list[tuple[int, int]]:
    """First ``count`` solutions of ``q^2 - 3u^2 = 1`` from (1, 0), (2, 1)."""
    qs = iterate_recurrence(companion(4, -1, 1, 2), count)
    us = iterate_recurrence(companion(4, -1, 0, 1), count)
    return [(q[0], u[0]) for q, u in zip(qs, us)]


def horizontal_family(n: int) -> OrientedRealization:
    if n < 0:
        raise ValueError("n must be >= 0")
    u = horizontal_u(n + 2)
    A = EPoint(-6 * u[n] - 2, -4)
    B = EPoint(6 * u[n + 1] - 6 * u[n], 0)
    return OrientedRealization(ORIGIN, A, B, B - A, "horizontal", n)


def pell_u_m(count: int) -> list[tuple[int, int]]:
    """Solutions ``(u_n, m_n)``, n = 1..count, of ``3u^2 = 2m^2 + 1``."""
    us = iterate_recurrence(companion(10, -1, 1, 9), count)
    ms = iterate_recurrence(companion(10, -1, 1, 11), count)
    return [(u[0], m[0]) for u, m in zip(us, ms)]


def _vertical(a: int, x: int, y: int, tag: FamilyTag, n: int) -> OrientedRealization:
    # A = a*sqrt3*i, C = -x + y*sqrt3*i, B = A + C
    A = from_sqrt3_coords(0, a)
    C = from_sqrt3_coords(-x, y)
    return OrientedRealization(ORIGIN, A, A + C, C, tag, n)


def vertical_side2_family(n: int) -> OrientedRealization:
    if n < 1:
        raise ValueError("n must be >= 1")
    u, m = pell_u_m(n)[-1]
    return _vertical(2, 3 + 3 * u, 2 * m, "vs2", n)


def vs4_recurrence(branch: int) -> AffineRecurrence:
    if branch not in VS4_SEEDS:
        raise ValueError("branch must be 1 or 2")
    return AffineRecurrence(VS4_MATRIX, VS4_OFFSET, VS4_SEEDS[branch])


def pell_w_y(branch: int, count: int) -> list[tuple[int, int]]:
    """Solutions ``(w_n, y_n)``, n = 1..count, of ``132w^2 + 36w + 1 = y^2`` on one branch."""
    return iterate_recurrence(vs4_recurrence(branch), count)


def vertical_side4_family(branch: int, n: int) -> OrientedRealization:
    if n < 1:
        raise ValueError("n must be >= 1")
    w, y = pell_w_y(branch, n)[-1]
    return _vertical(4, 6 * w + 3, y, f"vs4_branch{branch}", n)


@dataclass(frozen=True)
class Flags:
    has_horizontal_diagonal: bool
    has_vertical_diagonal: bool
    has_vertical_side: bool
    has_horizontal_side: bool


def classify(vertices) -> Flags:
    """Orientation flags for a parallelogram given as four vertices in order.

    Accepts an :class:`OrientedRealization` or any 4-sequence of lattice points.
    """
    if isinstance(vertices, OrientedRealization):
        vertices = vertices.vertices
    pts = [to_cartesian(p) for p in vertices]

    def direction(i, j):
        dx = pts[j][0] - pts[i][0]
        dy = pts[j][1] - pts[i][1]
        return dy == 0, dx == 0

    sides = [direction(i, (i + 1) % 4) for i in range(4)]
    diags = [direction(0, 2), direction(1, 3)]
    return Flags(
        has_horizontal_diagonal=any(h for h, _ in diags),
        has_vertical_diagonal=any(v for _, v in diags),
        has_vertical_side=any(v for _, v in sides),
        has_horizontal_side=any(h for h, _ in sides),
    )


def brute_pell(kind: str, bound: int) -> list[tuple[int, int]]:
    """Exhaustive solutions with the leading variable between 1 and ``bound``.

    ``q_u``: ``q^2 - 3u^2 = 1`` over q >= 1; ``vs2``: ``3u^2 = 2m^2 + 1`` over
    u >= 1; ``vs4``: ``132w^2 + 36w + 1 = y^2`` over w >= 1.
    """
    out = []
    if kind == "q_u":
        for q in range(1, bound + 1):
            rest = q * q - 1
            if rest % 3 == 0 and (u := perfect_square(rest // 3)) is not None:
                out.append((q, u))
    elif kind == "vs2":
        for u in range(1, bound + 1):
            rest = 3 * u * u - 1
            if rest % 2 == 0 and (m := perfect_square(rest // 2)) is not None:
                out.append((u, m))
    elif kind == "vs4":
        for w in range(1, bound + 1):
            y = perfect_square(132 * w * w + 36 * w + 1)
            if y is not None:
                out.append((w, y))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return out


def recurrence_pell(kind: str, bound: int) -> list[tuple[int, int]]:
    """Recurrence-generated solutions with leading variable at most ``bound``, ascending."""

    def take(gen_count):
        count = 2
        while True:
            sols = gen_count(count)
            if sols[-1][0] > bound:
                return [p for p in sols if p[0] <= bound]
            count *= 2

    if kind == "q_u":
        return take(pell_q_u)
    if kind == "vs2":
        return take(pell_u_m)
    if kind == "vs4":
        return sorted(take(lambda c: pell_w_y(1, c)) + take(lambda c: pell_w_y(2, c)))
    raise ValueError(f"unknown kind {kind!r}")


def table_row(r: OrientedRealization) -> dict:
    """Column values of the family tables for one member."""
    a, b = r.sides
    s, t, _ = pair_to_params(a, b)
    tag, n = r.family_tag, r.index
    if tag == "horizontal":
        q, u = pell_q_u(n + 1)[n]
        return {"n": n, "(q,u)": (q, u), "a": a, "b": b, "A": r.A, "B": r.B, "(s,t)": (s, t)}
    cx, cy = to_cartesian(r.C)
    x, y = int(-cx), int(cy)
    if tag == "vs2":
        u, m = pell_u_m(n)[-1]
        return {"n": n, "(u,m)": (u, m), "b": b, "x": x, "y": y, "(s,t)": (s, t)}
    w, yy = pell_w_y(int(tag[-1]), n)[-1]
    return {"n": n, "(w,y)": (w, yy), "b": b, "x": x, "(s,t)": (s, t)}


def errata_for(tag: str, n: int) -> list[tuple[str, int, int]]:
    return [(col, printed, built) for (t, i, col), (printed, built) in PRINTED_ERRATA.items() if t == tag and i == n]


def check_member(r: OrientedRealization) -> bool:
    a, b = r.sides
    return r.is_equable() and check_sides(a, b) is not None
