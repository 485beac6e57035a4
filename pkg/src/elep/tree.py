"""Solutions of s^2 + 3t^2 + 2u^2 = 6stu and the tree of admissible side pairs.

Three Vieta involutions act on solutions ``(s, t, u)``.  Projecting a solution
to its side pair ``(a, b)`` identifies the two solutions swapped by the third
involution, which contracts those edges and leaves a tree on side pairs: the
root ``(2, 4)`` has three neighbours, every other node has four.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Literal, Optional

from .core import ElepPair, NotElepPair, params_to_pair
from .numth import gcd, perfect_square

ROOT_PARAMS = (1, 1)
ROOT_PAIR = (2, 4)


@dataclass(frozen=True)
class MarkovSolution:
    s: int
    t: int
    u: int

    def __post_init__(self):
        s, t, u = self.s, self.t, self.u
        if min(s, t, u) < 1:
            raise ValueError(f"non-positive entry in {self}")
        if s * s + 3 * t * t + 2 * u * u != 6 * s * t * u:
            raise ValueError(f"{self} does not solve s^2+3t^2+2u^2=6stu")
        if s % 2 == 0 or t % 2 == 0 or gcd(s, t) != 1:
            raise ValueError(f"{self}: s, t must be odd and coprime")


def phi(i: int, sol: MarkovSolution) -> MarkovSolution:
    s, t, u = sol.s, sol.t, sol.u
    if i == 1:
        return MarkovSolution(6 * t * u - s, t, u)
    if i == 2:
        return MarkovSolution(s, 2 * s * u - t, u)
    if i == 3:
        return MarkovSolution(s, t, 3 * s * t - u)
    raise ValueError(f"no involution phi_{i}")


def phi_param(i: int, u: int, p: tuple[int, int]) -> tuple[int, int]:
    """``phi_{1,u}(s,t) = (3ut - s, t)`` and ``phi_{2,u}(s,t) = (s, us - t)``."""
    s, t = p
    if i == 1:
        out = (3 * u * t - s, t)
    elif i == 2:
        out = (s, u * s - t)
    else:
        raise ValueError(f"no parameter map phi_{i},u")
    assert out[0] > 0 and out[1] > 0 and out[0] % 2 and out[1] % 2 and gcd(*out) == 1, (i, u, p, out)
    return out


def project(sol: MarkovSolution) -> tuple[int, int]:
    s, t = sol.s, sol.t
    root = perfect_square(9 * s * s * t * t - 2 * (s * s + 3 * t * t))
    assert root is not None, sol
    return 3 * s * t - root, 3 * s * t + root


def solutions_of(pair: ElepPair) -> tuple[MarkovSolution, MarkovSolution]:
    return MarkovSolution(pair.s, pair.t, pair.q), MarkovSolution(pair.s, pair.t, pair.r)


@dataclass(frozen=True)
class EdgeLabel:
    map_index: Literal[1, 2]
    u_choice: Literal["a", "b"]
    u_value: int

    def __str__(self) -> str:
        return f"phi{self.map_index},{self.u_value}"


@dataclass
class TreeNode:
    pair: ElepPair
    depth: int = 0
    parent_edge: Optional[EdgeLabel] = None
    children: list[tuple[EdgeLabel, "TreeNode"]] = field(default_factory=list)

    @property
    def ab(self) -> tuple[int, int]:
        return self.pair.a, self.pair.b

    def walk(self) -> Iterator["TreeNode"]:
        """Breadth-first traversal."""
        queue = deque([self])
        while queue:
            node = queue.popleft()
            yield node
            queue.extend(child for _, child in node.children)

    def __len__(self) -> int:
        return sum(1 for _ in self.walk())


def _neighbours(pair: ElepPair) -> list[tuple[EdgeLabel, tuple[int, int]]]:
    st = (pair.s, pair.t)
    out = []
    for choice, u in (("a", pair.a), ("b", pair.b)):
        for i in (1, 2):
            out.append((EdgeLabel(i, choice, u), phi_param(i, u, st)))
    # fixed order phi_{1,a}, phi_{2,a}, phi_{1,b}, phi_{2,b}
    return out


def _parent_params(pair: ElepPair) -> Optional[tuple[int, int]]:
    if (pair.s, pair.t) == ROOT_PARAMS:
        return None
    smaller = [st for _, st in _neighbours(pair) if st[0] * st[1] < pair.s * pair.t]
    assert len(smaller) == 1, (pair, smaller)
    return smaller[0]


def children(node: TreeNode) -> list[tuple[EdgeLabel, TreeNode]]:
    """The three neighbours of ``node`` away from the root."""
    here = (node.pair.s, node.pair.t)
    parent = _parent_params(node.pair)
    out = []
    for label, st in _neighbours(node.pair):
        if st == here or st == parent:
            continue
        assert st[0] * st[1] > here[0] * here[1], (node.pair, label, st)
        out.append((label, TreeNode(ElepPair.from_params(*st), node.depth + 1, label)))
    assert len(out) == 3, (node.pair, out)
    return out


def root() -> TreeNode:
    return TreeNode(ElepPair.from_params(*ROOT_PARAMS))


def enumerate_tree(max_depth: int, max_b: Optional[int] = None) -> TreeNode:
    """Breadth-first materialization down to ``max_depth``.

    Nodes with ``b > max_b`` are dropped with their subtree; the larger side
    never decreases from parent to child, so nothing below them could fit.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    top = root()
    queue = deque([top])
    while queue:
        node = queue.popleft()
        if node.depth >= max_depth:
            continue
        for label, child in children(node):
            assert child.pair.b >= node.pair.b, (node.pair, child.pair)
            if max_b is not None and child.pair.b > max_b:
                continue
            node.children.append((label, child))
            queue.append(child)
    return top


def path_to_root(a: int, b: int) -> list[EdgeLabel]:
    """Edge labels walking from ``(a, b)`` up to the root, as drawn in the tree."""
    pair = ElepPair.from_sides(a, b)
    path = []
    while (pair.s, pair.t) != ROOT_PARAMS:
        parent = ElepPair.from_params(*_parent_params(pair))
        label = next(lab for lab, st in _neighbours(parent) if st == (pair.s, pair.t))
        path.append(label)
        pair = parent
    return path


def nodes_up_to(max_b: int, max_depth: int = 200) -> list[TreeNode]:
    """Every tree node with larger side at most ``max_b``."""
    return list(enumerate_tree(max_depth, max_b).walk())


__all__ = [
    "MarkovSolution",
    "EdgeLabel",
    "TreeNode",
    "NotElepPair",
    "phi",
    "phi_param",
    "project",
    "solutions_of",
    "children",
    "root",
    "enumerate_tree",
    "path_to_root",
    "nodes_up_to",
    "params_to_pair",
]
