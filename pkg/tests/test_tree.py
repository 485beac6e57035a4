import pytest

from elep.core import ElepPair, NotElepPair
from elep.tree import (
    EdgeLabel,
    MarkovSolution,
    children,
    enumerate_tree,
    path_to_root,
    phi,
    phi_param,
    project,
    root,
    solutions_of,
)
from .oracles import brute_pairs


def test_phi_examples():
    assert phi(3, MarkovSolution(1, 1, 1)) == MarkovSolution(1, 1, 2)
    assert phi(2, MarkovSolution(1, 1, 1)) == MarkovSolution(1, 1, 1)
    assert phi(1, MarkovSolution(1, 1, 2)) == MarkovSolution(11, 1, 2)
    assert project(MarkovSolution(11, 1, 2)) == (4, 62)


def test_markov_validation():
    with pytest.raises(ValueError):
        MarkovSolution(1, 1, 3)
    with pytest.raises(ValueError):
        phi(4, MarkovSolution(1, 1, 1))


def test_phi_param_examples():
    assert phi_param(1, 2, (1, 1)) == (5, 1)
    assert phi_param(2, 4, (1, 1)) == (1, 3)
    assert phi_param(2, 28, (5, 1)) == (5, 139)


def test_project_examples():
    assert project(MarkovSolution(1, 1, 1)) == (2, 4)
    assert project(MarkovSolution(5, 1, 1)) == (2, 28)
    assert project(MarkovSolution(1, 3, 2)) == (4, 14)


def labelled(node):
    return {(str(lab), c.ab) for lab, c in children(node)}


def test_children_root():
    assert labelled(root()) == {("phi1,2", (2, 28)), ("phi1,4", (4, 62)), ("phi2,4", (4, 14))}
    assert [c.ab for _, c in children(root())] == [(2, 28), (4, 62), (4, 14)]


def test_children_examples():
    from elep.tree import TreeNode

    n = TreeNode(ElepPair.from_sides(2, 28), 1)
    assert labelled(n) == {("phi2,2", (2, 268)), ("phi1,28", (28, 446)), ("phi2,28", (28, 4142))}
    n = TreeNode(ElepPair.from_sides(4, 14), 1)
    assert ("phi2,14", (14, 52)) in labelled(n)


def test_enumerate_sizes():
    t1 = enumerate_tree(1)
    assert [n.ab for n in t1.walk()] == [(2, 4), (2, 28), (4, 62), (4, 14)]
    t2 = enumerate_tree(2)
    assert len(t2) == 13
    assert (62, 988) in {n.ab for n in t2.walk()}
    # (268, 39662) hangs below (2, 268), itself at depth 2
    depth = {n.ab: n.depth for n in enumerate_tree(3).walk()}
    assert depth[(268, 39662)] == 3
    assert len(enumerate_tree(0)) == 1


def test_path_to_root_examples():
    assert path_to_root(2, 4) == []
    assert [str(e) for e in path_to_root(2, 268)] == ["phi2,2", "phi1,2"]
    assert [str(e) for e in path_to_root(14, 52)] == ["phi2,14", "phi2,4"]
    with pytest.raises(NotElepPair):
        path_to_root(3, 6)


def test_path_to_root_agrees_with_tree():
    for node in enumerate_tree(4).walk():
        path = path_to_root(*node.ab)
        assert len(path) == node.depth
        if node.depth:
            assert path[0] == node.parent_edge


def test_edge_label_matches_source_side():
    for node in enumerate_tree(3).walk():
        for lab, _ in node.children:
            side = node.pair.a if lab.u_choice == "a" else node.pair.b
            assert lab.u_value == side


def test_involutions_and_fixed_points(depth6):
    phi2_fixed = set()
    for node in depth6:
        for sol in solutions_of(node.pair):
            for i in (1, 2, 3):
                img = phi(i, sol)
                assert phi(i, img) == sol
                if img == sol:
                    assert i == 2
                    phi2_fixed.add(sol)
            assert project(sol) == node.ab
            assert project(phi(3, sol)) == project(sol)
            assert 2 * sol.u in node.ab
    assert phi2_fixed == {MarkovSolution(1, 1, 1)}


def test_degree_and_monotonicity(depth6):
    for node in depth6:
        if node.depth < 6:
            assert len(node.children) == 3
        for _, child in node.children:
            assert child.pair.s * child.pair.t > node.pair.s * node.pair.t
            assert child.pair.b >= node.pair.b


def test_no_duplicate_pairs(depth6):
    keys = [n.ab for n in depth6]
    assert len(keys) == len(set(keys)) == 1093


def test_pruned_tree_equals_brute_force_set():
    # every admissible pair with b <= 1500 is reached, and nothing else
    tree_pairs = {n.ab for n in enumerate_tree(100, 1500).walk()}
    assert tree_pairs == set(brute_pairs(1500))


def test_pruning_drops_subtrees():
    t = enumerate_tree(10, 100)
    assert {n.ab for n in t.walk()} == {(2, 4), (2, 28), (4, 62), (4, 14), (14, 52)}


def test_edge_label_str():
    assert str(EdgeLabel(1, "a", 2)) == "phi1,2"
