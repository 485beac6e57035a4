import pytest

from elep.core import ElepPair, check_sides, metrics
from elep.eisenstein import EPoint, LatticeParallelogram, is_equable, norm
from elep.families import (
    PRINTED_ERRATA,
    brute_pell,
    classify,
    horizontal_family,
    horizontal_u,
    pell_q_u,
    pell_u_m,
    recurrence_pell,
    table_row,
    vertical_side2_family,
    vertical_side4_family,
)


def test_horizontal_examples():
    r = horizontal_family(0)
    assert (r.A, r.B) == (EPoint(-2, -4), EPoint(6, 0))
    assert table_row(r)["(s,t)"] == (1, 1) and r.sides == (2, 4)
    r = horizontal_family(2)
    assert (r.A, r.B, r.sides) == (EPoint(-26, -4), EPoint(66, 0), (14, 52))
    assert table_row(r)["(s,t)"] == (1, 11)
    r = horizontal_family(8)
    assert r.sides == (37634, 140452) and r.B == EPoint(178086, 0)


def test_pell_q_u():
    assert pell_q_u(4) == [(1, 0), (2, 1), (7, 4), (26, 15)]
    assert pell_q_u(5)[4] == (97, 56)
    assert all(q * q - 3 * u * u == 1 for q, u in pell_q_u(30))


def test_vs2_examples():
    row = table_row(vertical_side2_family(1))
    assert (row["(u,m)"], row["b"], row["x"], row["y"]) == ((1, 1), 4, 6, 2)
    row = table_row(vertical_side2_family(3))
    assert (row["(u,m)"], row["b"], row["x"], row["y"]) == ((89, 109), 268, 270, 218)
    row = table_row(vertical_side2_family(8))
    assert (row["b"], row["x"]) == (25378084, 25378086)


def test_vs4_examples():
    row = table_row(vertical_side4_family(1, 1))
    assert (row["(w,y)"], row["b"], row["x"], row["(s,t)"]) == ((1, 13), 14, 9, (1, 3))
    row = table_row(vertical_side4_family(2, 2))
    assert (row["(w,y)"], row["b"], row["x"], row["(s,t)"]) == ((236, 2713), 2834, 1419, (11, 43))
    row = table_row(vertical_side4_family(1, 4))
    assert (row["b"], row["(s,t)"]) == (1322594, (1609, 137))


def test_bad_indices():
    with pytest.raises(ValueError):
        horizontal_family(-1)
    with pytest.raises(ValueError):
        vertical_side2_family(0)
    with pytest.raises(ValueError):
        vertical_side4_family(3, 1)


def all_members():
    yield from (horizontal_family(n) for n in range(12))
    yield from (vertical_side2_family(n) for n in range(1, 12))
    for br in (1, 2):
        yield from (vertical_side4_family(br, n) for n in range(1, 9))


@pytest.mark.parametrize("member", list(all_members()), ids=lambda m: f"{m.family_tag}-{m.index}")
def test_members_equable_and_admissible(member):
    assert member.B == member.A + member.C
    assert is_equable(LatticeParallelogram(member.A, member.C))
    a, b = member.sides
    assert check_sides(a, b) is not None
    ElepPair.from_sides(a, b)


def test_horizontal_recurrence_identities():
    u = horizontal_u(40)
    for n in range(1, 39):
        assert u[n + 1] * u[n - 1] == u[n] ** 2 - 1
        assert 3 * u[n] ** 2 + 1 == (2 * u[n] - u[n - 1]) ** 2
    for n, (q, uu) in enumerate(pell_q_u(39)):
        assert q + 2 * uu == u[n + 1]


def test_horizontal_diagonal_is_short():
    for n in range(12):
        r = horizontal_family(n)
        m = metrics(ElepPair.from_sides(*r.sides))
        assert norm(r.B - r.O) == m.ds_sq
        assert classify(r).has_horizontal_diagonal


def test_vertical_side_lengths():
    for n in range(1, 12):
        r = vertical_side2_family(n)
        u, _ = pell_u_m(n)[-1]
        assert r.sides == (2, 1 + 3 * u)
        assert classify(r).has_vertical_side
    for br in (1, 2):
        for n in range(1, 9):
            r = vertical_side4_family(br, n)
            w = table_row(r)["(w,y)"][0]
            assert r.sides == (4, 2 * (1 + 6 * w))
            assert classify(r).has_vertical_side


def test_no_family_member_has_vertical_diagonal():
    assert not any(classify(m).has_vertical_diagonal for m in all_members())


def test_classify_plain_vertices():
    f = classify([EPoint(0, 0), EPoint(1, 0), EPoint(1, 1), EPoint(0, 1)])
    assert f.has_horizontal_side and not f.has_vertical_side


def test_brute_pell_examples():
    assert [u for u, _ in brute_pell("vs2", 100)] == [1, 9, 89]
    assert [w for w, _ in brute_pell("vs4", 300)] == [1, 5, 52, 236]
    assert [q for q, _ in brute_pell("q_u", 30)] == [1, 2, 7, 26]
    with pytest.raises(ValueError):
        brute_pell("nope", 3)


@pytest.mark.parametrize("kind,bound", [("q_u", 10**4), ("vs2", 10**3), ("vs4", 10**4)])
def test_brute_pell_matches_recurrence(kind, bound):
    assert brute_pell(kind, bound) == recurrence_pell(kind, bound)


def test_table3_row9_uses_construction():
    row = table_row(vertical_side2_family(9))
    assert row["(u,m)"] == (83739041, 102558961)
    assert row["y"] == 205117922
    assert (row["b"], row["x"]) == (251217124, 251217126)
    assert row["(s,t)"] == (4801, 8721) and 6 * 4801 * 8721 == 2 + row["b"]
    printed_b = PRINTED_ERRATA[("vs2", 9, "b")][0]
    assert check_sides(2, printed_b) is None


def test_table5_row1_x():
    row = table_row(vertical_side4_family(2, 1))
    assert row["x"] == 33 == PRINTED_ERRATA[("vs4_branch2", 1, "x")][1]
    # x = 18 with y = 59 would not give side 62*sqrt3
    assert 18**2 + 3 * 59**2 != 3 * 62**2
