from fractions import Fraction

import pytest

from degreesets.blocks import AdamsBlock, CircleBlock, ManifoldExpr, RationalGraphBlock, graph_family
from degreesets.calculus import (
    HypothesisViolation,
    adams_pair_degrees,
    circle_pair_degrees,
    grouped_degree_set,
    pair_degrees,
    rational_pair_degrees,
    self_degree_upper_bound,
    sum_rule,
)
from degreesets.setalg import DegreeSet

from oracles import pairwise_sums


def S(*xs):
    return DegreeSet.of(*xs)


def K(*eulers):
    return tuple(CircleBlock(e) for e in eulers)


def circle_expr(*groups):
    return ManifoldExpr("circle3", [K(*g) for g in groups], 3, 0)


@pytest.mark.parametrize(
    "i, j, expected",
    [(2, 6, S(0, 3)), (2, 3, S(0)), (5, 5, S(0, 1)), (15, -15, S(0, -1)), (-3, 12, S(0, -4)), (6, 2, S(0))],
)
def test_circle_pairs(i, j, expected):
    assert circle_pair_degrees(CircleBlock(i), CircleBlock(j)) == expected


def test_circle_genus_mismatch():
    with pytest.raises(ValueError):
        circle_pair_degrees(CircleBlock(2, 2), CircleBlock(2, 3))


def test_rational_pairs():
    family = graph_family(2)
    assert rational_pair_degrees(RationalGraphBlock(0, 1, "1/2"), RationalGraphBlock(0, 1, 3), family) == S(0, 6)
    assert rational_pair_degrees(RationalGraphBlock(0, 1, "1/2"), RationalGraphBlock(1, 1, 3), family) == S(0)
    assert rational_pair_degrees(RationalGraphBlock(1, 1, "-2/7"), RationalGraphBlock(1, 1, "-2/7"), family) == S(0, 1)
    with pytest.raises(ValueError):
        rational_pair_degrees(RationalGraphBlock(0, 1, 1), RationalGraphBlock(0, 2, 1), family)


def test_rational_pairs_on_isomorphic_copies():
    g = graph_family(1)[0]
    family = [g, g.relabel([1, 0])]
    assert rational_pair_degrees(RationalGraphBlock(0, 1, 2), RationalGraphBlock(1, 1, 5), family) == S(0, "5/2")


def test_adams_pairs():
    assert adams_pair_degrees(AdamsBlock(3, 2), AdamsBlock(15, 2)) == S(0, 25)
    assert adams_pair_degrees(AdamsBlock(3, 2), AdamsBlock(5, 2)) == S(0)
    assert adams_pair_degrees(AdamsBlock(3, 2, -1), AdamsBlock(3, 2, 1)) == S(0, -1)
    assert adams_pair_degrees(AdamsBlock(5, 3, -1), AdamsBlock(35, 3, -1)) == S(0, 343)
    with pytest.raises(ValueError):
        adams_pair_degrees(AdamsBlock(1, 2), AdamsBlock(1, 3))
    with pytest.raises(ValueError):
        adams_pair_degrees(AdamsBlock(1, 2, 1, "X"), AdamsBlock(1, 2, 1, "Y"))


def test_pair_degrees_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        pair_degrees(CircleBlock(1), AdamsBlock(1, 2))


def test_sum_rule_examples():
    assert sum_rule(K(2, 2), CircleBlock(2)) == S(0, 1, 2)
    expected = pairwise_sums({0, -1}, {0, 3})
    assert sum_rule(K(15, -5), CircleBlock(-15)) == DegreeSet(expected) == S(-1, 0, 2, 3)
    assert sum_rule(K(7), CircleBlock(7)) == S(0, 1)


def test_sum_rule_many_repeats():
    # 37 copies of K_-6 and 5 copies of K_6 against K_6: ratios -1 and +1
    blocks = K(*([-6] * 37 + [6] * 5))
    assert sum_rule(blocks, CircleBlock(6)) == DegreeSet(range(-37, 6))


def test_grouped_degree_set_worked_case():
    M = circle_expr([2, 2], [15, -5])
    N = circle_expr([2], [-15])
    degrees, matrix = grouped_degree_set(M, N)
    assert matrix.diagonal() == [S(0, 1, 2), S(-1, 0, 2, 3)]
    assert matrix[0, 1] == S(0) and matrix[1, 0] == S(0)
    assert degrees == S(0, 2)
    assert matrix.to_json()["entries"][0][0] == ["0", "1", "2"]


def test_grouped_degree_set_single_block():
    degrees, _ = grouped_degree_set(circle_expr([5]), circle_expr([5]))
    assert degrees == S(0, 1)


def test_hypothesis_violation():
    with pytest.raises(HypothesisViolation) as info:
        grouped_degree_set(circle_expr([2], [2]), circle_expr([2], [4]))
    assert (info.value.row, info.value.col) == (0, 1)
    assert info.value.entry == S(0, 2)


def test_grouped_requires_single_block_targets():
    with pytest.raises(ValueError):
        grouped_degree_set(circle_expr([2]), circle_expr([2, 2]))
    with pytest.raises(ValueError):
        grouped_degree_set(circle_expr([2], [3]), circle_expr([2]))


def test_result_inside_every_diagonal_entry():
    M = circle_expr([3, 3, 3], [35, -7, 5])
    N = circle_expr([3], [-35])
    degrees, matrix = grouped_degree_set(M, N)
    assert all(degrees.issubset(d) for d in matrix.diagonal())


def test_self_degree_bounds():
    assert self_degree_upper_bound(circle_expr([2])) == S(0, 1)
    assert self_degree_upper_bound(circle_expr([2, 2])) == S(0, 1, 2)
    # against K_15: {0,1} + D(K_-5, K_15) = {0,1} + {0,-3}; against K_-5: {0} + {0,1}
    assert sum_rule(K(15, -5), CircleBlock(15)) == S(-3, -2, 0, 1)
    assert self_degree_upper_bound(circle_expr([15, -5])) == S(0, 1)


def test_adams_sign_flip_negates():
    left = [AdamsBlock(3, 2), AdamsBlock(15, 2, -1)]
    target = AdamsBlock(15, 2)
    flipped = [AdamsBlock(b.r, b.m, -b.sign) for b in left]
    assert sum_rule(flipped, target) == sum_rule(left, target).negate()
