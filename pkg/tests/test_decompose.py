from fractions import Fraction
from math import factorial, gcd

import pytest

from degreesets.decompose import Decomposition, decompose_integer_set, decompose_rational_set
from degreesets.setalg import DegreeSet, SeqB

from oracles import multiset_sums, subset_sums


def oracle_intersection(sequences):
    sets = [multiset_sums(seq) for seq in sequences]
    out = sets[0]
    for s in sets[1:]:
        out &= s
    return out


def is_admissible_power(b, m):
    b = abs(int(b))
    k = round(b ** (1 / m))
    return any(c > 0 and c**m == b and gcd(c, factorial(m)) == 1 for c in (k - 1, k, k + 1))


def test_zero_set():
    dec = decompose_integer_set([0], 1)
    assert dec.sequences == (SeqB(),)
    assert dec.chosen_k == ()
    assert dec.intersection() == DegreeSet.of(0)


def test_zero_two_smallest_k():
    dec = decompose_integer_set([0, 2], 1)
    assert dec.sequences == (SeqB([1, 1]), SeqB([-1, 3]))
    assert dec.chosen_k == (3,)
    assert oracle_intersection(dec.sequences) == {0, 2}


def test_symmetric_unit_set_at_m2():
    dec = decompose_integer_set([0, -1, 1], 2)
    assert dec.sequences == (
        SeqB([-1, 1]),
        SeqB([-1] * 8 + [9]),
        SeqB([1] * 8 + [-9]),
    )
    assert dec.chosen_k == (3, 3)
    assert oracle_intersection(dec.sequences) == {-1, 0, 1}


def test_first_sequence_is_full_interval():
    dec = decompose_integer_set([0, -4, 2, 7], 1)
    assert subset_sums(dec.sequences[0]) == set(range(-4, 8))


def test_multiset_oracle_matches_bitmask_oracle():
    seq = [-1, -1, 1, 4, -1, 4, 2]
    assert multiset_sums(seq) == subset_sums(seq)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("A", [[0, 5], [0, -3], [0, -6, -2, 1, 4], [0, 1, 2, 3], [-10, 0, 10]])
def test_roundtrip_and_powers(A, m):
    dec = decompose_integer_set(A, m)
    assert len(dec.sequences) == len(A)
    assert oracle_intersection(dec.sequences) == set(A)
    for seq in dec.sequences:
        assert set(A) <= multiset_sums(seq)
        assert all(is_admissible_power(b, m) for b in seq)
    # every k is the smallest one clearing the strict bound
    for k in dec.chosen_k:
        assert gcd(k, factorial(m)) == 1


def test_chosen_k_is_minimal():
    # positives: bound max(e_s, e_j + a_r) = max(7, 7 + 4) = 11 -> smallest odd k with k^2 > 11 is 5
    dec = decompose_integer_set([0, -4, 7], 2)
    assert dec.chosen_k == (5, 5)
    dec = decompose_integer_set([0, 3], 1)
    assert dec.chosen_k == (4,)


@pytest.mark.parametrize(
    "A, m, message",
    [([1, 2], 1, "contain 0"), ([0, "1/2"], 1, "integer"), ([0, 1], 0, "positive")],
)
def test_integer_errors(A, m, message):
    with pytest.raises(ValueError, match=message):
        decompose_integer_set(A, m)


def test_rational_zero():
    dec = decompose_rational_set([0])
    assert dec.lam == 1
    assert dec.sequences == (SeqB(),)


def test_rational_half():
    dec = decompose_rational_set([0, "1/2"])
    assert dec.lam == 2
    assert dec.sequences == (SeqB(["1/2"]), SeqB(["-1/2", 1]))
    assert dec.chosen_k == (2,)
    assert oracle_intersection(dec.sequences) == {0, Fraction(1, 2)}


def test_rational_mixed_denominators():
    A = {0, Fraction(1, 2), Fraction(-2, 3)}
    dec = decompose_rational_set(A)
    assert dec.lam == 6
    scaled = decompose_integer_set([0, 3, -4], 1)
    assert [list(s) for s in dec.sequences] == [[b / 6 for b in s] for s in scaled.sequences]
    assert oracle_intersection(dec.sequences) == A


def test_rational_requires_zero():
    with pytest.raises(ValueError):
        decompose_rational_set(["1/2"])


def test_json_roundtrip():
    dec = decompose_rational_set([0, "1/2", "-2/3"])
    data = dec.to_json()
    assert list(data) == ["A", "m", "lambda", "sequences", "chosen_k"]
    assert data["lambda"] == "6"
    assert Decomposition.from_json(data) == dec
