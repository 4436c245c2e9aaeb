"""Write a finite set A containing 0 as an intersection of subset-sum sets.

For integer input the construction is fully explicit.  Order A as
``-a_r < ... < -a_1 < 0 < e_1 < ... < e_s`` and build:

* ``B(0)``: ``a_r`` copies of -1 and ``e_s`` copies of +1, so that
  ``S_B(0)`` is the whole integer interval ``[-a_r, e_s]``.
* ``B(j)`` for each positive ``e_j``: ``k**m - e_j`` copies of -1,
  ``e_{j-1}`` copies of +1 and one ``k**m``.  The big entry punches the
  hole ``(e_{j-1}, e_j)`` out of the interval.
* ``B(s+j)`` for each negative ``-a_j``: the mirror image, with one
  ``-k**m``.

Each ``k`` is the smallest positive integer coprime to ``m!`` clearing the
required strict bound, so every entry is ``+-k**m`` with ``gcd(k, m!) = 1``.

Rational input is scaled by the lcm of its denominators, decomposed at
``m = 1`` and scaled back.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any, Iterable

from .numtheory import smallest_power_base
from .setalg import (
    DegreeSet,
    SeqB,
    format_rat,
    intersect_all,
    parse_rat,
    scale_seq,
    sumset_of_sequence,
)

__all__ = ["Decomposition", "decompose_integer_set", "decompose_rational_set"]


@dataclass(frozen=True)
class Decomposition:
    A: DegreeSet
    m: int
    lam: Fraction
    sequences: tuple[SeqB, ...]
    chosen_k: tuple[int, ...]

    def sumsets(self) -> list[DegreeSet]:
        return [sumset_of_sequence(b) for b in self.sequences]

    def intersection(self) -> DegreeSet:
        return intersect_all(self.sumsets())

    def to_json(self) -> dict[str, Any]:
        return {
            "A": self.A.to_json(),
            "m": self.m,
            "lambda": format_rat(self.lam),
            "sequences": [b.to_json() for b in self.sequences],
            "chosen_k": list(self.chosen_k),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Decomposition":
        return cls(
            A=DegreeSet.from_json(data["A"]),
            m=int(data["m"]),
            lam=parse_rat(data["lambda"]),
            sequences=tuple(SeqB.from_json(b) for b in data["sequences"]),
            chosen_k=tuple(int(k) for k in data["chosen_k"]),
        )


def _as_degree_set(A: DegreeSet | Iterable[Any]) -> DegreeSet:
    return A if isinstance(A, DegreeSet) else DegreeSet(A)


def decompose_integer_set(A: DegreeSet | Iterable[Any], m: int = 1) -> Decomposition:
    A = _as_degree_set(A)
    if m < 1:
        raise ValueError("exponent m must be a positive integer")
    if 0 not in A:
        raise ValueError("the set must contain 0")
    if not A.is_integral():
        raise ValueError("integer decomposition needs integer elements")

    values = [int(x) for x in A]
    # a[0] = e[0] = 0 so that a[j-1], e[j-1] are defined for j = 1.
    a = [0] + sorted(-x for x in values if x < 0)
    e = [0] + sorted(x for x in values if x > 0)
    r, s = len(a) - 1, len(e) - 1
    a_r, e_s = a[r], e[s]

    sequences = [SeqB([-1] * a_r + [1] * e_s)]
    chosen_k = []
    for j in range(1, s + 1):
        k = smallest_power_base(max(e_s, e[j] + a_r), m)
        big = k**m
        sequences.append(SeqB([-1] * (big - e[j]) + [1] * e[j - 1] + [big]))
        chosen_k.append(k)
    for j in range(1, r + 1):
        k = smallest_power_base(max(a_r, a[j] + e_s), m)
        big = k**m
        sequences.append(SeqB([1] * (big - a[j]) + [-1] * a[j - 1] + [-big]))
        chosen_k.append(k)

    return Decomposition(A, m, Fraction(1), tuple(sequences), tuple(chosen_k))


def decompose_rational_set(A: DegreeSet | Iterable[Any]) -> Decomposition:
    A = _as_degree_set(A)
    if 0 not in A:
        raise ValueError("the set must contain 0")
    lam = Fraction(lcm(*(x.denominator for x in A)))
    scaled = decompose_integer_set(DegreeSet(lam * x for x in A), m=1)
    sequences = tuple(scale_seq(1 / lam, b) for b in scaled.sequences)
    return Decomposition(A, 1, lam, sequences, scaled.chosen_k)
