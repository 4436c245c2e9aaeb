"""Mapping-degree-set calculus for connected sums of building blocks.

Pair formulas give D(b1, b2) for two blocks of the same family.  A connected
sum in the domain turns into a sumset; a connected sum of targets, with
vanishing cross terms, turns into an intersection of the diagonal entries.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Sequence

from .blocks import (
    ADAMS,
    CIRCLE3,
    RATIONAL,
    AdamsBlock,
    Block,
    CircleBlock,
    Graph,
    ManifoldExpr,
    RationalGraphBlock,
    graphs_isomorphic,
)
from .setalg import DegreeSet, PackedSet, SetLike, add_sets, intersect_mixed, sumset_counts

ZERO = DegreeSet.of(0)


class HypothesisViolation(Exception):
    """A cross term D(M_i, N_j), i != j, is not {0}; only containments are known."""

    def __init__(self, row: int, col: int, entry: DegreeSet) -> None:
        super().__init__(f"off-diagonal entry ({row}, {col}) is {entry!r}, expected {{0}}")
        self.row = row
        self.col = col
        self.entry = entry


def circle_pair_degrees(ki: CircleBlock, kj: CircleBlock) -> DegreeSet:
    if ki.genus != kj.genus:
        raise ValueError("circle blocks over different surfaces")
    i, j = ki.euler, kj.euler
    if j % i == 0:
        return DegreeSet.of(0, Fraction(j, i))
    return ZERO


def rational_pair_degrees(
    b1: RationalGraphBlock, b2: RationalGraphBlock, family: Sequence[Graph]
) -> DegreeSet:
    if b1.k != b2.k:
        raise ValueError("rational blocks with different k")
    g1, g2 = family[b1.graph_index], family[b2.graph_index]
    if b1.graph_index == b2.graph_index or graphs_isomorphic(g1, g2):
        return DegreeSet.of(0, b2.q / b1.q)
    return ZERO


def adams_pair_degrees(b1: AdamsBlock, b2: AdamsBlock) -> DegreeSet:
    if b1.m != b2.m or b1.base_label != b2.base_label:
        raise ValueError("Adams blocks with different m or base manifold")
    if b2.r % b1.r == 0:
        return DegreeSet.of(0, b1.sign * b2.sign * Fraction(b2.r // b1.r) ** b1.m)
    return ZERO


def pair_degrees(b1: Block, b2: Block, family: Sequence[Graph] = ()) -> DegreeSet:
    if isinstance(b1, CircleBlock) and isinstance(b2, CircleBlock):
        return circle_pair_degrees(b1, b2)
    if isinstance(b1, RationalGraphBlock) and isinstance(b2, RationalGraphBlock):
        return rational_pair_degrees(b1, b2, family)
    if isinstance(b1, AdamsBlock) and isinstance(b2, AdamsBlock):
        return adams_pair_degrees(b1, b2)
    raise TypeError(f"no degree formula between {type(b1).__name__} and {type(b2).__name__}")


def sum_rule(domain_blocks: Sequence[Block], target_block: Block, family: Sequence[Graph] = ()) -> DegreeSet:
    """D(#_b b, target) as the sumset of the pairwise degree sets.

    Every target block in the three families satisfies the equality branch of
    the connected-sum rule (aspherical circle bundles; rationally highly
    connected sphere bundles), so no hypothesis is checked here.
    """
    return _unpack(_sum_counted(Counter(domain_blocks), target_block, family))


def _unpack(x: SetLike) -> DegreeSet:
    return x.unpack() if isinstance(x, PackedSet) else x


def _sum_counted(blocks: Counter, target_block: Block, family: Sequence[Graph]) -> SetLike:
    counts: Counter[DegreeSet] = Counter()
    for block, times in blocks.items():
        counts[pair_degrees(block, target_block, family)] += times
    if all(len(x) <= 2 and 0 in x for x in counts):
        # every pair set is {0} or {0, r}: the sumset is S over the ratios r
        ratios: Counter[Fraction] = Counter()
        for x, c in counts.items():
            for r in x:
                if r != 0:
                    ratios[r] += c
        return sumset_counts(ratios)
    return reduce(add_sets, (_repeated_sum(x, c) for x, c in counts.items()), ZERO)


def _repeated_sum(x: DegreeSet, times: int) -> DegreeSet:
    """x + x + ... + x (``times`` summands) by binary doubling."""
    out, power = ZERO, x
    while times:
        if times & 1:
            out = add_sets(out, power)
        times >>= 1
        if times:
            power = add_sets(power, power)
    return out


@dataclass(frozen=True)
class DegreeMatrix:
    # entries may be packed; they are unpacked on access
    raw: tuple[tuple[SetLike, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> DegreeSet:
        i, j = ij
        return _unpack(self.raw[i][j])

    @property
    def entries(self) -> tuple[tuple[DegreeSet, ...], ...]:
        return tuple(tuple(map(_unpack, row)) for row in self.raw)

    def is_zero(self, i: int, j: int) -> bool:
        x = self.raw[i][j]
        return x.is_zero_only() if isinstance(x, PackedSet) else x == ZERO

    @property
    def size(self) -> int:
        return len(self.raw)

    def diagonal(self) -> list[DegreeSet]:
        return [self.entries[i][i] for i in range(self.size)]

    def to_json(self) -> dict[str, Any]:
        labels = [f"group{i}" for i in range(self.size)]
        return {
            "rows": labels,
            "cols": labels,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }


def degree_matrix(M: ManifoldExpr, N: ManifoldExpr) -> DegreeMatrix:
    if M.variant != N.variant:
        raise ValueError("domain and target are from different families")
    if len(M.groups) != len(N.groups):
        raise ValueError("domain and target need the same number of groups")
    if any(len(g) != 1 for g in N.groups):
        raise ValueError("each target group must be a single block")
    family = M.graphs or N.graphs
    return DegreeMatrix(
        tuple(
            tuple(_sum_counted(counted, ng[0], family) for ng in N.groups)
            for counted in map(Counter, M.groups)
        )
    )


def grouped_degree_set(M: ManifoldExpr, N: ManifoldExpr) -> tuple[DegreeSet, DegreeMatrix]:
    """D(M, N) for grouped connected sums whose cross terms all vanish.

    Raises :class:`HypothesisViolation` at the first (row-major) nonzero
    off-diagonal entry.
    """
    matrix = degree_matrix(M, N)
    for i in range(matrix.size):
        for j in range(matrix.size):
            if i != j and not matrix.is_zero(i, j):
                raise HypothesisViolation(i, j, matrix[i, j])
    return intersect_mixed([matrix.raw[i][i] for i in range(matrix.size)]), matrix


def self_degree_upper_bound(M: ManifoldExpr) -> DegreeSet:
    """Finite superset of D(M, M) obtained group by group.

    D(M, M) sits inside the intersection over groups of D(M_i, M_i), and each
    D(M_i, M_i) inside the intersection over its summands b of D(M_i, b).
    """
    family = M.graphs
    bounds = []
    for group in M.groups:
        counted = Counter(group)
        for target in counted:
            bounds.append(_sum_counted(counted, target, family))
    return intersect_mixed(bounds)


__all__ = [
    "CIRCLE3",
    "RATIONAL",
    "ADAMS",
    "HypothesisViolation",
    "DegreeMatrix",
    "circle_pair_degrees",
    "rational_pair_degrees",
    "adams_pair_degrees",
    "pair_degrees",
    "sum_rule",
    "degree_matrix",
    "grouped_degree_set",
    "self_degree_upper_bound",
]
