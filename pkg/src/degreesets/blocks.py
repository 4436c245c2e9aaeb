"""Building blocks for the three realization families.

* :class:`CircleBlock`: circle bundle over a genus-g hyperbolic surface,
  parameterized by its (nonzero) Euler number.
* :class:`RationalGraphBlock`: sphere bundle over the graph algebra of a
  connected simple graph, parameterized by the Euler coefficient ``q``.
* :class:`AdamsBlock`: sphere bundle pulled back along an unstable Adams
  operation of degree ``r``; ``sign = -1`` is the orientation-reversed copy.

A :class:`ManifoldExpr` is an iterated connected sum, recorded group by group.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterator, Union

from .numtheory import coprime_to_factorial
from .setalg import format_rat, parse_rat

CIRCLE3 = "circle3"
RATIONAL = "rational"
ADAMS = "adams"
VARIANTS = (CIRCLE3, RATIONAL, ADAMS)

DEFAULT_GENUS = 2


@dataclass(frozen=True)
class Graph:
    v: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, v: int, edges) -> None:
        canon = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError("graphs must not have loops")
            if not (0 <= a < v and 0 <= b < v):
                raise ValueError(f"edge ({a}, {b}) out of range for {v} vertices")
            canon.add((min(a, b), max(a, b)))
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.v < 2:
            raise ValueError("graphs need more than one vertex")
        if not self.is_connected():
            raise ValueError("graphs must be connected")

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.v)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.v

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(n) for n in self.adjacency()))

    def relabel(self, perm) -> "Graph":
        return Graph(self.v, [(perm[a], perm[b]) for a, b in self.edges])

    def to_json(self) -> dict[str, Any]:
        return {"v": self.v, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Graph":
        edges = [tuple(e) for e in data["edges"]]
        if any(len(e) != 2 for e in edges):
            raise ValueError("edges are vertex pairs")
        if len(set(map(frozenset, edges))) != len(edges):
            raise ValueError("multi-edges are not allowed")
        return cls(int(data["v"]), edges)


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking search for an edge-preserving vertex bijection."""
    if g1.v != g2.v or len(g1.edges) != len(g2.edges):
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    adj1, adj2 = g1.adjacency(), g2.adjacency()
    n = g1.v
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(u: int) -> bool:
        if u == n:
            return True
        for w in range(n):
            if w in used or len(adj1[u]) != len(adj2[w]):
                continue
            if all((mapping[x] in adj2[w]) == (x in adj1[u]) for x in mapping):
                mapping[u] = w
                used.add(w)
                if extend(u + 1):
                    return True
                del mapping[u]
                used.discard(w)
        return False

    return extend(0)


def _connected_graphs(v: int) -> Iterator[Graph]:
    """Connected graphs on ``v`` vertices, one per isomorphism class.

    Ordered by edge count, then lexicographically by edge list.
    """
    pairs = list(combinations(range(v), 2))
    found: list[Graph] = []
    for n_edges in range(v - 1, len(pairs) + 1):
        for chosen in combinations(pairs, n_edges):
            try:
                g = Graph(v, chosen)
            except ValueError:
                continue
            if any(graphs_isomorphic(g, h) for h in found):
                continue
            found.append(g)
            yield g


@lru_cache(maxsize=None)
def _family(count: int) -> tuple[Graph, ...]:
    v = 2
    while True:
        graphs = []
        for g in _connected_graphs(v):
            graphs.append(g)
            if len(graphs) == count:
                return tuple(graphs)
        v += 1


def graph_family(count: int) -> list[Graph]:
    """``count`` pairwise non-isomorphic connected graphs sharing the least possible vertex count."""
    if count < 1:
        raise ValueError("count must be positive")
    return list(_family(count))


def formal_dimension(k: int, vertex_count: int) -> int:
    """Formal dimension 2m of the graph algebra with parameter k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if vertex_count < 2:
        raise ValueError("graphs need more than one vertex")
    return 540 * k**2 + 984 * k + 396 + vertex_count * (360 * k**2 + 436 * k + 132)


def connectivity_of(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return 30 * k + 17


@dataclass(frozen=True)
class CircleBlock:
    euler: int
    genus: int = DEFAULT_GENUS

    kind = "circle"

    def __post_init__(self) -> None:
        if self.euler == 0:
            raise ValueError("Euler number must be nonzero")
        if self.genus < 2:
            raise ValueError("base surface must be hyperbolic (genus >= 2)")

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "euler": self.euler, "genus": self.genus}


@dataclass(frozen=True)
class RationalGraphBlock:
    graph_index: int
    k: int
    q: Fraction

    kind = "rational"

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", parse_rat(self.q))
        if self.q == 0:
            raise ValueError("Euler coefficient q must be nonzero")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.graph_index < 0:
            raise ValueError("graph index must be nonnegative")

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "graph": self.graph_index, "k": self.k, "q": format_rat(self.q)}


@dataclass(frozen=True)
class AdamsBlock:
    r: int
    m: int
    sign: int = 1
    base_label: str = "Sigma"

    kind = "adams"

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("Adams degree r must be positive")
        if self.m < 2:
            raise ValueError("m must be >= 2")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not coprime_to_factorial(self.r, self.m):
            raise ValueError(f"r = {self.r} is not coprime to {self.m}!")

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "r": self.r, "m": self.m, "sign": self.sign, "base": self.base_label}


Block = Union[CircleBlock, RationalGraphBlock, AdamsBlock]

_KIND_OF_VARIANT = {CIRCLE3: CircleBlock, RATIONAL: RationalGraphBlock, ADAMS: AdamsBlock}


def adams_delta(block: AdamsBlock) -> Fraction:
    """Signed Euler parameter ``sign * r**m`` of an Adams block."""
    return Fraction(block.sign * block.r**block.m)


def _strict_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be a JSON integer")
    return value


def block_from_json(data: dict[str, Any]) -> Block:
    kind = data.get("kind")
    if kind == "circle":
        return CircleBlock(_strict_int(data["euler"], "euler"), _strict_int(data["genus"], "genus"))
    if kind == "rational":
        return RationalGraphBlock(
            _strict_int(data["graph"], "graph"), _strict_int(data["k"], "k"), parse_rat(data["q"])
        )
    if kind == "adams":
        base = data["base"]
        if not isinstance(base, str):
            raise ValueError("base label must be a string")
        return AdamsBlock(
            _strict_int(data["r"], "r"), _strict_int(data["m"], "m"), _strict_int(data["sign"], "sign"), base
        )
    raise ValueError(f"unknown block kind {kind!r}")


@dataclass(frozen=True)
class ManifoldExpr:
    """Connected sum of blocks, partitioned into ordered groups.

    ``graphs`` carries the graph family the rational blocks index into and is
    empty for the other variants.
    """

    variant: str
    groups: tuple[tuple[Block, ...], ...]
    dimension: int
    connectivity: int
    graphs: tuple[Graph, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        groups = tuple(tuple(g) for g in self.groups)
        object.__setattr__(self, "groups", groups)
        object.__setattr__(self, "graphs", tuple(self.graphs))
        kind = _KIND_OF_VARIANT[self.variant]
        blocks = [b for g in groups for b in g]
        if any(not g for g in groups):
            raise ValueError("connected-sum groups must be nonempty")
        if any(not isinstance(b, kind) for b in blocks):
            raise ValueError(f"all blocks of a {self.variant} expression must be {kind.__name__}")
        if self.variant == CIRCLE3:
            if len({b.genus for b in blocks}) > 1:
                raise ValueError("circle blocks must share one base surface")
            if self.dimension != 3:
                raise ValueError("circle-bundle expressions are 3-dimensional")
        elif self.variant == RATIONAL:
            if len({b.k for b in blocks}) > 1:
                raise ValueError("rational blocks must share k")
            if any(b.graph_index >= len(self.graphs) for b in blocks):
                raise ValueError("graph index outside the graph family")
            if blocks:
                two_m = formal_dimension(blocks[0].k, self.graphs[0].v)
                if self.dimension != 2 * two_m - 1:
                    raise ValueError("dimension must be 4m - 1 for the graph algebra's 2m")
        else:
            if len({(b.m, b.base_label) for b in blocks}) > 1:
                raise ValueError("Adams blocks must share m and the base manifold")
            if blocks and self.dimension != 4 * blocks[0].m - 1:
                raise ValueError("dimension must be 4m - 1")

    @property
    def blocks(self) -> list[Block]:
        return [b for g in self.groups for b in g]

    def to_json(self) -> dict[str, Any]:
        return {"groups": [[b.to_json() for b in g] for g in self.groups]}
