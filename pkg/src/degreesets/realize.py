"""End-to-end realization pipelines and the certificate they emit.

Each pipeline decomposes A into subset-sum sets S_B(0), ..., S_B(n), builds
one domain group M_i and one single-block target N_i per sequence, and lets
the calculus confirm that D(M, N) = A.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Any, Iterable, Optional

from .blocks import (
    ADAMS,
    CIRCLE3,
    DEFAULT_GENUS,
    RATIONAL,
    VARIANTS,
    AdamsBlock,
    Block,
    CircleBlock,
    Graph,
    ManifoldExpr,
    RationalGraphBlock,
    block_from_json,
    connectivity_of,
    formal_dimension,
    graph_family,
)
from .calculus import grouped_degree_set, self_degree_upper_bound
from .decompose import Decomposition, decompose_integer_set, decompose_rational_set
from .numtheory import coprime_to_factorial, integer_root, primes_from
from .setalg import DegreeSet, SeqB, format_rat, parse_rat

SYMMETRIC = "symmetric"
STRONGLY_CHIRAL = "strongly_chiral_required"

SELF_BOUND_NOTE = (
    "upper bounds only: intersections of the group-wise self-degree sets, each a sumset "
    "of block pair formulas; the exact self-degree sets are not computed"
)


class RealizationError(RuntimeError):
    """The calculus disagrees with the input set; indicates an internal bug."""


@dataclass(frozen=True)
class Certificate:
    input_set: DegreeSet
    variant: str
    decomposition: Decomposition
    primes: tuple[int, ...]
    alphas: tuple[Fraction, ...]
    M: ManifoldExpr
    N: ManifoldExpr
    claimed_degrees: DegreeSet
    dimension: int
    connectivity: int
    chirality: str
    self_degree_bounds: tuple[DegreeSet, DegreeSet]
    degenerate_groups: tuple[int, ...]
    graph_family: Optional[tuple[Graph, ...]] = None
    k: Optional[int] = None
    adams_m: Optional[int] = None
    base_label: Optional[str] = None
    base_connectivity: Optional[int] = None

    def to_json(self) -> dict[str, Any]:
        d = self.decomposition.to_json()
        out: dict[str, Any] = {
            "input_set": self.input_set.to_json(),
            "variant": self.variant,
            "m": d["m"],
            "lambda": d["lambda"],
            "sequences": d["sequences"],
            "chosen_k": d["chosen_k"],
            "primes": list(self.primes),
            "alphas": [format_rat(a) for a in self.alphas],
        }
        if self.variant == RATIONAL:
            out["graph_family"] = [g.to_json() for g in self.graph_family or ()]
            out["k"] = self.k
        if self.variant == ADAMS:
            out["adams_m"] = self.adams_m
            out["base_label"] = self.base_label
            out["base_hypothesis"] = {
                "dimension": 2 * self.adams_m,
                "connectivity": self.base_connectivity,
                "rationally_inflexible": True,
                "rational_homotopy_vanishes_from": 2 * self.adams_m - 1,
            }
        out["M"] = self.M.to_json()
        out["N"] = self.N.to_json()
        out["claimed_degrees"] = self.claimed_degrees.to_json()
        out["dimension"] = self.dimension
        out["connectivity"] = self.connectivity
        out["chirality"] = self.chirality
        out["self_degree_bounds"] = {
            "M": self.self_degree_bounds[0].to_json(),
            "N": self.self_degree_bounds[1].to_json(),
            "note": SELF_BOUND_NOTE,
        }
        out["degenerate_groups"] = list(self.degenerate_groups)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Certificate":
        """Parse and structurally validate; raises ValueError/KeyError/TypeError on bad input."""
        if not isinstance(data, dict):
            raise ValueError("certificate must be a JSON object")
        variant = data["variant"]
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        input_set = DegreeSet.from_json(data["input_set"])
        decomposition = Decomposition(
            A=input_set,
            m=_int(data["m"]),
            lam=parse_rat(data["lambda"]),
            sequences=tuple(SeqB.from_json(b) for b in data["sequences"]),
            chosen_k=tuple(_int(k) for k in data["chosen_k"]),
        )
        graphs: tuple[Graph, ...] = ()
        k = adams_m = base_connectivity = None
        base_label = None
        if variant == RATIONAL:
            graphs = tuple(Graph.from_json(g) for g in data["graph_family"])
            k = _int(data["k"])
        if variant == ADAMS:
            adams_m = _int(data["adams_m"])
            base_label = data["base_label"]
            if not isinstance(base_label, str):
                raise ValueError("base_label must be a string")
            hyp = data["base_hypothesis"]
            base_connectivity = _int(hyp["connectivity"])
            if _int(hyp["dimension"]) != 2 * adams_m:
                raise ValueError("base manifold dimension must be 2m")
            if hyp["rationally_inflexible"] is not True:
                raise ValueError("the base manifold must be rationally inflexible")
            _int(hyp["rational_homotopy_vanishes_from"])
        dimension = _int(data["dimension"])
        connectivity = _int(data["connectivity"])

        # groups repeat the same few blocks thousands of times
        parsed: dict[tuple, Block] = {}

        def block(b: Any) -> Block:
            if not isinstance(b, dict) or not all(isinstance(v, (str, int)) for v in b.values()):
                return block_from_json(b)
            key = tuple(sorted((k, type(v).__name__, v) for k, v in b.items()))
            if key not in parsed:
                parsed[key] = block_from_json(b)
            return parsed[key]

        def expr(key: str) -> ManifoldExpr:
            groups = data[key]["groups"]
            return ManifoldExpr(
                variant,
                tuple(tuple(block(b) for b in g) for g in groups),
                dimension,
                connectivity,
                graphs,
            )

        bounds = data["self_degree_bounds"]
        return cls(
            input_set=input_set,
            variant=variant,
            decomposition=decomposition,
            primes=tuple(_int(p) for p in data["primes"]),
            alphas=tuple(parse_rat(a) for a in data["alphas"]),
            M=expr("M"),
            N=expr("N"),
            claimed_degrees=DegreeSet.from_json(data["claimed_degrees"]),
            dimension=dimension,
            connectivity=connectivity,
            chirality=_chirality_literal(data["chirality"]),
            self_degree_bounds=(DegreeSet.from_json(bounds["M"]), DegreeSet.from_json(bounds["N"])),
            degenerate_groups=tuple(_int(i) for i in data["degenerate_groups"]),
            graph_family=graphs if variant == RATIONAL else None,
            k=k,
            adams_m=adams_m,
            base_label=base_label,
            base_connectivity=base_connectivity,
        )

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_json(json.loads(text))


def _int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected a JSON integer, got {value!r}")
    return value


def _chirality_literal(value: Any) -> str:
    if value not in (SYMMETRIC, STRONGLY_CHIRAL):
        raise ValueError(f"unknown chirality {value!r}")
    return value


def chirality_flag(A: DegreeSet) -> str:
    if 0 not in A:
        raise ValueError("the set must contain 0")
    if A != A.negate() and A != DegreeSet.of(0):
        return STRONGLY_CHIRAL
    return SYMMETRIC


def _as_set(A: DegreeSet | Iterable[Any]) -> DegreeSet:
    return A if isinstance(A, DegreeSet) else DegreeSet(A)


def _entries(sequences: Iterable[SeqB]) -> list[int]:
    return [int(b) for seq in sequences for b in seq]


def circle3_primes(sequences: tuple[SeqB, ...]) -> list[int]:
    """Smallest admissible primes for the circle-bundle pipeline.

    q_i exceeds every |b| in B(i), the q_i are pairwise distinct, and no q_i
    divides any entry of any sequence.  The last condition keeps q_i out of
    every other alpha_j, which makes the cross terms vanish.
    """
    everything = _entries(sequences)
    chosen: list[int] = []
    for seq in sequences:
        bound = max((abs(int(b)) for b in seq), default=0)
        for q in primes_from(bound + 1):
            if q not in chosen and all(b % q for b in everything):
                chosen.append(q)
                break
    return chosen


def adams_primes(sequences: tuple[SeqB, ...], m: int) -> list[int]:
    """Smallest distinct primes coprime to m! exceeding every |b| of every sequence."""
    bound = max((abs(b) for b in _entries(sequences)), default=0)
    chosen: list[int] = []
    for q in primes_from(bound + 1):
        if len(chosen) == len(sequences):
            break
        if coprime_to_factorial(q, m):
            chosen.append(q)
    return chosen


def _auxiliary_prime(avoid: Iterable[int], m: int = 1) -> int:
    """Smallest prime coprime to m! dividing none of ``avoid``."""
    avoid = [abs(a) for a in avoid]
    for p in primes_from(2):
        if coprime_to_factorial(p, m) and all(a % p for a in avoid):
            return p
    raise AssertionError("unreachable")


def _finish(
    A: DegreeSet,
    variant: str,
    dec: Decomposition,
    primes: list[int],
    alphas: list[Fraction],
    M: ManifoldExpr,
    N: ManifoldExpr,
    degenerate: list[int],
    **extra: Any,
) -> Certificate:
    degrees, _ = grouped_degree_set(M, N)
    if degrees != A:
        raise RealizationError(f"computed degree set {degrees!r} differs from input {A!r}")
    return Certificate(
        input_set=A,
        variant=variant,
        decomposition=dec,
        primes=tuple(primes),
        alphas=tuple(alphas),
        M=M,
        N=N,
        claimed_degrees=degrees,
        dimension=M.dimension,
        connectivity=M.connectivity,
        chirality=chirality_flag(A),
        self_degree_bounds=(self_degree_upper_bound(M), self_degree_upper_bound(N)),
        degenerate_groups=tuple(degenerate),
        **extra,
    )


def realize_circle3(A: DegreeSet | Iterable[Any], m: int = 1) -> Certificate:
    """Realize an integer set A as D(M, N) for connected sums of circle bundles (dimension 3)."""
    A = _as_set(A)
    dec = decompose_integer_set(A, m)
    primes = circle3_primes(dec.sequences)
    alphas = [q * prod(int(b) for b in seq) for q, seq in zip(primes, dec.sequences)]

    m_groups: list[tuple[Block, ...]] = []
    degenerate = []
    for i, (alpha, seq) in enumerate(zip(alphas, dec.sequences)):
        if len(seq):
            m_groups.append(tuple(CircleBlock(alpha // int(b), DEFAULT_GENUS) for b in seq))
        else:
            p = _auxiliary_prime(alphas)
            m_groups.append((CircleBlock(alpha * p, DEFAULT_GENUS),))
            degenerate.append(i)
    n_groups = [(CircleBlock(alpha, DEFAULT_GENUS),) for alpha in alphas]

    M = ManifoldExpr(CIRCLE3, tuple(m_groups), 3, 0)
    N = ManifoldExpr(CIRCLE3, tuple(n_groups), 3, 0)
    return _finish(A, CIRCLE3, dec, primes, [Fraction(a) for a in alphas], M, N, degenerate)


def realize_rational(A: DegreeSet | Iterable[Any], k: int = 1) -> Certificate:
    """Realize a rational set A as D_Q(M, N) for sums of sphere bundles over graph algebras."""
    A = _as_set(A)
    if k < 1:
        raise ValueError("k must be >= 1")
    dec = decompose_rational_set(A)
    n_seq = len(dec.sequences)
    degenerate = [i for i, seq in enumerate(dec.sequences) if not len(seq)]
    graphs = tuple(graph_family(n_seq + len(degenerate)))

    m_groups: list[tuple[Block, ...]] = []
    spare = iter(range(n_seq, len(graphs)))
    for i, seq in enumerate(dec.sequences):
        if len(seq):
            m_groups.append(tuple(RationalGraphBlock(i, k, 1 / b) for b in seq))
        else:
            m_groups.append((RationalGraphBlock(next(spare), k, Fraction(1)),))
    n_groups = [(RationalGraphBlock(i, k, Fraction(1)),) for i in range(n_seq)]

    dimension = 2 * formal_dimension(k, graphs[0].v) - 1
    connectivity = connectivity_of(k)
    M = ManifoldExpr(RATIONAL, tuple(m_groups), dimension, connectivity, graphs)
    N = ManifoldExpr(RATIONAL, tuple(n_groups), dimension, connectivity, graphs)
    return _finish(A, RATIONAL, dec, [], [], M, N, degenerate, graph_family=graphs, k=k)


def _adams_block(delta: int, m: int, base_label: str) -> AdamsBlock:
    r = integer_root(abs(delta), m)
    if r is None:
        raise RealizationError(f"{delta} is not +-(an m-th power) for m = {m}")
    return AdamsBlock(r, m, 1 if delta > 0 else -1, base_label)


def realize_adams(
    A: DegreeSet | Iterable[Any], m: int = 2, base_label: str = "Sigma", base_connectivity: int = 1
) -> Certificate:
    """Realize an integer set A with sphere bundles twisted by unstable Adams operations.

    Conditional on the existence of the base manifold named ``base_label``;
    the certificate records that assumption.
    """
    A = _as_set(A)
    if m < 2:
        raise ValueError("m must be >= 2")
    if base_connectivity < 0:
        raise ValueError("connectivity must be nonnegative")
    dec = decompose_integer_set(A, m)
    primes = adams_primes(dec.sequences, m)
    alphas = [q**m * prod(int(b) for b in seq) for q, seq in zip(primes, dec.sequences)]

    m_groups: list[tuple[Block, ...]] = []
    degenerate = []
    for i, (alpha, seq) in enumerate(zip(alphas, dec.sequences)):
        if len(seq):
            m_groups.append(tuple(_adams_block(alpha // int(b), m, base_label) for b in seq))
        else:
            r = integer_root(abs(alpha), m)
            p = _auxiliary_prime([r], m)
            m_groups.append((AdamsBlock(r * p, m, 1, base_label),))
            degenerate.append(i)
    n_groups = [(_adams_block(alpha, m, base_label),) for alpha in alphas]

    dimension = 4 * m - 1
    M = ManifoldExpr(ADAMS, tuple(m_groups), dimension, base_connectivity)
    N = ManifoldExpr(ADAMS, tuple(n_groups), dimension, base_connectivity)
    return _finish(
        A,
        ADAMS,
        dec,
        primes,
        [Fraction(a) for a in alphas],
        M,
        N,
        degenerate,
        adams_m=m,
        base_label=base_label,
        base_connectivity=base_connectivity,
    )


def realize(variant: str, A: DegreeSet | Iterable[Any], **params: Any) -> Certificate:
    if variant == CIRCLE3:
        return realize_circle3(A, **params)
    if variant == RATIONAL:
        return realize_rational(A, **params)
    if variant == ADAMS:
        return realize_adams(A, **params)
    raise ValueError(f"unknown variant {variant!r}")


__all__ = [
    "Certificate",
    "RealizationError",
    "SYMMETRIC",
    "STRONGLY_CHIRAL",
    "chirality_flag",
    "circle3_primes",
    "adams_primes",
    "realize",
    "realize_circle3",
    "realize_rational",
    "realize_adams",
]
