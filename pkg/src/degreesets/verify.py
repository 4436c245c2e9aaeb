"""Independent re-derivation of realization certificates.

Nothing here calls the set algebra or the degree calculus used to build a
certificate.  Subset sums come from explicit enumeration, pair formulas are
re-implemented on the raw JSON, graph isomorphism goes through a brute-force
canonical form.  The checks only share the wire format with the builder.
"""
from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, gcd, isqrt, lcm, prod
from typing import Any, Callable, Iterable, Sequence

from .decompose import decompose_integer_set, decompose_rational_set
from .blocks import graph_family
from .realize import STRONGLY_CHIRAL, SYMMETRIC, Certificate, realize
from .setalg import DegreeSet, format_rat, parse_rat

# multiplicity vectors enumerated directly; larger inputs take the split path
ENUMERATION_LIMIT = 1 << 16
# 8! relabelings per graph; 8 vertices already carry 11117 connected classes
MAX_GRAPH_VERTICES = 8


class OracleLimitExceeded(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class _Sums:
    """A set of rationals stored as integers over a common denominator."""

    scale: int
    ints: frozenset[int]

    def at(self, scale: int) -> set[int] | frozenset[int]:
        if scale == self.scale:
            return self.ints
        f = scale // self.scale
        return {x * f for x in self.ints}

    def fractions(self) -> set[Fraction]:
        return {Fraction(x, self.scale) for x in self.ints}

    def is_zero(self) -> bool:
        return self.ints == {0}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Sums):
            return NotImplemented
        if len(self.ints) != len(other.ints):
            return False
        common = lcm(self.scale, other.scale)
        return self.at(common) == other.at(common)


def _scaled_counts(counts: Counter) -> tuple[int, list[tuple[int, int]]]:
    scale = lcm(*(v.denominator for v in counts)) if counts else 1
    return scale, sorted((int(v * scale), c) for v, c in counts.items())


def _enumerate(counted: Counter) -> _Sums:
    """All sub-multiset sums, by walking every multiplicity vector."""
    scale, counts = _scaled_counts(counted)
    return _Sums(scale, frozenset(sum(choice) for choice in product(*([n * v for n in range(c + 1)] for v, c in counts))))


def _add_progression(sums: set[int], v: int, c: int) -> set[int]:
    """sums + {0, v, 2v, ..., cv}.

    Within one residue class mod |v| every x contributes the run from x to
    x + cv; overlapping or touching runs are merged before expanding.
    """
    step, reach = abs(v), c * abs(v)
    classes: dict[int, list[int]] = {}
    for x in sums:
        classes.setdefault(x % step, []).append(x)
    out: set[int] = set()
    for members in classes.values():
        members.sort()
        lo = hi = None
        for x in members:
            a, b = (x, x + reach) if v > 0 else (x - reach, x)
            if lo is not None and a <= hi + step:
                hi = max(hi, b)
                continue
            if lo is not None:
                out.update(range(lo, hi + 1, step))
            lo, hi = a, b
        out.update(range(lo, hi + 1, step))
    return out


def oracle_sumset(seq: Iterable[Any], split: bool = True) -> DegreeSet:
    """S_B by exhaustive enumeration of sub-multisets.

    Repeated entries are enumerated by multiplicity.  When the number of
    multiplicity vectors exceeds ``ENUMERATION_LIMIT`` the sequence is split
    by distinct value: each value's multiples 0, v, ..., cv are listed in
    full and merged into the running sums run by run.
    """
    values = [parse_rat(b) for b in seq]
    if any(v == 0 for v in values):
        raise ValueError("sequence entries must be nonzero")
    return DegreeSet(_oracle(values, split).fractions())


def _oracle(values: Iterable[Fraction] | Counter, split: bool) -> _Sums:
    counted = values if isinstance(values, Counter) else Counter(values)
    size = prod(c + 1 for c in counted.values())
    if size <= ENUMERATION_LIMIT:
        return _enumerate(counted)
    if not split:
        raise OracleLimitExceeded(f"{size} sub-multisets exceed the enumeration limit")
    scale, counts = _scaled_counts(counted)
    sums = {0}
    for v, c in counts:
        sums = _add_progression(sums, v, c)
    return _Sums(scale, frozenset(sums))


# --- independent arithmetic helpers -------------------------------------


def _prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))


def _root(n: int, m: int) -> int | None:
    r = round(n ** (1.0 / m)) if n < 2**900 else None
    if r is not None:
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**m == n:
                return cand
        return None
    lo, hi = 0, n
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**m
        if p == n:
            return mid
        lo, hi = (mid + 1, hi) if p < n else (lo, mid - 1)
    return None


def _canonical_graph(v: int, edges: Iterable[Sequence[int]]) -> tuple:
    edges = [tuple(e) for e in edges]
    return min(
        tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        for perm in permutations(range(v))
    )


def _intersection(sets: list[_Sums]) -> set[Fraction]:
    common = lcm(*(s.scale for s in sets))
    out = set(min((s.at(common) for s in sets), key=len))
    for s in sets:
        out &= s.at(common)
    return {Fraction(x, common) for x in out}


# --- report ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    passed: bool
    checks: list[Check]
    recomputed_degrees: DegreeSet = field(default_factory=DegreeSet)

    def failed_checks(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "recomputed_degrees": self.recomputed_degrees.to_json(),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


class _Fail(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _Fail(message)


class _Verifier:
    def __init__(self, data: dict[str, Any]) -> None:
        self.d = data
        self.variant: str = data["variant"]
        self.A = {parse_rat(x) for x in data["input_set"]}
        self.m: int = data["m"]
        self.lam = parse_rat(data["lambda"])
        parsed: dict[str, Fraction] = {}
        self.seqs = [[parsed.get(b) or parsed.setdefault(b, parse_rat(b)) for b in seq] for seq in data["sequences"]]
        self.primes: list[int] = list(data["primes"])
        self.alphas = [parse_rat(a) for a in data["alphas"]]
        self.M: list[list[dict]] = data["M"]["groups"]
        self.N: list[list[dict]] = data["N"]["groups"]
        self.degenerate = list(data["degenerate_groups"])
        self.graphs = data.get("graph_family") or []
        self._canon: list[tuple] | None = None
        self._seq_sums: list[set[Fraction]] | None = None
        self.diagonal: list[_Sums] | None = None
        self._group_counts: dict[int, Counter] = {}
        self.recomputed: set[Fraction] | None = None

    @property
    def canon(self) -> list[tuple]:
        if self._canon is None:
            _require(all(g["v"] <= MAX_GRAPH_VERTICES for g in self.graphs), "graph too large for brute-force isomorphism")
            self._canon = [_canonical_graph(g["v"], g["edges"]) for g in self.graphs]
        return self._canon

    # -- pair formulas, re-implemented on raw blocks
    def ratio(self, src: dict, dst: dict) -> Fraction | None:
        """Nonzero degree of src -> dst, or None when only degree 0 exists."""
        _require(src["kind"] == dst["kind"], "mixed block kinds")
        if src["kind"] == "circle":
            _require(src["genus"] == dst["genus"], "circle blocks over different surfaces")
            i, j = src["euler"], dst["euler"]
            return Fraction(j, i) if j % i == 0 else None
        if src["kind"] == "rational":
            _require(src["k"] == dst["k"], "rational blocks with different k")
            if self.canon[src["graph"]] != self.canon[dst["graph"]]:
                return None
            return parse_rat(dst["q"]) / parse_rat(src["q"])
        if src["kind"] == "adams":
            _require(src["m"] == dst["m"] and src["base"] == dst["base"], "Adams blocks disagree on m or base")
            if dst["r"] % src["r"]:
                return None
            return Fraction(src["sign"] * dst["sign"] * (dst["r"] // src["r"]) ** src["m"])
        raise _Fail(f"unknown block kind {src['kind']!r}")

    def sum_against(self, group: list[dict], target: dict) -> _Sums:
        # identical blocks share a ratio; count them once per group
        key = id(group)
        if key not in self._group_counts:
            self._group_counts[key] = Counter(tuple(sorted(b.items())) for b in group)
        counts = self._group_counts[key]
        ratios: Counter[Fraction] = Counter()
        for key, times in counts.items():
            x = self.ratio(dict(key), target)
            if x is not None:
                ratios[x] += times
        return _oracle(ratios, True)

    def power_exponent(self) -> int:
        return self.m if self.variant == "adams" else 1

    def sequence_sums(self) -> list[_Sums]:
        if self._seq_sums is None:
            self._seq_sums = [_oracle(seq, True) for seq in self.seqs]
        return self._seq_sums

    # -- checks
    def a_decomposition_intersection(self) -> str:
        _require(len(self.seqs) == len(self.A), f"{len(self.seqs)} sequences for |A| = {len(self.A)}")
        sums = self.sequence_sums()
        got = _intersection(sums)
        _require(got == self.A, f"intersection of subset-sum sets is {DegreeSet(got)!r}")
        return f"{len(sums)} enumerated sumsets intersect to A"

    def b_power_coprimality(self) -> str:
        _require(all(b != 0 for seq in self.seqs for b in seq), "zero entry")
        if self.variant == "rational":
            _require(self.m == 1, "rational decompositions use m = 1")
            _require(self.lam == lcm(*(a.denominator for a in self.A)), "lambda is not the lcm of denominators")
            _require(
                all((self.lam * b).denominator == 1 for seq in self.seqs for b in seq),
                "lambda does not clear the sequence denominators",
            )
            return "rational entries clear with lambda"
        _require(self.lam == 1, "integer variants have lambda = 1")
        _require(self.m >= 1, "m must be positive")
        if self.variant == "adams":
            _require(self.m == self.d["adams_m"] and self.m >= 2, "m must equal adams_m >= 2")
        mf = factorial(self.m)
        for seq in self.seqs:
            for b in seq:
                _require(b.denominator == 1, f"non-integer entry {b}")
                k = _root(abs(b.numerator), self.m)
                _require(k is not None, f"{b} is not +-k^{self.m}")
                _require(gcd(k, mf) == 1, f"{b} = +-{k}^{self.m} with gcd({k}, {self.m}!) > 1")
        return "every entry is +-k^m with k coprime to m!"

    def c_prime_hygiene_divisibility(self) -> str:
        if self.variant == "rational":
            _require(not self.primes and not self.alphas, "rational certificates carry no primes or alphas")
            return "not applicable"
        n = len(self.seqs)
        _require(len(self.primes) == n and len(self.alphas) == n, "one prime and one alpha per sequence")
        _require(len(set(self.primes)) == n, "primes are not pairwise distinct")
        _require(all(_prime(q) for q in self.primes), "non-prime entry in primes")
        entries = [int(b) for seq in self.seqs for b in seq]
        e = self.power_exponent()
        if self.variant == "adams":
            top = max((abs(b) for b in entries), default=0)
            mf = factorial(self.m)
            _require(all(q > top and gcd(q, mf) == 1 for q in self.primes), "prime below bound or not coprime to m!")
        else:
            for q, seq in zip(self.primes, self.seqs):
                _require(q > max((abs(b) for b in seq), default=0), f"prime {q} does not exceed its sequence")
            _require(all(b % q for q in self.primes for b in entries), "a prime divides a sequence entry")
        for i, (q, seq, alpha) in enumerate(zip(self.primes, self.seqs, self.alphas)):
            _require(alpha == q**e * prod(seq, start=Fraction(1)), f"alpha_{i} != q_{i}^{e} * prod B({i})")
        for i, seq in enumerate(self.seqs):
            for b in set(seq):
                part = self.alphas[i] / b
                _require(part.denominator == 1, f"alpha_{i}/{b} is not an integer")
                _require(self.alphas[i] / part == b, f"alpha_{i}/b does not divide alpha_{i} with ratio b")
                for j in range(n):
                    if j != i:
                        _require((self.alphas[j] / part).denominator != 1, f"alpha_{i}/{b} divides alpha_{j}")
                if self.variant == "adams":
                    s = _root(abs(part.numerator), self.m)
                    _require(s is not None and gcd(s, factorial(self.m)) == 1, f"|alpha_{i}/{b}| is not an admissible power")
        return "primes distinct and admissible; divisibility ledger holds"

    def d_degree_matrix(self) -> str:
        n = len(self.M)
        _require(n == len(self.N) == len(self.seqs), "group counts differ")
        _require(all(len(g) == 1 for g in self.N), "target groups must be single blocks")
        _require(all(len(g) >= 1 for g in self.M), "empty domain group")
        diagonal = []
        for i, group in enumerate(self.M):
            for j, target in enumerate(self.N):
                entry = self.sum_against(group, target[0])
                if i == j:
                    diagonal.append(entry)
                else:
                    _require(entry.is_zero(), f"D(M_{i}, N_{j}) = {DegreeSet(entry.fractions())!r}")
        self.diagonal = diagonal
        return f"{n}x{n} matrix recomputed; off-diagonal entries are {{0}}"

    def e_diagonal_sumsets(self) -> str:
        _require(self.diagonal is not None, "degree matrix unavailable")
        for i, (entry, sums) in enumerate(zip(self.diagonal, self.sequence_sums())):
            _require(entry == sums, f"D(M_{i}, N_{i}) differs from S_B({i})")
        return "diagonal entries equal the enumerated sumsets"

    def f_final_intersection(self) -> str:
        _require(self.diagonal is not None, "degree matrix unavailable")
        self.recomputed = _intersection(self.diagonal)
        claimed = {parse_rat(x) for x in self.d["claimed_degrees"]}
        _require(self.recomputed == self.A, f"recomputed {DegreeSet(self.recomputed)!r} != input set")
        _require(claimed == self.A, "claimed degrees differ from the input set")
        return f"D(M, N) = {DegreeSet(self.recomputed)!r}"

    def g_dimension_connectivity(self) -> str:
        dim, conn = self.d["dimension"], self.d["connectivity"]
        if self.variant == "circle3":
            _require(dim == 3 and conn == 0, "circle bundles are connected 3-manifolds")
        elif self.variant == "rational":
            k, v = self.d["k"], self.graphs[0]["v"]
            two_m = 540 * k * k + 984 * k + 396 + v * (360 * k * k + 436 * k + 132)
            _require(dim == 2 * two_m - 1, f"dimension {dim} != 4m-1 for 2m = {two_m}")
            _require(conn == 30 * k + 17, f"connectivity {conn} != 30k+17")
        else:
            hyp = self.d["base_hypothesis"]
            _require(dim == 4 * self.m - 1, "dimension != 4m-1")
            _require(hyp["dimension"] == 2 * self.m, "base dimension != 2m")
            _require(hyp["rationally_inflexible"] is True, "base must be rationally inflexible")
            _require(hyp["rational_homotopy_vanishes_from"] == 2 * self.m - 1, "base homotopy bound != 2m-1")
            _require(conn == hyp["connectivity"] >= 0, "connectivity not inherited from the base")
        return f"dimension {dim}, connectivity {conn}"

    def h_graph_family(self) -> str:
        if self.variant != "rational":
            _require("graph_family" not in self.d, "graph family on a non-rational certificate")
            return "not applicable"
        vs = {g["v"] for g in self.graphs}
        _require(len(vs) == 1 and min(vs) > 1, "graphs must share a vertex count > 1")
        _require(len(set(self.canon)) == len(self.canon), "two graphs in the family are isomorphic")
        for g in self.graphs:
            adj = {u: set() for u in range(g["v"])}
            for a, b in g["edges"]:
                _require(a != b, "loop")
                adj[a].add(b)
                adj[b].add(a)
            seen, todo = {0}, [0]
            while todo:
                for w in adj[todo.pop()] - seen:
                    seen.add(w)
                    todo.append(w)
            _require(len(seen) == g["v"], "disconnected graph")
        expected = len(self.seqs) + len(self.degenerate)
        _require(len(self.graphs) == expected, f"expected {expected} graphs")
        canonical = [g.to_json() for g in graph_family(expected)]
        _require(self.graphs == canonical, "graph family differs from the deterministic family")
        return f"{len(self.graphs)} pairwise non-isomorphic graphs on {vs.pop()} vertices"

    def i_chirality(self) -> str:
        expected = SYMMETRIC if self.A == {-a for a in self.A} else STRONGLY_CHIRAL
        _require(self.d["chirality"] == expected, f"chirality should be {expected}")
        return expected

    def j_degenerate_groups(self) -> str:
        empty = [i for i, seq in enumerate(self.seqs) if not seq]
        _require(self.degenerate == empty, f"degenerate groups should be {empty}")
        for i in empty:
            _require(len(self.M[i]) == 1, f"degenerate group {i} must be a single block")
            _require(self.diagonal is not None and self.diagonal[i].is_zero(), f"degenerate diagonal {i} is not {{0}}")
        return f"degenerate groups {empty}"

    def k_block_assembly(self) -> str:
        kinds = {"circle3": "circle", "rational": "rational", "adams": "adams"}
        kind = kinds[self.variant]
        _require(all(b["kind"] == kind for g in self.M + self.N for b in g), "wrong block kind")
        spare = iter(range(len(self.seqs), len(self.graphs)))
        for i, seq in enumerate(self.seqs):
            group, target = self.M[i], self.N[i][0]
            if self.variant == "rational":
                k = self.d["k"]
                _require(target == {"kind": kind, "graph": i, "k": k, "q": "1"}, f"N_{i} is not the q = 1 block on graph {i}")
                if seq:
                    want = [{"kind": kind, "graph": i, "k": k, "q": format_rat(1 / b)} for b in seq]
                else:
                    want = [{"kind": kind, "graph": next(spare, None), "k": k, "q": "1"}]
                _require(group == want, f"M_{i} blocks do not match B({i})")
                continue
            alpha = self.alphas[i]
            _require(alpha.denominator == 1, f"alpha_{i} is not an integer")
            alpha = alpha.numerator
            if self.variant == "circle3":
                _require(target == {"kind": kind, "euler": alpha, "genus": 2}, f"N_{i} is not K_alpha_{i}")
                if seq:
                    want = [{"kind": kind, "euler": alpha // int(b), "genus": 2} for b in seq]
                else:
                    p = next(p for p in range(2, 10**6) if _prime(p) and all(a % p for a in map(int, self.alphas)))
                    want = [{"kind": kind, "euler": alpha * p, "genus": 2}]
                _require(group == want, f"M_{i} blocks do not match B({i})")
                continue
            m, base = self.m, self.d["base_label"]

            def adams(delta: int) -> dict:
                r = _root(abs(delta), m)
                _require(r is not None, f"{delta} is not a signed m-th power")
                return {"kind": kind, "r": r, "m": m, "sign": 1 if delta > 0 else -1, "base": base}

            _require(target == adams(alpha), f"N_{i} is not E_alpha_{i}")
            if seq:
                want = [adams(alpha // int(b)) for b in seq]
            else:
                r = target["r"]
                mf = factorial(m)
                p = next(p for p in range(2, 10**6) if _prime(p) and gcd(p, mf) == 1 and r % p)
                want = [{"kind": kind, "r": r * p, "m": m, "sign": 1, "base": base}]
            _require(group == want, f"M_{i} blocks do not match B({i})")
        return "every block matches its sequence entry"

    def l_canonical_construction(self) -> str:
        A = sorted(self.A)
        # predict the reference lengths first so a tampered m or A cannot make
        # the rebuild cost more than the certificate already spells out
        lam = lcm(*(a.denominator for a in A))
        m = self.power_exponent()
        want = self._reference_lengths([int(a * lam) for a in A], m)
        _require(want == [len(seq) for seq in self.seqs], "sequence lengths differ from the deterministic construction")
        if self.variant == "rational":
            ref = decompose_rational_set(A)
        else:
            ref = decompose_integer_set(A, self.m)
        ref_json = ref.to_json()
        for key in ("m", "lambda", "sequences", "chosen_k"):
            _require(self.d[key] == ref_json[key], f"{key} differs from the deterministic construction")
        if self.variant != "rational":
            _require(self.primes == self._smallest_primes(), "primes are not the smallest admissible")
        return "decomposition and primes follow the smallest-admissible rules"

    @staticmethod
    def _reference_lengths(values: list[int], m: int) -> list[int]:
        mf = factorial(m)

        def big(bound: int) -> int:
            k = 1
            while gcd(k, mf) != 1 or k**m <= bound:
                k += 1
            return k**m

        a = [0] + sorted(-x for x in values if x < 0)
        e = [0] + sorted(x for x in values if x > 0)
        lengths = [a[-1] + e[-1]]
        lengths += [big(max(e[-1], e[j] + a[-1])) - e[j] + e[j - 1] + 1 for j in range(1, len(e))]
        lengths += [big(max(a[-1], a[j] + e[-1])) - a[j] + a[j - 1] + 1 for j in range(1, len(a))]
        return lengths

    def _smallest_primes(self) -> list[int]:
        entries = [int(b) for seq in self.seqs for b in seq]
        out: list[int] = []
        if self.variant == "adams":
            q = max((abs(b) for b in entries), default=0)
            mf = factorial(self.m)
            while len(out) < len(self.seqs):
                q += 1
                if _prime(q) and gcd(q, mf) == 1:
                    out.append(q)
            return out
        for seq in self.seqs:
            q = max((abs(int(b)) for b in seq), default=0)
            while True:
                q += 1
                if _prime(q) and q not in out and all(b % q for b in entries):
                    out.append(q)
                    break
        return out

    def m_self_degree_bounds(self) -> str:
        bounds = self.d["self_degree_bounds"]
        for key, groups in (("M", self.M), ("N", self.N)):
            sets = []
            for group in groups:
                seen = []
                for target in group:
                    if target not in seen:
                        seen.append(target)
                        sets.append(self.sum_against(group, target))
            want = _intersection(sets)
            got = {parse_rat(x) for x in bounds[key]}
            _require(got == want and len(got) == len(bounds[key]), f"self-degree bound for {key} should be {DegreeSet(want)!r}")
        return "self-degree upper bounds recomputed"

    CHECKS: tuple[str, ...] = (
        "a_decomposition_intersection",
        "b_power_coprimality",
        "c_prime_hygiene_divisibility",
        "d_degree_matrix",
        "e_diagonal_sumsets",
        "f_final_intersection",
        "g_dimension_connectivity",
        "h_graph_family",
        "i_chirality",
        "j_degenerate_groups",
        "k_block_assembly",
        "l_canonical_construction",
        "m_self_degree_bounds",
    )

    def run(self) -> VerificationReport:
        checks = []
        for name in self.CHECKS:
            method: Callable[[], str] = getattr(self, name)
            try:
                checks.append(Check(name, True, method()))
            except _Fail as exc:
                checks.append(Check(name, False, str(exc)))
            except (KeyError, TypeError, ValueError, ZeroDivisionError, IndexError, AttributeError) as exc:
                checks.append(Check(name, False, f"{type(exc).__name__}: {exc}"))
        recomputed = DegreeSet(self.recomputed or ())
        return VerificationReport(all(c.passed for c in checks), checks, recomputed)


def verify_certificate(cert: Certificate | dict[str, Any] | str) -> VerificationReport:
    """Validate a certificate; malformed input yields a single failed ``schema`` check."""
    if isinstance(cert, Certificate):
        data = cert.to_json()
    elif isinstance(cert, str):
        try:
            data = json.loads(cert)
        except json.JSONDecodeError as exc:
            return VerificationReport(False, [Check("schema", False, f"invalid JSON: {exc}")])
    else:
        data = cert
    try:
        Certificate.from_json(data)
    except (KeyError, TypeError, ValueError, IndexError, AttributeError) as exc:
        return VerificationReport(False, [Check("schema", False, f"{type(exc).__name__}: {exc}")])
    return _Verifier(data).run()


def exhaustive_smallset_sweep(
    bound: int,
    size_cap: int,
    variant: str = "circle3",
    *,
    max_cases: int = 2000,
    seed: int = 0,
    **params: Any,
) -> dict[str, Any]:
    """Realize and verify every A containing 0 inside [-bound, bound] with |A| <= size_cap.

    Families larger than ``max_cases`` are replaced by a seeded random sample.
    """
    if bound < 0 or size_cap < 1:
        raise ValueError("bound must be >= 0 and size_cap >= 1")
    nonzero = [x for x in range(-bound, bound + 1) if x]
    family = [
        (0,) + extra
        for size in range(0, size_cap)
        for extra in combinations(nonzero, size)
    ]
    sampled = len(family) > max_cases
    if sampled:
        family = random.Random(seed).sample(family, max_cases)
    failures = []
    for A in family:
        try:
            report = verify_certificate(realize(variant, A, **params))
        except Exception as exc:  # failures are data here
            failures.append({"set": [str(a) for a in sorted(A)], "error": f"{type(exc).__name__}: {exc}"})
            continue
        if not report.passed:
            failures.append({"set": [str(a) for a in sorted(A)], "failed_checks": report.failed_checks()})
    return {
        "variant": variant,
        "bound": bound,
        "size_cap": size_cap,
        "params": {k: v for k, v in sorted(params.items())},
        "sampled": sampled,
        "seed": seed if sampled else None,
        "checked": len(family),
        "passed": len(family) - len(failures),
        "failed": len(failures),
        "failures": failures,
    }


__all__ = [
    "Check",
    "VerificationReport",
    "OracleLimitExceeded",
    "oracle_sumset",
    "verify_certificate",
    "exhaustive_smallset_sweep",
]
