"""Acceptance criteria, one test per criterion.

Each criterion returns ``(passed, detail)``; the pytest wrappers assert on
it and the terminal summary prints one PASS/FAIL line per criterion.  Run
standalone with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from degreesets.blocks import AdamsBlock, CircleBlock, RationalGraphBlock, graph_family
from degreesets.calculus import adams_pair_degrees, circle_pair_degrees, rational_pair_degrees
from degreesets.decompose import decompose_integer_set
from degreesets.realize import STRONGLY_CHIRAL, SYMMETRIC, chirality_flag, realize_adams, realize_circle3, realize_rational
from degreesets.setalg import DegreeSet, SeqB, scale_seq, scale_set, sumset_of_sequence
from degreesets.verify import oracle_sumset, verify_certificate

from oracles import isomorphic_by_bijection, subset_sums
from tamper import is_semantic, mutate

RESULTS: dict[str, tuple[bool, str]] = {}

TITLES = {
    "C1": "block formula fidelity",
    "C2": "decomposition soundness",
    "C3": "circle-bundle roundtrip",
    "C4": "graph-algebra roundtrip",
    "C5": "Adams-operation roundtrip",
    "C6": "tamper detection",
    "C7": "property suites",
}


def record(key: str, passed: bool, detail: str) -> tuple[bool, str]:
    RESULTS[key] = (passed, detail)
    return passed, detail


def summary_lines() -> list[str]:
    return [
        f"{'PASS' if ok else 'FAIL'} {key} {TITLES[key]}: {detail}"
        for key, (ok, detail) in sorted(RESULTS.items())
    ]


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def S(*xs) -> DegreeSet:
    return DegreeSet.of(*xs)


# --- brute-force references -------------------------------------------------


def ref_circle(i: int, j: int) -> set[Fraction]:
    # nonzero degree d exists iff d * i = j for an integer d
    return {Fraction(0)} | {Fraction(d) for d in range(-abs(j), abs(j) + 1) if d and d * i == j}


def ref_adams(r1: int, r2: int, s1: int, s2: int, m: int) -> set[Fraction]:
    quotients = [d for d in range(1, r2 + 1) if d * r1 == r2]
    return {Fraction(0)} | {Fraction(s1 * s2 * d**m) for d in quotients}


def exact_root(n: int, m: int) -> int | None:
    r = 0
    while r**m < n:
        r += 1
    return r if r**m == n else None


def ref_two_m(k: int, v: int) -> int:
    return 540 * k**2 + 984 * k + 396 + v * (360 * k**2 + 436 * k + 132)


def random_int_set(rng: random.Random, max_size: int, bound: int) -> DegreeSet:
    size = rng.randint(1, max_size)
    nonzero = [x for x in range(-bound, bound + 1) if x]
    return DegreeSet([0] + rng.sample(nonzero, size - 1))


def random_rat_set(rng: random.Random, max_size: int, cap: int) -> DegreeSet:
    size = rng.randint(1, max_size)
    out = {Fraction(0)}
    while len(out) < size:
        out.add(Fraction(rng.choice([-1, 1]) * rng.randint(1, cap), rng.randint(1, cap)))
    return DegreeSet(out)


# --- criteria ---------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    rng = random.Random(101)
    pairs = [(2, 6), (2, 3), (15, -15)]
    while len(pairs) < 50:
        i = rng.choice([-1, 1]) * rng.randint(1, 12)
        j = i * rng.choice([-5, -3, -2, -1, 1, 2, 3, 4]) if rng.random() < 0.5 else rng.choice([-1, 1]) * rng.randint(1, 60)
        pairs.append((i, j))
    bad, worst = [], 0.0
    for i, j in pairs:
        got, dt = timed(circle_pair_degrees, CircleBlock(i), CircleBlock(j))
        worst = max(worst, dt)
        if set(got) != ref_circle(i, j):
            bad.append(("circle", i, j))
    fixed = {(2, 6): S(0, 3), (2, 3): S(0), (15, -15): S(0, -1)}
    bad += [("circle-fixed", *p) for p, want in fixed.items() if circle_pair_degrees(CircleBlock(p[0]), CircleBlock(p[1])) != want]

    adams_cases = [(3, 15, 1, 1, 2), (3, 5, 1, 1, 2), (5, 35, -1, 1, 3), (7, 7, -1, -1, 2), (1, 11, 1, -1, 4)]
    for r1, r2, s1, s2, m in adams_cases:
        got, dt = timed(adams_pair_degrees, AdamsBlock(r1, m, s1), AdamsBlock(r2, m, s2))
        worst = max(worst, dt)
        if set(got) != ref_adams(r1, r2, s1, s2, m):
            bad.append(("adams", r1, r2, m))
    if adams_pair_degrees(AdamsBlock(3, 2), AdamsBlock(15, 2)) != S(0, 25):
        bad.append(("adams-fixed", 3, 15, 2))

    family = graph_family(2)
    g0, g1 = family
    iso = isomorphic_by_bijection(g0.v, g0.edges, g1.edges)
    rat_cases = [(Fraction(1, 2), 3, 0, 0), (Fraction(-2, 3), Fraction(5, 7), 1, 1), (Fraction(1, 2), 3, 0, 1)]
    for p, q, gi, gj in rat_cases:
        got, dt = timed(rational_pair_degrees, RationalGraphBlock(gi, 1, p), RationalGraphBlock(gj, 1, q), family)
        worst = max(worst, dt)
        same = gi == gj or iso
        want = {Fraction(0), Fraction(q) / p} if same else {Fraction(0)}
        if set(got) != want:
            bad.append(("rational", p, q))
    if rational_pair_degrees(RationalGraphBlock(0, 1, "1/2"), RationalGraphBlock(0, 1, 3), family) != S(0, 6):
        bad.append(("rational-fixed",))

    ok = not bad and worst < 1e-3
    detail = f"{len(pairs)} circle, {len(adams_cases)} Adams, {len(rat_cases)} rational pairs; {len(bad)} mismatches; slowest call {worst * 1e3:.3f} ms (limit 1 ms)"
    return record("C1", ok, detail)


def criterion_2() -> tuple[bool, str]:
    nonzero = [x for x in range(-10, 11) if x]
    sets = [DegreeSet((0,) + extra) for size in range(4) for extra in combinations(nonzero, size)]
    t0 = time.perf_counter()
    bad = []
    for m in (1, 2, 3):
        mf = factorial(m)
        for A in sets:
            dec = decompose_integer_set(A, m)
            sums = [set(oracle_sumset(seq)) for seq in dec.sequences]
            if set.intersection(*sums) != set(A):
                bad.append((m, A, "intersection"))
            for seq in dec.sequences:
                for b in seq:
                    k = exact_root(abs(int(b)), m)
                    if b.denominator != 1 or k is None or gcd(k, mf) != 1:
                        bad.append((m, A, "entry", b))
                        break
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    detail = f"{len(sets)} sets x m in {{1,2,3}}; {len(bad)} failures; {elapsed:.1f} s (limit 60 s)"
    return record("C2", ok, detail)


def _roundtrip(realizer, A, limit, **params):
    t0 = time.perf_counter()
    cert = realizer(A, **params)
    report = verify_certificate(cert)
    dt = time.perf_counter() - t0
    return cert, report, dt, report.passed and report.recomputed_degrees == A and dt < limit


def criterion_3() -> tuple[bool, str]:
    cert = realize_circle3(S(0, 2))
    worked = (
        [list(map(int, s)) for s in cert.decomposition.sequences] == [[1, 1], [-1, 3]]
        and cert.primes == (2, 5)
        and cert.alphas == (2, -15)
        and cert.M.groups == ((CircleBlock(2), CircleBlock(2)), (CircleBlock(15), CircleBlock(-5)))
        and cert.N.groups == ((CircleBlock(2),), (CircleBlock(-15),))
        and verify_certificate(cert).passed
    )
    rng = random.Random(2023)
    bad, worst = [], 0.0
    for _ in range(200):
        A = random_int_set(rng, 6, 30)
        _, _, dt, ok = _roundtrip(realize_circle3, A, 1.0)
        worst = max(worst, dt)
        if not ok:
            bad.append(A)
    ok = worked and not bad
    detail = f"worked case {'exact' if worked else 'MISMATCH'}; 200 seeded sets, {len(bad)} failures; slowest {worst:.3f} s (limit 1 s)"
    return record("C3", ok, detail)


def criterion_4() -> tuple[bool, str]:
    spot = ref_two_m(1, 2) == 3776
    rng = random.Random(4049)
    bad, worst, largest = [], 0.0, 0
    for _ in range(100):
        A = random_rat_set(rng, 5, 12)
        cert, _, dt, ok = _roundtrip(realize_rational, A, 2.0, k=1)
        worst = max(worst, dt)
        largest = max(largest, max(len(s) for s in cert.decomposition.sequences))
        v = cert.graph_family[0].v
        ok = ok and cert.connectivity == 47 and cert.dimension == 2 * ref_two_m(1, v) - 1
        if not ok:
            bad.append(A)
    ok = spot and not bad
    detail = (
        f"2m(k=1,|V|=2) = {ref_two_m(1, 2)}; 100 seeded sets, {len(bad)} failures; "
        f"longest sequence {largest}; slowest {worst:.3f} s (limit 2 s)"
    )
    return record("C4", ok, detail)


def criterion_5() -> tuple[bool, str]:
    rng = random.Random(5051)
    bad, worst, count = [], 0.0, 0
    for m in (2, 3):
        mf = factorial(m)
        for _ in range(100):
            A = random_int_set(rng, 5, 20)
            cert, _, dt, ok = _roundtrip(realize_adams, A, 2.0, m=m)
            count += 1
            worst = max(worst, dt)
            ok = ok and all(gcd(b.r, mf) == 1 for b in cert.M.blocks + cert.N.blocks)
            for alpha, seq in zip(cert.alphas, cert.decomposition.sequences):
                for b in seq:
                    root = exact_root(abs(int(alpha) // int(b)), m)
                    ok = ok and root is not None and gcd(root, mf) == 1
            if not ok:
                bad.append((m, A))
    detail = f"{count} seeded sets over m in {{2,3}}; {len(bad)} failures; slowest {worst:.3f} s (limit 2 s)"
    return record("C5", not bad, detail)


def criterion_6() -> tuple[bool, str]:
    rng = random.Random(6067)
    sources = [
        realize_circle3(S(0, 2)),
        realize_circle3(S(0, -4, 7)),
        realize_circle3(S(0)),
        realize_rational(S(0, "1/2", "-2/3")),
        realize_rational(S(0)),
        realize_adams(S(0, -1, 1), m=2),
        realize_adams(S(0, 2), m=3),
        realize_adams(S(0), m=2),
    ]
    originals = [c.to_json() for c in sources]
    semantic = detected = noop = 0
    missed = []
    for _ in range(500):
        original = rng.choice(originals)
        mutated, path = mutate(original, rng)
        if not is_semantic(original, mutated):
            noop += 1
            continue
        semantic += 1
        if verify_certificate(mutated).passed:
            missed.append(path)
        else:
            detected += 1
    ok = semantic > 0 and detected == semantic
    detail = f"500 mutations: {semantic} semantic, {noop} no-op; detected {detected}/{semantic}"
    if missed:
        detail += f"; missed paths {missed[:5]}"
    return record("C6", ok, detail)


def criterion_7() -> tuple[bool, str]:
    rng = random.Random(7079)
    entries = [-3, -2, -1, 1, 2, 3]
    dp_bad = perm_bad = scale_bad = 0
    for _ in range(10_000):
        seq = [rng.choice(entries) for _ in range(rng.randint(0, 12))]
        got = sumset_of_sequence(SeqB(seq))
        if set(got) != subset_sums(seq):
            dp_bad += 1
        shuffled = seq[:]
        rng.shuffle(shuffled)
        if sumset_of_sequence(SeqB(shuffled)) != got:
            perm_bad += 1
    for _ in range(500):
        seq = SeqB(Fraction(rng.choice(entries), rng.randint(1, 6)) for _ in range(rng.randint(0, 8)))
        lam = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        if scale_set(lam, sumset_of_sequence(seq)) != sumset_of_sequence(scale_seq(lam, seq)):
            scale_bad += 1
    self_bad = sum(circle_pair_degrees(CircleBlock(i), CircleBlock(i)) != S(0, 1) for i in range(-40, 41) if i)
    chir_bad = 0
    for _ in range(300):
        A = random_int_set(rng, 5, 6)
        want = SYMMETRIC if set(A) == {-a for a in A} else STRONGLY_CHIRAL
        chir_bad += chirality_flag(A) != want
    # a non-symmetric set forces the manifolds to be strongly chiral
    chir_bad += chirality_flag(S(0, 2)) != STRONGLY_CHIRAL
    chir_bad += chirality_flag(S(0, 1, -1)) != SYMMETRIC or chirality_flag(S(0)) != SYMMETRIC
    failures = dp_bad + perm_bad + scale_bad + self_bad + chir_bad
    detail = (
        f"DP vs bitmask 10000 cases ({dp_bad} bad), permutation ({perm_bad}), "
        f"scaling ({scale_bad}), self-pair ({self_bad}), chirality ({chir_bad})"
    )
    return record("C7", failures == 0, detail)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.acceptance
@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"C{i}" for i in range(1, 8)])
def test_criterion(criterion):
    passed, detail = criterion()
    assert passed, detail


if __name__ == "__main__":
    for criterion in CRITERIA:
        criterion()
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
