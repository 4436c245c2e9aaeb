"""Exact finite-set and sequence arithmetic over the rationals.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  A :class:`DegreeSet` is an
immutable, ascending collection of distinct rationals; a :class:`SeqB` is an
ordered sequence of nonzero rationals whose subset sums are the object of
interest.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

__all__ = [
    "Rat",
    "DegreeSet",
    "SeqB",
    "PackedSet",
    "parse_rat",
    "format_rat",
    "sumset_of_sequence",
    "sumset_counts",
    "packed_sumset",
    "add_sets",
    "intersect_all",
    "intersect_mixed",
    "scale_set",
    "scale_seq",
]


def parse_rat(value: RatLike) -> Fraction:
    """Parse ``"p/q"``, ``"n"``, an int or a Fraction into a Fraction.

    Floats are refused: they cannot round-trip exactly.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return _parse_text(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


# certificates repeat a handful of literals thousands of times
@lru_cache(maxsize=1 << 12)
def _parse_text(value: str) -> Fraction:
    text = value.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {value!r}") from None
    except ValueError:
        raise ValueError(f"not a rational literal: {value!r}") from None


def format_rat(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class DegreeSet:
    """Finite set of rationals stored in canonical ascending order."""

    elements: tuple[Fraction, ...] = ()

    def __init__(self, elements: Iterable[RatLike] = ()) -> None:
        canon = tuple(sorted({parse_rat(x) for x in elements}))
        object.__setattr__(self, "elements", canon)

    @classmethod
    def of(cls, *elements: RatLike) -> "DegreeSet":
        return cls(elements)

    @classmethod
    def _from_sorted(cls, elements: tuple[Fraction, ...]) -> "DegreeSet":
        # caller guarantees distinct Fractions in ascending order
        out = object.__new__(cls)
        object.__setattr__(out, "elements", elements)
        return out

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        try:
            return parse_rat(item) in self.elements  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return False

    def __repr__(self) -> str:
        return "{" + ", ".join(format_rat(x) for x in self.elements) + "}"

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.elements)

    def negate(self) -> "DegreeSet":
        return DegreeSet(-x for x in self.elements)

    def issubset(self, other: "DegreeSet") -> bool:
        return set(self.elements) <= set(other.elements)

    def to_json(self) -> list[str]:
        return [format_rat(x) for x in self.elements]

    @classmethod
    def from_json(cls, data: Sequence[RatLike]) -> "DegreeSet":
        if isinstance(data, (str, bytes)) or not isinstance(data, Sequence):
            raise ValueError("a degree set serializes as a JSON array")
        values = [parse_rat(x) for x in data]
        if len(set(values)) != len(values):
            raise ValueError("duplicate elements in serialized degree set")
        return cls(values)


@dataclass(frozen=True)
class SeqB:
    """Sequence of nonzero rationals; repetitions allowed, order irrelevant to S_B."""

    entries: tuple[Fraction, ...] = ()

    def __init__(self, entries: Iterable[RatLike] = ()) -> None:
        canon = tuple(parse_rat(x) for x in entries)
        if any(x == 0 for x in canon):
            raise ValueError("sequence entries must be nonzero")
        object.__setattr__(self, "entries", canon)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> Fraction:
        return self.entries[index]

    def __add__(self, other: "SeqB") -> "SeqB":
        return SeqB(self.entries + other.entries)

    def __repr__(self) -> str:
        return "(" + ", ".join(format_rat(x) for x in self.entries) + ")"

    def to_json(self) -> list[str]:
        return [format_rat(x) for x in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[RatLike]) -> "SeqB":
        if isinstance(data, (str, bytes)) or not isinstance(data, Sequence):
            raise ValueError("a sequence serializes as a JSON array")
        return cls(data)


def _as_set(values: Iterable[Fraction]) -> DegreeSet:
    return DegreeSet(values)


# sumsets whose integer span needs more bits than this are folded as sets
BITSET_LIMIT = 1 << 26


def _chunks(count: int) -> Iterator[int]:
    """Split ``count`` into 1, 2, 4, ... plus a remainder.

    Subset sums of the chunks are exactly 0..count, so ``count`` copies of b
    contribute the same sums as the chunk multiples of b.
    """
    size = 1
    while count > 0:
        take = min(size, count)
        yield take
        count -= take
        size *= 2


@dataclass(frozen=True)
class PackedSet:
    """Set of rationals (p + low) / scale, one bit p of ``bits`` per element.

    Internal fast path for large dense sumsets: intersections of packed sets
    on a common scale are a shift and an AND, and no Fraction is built until
    the (usually small) result is unpacked.
    """

    bits: int
    low: int
    scale: int

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, x: Fraction) -> bool:
        y = x * self.scale
        if y.denominator != 1:
            return False
        p = y.numerator - self.low
        return p >= 0 and (self.bits >> p) & 1 == 1

    def is_zero_only(self) -> bool:
        return self.bits == 1 << -self.low if self.low <= 0 else False

    def positions(self) -> list[int]:
        digits = bin(self.bits)[:1:-1]
        return [i + self.low for i, d in enumerate(digits) if d == "1"]

    def unpack(self) -> DegreeSet:
        if self.scale == 1:
            return DegreeSet._from_sorted(tuple(map(Fraction, self.positions())))
        return DegreeSet._from_sorted(tuple(Fraction(p, self.scale) for p in self.positions()))

    def __and__(self, other: "PackedSet") -> "PackedSet":
        if other.scale != self.scale:
            raise ValueError("packed sets on different scales")
        low = max(self.low, other.low)
        return PackedSet((self.bits >> (low - self.low)) & (other.bits >> (low - other.low)), low, self.scale)


SetLike = Union[DegreeSet, PackedSet]


def packed_sumset(counts: Mapping[Fraction, int]) -> Optional[PackedSet]:
    """S_B for the multiset ``counts`` as a bitset, or None when it would be sparse.

    Each value is scaled to an integer and its multiplicity split into binary
    chunks, so a run of c equal entries costs O(log c) big-integer shifts.
    """
    scale = lcm(*(b.denominator for b in counts)) if counts else 1
    ints = {int(b * scale): c for b, c in counts.items()}
    low = sum(v * c for v, c in ints.items() if v < 0)
    span = sum(abs(v) * c for v, c in ints.items())
    # |S_B| <= prod(count + 1); a sparse sumset is cheaper to fold as a set
    size_bound = prod(c + 1 for c in counts.values())
    if span >= BITSET_LIMIT or 32 * size_bound < span:
        return None
    # bit p stands for the sum p + low; no subset sum lies below low
    bits = 1 << -low
    for v, c in sorted(ints.items()):
        for t in _chunks(c):
            bits |= bits << (v * t) if v > 0 else bits >> (-v * t)
    return PackedSet(bits, low, scale)


def _fold_sumset(counts: Mapping[Fraction, int]) -> DegreeSet:
    sums = {Fraction(0)}
    for b, c in counts.items():
        for t in _chunks(c):
            sums |= {x + t * b for x in sums}
    return _as_set(sums)


def sumset_counts(counts: Mapping[Fraction, int]) -> SetLike:
    packed = packed_sumset(counts)
    return _fold_sumset(counts) if packed is None else packed


def sumset_of_sequence(seq: SeqB | Iterable[RatLike]) -> DegreeSet:
    """Return S_B, the set of all subset sums of ``seq``.

    Dense sumsets go through a bitset (see :func:`packed_sumset`); sparse ones
    (few sums over a wide span) are folded as plain sets.
    """
    if not isinstance(seq, SeqB):
        seq = SeqB(seq)
    result = sumset_counts(Counter(seq.entries))
    return result.unpack() if isinstance(result, PackedSet) else result


def intersect_mixed(items: Sequence[SetLike]) -> DegreeSet:
    """Intersection of degree sets, some possibly packed.

    Packed sets sharing a scale are ANDed; the smallest remaining operand is
    then unpacked and filtered by membership in the others.
    """
    if not items:
        raise ValueError("intersect_all needs at least one set")
    by_scale: dict[int, PackedSet] = {}
    plain: list[DegreeSet] = []
    for x in items:
        if isinstance(x, PackedSet):
            by_scale[x.scale] = by_scale[x.scale] & x if x.scale in by_scale else x
        else:
            plain.append(x)
    operands: list[SetLike] = [*by_scale.values(), *plain]
    smallest = min(operands, key=len)
    rest = [x for x in operands if x is not smallest]
    base = smallest.unpack() if isinstance(smallest, PackedSet) else smallest
    others = [set(x) if isinstance(x, DegreeSet) else x for x in rest]
    return DegreeSet._from_sorted(tuple(v for v in base if all(v in o for o in others)))


def add_sets(x: DegreeSet, y: DegreeSet) -> DegreeSet:
    return _as_set(a + b for a in x for b in y)


def intersect_all(sets: Sequence[DegreeSet]) -> DegreeSet:
    if not sets:
        raise ValueError("intersect_all needs at least one set")
    common = set(sets[0])
    for s in sets[1:]:
        common &= set(s)
    return _as_set(common)


def _check_scalar(lam: RatLike) -> Fraction:
    lam = parse_rat(lam)
    if lam == 0:
        raise ValueError("scaling factor must be nonzero")
    return lam


def scale_set(lam: RatLike, x: DegreeSet) -> DegreeSet:
    lam = _check_scalar(lam)
    return _as_set(lam * a for a in x)


def scale_seq(lam: RatLike, seq: SeqB) -> SeqB:
    lam = _check_scalar(lam)
    scaled = {b: lam * b for b in set(seq)}
    return SeqB(scaled[b] for b in seq)
