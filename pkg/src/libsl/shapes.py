"""Shapes of linearly ordered involutive bisemilattices.

A shape is an ordered chain of Boolean-component sizes, written as atom-count
exponents bottom-to-top: position 0 is the bottom of the chain (it carries the
constants 0 and 1), and an entry e stands for a Boolean algebra with 2^e
elements.  Trivial components (e = 0) only ever sit at the top of the chain,
because a nontrivial Boolean algebra admits no homomorphism out of a trivial
one.  Reordering the nontrivial components of one binary partition yields the
distinct shapes of that partition; their number is a multinomial coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import BinSequence, iter_branches


@dataclass(frozen=True, order=True)
class Shape:
    """Chain of component exponents, bottom first, zeros as a top suffix."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise ValueError("a shape needs at least one component")
        seen_zero = False
        for e in self.exponents:
            if e < 0:
                raise ValueError(f"exponent must be >= 0, got {e}")
            if e == 0:
                seen_zero = True
            elif seen_zero:
                raise ValueError("trivial components must form a top suffix")

    @property
    def cardinality(self) -> int:
        return sum(1 << e for e in self.exponents)

    @property
    def positive_prefix(self) -> tuple[int, ...]:
        """The nontrivial components, bottom first."""
        return tuple(e for e in self.exponents if e > 0)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.exponents) + "]"

    def to_json_obj(self) -> dict:
        return {
            "components": [1 << e for e in self.exponents],
            "n": self.cardinality,
        }


def positive_part(seq: BinSequence) -> list[tuple[int, int]]:
    """The (multiplicity, exponent) pairs of seq with exponent != 0."""
    return [(m, e) for m, e in seq.pairs if e != 0]


def distinct_orderings(exponents: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Every distinct arrangement of a multiset of positive exponents,
    exactly once, in decreasing lexicographic order (so the already-sorted
    arrangement comes first)."""
    pool = sorted(exponents, reverse=True)
    for e in pool:
        if e < 1:
            raise ValueError(f"exponents must be >= 1, got {e}")
    values = sorted(set(pool), reverse=True)
    counts = [pool.count(v) for v in values]

    def rec(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for i, v in enumerate(values):
            if counts[i]:
                counts[i] -= 1
                yield from rec(prefix + (v,), remaining - 1)
                counts[i] += 1

    return rec((), len(pool))


def multinomial(seq: BinSequence) -> int:
    """Number of distinct arrangements of the nontrivial components:
    (sum of positive multiplicities)! / product of their factorials."""
    mults = [m for m, _ in positive_part(seq)]
    out = math.factorial(sum(mults))
    for m in mults:
        out //= math.factorial(m)
    return out


def shapes_of(seq: BinSequence) -> list[Shape]:
    """All shapes arising from one binary partition: every arrangement of
    the nontrivial components, with the trivial ones appended on top."""
    zeros = sum(m for m, e in seq.pairs if e == 0)
    positive = [e for m, e in positive_part(seq) for _ in range(m)]
    suffix = (0,) * zeros
    return [Shape(arr + suffix) for arr in distinct_orderings(positive)]


def all_shapes(n: int) -> Iterator[Shape]:
    """All shapes of cardinality n, in canonical (branch, arrangement) order."""
    for branch in iter_branches(n):
        yield from shapes_of(branch)


def shapes_count(n: int) -> int:
    """Number of shapes of cardinality n: the multinomial sum over all
    binary partitions of n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(multinomial(branch) for branch in iter_branches(n))
