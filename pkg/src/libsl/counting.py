"""Exact counts of non-isomorphic linearly ordered involutive bisemilattices.

Over a fixed shape, the number of isomorphism classes is the product over
adjacent nontrivial components of min(atom counts); trivial components carry
a unique forced map and contribute nothing.  The total for cardinality n sums
that product over every shape, i.e. over every binary partition of n and
every distinct arrangement of its nontrivial components.

Everything here is exact integer arithmetic; the fast path aggregates the
per-arrangement products by dynamic programming over multiset states instead
of materializing arrangements, which keeps memory flat far beyond the range
where naive permutation enumeration exhausts RAM.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import iter_branches
from .shapes import Shape, shapes_of


@dataclass(frozen=True)
class CountReport:
    """Counting result for one cardinality, optionally broken down by shape."""

    n: int
    total: int
    per_shape: tuple[tuple[Shape, int], ...] | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"n": self.n, "total": self.total}
        if self.per_shape is not None:
            obj["per_shape"] = [
                {"components": [1 << e for e in shape.exponents], "count": count}
                for shape, count in self.per_shape
            ]
        return obj


def pair_count(e_lower: int, e_upper: int) -> int:
    """Isomorphism classes over one adjacent pair of nontrivial components:
    min of the two atom counts (the possible kernel-class counts of the dual
    map are exactly 1..min)."""
    if e_lower < 1 or e_upper < 1:
        raise ValueError("pair_count needs nontrivial components on both sides")
    return min(e_lower, e_upper)


def shape_count(shape: Shape) -> int:
    """Isomorphism classes over a fixed shape: product of pair_count along
    the nontrivial prefix (empty product is 1)."""
    prefix = shape.positive_prefix
    out = 1
    for lo, up in zip(prefix, prefix[1:]):
        out *= pair_count(lo, up)
    return out


def libsl_count(n: int) -> int:
    """Total classes of cardinality n by explicit shape enumeration."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(
        shape_count(shape)
        for branch in iter_branches(n)
        for shape in shapes_of(branch)
    )


@lru_cache(maxsize=None)
def _arrangement_sum(groups: tuple[tuple[int, int], ...]) -> int:
    """Sum over distinct arrangements of a multiset of exponents of the
    product of min over adjacent entries.

    `groups` lists (exponent, count) pairs.  States are (remaining counts,
    last exponent placed); choosing which exponent value comes next walks
    each distinct arrangement exactly once.
    """
    exps = tuple(e for e, _ in groups)
    start = tuple(c for _, c in groups)
    memo: dict[tuple[tuple[int, ...], int | None], int] = {}

    def rec(counts: tuple[int, ...], last: int | None) -> int:
        if not any(counts):
            return 1
        key = (counts, last)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for i, c in enumerate(counts):
            if c:
                nxt = counts[:i] + (c - 1,) + counts[i + 1 :]
                factor = 1 if last is None else min(last, exps[i])
                total += factor * rec(nxt, exps[i])
        memo[key] = total
        return total

    return rec(start, None)


def libsl_count_fast(n: int) -> int:
    """Same value as libsl_count, computed without materializing any
    arrangement: one multiset DP per binary partition."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for branch in iter_branches(n):
        groups = tuple((e, m) for m, e in branch.pairs if e > 0)
        total += _arrangement_sum(groups)
    return total


def fine_spectrum_table(lo: int, hi: int) -> list[tuple[int, int]]:
    """[(n, class count)] for n in lo..hi."""
    if lo < 1 or lo > hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    return [(n, libsl_count_fast(n)) for n in range(lo, hi + 1)]


def count_report(n: int, per_shape: bool = False) -> CountReport:
    """CountReport for n; the per-shape breakdown lists every shape in
    canonical order with its class count."""
    if not per_shape:
        return CountReport(n=n, total=libsl_count_fast(n))
    rows: list[tuple[Shape, int]] = []
    for branch in iter_branches(n):
        for shape in shapes_of(branch):
            rows.append((shape, shape_count(shape)))
    total = sum(count for _, count in rows)
    return CountReport(n=n, total=total, per_shape=tuple(rows))
