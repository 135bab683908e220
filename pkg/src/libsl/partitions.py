"""Binary partitions of n, generated as a prefix-sharing forest of sequences.

A *sequence* is a chain of (multiplicity, exponent) pairs with strictly
decreasing exponents; it encodes the decomposition

    n = m_1 * 2^(e_1) + ... + m_k * 2^(e_k),   e_1 > e_2 > ... > e_k >= 0.

The forest shares common prefixes: every root-to-leaf branch is exactly one
such sequence, each sequence appears on exactly one branch, and the branch
count is the binary partition number b(n) (OEIS A018819, shifted so that
b(1) = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class BinSequence:
    """One binary partition of n as an ordered (multiplicity, exponent) chain."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.pairs:
            raise ValueError("a sequence needs at least one pair")
        last_exp = None
        for mult, exp in self.pairs:
            if mult < 1:
                raise ValueError(f"multiplicity must be >= 1, got {mult}")
            if exp < 0:
                raise ValueError(f"exponent must be >= 0, got {exp}")
            if last_exp is not None and exp >= last_exp:
                raise ValueError("exponents must be strictly decreasing")
            last_exp = exp

    @property
    def value(self) -> int:
        return sum(m << e for m, e in self.pairs)

    def __str__(self) -> str:
        return "->".join(f"{m}*2^{e}" for m, e in self.pairs)


@dataclass(frozen=True)
class SeqNode:
    """Forest node holding one (multiplicity, exponent) pair."""

    multiplicity: int
    exponent: int
    children: tuple["SeqNode", ...] = field(default=())


@dataclass(frozen=True)
class SeqForest:
    """Prefix-sharing forest whose branches are the sequences of one n."""

    trees: tuple[SeqNode, ...]


def division_map(n1: int, n2: int, n: int) -> int:
    """Largest power of two in {2^0..2^floor(log2 n)} strictly below both
    n1 and n2; falls back to 1 when either argument is 0 or 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n1 in (0, 1) or n2 in (0, 1):
        return 1
    m = 1 << (n.bit_length() - 1)
    while m >= n1 or m >= n2:
        m >>= 1  # n1, n2 >= 2 here, so the loop stops at m >= 1
    return m


@lru_cache(maxsize=None)
def _subtrees(total: int, e_cap: int) -> tuple[SeqNode, ...]:
    """All trees over sequences of `total` whose leading exponent is <= e_cap.

    Children (and sibling roots) are ordered by decreasing exponent, then
    decreasing multiplicity, which makes every forest canonical.  Subtrees
    are memoized by residual value; sharing never changes the branch set.
    """
    out: list[SeqNode] = []
    for e in range(min(e_cap, total.bit_length() - 1), -1, -1):
        for m in range(total >> e, 0, -1):
            rest = total - (m << e)
            if rest == 0:
                out.append(SeqNode(m, e))
            elif e > 0:
                # rest > 0 always admits a completion with exponents < e
                out.append(SeqNode(m, e, _subtrees(rest, e - 1)))
    return tuple(out)


def gen_forest(n: int) -> SeqForest:
    """Forest whose branch set is exactly the binary partitions of n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return SeqForest(_subtrees(n, n.bit_length() - 1))


def gen_seq(n: int, e: int) -> list[SeqNode]:
    """Trees rooted at exponent e whose branches are the sequences of n
    beginning with exponent e."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if e < 0 or (1 << e) > n:
        raise ValueError(f"need 2^e <= n, got e={e}, n={n}")
    return [t for t in _subtrees(n, e) if t.exponent == e]


def _walk(node: SeqNode, prefix: tuple[tuple[int, int], ...],
          out: list[BinSequence]) -> None:
    chain = prefix + ((node.multiplicity, node.exponent),)
    if not node.children:
        out.append(BinSequence(chain))
        return
    for child in node.children:
        _walk(child, chain, out)


def branches(forest: SeqForest) -> list[BinSequence]:
    """All branches of the forest, root first, in canonical order."""
    out: list[BinSequence] = []
    for tree in forest.trees:
        _walk(tree, (), out)
    return out


def iter_branches(n: int) -> Iterator[BinSequence]:
    """Stream the binary partitions of n in canonical branch order without
    materializing the forest."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def rec(total: int, e_cap: int,
            prefix: tuple[tuple[int, int], ...]) -> Iterator[BinSequence]:
        for e in range(min(e_cap, total.bit_length() - 1), -1, -1):
            for m in range(total >> e, 0, -1):
                rest = total - (m << e)
                chain = prefix + ((m, e),)
                if rest == 0:
                    yield BinSequence(chain)
                elif e > 0:
                    yield from rec(rest, e - 1, chain)

    return rec(n, n.bit_length() - 1, ())


def presentation(seq: BinSequence) -> list[int]:
    """Expand each (m, e) pair into m consecutive copies of e."""
    return [e for m, e in seq.pairs for _ in range(m)]


def forest_lines(forest: SeqForest) -> list[str]:
    """One branch per line, pairs as m*2^e joined by '->'."""
    return [str(b) for b in branches(forest)]


def forest_dot(forest: SeqForest, name: str = "forest") -> str:
    """DOT rendering of the prefix-sharing forest."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    counter = 0

    def emit(node: SeqNode) -> str:
        # fresh id per visit: shared (memoized) subtrees must still be
        # drawn as distinct forest nodes
        nonlocal counter
        node_id = f"n{counter}"
        counter += 1
        lines.append(f'  {node_id} [label="({node.multiplicity},2^{node.exponent})"];')
        for child in node.children:
            lines.append(f"  {node_id} -> {emit(child)};")
        return node_id

    for tree in forest.trees:
        emit(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"
