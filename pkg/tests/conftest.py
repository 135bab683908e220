"""Shared fixtures: golden count data, the small-algebra corpus, and the
hand-built non-linear sum used to exercise the linearity predicate."""

from __future__ import annotations

import pytest

from libsl import PlonkaAlgebra, all_shapes, enumerate_systems

# published counts for cardinalities 1..23
GOLDEN_TABLE = [
    (1, 1), (2, 2), (3, 2), (4, 4), (5, 4), (6, 7), (7, 7), (8, 14), (9, 14),
    (10, 26), (11, 26), (12, 52), (13, 52), (14, 99), (15, 99), (16, 199),
    (17, 199), (18, 386), (19, 386), (20, 772), (21, 772), (22, 1508),
    (23, 1508),
]

# regression pins beyond the published range, frozen from this package's own
# enumeration path (slow and fast paths agree on all of them)
FROZEN_BEYOND_TABLE = {
    24: 3007, 25: 3007, 26: 5903, 27: 5903, 28: 11735, 29: 11735, 30: 23094,
}
FROZEN_N64 = 2496728121

# binary partition counts b(1)..b(10) (OEIS A018819, shifted)
BRANCH_COUNT_PREFIX = [1, 2, 2, 4, 4, 6, 6, 10, 10, 14]

# the 14 binary partitions of 10 as (multiplicity, exponent) chains
FOREST_10_BRANCHES = {
    ((10, 0),),
    ((1, 1), (8, 0)),
    ((2, 1), (6, 0)),
    ((3, 1), (4, 0)),
    ((4, 1), (2, 0)),
    ((5, 1),),
    ((1, 2), (6, 0)),
    ((1, 2), (1, 1), (4, 0)),
    ((1, 2), (2, 1), (2, 0)),
    ((1, 2), (3, 1)),
    ((2, 2), (2, 0)),
    ((2, 2), (1, 1)),
    ((1, 3), (2, 0)),
    ((1, 3), (1, 1)),
}

# three-valued tables with element order (0, n, 1): join, meet, negation
WEAK_KLEENE_JOIN = [["0", "n", "1"], ["n", "n", "n"], ["1", "n", "1"]]
WEAK_KLEENE_MEET = [["0", "n", "0"], ["n", "n", "n"], ["0", "n", "1"]]
WEAK_KLEENE_NEG = ["1", "n", "0"]


class TwoElementSum:
    """Sum of 2-element Boolean algebras over an explicit join table.

    Every homomorphism between 2-element Boolean algebras is the identity,
    so lifting never changes the bit.  The constants sit at `constants_at`,
    which need not be a least element; the instance is then not a valid
    algebra of the class, but the positivity and linearity predicates still
    evaluate.
    """

    def __init__(self, positions: list[str], join_table: dict, constants_at: str):
        self.positions = positions
        self._join = join_table
        self.zero = (constants_at, 0)
        self.one = (constants_at, 1)

    def elements(self):
        return [(p, b) for p in self.positions for b in (0, 1)]

    def join(self, x, y):
        return (self._join[(x[0], y[0])], x[1] | y[1])

    def meet(self, x, y):
        return (self._join[(x[0], y[0])], x[1] & y[1])

    def neg(self, x):
        return (x[0], x[1] ^ 1)


def _sym(table: dict) -> dict:
    out = dict(table)
    for (p, q), r in table.items():
        out[(q, p)] = r
    return out


@pytest.fixture
def antichain_sum() -> TwoElementSum:
    """Three components over {a, b} < t with a, b incomparable: positive
    elements do not form a chain.  No least element exists, so this is not
    an algebra of the class; it only feeds the linearity predicate."""
    joins = _sym({
        ("a", "a"): "a", ("b", "b"): "b", ("t", "t"): "t",
        ("a", "b"): "t", ("a", "t"): "t", ("b", "t"): "t",
    })
    return TwoElementSum(["a", "b", "t"], joins, constants_at="a")


@pytest.fixture
def diamond_sum() -> TwoElementSum:
    """Four components over the diamond bot < {a, b} < t: a genuine sum with
    a least element, so all eight identities hold, yet the positive elements
    are not a chain."""
    joins = _sym({
        ("o", "o"): "o", ("a", "a"): "a", ("b", "b"): "b", ("t", "t"): "t",
        ("o", "a"): "a", ("o", "b"): "b", ("o", "t"): "t",
        ("a", "b"): "t", ("a", "t"): "t", ("b", "t"): "t",
    })
    return TwoElementSum(["o", "a", "b", "t"], joins, constants_at="o")


@pytest.fixture(scope="session")
def small_algebras():
    """Every system over every shape of cardinality 1..8, with its algebra."""
    out = []
    for n in range(1, 9):
        for shape in all_shapes(n):
            for system in enumerate_systems(shape):
                out.append((n, shape, system, PlonkaAlgebra(system)))
    return out


@pytest.fixture
def golden_table():
    return list(GOLDEN_TABLE)
