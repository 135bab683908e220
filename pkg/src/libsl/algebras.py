"""Concrete linearly ordered involutive bisemilattices built over chains of
finite Boolean algebras.

Components are encoded atom-side: a component with e atoms has the subsets of
{0..e-1} as elements, stored as e-bit integers.  A transition between
adjacent components is stored as its dual atom map (upper atoms -> lower
atoms); the induced element map sends a subset x of the lower atoms to
{ upper atom b : assignment[b] in x }, which is automatically a Boolean
homomorphism.  Operations of the summed algebra lift both arguments to the
higher position and evaluate there; negation acts in place; the constants
live in the bottom component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Protocol

from .shapes import Shape

Element = tuple[int, int]  # (chain position, atom-subset bit-vector)


@dataclass(frozen=True)
class BoolComponent:
    """Finite Boolean algebra with `exponent` atoms; exponent 0 is trivial."""

    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {self.exponent}")

    @property
    def top(self) -> int:
        return (1 << self.exponent) - 1

    def elements(self) -> range:
        return range(1 << self.exponent)


@dataclass(frozen=True)
class AtomMap:
    """Dual of a Boolean homomorphism between adjacent components: a total
    function from the atoms of the upper component to those of the lower."""

    lower_exponent: int
    upper_exponent: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.upper_exponent:
            raise ValueError("assignment must cover every upper atom")
        if self.upper_exponent >= 1 and self.lower_exponent < 1:
            raise ValueError("no homomorphism maps a trivial algebra onto a nontrivial one")
        for a in self.assignment:
            if not 0 <= a < self.lower_exponent:
                raise ValueError(f"atom index {a} out of range")

    def apply(self, bits: int) -> int:
        """Element-level image in the upper component of a lower subset."""
        out = 0
        for b, a in enumerate(self.assignment):
            if (bits >> a) & 1:
                out |= 1 << b
        return out


@dataclass(frozen=True)
class LinearDirectSystem:
    """A shape plus one dual atom map per adjacent pair of components."""

    shape: Shape
    maps: tuple[AtomMap, ...]

    def __post_init__(self) -> None:
        exps = self.shape.exponents
        if len(self.maps) != len(exps) - 1:
            raise ValueError("need exactly one map per adjacent pair")
        for i, amap in enumerate(self.maps):
            if amap.lower_exponent != exps[i] or amap.upper_exponent != exps[i + 1]:
                raise ValueError(f"map {i} does not match the shape exponents")

    def serialize(self) -> str:
        exps = ",".join(str(e) for e in self.shape.exponents)
        maps = "|".join(",".join(str(a) for a in m.assignment) for m in self.maps)
        return f"{exps};{maps}"


def transition_apply(system: LinearDirectSystem, from_pos: int, to_pos: int,
                     bits: int) -> int:
    """Image of a component element under the composite transition from
    from_pos up to to_pos (identity when equal)."""
    if from_pos > to_pos:
        raise ValueError("transitions only go up the chain")
    if not 0 <= from_pos < len(system.shape.exponents):
        raise ValueError(f"position {from_pos} out of range")
    if to_pos >= len(system.shape.exponents):
        raise ValueError(f"position {to_pos} out of range")
    for k in range(from_pos, to_pos):
        bits = system.maps[k].apply(bits)
    return bits


class AlgebraLike(Protocol):
    """What the axiom and positivity checks need from an algebra."""

    zero: Element
    one: Element

    def elements(self) -> list[Element]: ...
    def join(self, x: Element, y: Element) -> Element: ...
    def meet(self, x: Element, y: Element) -> Element: ...
    def neg(self, x: Element) -> Element: ...


class PlonkaAlgebra:
    """Sum of a linear direct system: elements are (position, bit-vector),
    operations are evaluated lazily from the system."""

    def __init__(self, system: LinearDirectSystem):
        self.system = system
        self.shape = system.shape
        self._exps = system.shape.exponents
        self.zero: Element = (0, 0)
        self.one: Element = (0, (1 << self._exps[0]) - 1)

    @property
    def cardinality(self) -> int:
        return self.shape.cardinality

    def elements(self) -> list[Element]:
        return [(p, bits) for p, e in enumerate(self._exps)
                for bits in range(1 << e)]

    def lift(self, x: Element, pos: int) -> Element:
        p, bits = x
        return (pos, transition_apply(self.system, p, pos, bits))

    def join(self, x: Element, y: Element) -> Element:
        pos = max(x[0], y[0])
        return (pos, self.lift(x, pos)[1] | self.lift(y, pos)[1])

    def meet(self, x: Element, y: Element) -> Element:
        pos = max(x[0], y[0])
        return (pos, self.lift(x, pos)[1] & self.lift(y, pos)[1])

    def neg(self, x: Element) -> Element:
        p, bits = x
        return (p, bits ^ ((1 << self._exps[p]) - 1))

    def element_name(self, x: Element) -> str:
        p, bits = x
        width = self._exps[p]
        suffix = format(bits, "b").zfill(width) if width else ""
        return f"p{p}:{suffix}"

    def __repr__(self) -> str:
        return f"PlonkaAlgebra({self.system.serialize()!r})"


class TabulatedAlgebra:
    """Materialized-table twin of a PlonkaAlgebra; same element protocol."""

    def __init__(self, elements: list[Element],
                 join_table: dict[tuple[Element, Element], Element],
                 meet_table: dict[tuple[Element, Element], Element],
                 neg_table: dict[Element, Element],
                 zero: Element, one: Element):
        self._elements = elements
        self.join_table = join_table
        self.meet_table = meet_table
        self.neg_table = neg_table
        self.zero = zero
        self.one = one

    @classmethod
    def from_algebra(cls, alg: AlgebraLike) -> "TabulatedAlgebra":
        elems = alg.elements()
        join_t = {(x, y): alg.join(x, y) for x in elems for y in elems}
        meet_t = {(x, y): alg.meet(x, y) for x in elems for y in elems}
        neg_t = {x: alg.neg(x) for x in elems}
        return cls(elems, join_t, meet_t, neg_t, alg.zero, alg.one)

    def elements(self) -> list[Element]:
        return list(self._elements)

    def join(self, x: Element, y: Element) -> Element:
        return self.join_table[(x, y)]

    def meet(self, x: Element, y: Element) -> Element:
        return self.meet_table[(x, y)]

    def neg(self, x: Element) -> Element:
        return self.neg_table[x]


AXIOMS = {
    "I1": "x v x = x",
    "I2": "x v y = y v x",
    "I3": "x v (y v z) = (x v y) v z",
    "I4": "~~x = x",
    "I5": "x ^ y = ~(~x v ~y)",
    "I6": "x ^ (~x v y) = x ^ y",
    "I7": "0 v x = x",
    "I8": "1 = ~0",
}


@dataclass(frozen=True)
class AxiomReport:
    """Pass/fail per axiom; a failure carries the first witness tuple."""

    failures: tuple[tuple[str, tuple], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_axioms(self) -> list[str]:
        return [name for name, _ in self.failures]


def check_ibsl_axioms(alg: AlgebraLike) -> AxiomReport:
    """Exhaustively check the eight defining identities; never raises on a
    bad algebra, failures are reported with witnesses."""
    elems = alg.elements()
    failures: list[tuple[str, tuple]] = []

    def record(name: str, witness: tuple) -> None:
        if name not in (n for n, _ in failures):
            failures.append((name, witness))

    for x in elems:
        if alg.join(x, x) != x:
            record("I1", (x,))
        if alg.neg(alg.neg(x)) != x:
            record("I4", (x,))
        if alg.join(alg.zero, x) != x:
            record("I7", (x,))
    for x in elems:
        for y in elems:
            if alg.join(x, y) != alg.join(y, x):
                record("I2", (x, y))
            if alg.meet(x, y) != alg.neg(alg.join(alg.neg(x), alg.neg(y))):
                record("I5", (x, y))
            if alg.meet(x, alg.join(alg.neg(x), y)) != alg.meet(x, y):
                record("I6", (x, y))
    for x in elems:
        for y in elems:
            for z in elems:
                if alg.join(x, alg.join(y, z)) != alg.join(alg.join(x, y), z):
                    record("I3", (x, y, z))
                    break
            else:
                continue
            break
    if alg.one != alg.neg(alg.zero):
        record("I8", ())
    order = {name: i for i, name in enumerate(AXIOMS)}
    failures.sort(key=lambda item: order[item[0]])
    return AxiomReport(failures=tuple(failures))


def positive_elements(alg: AlgebraLike) -> list[Element]:
    """Elements with x v ~x = x; in a sum these are the component units."""
    return [x for x in alg.elements() if alg.join(x, alg.neg(x)) == x]


def is_linearly_ordered(alg: AlgebraLike) -> bool:
    """True iff the positive elements form a chain under x <= y iff x v y = y."""
    pos = positive_elements(alg)
    for x in pos:
        for y in pos:
            if alg.join(x, y) != y and alg.join(y, x) != x:
                return False
    return True


def enumerate_systems(shape: Shape) -> Iterator[LinearDirectSystem]:
    """Every linear direct system over the given shape: all combinations of
    dual atom maps per adjacent pair, in lexicographic order.  A pair whose
    upper component is trivial carries only the forced collapse map."""
    exps = shape.exponents
    choices: list[list[AtomMap]] = []
    for lo, up in zip(exps, exps[1:]):
        assignments = itertools.product(range(lo), repeat=up) if up else [()]
        choices.append([AtomMap(lo, up, tuple(a)) for a in assignments])
    for combo in itertools.product(*choices):
        yield LinearDirectSystem(shape=shape, maps=tuple(combo))


def algebra_json_obj(alg: PlonkaAlgebra, include_tables: bool = False) -> dict:
    """JSON form of one algebra: shape, maps, named elements, constants, and
    optionally the full operation tables."""
    elems = alg.elements()
    name = alg.element_name
    obj: dict = {
        "shape": alg.shape.to_json_obj(),
        "maps": [list(m.assignment) for m in alg.system.maps],
        "elements": [name(x) for x in elems],
        "constants": {"zero": name(alg.zero), "one": name(alg.one)},
    }
    if include_tables:
        obj["tables"] = {
            "join": [[name(alg.join(x, y)) for y in elems] for x in elems],
            "meet": [[name(alg.meet(x, y)) for y in elems] for x in elems],
            "neg": [name(alg.neg(x)) for x in elems],
        }
    return obj


def algebra_dot(alg: PlonkaAlgebra, name: str = "algebra") -> str:
    """DOT rendering: solid edges for the order inside each component
    (covering relation), dashed edges for the adjacent transition maps."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    exps = alg.shape.exponents

    def node_id(x: Element) -> str:
        return f"e{x[0]}_{x[1]}"

    for x in alg.elements():
        lines.append(f'  {node_id(x)} [label="{alg.element_name(x)}"];')
    for p, e in enumerate(exps):
        for bits in range(1 << e):
            for atom in range(e):
                if not (bits >> atom) & 1:
                    cover = bits | (1 << atom)
                    lines.append(f"  {node_id((p, bits))} -> {node_id((p, cover))};")
    for p in range(len(exps) - 1):
        for bits in range(1 << exps[p]):
            image = alg.system.maps[p].apply(bits)
            lines.append(
                f"  {node_id((p, bits))} -> {node_id((p + 1, image))} [style=dashed];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
