"""Brute-force ground truth for the counting formulas.

Classifies the algebras built over every system of a shape by exhaustive
isomorphism search, computes the kernel signature that is supposed to decide
same-shape isomorphism, and cross-validates both against the closed-form
counts.  Everything here is deliberately slow and independent; it exists to
certify the fast paths at small cardinalities, guarded by an explicit
cardinality cap (a refusal, never a silent truncation).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .algebras import (
    LinearDirectSystem,
    PlonkaAlgebra,
    check_ibsl_axioms,
    enumerate_systems,
    is_linearly_ordered,
)
from .counting import libsl_count
from .shapes import Shape, all_shapes

DEFAULT_CAP = 12

# cardinality bound for the factorial unrestricted search used in cross-shape
# sampling (n! candidate bijections)
UNRESTRICTED_SAMPLE_MAX = 6


class CapExceededError(Exception):
    """Raised when an exhaustive search would exceed the cardinality cap."""

    def __init__(self, cardinality: int, cap: int):
        super().__init__(
            f"cardinality {cardinality} exceeds the exhaustive-search cap {cap}; "
            f"raise the cap explicitly to proceed"
        )
        self.cardinality = cardinality
        self.cap = cap


@dataclass(frozen=True, order=True)
class KernelSignature:
    """Class counts of the composed dual maps, one entry (i, j, classes) per
    pair of nontrivial positions i < j."""

    entries: tuple[tuple[int, int, int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, j, c in self.entries}


def composed_assignment(system: LinearDirectSystem, i: int, j: int) -> tuple[int, ...]:
    """Composite dual map from the atoms at position j down to position i."""
    if i > j:
        raise ValueError("need i <= j")
    exps = system.shape.exponents
    out = []
    for atom in range(exps[j]):
        a = atom
        for k in range(j - 1, i - 1, -1):
            a = system.maps[k].assignment[a]
        out.append(a)
    return tuple(out)


def kernel_signature(system: LinearDirectSystem) -> KernelSignature:
    """Signature over every pair of nontrivial positions: the number of
    distinct values the composed dual map takes on the upper atoms."""
    positive = len(system.shape.positive_prefix)
    entries = []
    for i in range(positive):
        for j in range(i + 1, positive):
            entries.append((i, j, len(set(composed_assignment(system, i, j)))))
    return KernelSignature(entries=tuple(entries))


def _component_bijections(shape: Shape) -> Iterable[dict]:
    """Position-preserving candidate bijections: one atom permutation per
    component, extended to elements."""
    exps = shape.exponents
    per_component = [itertools.permutations(range(e)) for e in exps]
    for perms in itertools.product(*per_component):
        mapping = {}
        for p, perm in enumerate(perms):
            for bits in range(1 << exps[p]):
                image = 0
                for b in range(exps[p]):
                    if (bits >> b) & 1:
                        image |= 1 << perm[b]
                mapping[(p, bits)] = (p, image)
        yield mapping


def _preserves_operations(A: PlonkaAlgebra, B: PlonkaAlgebra, f: dict) -> bool:
    if f[A.zero] != B.zero or f[A.one] != B.one:
        return False
    elems = A.elements()
    for x in elems:
        if f[A.neg(x)] != B.neg(f[x]):
            return False
    for x in elems:
        for y in elems:
            if f[A.join(x, y)] != B.join(f[x], f[y]):
                return False
            if f[A.meet(x, y)] != B.meet(f[x], f[y]):
                return False
    return True


def are_isomorphic_bruteforce(A: PlonkaAlgebra, B: PlonkaAlgebra,
                              unrestricted: bool = False) -> bool:
    """Exhaustive isomorphism test.

    The default search prunes by shape and restricts candidates to
    position-preserving maps made of per-component Boolean isomorphisms
    (sound for a shared linearly ordered chain, whose only automorphism is
    the identity).  The unrestricted mode audits that restriction by trying
    every bijection of the universes, with no shape pruning; keep it to very
    small algebras.
    """
    if unrestricted:
        elems_a = A.elements()
        if len(elems_a) != len(B.elements()):
            return False
        for image in itertools.permutations(B.elements()):
            f = dict(zip(elems_a, image))
            if _preserves_operations(A, B, f):
                return True
        return False
    if A.shape != B.shape:
        return False
    for f in _component_bijections(A.shape):
        if _preserves_operations(A, B, f):
            return True
    return False


def classify_systems(shape: Shape, cap: int = DEFAULT_CAP
                     ) -> list[list[LinearDirectSystem]]:
    """Partition all systems over the shape into isomorphism classes.

    Classes come back ordered by their canonical representative key
    (lexicographically least kernel signature, then least serialized
    system); members keep enumeration order.
    """
    if shape.cardinality > cap:
        raise CapExceededError(shape.cardinality, cap)
    classes: list[tuple[list[LinearDirectSystem], PlonkaAlgebra]] = []
    for system in enumerate_systems(shape):
        alg = PlonkaAlgebra(system)
        for members, rep_alg in classes:
            if are_isomorphic_bruteforce(alg, rep_alg):
                members.append(system)
                break
        else:
            classes.append(([system], alg))

    def class_key(members: list[LinearDirectSystem]):
        return min((kernel_signature(s), s.serialize()) for s in members)

    return sorted((members for members, _ in classes), key=class_key)


def class_representative(members: list[LinearDirectSystem]) -> LinearDirectSystem:
    """Canonical member: least kernel signature, then least serialization."""
    return min(members, key=lambda s: (kernel_signature(s), s.serialize()))


def iso_classes_of_shape(shape: Shape, cap: int = DEFAULT_CAP) -> int:
    """Number of isomorphism classes over one shape, by brute force."""
    return len(classify_systems(shape, cap=cap))


def iso_classes_total(n: int, cap: int = DEFAULT_CAP) -> int:
    """Brute-force class count across all shapes of cardinality n.

    Different shapes never merge: the class count is a plain sum over
    shapes (cross-shape pairs are spot-checked by cross_validate).
    """
    if n > cap:
        raise CapExceededError(n, cap)
    return sum(iso_classes_of_shape(shape, cap=cap) for shape in all_shapes(n))


@dataclass
class ValidationReport:
    """Outcome of cross_validate: per-n totals and any lemma/axiom/linearity
    violations, each with full witnesses."""

    n_max: int
    cap: int
    totals: list[dict] = field(default_factory=list)
    lemma_checks: int = 0
    lemma_failures: list[dict] = field(default_factory=list)
    axiom_failures: list[dict] = field(default_factory=list)
    linearity_failures: list[dict] = field(default_factory=list)
    cross_shape_checks: int = 0
    cross_shape_failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            all(row["ok"] for row in self.totals)
            and not self.lemma_failures
            and not self.axiom_failures
            and not self.linearity_failures
            and not self.cross_shape_failures
        )

    def to_json_obj(self) -> dict:
        return {
            "n_max": self.n_max,
            "cap": self.cap,
            "ok": self.ok,
            "totals": self.totals,
            "lemma_checks": self.lemma_checks,
            "lemma_failures": self.lemma_failures,
            "axiom_failures": self.axiom_failures,
            "linearity_failures": self.linearity_failures,
            "cross_shape_checks": self.cross_shape_checks,
            "cross_shape_failures": self.cross_shape_failures,
        }


def cross_validate(n_max: int, cap: int = DEFAULT_CAP) -> ValidationReport:
    """Certify the formula counts against brute force for every n <= n_max.

    Checks, with witnesses on any violation:
      - total classes by brute force equal the enumeration-path count;
      - same-shape isomorphism coincides with kernel-signature equality,
        in both directions, over every pair of systems;
      - every constructed algebra satisfies the eight identities and has
        linearly ordered positive elements;
      - sampled algebras of equal cardinality but different shapes are not
        isomorphic (unrestricted search, so only at very small n).
    """
    if n_max > cap:
        raise CapExceededError(n_max, cap)
    report = ValidationReport(n_max=n_max, cap=cap)
    for n in range(1, n_max + 1):
        formula = libsl_count(n)
        oracle_total = 0
        shape_reps: list[tuple[Shape, LinearDirectSystem]] = []
        for shape in all_shapes(n):
            systems = list(enumerate_systems(shape))
            algebras = [PlonkaAlgebra(s) for s in systems]
            signatures = [kernel_signature(s) for s in systems]
            for alg, system in zip(algebras, systems):
                axioms = check_ibsl_axioms(alg)
                if not axioms.ok:
                    report.axiom_failures.append({
                        "n": n,
                        "system": system.serialize(),
                        "failures": [
                            {"axiom": a, "witness": list(w)} for a, w in axioms.failures
                        ],
                    })
                if not is_linearly_ordered(alg):
                    report.linearity_failures.append({
                        "n": n,
                        "system": system.serialize(),
                    })
            for a in range(len(systems)):
                for b in range(a + 1, len(systems)):
                    report.lemma_checks += 1
                    iso = are_isomorphic_bruteforce(algebras[a], algebras[b])
                    same_sig = signatures[a] == signatures[b]
                    if iso != same_sig:
                        report.lemma_failures.append({
                            "n": n,
                            "shape": str(shape),
                            "system_a": systems[a].serialize(),
                            "system_b": systems[b].serialize(),
                            "isomorphic": iso,
                            "signature_a": signatures[a].entries,
                            "signature_b": signatures[b].entries,
                        })
            oracle_total += len(classify_systems(shape, cap=cap))
            shape_reps.append((shape, systems[0]))
        if n <= UNRESTRICTED_SAMPLE_MAX:
            # different shapes must never merge; sample consecutive pairs with
            # the fully unrestricted search (shape pruning would be circular)
            for (shape_a, sys_a), (shape_b, sys_b) in zip(shape_reps, shape_reps[1:]):
                report.cross_shape_checks += 1
                if are_isomorphic_bruteforce(PlonkaAlgebra(sys_a), PlonkaAlgebra(sys_b),
                                             unrestricted=True):
                    report.cross_shape_failures.append({
                        "n": n,
                        "shape_a": str(shape_a),
                        "shape_b": str(shape_b),
                        "system_a": sys_a.serialize(),
                        "system_b": sys_b.serialize(),
                    })
        report.totals.append({
            "n": n,
            "formula": formula,
            "oracle": oracle_total,
            "ok": formula == oracle_total,
        })
    return report
