"""Brute-force oracle: kernel signatures, isomorphism search, validation."""

from __future__ import annotations

import pytest

import libsl.counting
from libsl import (
    AtomMap,
    CapExceededError,
    LinearDirectSystem,
    PlonkaAlgebra,
    Shape,
    all_shapes,
    are_isomorphic_bruteforce,
    cross_validate,
    enumerate_systems,
    iso_classes_of_shape,
    iso_classes_total,
    kernel_signature,
    libsl_count,
)
from libsl.oracle import class_representative, classify_systems, composed_assignment


def system_22(assignment: tuple[int, int]) -> LinearDirectSystem:
    return LinearDirectSystem(Shape((2, 2)), (AtomMap(2, 2, assignment),))


def test_kernel_signature_injective_vs_constant():
    assert kernel_signature(system_22((0, 1))).entries == ((0, 1, 2),)
    assert kernel_signature(system_22((0, 0))).entries == ((0, 1, 1),)


def test_kernel_signature_skips_trivial_components():
    (system,) = enumerate_systems(Shape((2, 0, 0)))
    assert kernel_signature(system).entries == ()


def test_composed_assignment_chain():
    # injective then constant: the composite is constant
    system = LinearDirectSystem(
        Shape((2, 2, 2)),
        (AtomMap(2, 2, (0, 1)), AtomMap(2, 2, (0, 0))),
    )
    assert composed_assignment(system, 0, 1) == (0, 1)
    assert composed_assignment(system, 1, 2) == (0, 0)
    assert composed_assignment(system, 0, 2) == (0, 0)
    assert kernel_signature(system).entries == ((0, 1, 2), (0, 2, 1), (1, 2, 1))


def test_isomorphic_pair_from_two_maps_over_4_2():
    # the two systems of the 4-then-2 chain differ only in which bottom atom
    # the upper atom picks; swapping the bottom atoms is an isomorphism
    shape = Shape((2, 1))
    s0, s1 = enumerate_systems(shape)
    assert are_isomorphic_bruteforce(PlonkaAlgebra(s0), PlonkaAlgebra(s1))


def test_self_isomorphic():
    alg = PlonkaAlgebra(system_22((0, 1)))
    assert are_isomorphic_bruteforce(alg, alg)


def test_distinct_signatures_not_isomorphic():
    a = PlonkaAlgebra(system_22((0, 1)))
    b = PlonkaAlgebra(system_22((0, 0)))
    assert not are_isomorphic_bruteforce(a, b)


def test_restricted_search_matches_unrestricted():
    for shape in (Shape((2, 1)), Shape((1, 1, 1)), Shape((2, 0)), Shape((1, 2))):
        algebras = [PlonkaAlgebra(s) for s in enumerate_systems(shape)]
        for x in algebras:
            for y in algebras:
                assert are_isomorphic_bruteforce(x, y) == \
                    are_isomorphic_bruteforce(x, y, unrestricted=True)


def test_iso_classes_of_shape_examples():
    assert iso_classes_of_shape(Shape((2, 2))) == 2
    assert iso_classes_of_shape(Shape((1, 0))) == 1
    assert iso_classes_of_shape(Shape((1, 1, 1))) == 1


def test_cap_refusal():
    with pytest.raises(CapExceededError):
        iso_classes_of_shape(Shape((4,)), cap=12)
    with pytest.raises(CapExceededError):
        iso_classes_total(13, cap=12)
    with pytest.raises(CapExceededError):
        cross_validate(13, cap=12)
    assert iso_classes_of_shape(Shape((4,)), cap=16) == 1


def test_iso_classes_total_examples():
    assert iso_classes_total(1) == 1
    assert iso_classes_total(6) == 7
    assert iso_classes_total(8) == 14


def test_classify_representatives_deterministic():
    classes = classify_systems(Shape((2, 2)))
    assert [len(c) for c in classes] == [2, 2]
    reps = [class_representative(c) for c in classes]
    assert [kernel_signature(r).entries for r in reps] == [((0, 1, 1),), ((0, 1, 2),)]


def test_cross_validate_passes():
    report = cross_validate(6)
    assert report.ok
    assert [row["formula"] for row in report.totals] == [1, 2, 2, 4, 4, 7]
    assert report.lemma_checks > 0
    assert report.cross_shape_checks > 0
    obj = report.to_json_obj()
    assert obj["ok"] is True and obj["n_max"] == 6


def test_cross_validate_detects_wrong_pair_count(monkeypatch):
    # breaking min into max must surface as totals mismatches; the first
    # affected cardinality is 6 (the 4-then-2 chain) and 8 is affected too
    monkeypatch.setattr(libsl.counting, "pair_count", lambda a, b: max(a, b))
    report = cross_validate(8)
    assert not report.ok
    bad = {row["n"] for row in report.totals if not row["ok"]}
    assert 8 in bad and 6 in bad
    assert all(row["ok"] for row in report.totals if row["n"] <= 5)


def test_trivial_top_caveat():
    # with trivial components the signature criterion only works because all
    # maps touching them are forced; an index map swapping the two trivial
    # tops satisfies the kernel-class condition yet is not even a
    # homomorphism of the index chain
    (system,) = enumerate_systems(Shape((1, 0, 0)))
    assert kernel_signature(system).entries == ()  # nothing nontrivial to compare

    def preserves_chain_join(phi: dict[int, int]) -> bool:
        return all(
            phi[max(i, j)] == max(phi[i], phi[j]) for i in range(3) for j in range(3)
        )

    swap_tops = {0: 0, 1: 2, 2: 1}
    assert not preserves_chain_join(swap_tops)
    assert preserves_chain_join({0: 0, 1: 1, 2: 2})


def test_lemma_on_nontrivial_shapes_up_to_10():
    shapes = []
    for n in range(2, 11):
        shapes += [s for s in all_shapes(n) if 0 not in s.exponents]
    checked = 0
    for shape in shapes:
        systems = list(enumerate_systems(shape))
        algebras = [PlonkaAlgebra(s) for s in systems]
        signatures = [kernel_signature(s) for s in systems]
        for i in range(len(systems)):
            for j in range(i + 1, len(systems)):
                checked += 1
                assert are_isomorphic_bruteforce(algebras[i], algebras[j]) == (
                    signatures[i] == signatures[j]
                )
    assert checked > 40


def test_formula_matches_oracle_small():
    for n in range(1, 9):
        assert iso_classes_total(n) == libsl_count(n)
