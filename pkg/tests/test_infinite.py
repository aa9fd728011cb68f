"""Co-finite successor presentations: classification, spectra, window vectors."""

import random
from fractions import Fraction

import pytest

from shiftspec.errors import (
    WindowTooSmallError,
    ZeroEigenvalueError,
    ZeroTailWeightError,
)
from shiftspec.fields import PrimeField, RationalField
from shiftspec.graphs import PointClass
from shiftspec.infinite import (
    CoFinitePresentation,
    WindowVector,
    classify_presentation,
    core_restriction,
    infinite_spectrum,
    kernel_free_index,
    presentation_report,
    wandering_eigenvector_window,
    window_defects,
    window_verify,
)
from shiftspec.shifts import spectrum

GF7 = PrimeField(7)
Q = RationalField()


def make(field, boundary, phi_table, weight_table, tail_weight):
    return CoFinitePresentation(field, boundary, phi_table, weight_table, tail_weight)


def random_presentation(rng, field, max_boundary=4, zero_rate=0.0, tail_zero=False):
    boundary = rng.randint(0, max_boundary)
    phi_table = [rng.randrange(0, boundary + 4) for _ in range(boundary)]
    weights = []
    for _ in range(boundary):
        if rng.random() < zero_rate:
            weights.append(field.zero())
        elif isinstance(field, PrimeField):
            weights.append(field.element(rng.randrange(1, field.p)))
        else:
            weights.append(
                field.element(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2])))
            )
    if tail_zero:
        tail = field.zero()
    elif isinstance(field, PrimeField):
        tail = field.element(rng.randrange(1, field.p))
    else:
        tail = field.element(Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2])))
    return make(field, boundary, phi_table, weights, tail)


def random_nonzero(rng, field):
    if isinstance(field, PrimeField):
        return field.element(rng.randrange(1, field.p))
    return field.element(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2])))


def test_presentation_validation():
    with pytest.raises(ValueError):
        make(Q, -1, [], [], 1)
    with pytest.raises(ValueError):
        make(Q, 2, [0], [1, 1], 1)
    with pytest.raises(ValueError):
        make(Q, 1, [-2], [1], 1)
    with pytest.raises(ValueError):
        make(Q, 1, [0], [1, 1], 1)


def test_phi_and_weight_lookup():
    pres = make(GF7, 2, [1, 0], [5, 3], 2)
    assert [pres.phi(k) for k in range(5)] == [1, 0, 3, 4, 5]
    assert [pres.weight(k).value for k in range(4)] == [5, 3, 2, 2]


def test_classification_pure_successor():
    summary = classify_presentation(make(Q, 0, [], [], 1))
    assert summary.table_classes == ()
    assert not summary.wandering_absorbed
    assert summary.branch == "W ⊄ ↓Z, Γ ≠ φ(Γ∖Z)"


def test_classification_two_cycle_below_boundary():
    summary = classify_presentation(make(Q, 2, [1, 0], [1, 1], 1))
    assert summary.table_classes == (PointClass.PERIODIC, PointClass.PERIODIC)
    assert not summary.wandering_absorbed


def test_classification_jump_into_tail():
    summary = classify_presentation(make(Q, 1, [5], [1], 1))
    assert summary.table_classes == (PointClass.WANDERING,)


def test_classification_quasi_periodic_table_node():
    summary = classify_presentation(make(Q, 3, [1, 2, 1], [1, 1, 1], 1))
    assert summary.table_classes == (
        PointClass.QUASI_PERIODIC,
        PointClass.PERIODIC,
        PointClass.PERIODIC,
    )


def test_classifier_matches_brute_force_orbits():
    rng = random.Random(74001)
    for _ in range(200):
        pres = random_presentation(rng, GF7)
        summary = classify_presentation(pres)
        for k in range(pres.boundary):
            node, escaped = k, False
            for _ in range(pres.boundary + 64):
                node = pres.phi(node)
                if node >= pres.boundary:
                    escaped = True
                    break
            wandering = summary.table_classes[k] is PointClass.WANDERING
            assert wandering == escaped


def test_wandering_absorbed_iff_zero_tail():
    assert classify_presentation(make(Q, 0, [], [], 0)).wandering_absorbed
    assert not classify_presentation(make(Q, 0, [], [], 5)).wandering_absorbed


def test_spectrum_of_classical_shift_is_whole_field():
    spec = infinite_spectrum(make(Q, 0, [], [], 1))
    assert spec.all_nonzero
    assert spec.includes_zero
    assert spec.eigenvalues == ()
    assert spec.contains(Q.parse("7/3"))
    assert spec.contains(Q.zero())


def test_spectrum_image_check_spots_uncovered_index():
    # image is {0, 1} and the tail covers [3, inf); 2 is missed
    spec = infinite_spectrum(make(Q, 2, [1, 0], [1, 1], 1))
    assert spec.all_nonzero and spec.includes_zero
    assert kernel_free_index(make(Q, 2, [1, 0], [1, 1], 1)) == 2


def test_zero_is_always_an_eigenvalue_by_pigeonhole():
    # the table has B slots but must cover B+1 indices, so some index
    # in [0, B] always escapes the image and a kernel vector sits there
    rng = random.Random(74010)
    for _ in range(100):
        pres = random_presentation(rng, GF7, zero_rate=0.2)
        spec = infinite_spectrum(pres)
        assert spec.includes_zero
        free = kernel_free_index(pres)
        assert free is not None
        if pres.tail_weight != GF7.zero():
            assert 0 <= free <= pres.boundary


def test_zero_tail_spectrum_comes_from_table_cycles():
    spec = infinite_spectrum(make(Q, 2, [1, 0], [2, 3], 0))
    assert spec.includes_zero
    assert not spec.all_nonzero
    assert spec.eigenvalues == ()  # 6 is not a rational square
    assert not spec.is_empty
    spec = infinite_spectrum(make(GF7, 2, [1, 0], [2, 3], 0))
    assert spec.eigenvalues == ()  # 6 is not a square mod 7 either
    spec = infinite_spectrum(make(PrimeField(5), 2, [1, 0], [2, 3], 0))
    assert {e.value for e in spec.eigenvalues} == {1, 4}  # r^2 = 6 = 1 mod 5


def test_zero_tail_spectrum_matches_core_engine():
    rng = random.Random(74002)
    for field in (GF7, Q):
        for _ in range(150):
            pres = random_presentation(rng, field, zero_rate=0.25, tail_zero=True)
            spec = infinite_spectrum(pres)
            assert spec.includes_zero
            core = core_restriction(pres)
            if core is None:
                assert spec.eigenvalues == ()
                continue
            finite_spec = spectrum(core[0])
            assert spec.eigenvalues == finite_spec.eigenvalues
            assert spec.witnesses == finite_spec.witnesses


def test_window_vector_of_classical_shift_is_geometric():
    pres = make(Q, 0, [], [], 1)
    r = Q.element(2)
    vec = wandering_eigenvector_window(pres, r, 8)
    assert [v.value for v in vec.values] == [1, 2, 4, 8, 16, 32, 64, 128]
    assert vec.anchor == 0
    assert window_verify(pres, r, vec)


def test_window_vector_hand_case_with_table_jump():
    pres = make(Q, 1, [3], [2], 1)
    vec = wandering_eigenvector_window(pres, Q.one(), 16)
    assert vec.values[0] == Q.element(2)
    assert all(vec.values[n] == Q.one() for n in range(1, 16))
    assert window_verify(pres, Q.one(), vec)


def test_window_vector_anchor_entry_is_one():
    rng = random.Random(74003)
    for field in (GF7, Q):
        for _ in range(100):
            pres = random_presentation(rng, field)
            r = random_nonzero(rng, field)
            vec = wandering_eigenvector_window(pres, r, 16)
            assert vec.values[pres.boundary] == field.one()


def test_window_vector_is_zero_off_the_anchor_class():
    # node 0 is a fixed point below the boundary, disjoint from the tail
    pres = make(GF7, 2, [0, 4], [3, 5], 1)
    vec = wandering_eigenvector_window(pres, GF7.element(2), 12)
    assert vec.values[0] == GF7.zero()
    assert vec.values[1] != GF7.zero()
    assert window_verify(pres, GF7.element(2), vec)


def test_window_construction_rejects_bad_inputs():
    pres = make(Q, 1, [3], [2], 1)
    with pytest.raises(ZeroEigenvalueError):
        wandering_eigenvector_window(pres, Q.zero(), 8)
    with pytest.raises(WindowTooSmallError):
        wandering_eigenvector_window(pres, Q.one(), 1)
    with pytest.raises(ZeroTailWeightError):
        wandering_eigenvector_window(make(Q, 1, [3], [2], 0), Q.one(), 8)


def test_random_windows_always_verify():
    rng = random.Random(74004)
    for field in (PrimeField(3), GF7, Q):
        for _ in range(50):
            pres = random_presentation(rng, field, zero_rate=0.15)
            for _ in range(10):
                r = random_nonzero(rng, field)
                for window in (16, 64):
                    vec = wandering_eigenvector_window(pres, r, window)
                    assert window_verify(pres, r, vec)


def test_verification_is_prefix_closed():
    rng = random.Random(74005)
    for _ in range(50):
        pres = random_presentation(rng, Q)
        r = random_nonzero(rng, Q)
        vec = wandering_eigenvector_window(pres, r, 64)
        assert window_verify(pres, r, vec)
        for k in (pres.boundary + 1, 16, 32):
            prefix = WindowVector(k, vec.values[:k], vec.anchor)
            assert window_verify(pres, r, prefix)


def test_perturbed_window_fails_verification():
    pres = make(Q, 0, [], [], 1)
    r = Q.element(3)
    vec = wandering_eigenvector_window(pres, r, 8)
    tampered = list(vec.values)
    tampered[4] = tampered[4] + Q.one()
    bad = WindowVector(8, tuple(tampered), vec.anchor)
    assert not window_verify(pres, r, bad)
    defects = window_defects(pres, r, bad)
    assert defects and {alpha for alpha, _, _ in defects} <= {3, 4}


def test_report_covers_both_tail_kinds():
    wandering = presentation_report(make(Q, 0, [], [], 1), sample_window=4)
    assert wandering["branch"] == "W ⊄ ↓Z, Γ ≠ φ(Γ∖Z)"
    assert wandering["spectrum"]["all_nonzero"]
    assert wandering["spectrum"]["includes_zero"]
    assert wandering["eigenpairs"][0]["value"] == "0"
    assert wandering["eigenpairs"][0]["eigenvector"] == [[0, "1"]]
    assert wandering["sample_window"]["values"] == ["1", "1", "1", "1"]
    assert wandering["sample_window"]["verified"]

    absorbed = presentation_report(make(PrimeField(5), 2, [1, 0], [2, 3], 0))
    assert absorbed["branch"] == "W ⊆ ↓Z, Γ ≠ φ(Γ∖Z)"
    assert absorbed["spectrum"]["eigenvalues"] == ["1", "4"]
    assert [e["value"] for e in absorbed["eigenpairs"]] == ["0", "1", "4"]
    pair = absorbed["eigenpairs"][1]
    assert pair["witness"]["period"] == 2
    assert pair["eigenvector"] == [[0, "1"], [1, "3"]]


def test_report_is_deterministic():
    a = presentation_report(make(GF7, 3, [1, 0, 5], [2, 3, 0], 4), sample_window=8)
    b = presentation_report(make(GF7, 3, [1, 0, 5], [2, 3, 0], 4), sample_window=8)
    assert a == b
