"""The dense-matrix route: Berkowitz characteristic polynomials and exact roots."""

import random
from fractions import Fraction

import pytest

from shiftspec.errors import RootSearchOverflowError, ZeroPolynomialError
from shiftspec.fields import PrimeField, RationalField
from shiftspec.graphs import FunctionalGraph
from shiftspec.oracle import (
    DenseMatrix,
    Polynomial,
    block_check,
    build_matrix,
    char_poly,
    char_poly_by_minors,
    oracle_spectrum,
    roots_in_field,
    verify_eigenpair,
)
from shiftspec.shifts import (
    EigenPair,
    WeightedShift,
    apply,
    eigenvector,
    spectrum,
    zero_in_spectrum,
)

GF7 = PrimeField(7)
Q = RationalField()


def make(field, phi, weights):
    return WeightedShift(FunctionalGraph(phi), field, weights)


def random_shift(rng, field, n, zero_rate=0.2):
    phi = [rng.randrange(n) for _ in range(n)]
    weights = []
    for _ in range(n):
        if rng.random() < zero_rate:
            weights.append(0)
        elif isinstance(field, PrimeField):
            weights.append(rng.randrange(1, field.p))
        else:
            weights.append(Fraction(rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]), rng.choice([1, 2])))
    return make(field, phi, weights)


def random_matrix(rng, field, n):
    if isinstance(field, PrimeField):
        rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
    else:
        rows = [
            [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
            for _ in range(n)
        ]
    return DenseMatrix(field, rows)


def test_polynomial_canonical_form():
    p = Polynomial(GF7, [0, 4, 1, 0, 0])
    assert p.degree == 2
    assert p.raw_coefficients() == (0, 4, 1)
    assert Polynomial(GF7, [0, 0]).is_zero
    assert Polynomial(GF7, []).degree == -1
    assert p.evaluate(GF7.element(3)) == GF7.element(3 * 4 + 9)


def test_build_matrix_hand_cases():
    m = build_matrix(make(GF7, [0, 1], [2, 3]))
    assert [[e.value for e in row] for row in m.rows] == [[2, 0], [0, 3]]
    m = build_matrix(make(GF7, [1, 1], [5, 3]))
    assert [[e.value for e in row] for row in m.rows] == [[0, 5], [0, 3]]
    m = build_matrix(make(GF7, [1, 2, 0], [1, 1, 1]))
    assert [[e.value for e in row] for row in m.rows] == [
        [0, 1, 0],
        [0, 0, 1],
        [1, 0, 0],
    ]


def test_build_matrix_respects_apply():
    rng = random.Random(63001)
    for field in (GF7, Q):
        for _ in range(30):
            s = random_shift(rng, field, rng.randint(1, 6))
            m = build_matrix(s)
            for _ in range(10):
                if isinstance(field, PrimeField):
                    x = [rng.randrange(field.p) for _ in range(s.n)]
                else:
                    x = [Fraction(rng.randint(-5, 5)) for _ in range(s.n)]
                assert m.matvec(x) == apply(s, x)


def test_char_poly_hand_cases():
    m = DenseMatrix(GF7, [[0, 5], [0, 3]])
    assert char_poly(m).raw_coefficients() == (0, 4, 1)  # x^2 - 3x mod 7
    zero3 = DenseMatrix(Q, [[0] * 3 for _ in range(3)])
    assert char_poly(zero3).raw_coefficients() == (0, 0, 0, 1)
    diag = DenseMatrix(Q, [[2, 0], [0, 5]])
    assert char_poly(diag).raw_coefficients() == (10, -7, 1)


def test_char_poly_is_monic_of_degree_n():
    rng = random.Random(63002)
    for field in (PrimeField(2), PrimeField(3), GF7, Q):
        for _ in range(40):
            n = rng.randint(1, 6)
            m = random_matrix(rng, field, n)
            p = char_poly(m)
            assert p.degree == n
            assert p.coefficients[-1] == field.one()


def test_char_poly_matches_cofactor_expansion():
    rng = random.Random(63003)
    for field in (PrimeField(2), PrimeField(3), GF7, Q):
        for _ in range(60):
            n = rng.randint(1, 5)
            m = random_matrix(rng, field, n)
            assert char_poly(m) == char_poly_by_minors(m)


def test_single_cycle_char_poly_shape():
    # one cycle of length L with product c inside n nodes: x^n - c x^(n-L)
    rng = random.Random(63004)
    for _ in range(60):
        cycle_len = rng.randint(1, 4)
        tail = rng.randint(0, 3)
        n = cycle_len + tail
        phi = [(i + 1) % cycle_len for i in range(cycle_len)]
        for t in range(tail):
            phi.append(rng.randrange(cycle_len + t))
        weights = [rng.randrange(1, 7) for _ in range(n)]
        s = make(GF7, phi, weights)
        product = GF7.one()
        for v in range(cycle_len):
            product = product * s.weights[v]
        expected = [GF7.zero()] * (n + 1)
        expected[n] = GF7.one()
        expected[n - cycle_len] = -product
        assert char_poly(build_matrix(s)) == Polynomial(GF7, expected)


def test_roots_hand_cases():
    assert {r.value for r in roots_in_field(Polynomial(GF7, [0, 4, 1]), GF7)} == {0, 3}
    assert {r.value for r in roots_in_field(Polynomial(Q, [-16, 0, 1]), Q)} == {4, -4}
    assert roots_in_field(Polynomial(Q, [1, 0, 1]), Q) == frozenset()
    assert roots_in_field(Polynomial(Q, [5]), Q) == frozenset()
    with pytest.raises(ZeroPolynomialError):
        roots_in_field(Polynomial(Q, []), Q)


def test_rational_roots_handle_fractions_and_x_powers():
    # (x - 2/3)(x + 5)x^2, scaled by 1/6
    poly = Polynomial(
        Q,
        [
            0,
            0,
            Fraction(-10, 18),
            Fraction(13, 18),
            Fraction(1, 6),
        ],
    )
    got = {r.value for r in roots_in_field(poly, Q)}
    assert got == {0, Fraction(2, 3), -5}


def test_rational_root_search_has_a_magnitude_cutoff():
    big = (1 << 64) + 1
    with pytest.raises(RootSearchOverflowError):
        roots_in_field(Polynomial(Q, [big, 0, 1]), Q)


def test_roots_match_brute_force_over_small_fields():
    rng = random.Random(63005)
    for p in (2, 3, 5, 7):
        field = PrimeField(p)
        for _ in range(50):
            coeffs = [rng.randrange(p) for _ in range(rng.randint(1, 6))]
            poly = Polynomial(field, coeffs)
            if poly.is_zero:
                continue
            got = roots_in_field(poly, field)
            expected = frozenset(
                e for e in field.elements() if poly.evaluate(e) == field.zero()
            )
            assert got == expected


def test_oracle_spectrum_hand_cases():
    assert {r.value for r in oracle_spectrum(make(GF7, [1, 2, 0], [3, 1, 2]))} == {3, 5, 6}
    assert {r.value for r in oracle_spectrum(make(Q, [1, 0], [0, 5]))} == {0}
    got = oracle_spectrum(make(Q, [0, 1, 2], [2, 3, 2]))
    assert {r.value for r in got} == {2, 3}


def test_char_poly_vanishes_on_oracle_spectrum():
    rng = random.Random(63006)
    for field in (GF7, Q):
        for _ in range(60):
            s = random_shift(rng, field, rng.randint(1, 6))
            poly = char_poly(build_matrix(s))
            for r in oracle_spectrum(s):
                assert poly.evaluate(r) == field.zero()


def test_constant_term_vanishes_iff_zero_in_spectrum():
    rng = random.Random(63007)
    for field in (GF7, Q):
        for _ in range(80):
            s = random_shift(rng, field, rng.randint(1, 6))
            constant = char_poly(build_matrix(s)).coefficients[0]
            assert (constant == field.zero()) == zero_in_spectrum(s)


def test_verify_eigenpair_hand_cases():
    s = make(GF7, [1, 1], [5, 3])
    good = EigenPair(GF7.element(3), {0: GF7.element(4), 1: GF7.one()}, 0)
    assert verify_eigenpair(s, good)
    bad_value = EigenPair(GF7.element(2), {0: GF7.element(4), 1: GF7.one()}, 0)
    assert not verify_eigenpair(s, bad_value)
    zero_vec = EigenPair(GF7.element(3), {}, 0)
    assert not verify_eigenpair(s, zero_vec)


def test_differential_spectrum_agreement():
    # master property: the closed form equals the matrix route exactly
    rng = random.Random(63008)
    for field in (PrimeField(2), PrimeField(3), GF7, Q):
        for _ in range(150):
            s = random_shift(rng, field, rng.randint(1, 8), zero_rate=0.25)
            spec = spectrum(s)
            expected = set(oracle_spectrum(s))
            got = set(spec.eigenvalues)
            if spec.includes_zero:
                got.add(field.zero())
            assert got == expected


def test_engine_eigenvectors_pass_oracle_verification():
    rng = random.Random(63009)
    for _ in range(100):
        s = random_shift(rng, GF7, rng.randint(1, 7))
        spec = spectrum(s)
        targets = list(spec.eigenvalues)
        if spec.includes_zero:
            targets.append(GF7.zero())
        for value in targets:
            assert verify_eigenpair(s, eigenvector(s, value))


def test_block_check_hand_cases():
    assert block_check(make(GF7, [0, 1], [1, 1]), 2)
    assert block_check(make(GF7, [1, 2, 0], [3, 1, 2]), 2)
    assert block_check(make(GF7, [1, 1], [5, 3]), 3)
    with pytest.raises(ValueError):
        block_check(make(GF7, [0], [1]), 1)


def test_block_check_on_random_instances():
    rng = random.Random(63010)
    for _ in range(100):
        field = rng.choice((GF7, Q))
        s = random_shift(rng, field, rng.randint(1, 5))
        assert block_check(s, 2)
