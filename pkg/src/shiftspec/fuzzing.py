"""Seeded differential fuzzing: closed form versus matrix oracle, instance by instance.

Reproducibility contract: the generator is Python's ``random.Random``
(Mersenne Twister, MT19937), seeded once per run and consumed sequentially
across fields in the order given.  Identical configurations therefore
produce identical instance streams on any Python.  Failure records always
embed the full instance, never just the seed, so a reproducer survives even
a generator change.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, PrimeField
from .graphs import FunctionalGraph, image
from .instances import instance_to_dict
from .oracle import build_matrix, char_poly, roots_in_field, verify_eigenpair
from .shifts import WeightedShift, eigenvector, spectrum

RATIONAL_NUMERATORS = (-4, -3, -2, -1, 1, 2, 3, 4)
RATIONAL_DENOMINATORS = (1, 2)


@dataclass(frozen=True)
class FuzzConfig:
    """A deterministic fuzzing run: same config, same instances, same verdicts."""

    seed: int
    count: int
    fields: tuple[Field, ...]
    max_n: int = 8
    zero_rate: float = 0.25

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if not 1 <= self.max_n <= 12:
            raise ValueError("max_n must be between 1 and 12")
        if not 0.0 <= self.zero_rate <= 1.0:
            raise ValueError("zero_rate must be a probability")
        if not self.fields:
            raise ValueError("at least one field is required")


@dataclass(frozen=True)
class FuzzFailure:
    index: int
    instance: dict
    problems: tuple[str, ...]


@dataclass(frozen=True)
class FuzzResult:
    total: int
    failures: tuple[FuzzFailure, ...]

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_weight(rng: random.Random, field: Field, zero_rate: float):
    """One weight: zero with the given rate, else uniform over a small pool.

    The rational pool is numerators -4..4 over denominators 1..2, kept small
    so characteristic polynomial coefficients stay smooth and the rational
    root search stays far below its overflow cutoff.
    """
    if rng.random() < zero_rate:
        return field.zero()
    if isinstance(field, PrimeField):
        return field.element(rng.randrange(1, field.p))
    return field.element(
        Fraction(rng.choice(RATIONAL_NUMERATORS), rng.choice(RATIONAL_DENOMINATORS))
    )


def random_finite_shift(
    rng: random.Random, field: Field, max_n: int, zero_rate: float
) -> WeightedShift:
    """Uniform random self-map on [1, max_n] nodes with random weights."""
    n = rng.randint(1, max_n)
    phi = [rng.randrange(n) for _ in range(n)]
    weights = [random_weight(rng, field, zero_rate) for _ in range(n)]
    return WeightedShift(FunctionalGraph(phi), field, weights)


def check_shift(shift: WeightedShift) -> list[str]:
    """Every per-instance check the harness runs; empty list means pass.

    1. the closed-form spectrum equals the in-field roots of the
       characteristic polynomial, zero membership included;
    2. zero membership, non-surjectivity of phi off the zero weights, and a
       vanishing constant term agree pairwise;
    3. every explicit eigenvalue yields a verified eigenvector whose anchor
       coordinate is exactly 1 (and a verified kernel vector when 0 is in).
    """
    problems = []
    field = shift.field
    spec = spectrum(shift)
    poly = char_poly(build_matrix(shift))
    oracle_set = roots_in_field(poly, field)
    engine_set = set(spec.eigenvalues)
    if spec.includes_zero:
        engine_set.add(field.zero())
    if engine_set != oracle_set:
        engine_text = sorted(str(v) for v in engine_set)
        oracle_text = sorted(str(v) for v in oracle_set)
        problems.append(f"spectrum mismatch: engine {engine_text} oracle {oracle_text}")

    not_onto = image(shift.graph, set(range(shift.n)) - shift.zero_set) != frozenset(
        range(shift.n)
    )
    constant_zero = poly.coefficients[0] == field.zero()
    if not (spec.includes_zero == not_onto == constant_zero):
        problems.append(
            f"zero-membership triangle broke: includes_zero={spec.includes_zero} "
            f"not_onto={not_onto} constant_zero={constant_zero}"
        )

    targets = list(spec.eigenvalues)
    if spec.includes_zero:
        targets.append(field.zero())
    for value in targets:
        try:
            pair = eigenvector(shift, value)
        except Exception as exc:  # noqa: BLE001 - report, do not crash the run
            problems.append(f"eigenvector for {value} raised {exc!r}")
            continue
        if not verify_eigenpair(shift, pair):
            problems.append(f"eigenvector for {value} failed verification")
        if value != field.zero():
            wit = spec.witness_for(value)
            theta = shift.analysis.cycles[wit.cycle_id][0][0]
            if pair.vector.get(theta) != field.one():
                problems.append(f"anchor of eigenvector for {value} is not 1")
    return problems


def run_fuzz(config: FuzzConfig) -> FuzzResult:
    """The full deterministic sweep: count instances per field, in order."""
    rng = random.Random(config.seed)
    failures = []
    index = 0
    for field in config.fields:
        for _ in range(config.count):
            shift = random_finite_shift(rng, field, config.max_n, config.zero_rate)
            problems = check_shift(shift)
            if problems:
                failures.append(
                    FuzzFailure(index, instance_to_dict(shift), tuple(problems))
                )
            index += 1
    return FuzzResult(total=index, failures=tuple(failures))
