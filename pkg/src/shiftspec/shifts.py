"""Weighted shifts on finite functional graphs and their exact eigenvalues.

A weighted shift sends the coordinate vector (x_a) to (w_a * x_phi(a)).  Its
complete eigenvalue set over an exact field follows from the cycle structure
of phi alone:

* 0 is an eigenvalue exactly when phi restricted to the nonzero-weight nodes
  is not onto (the kernel criterion).
* a nonzero r is an eigenvalue exactly when some cycle avoiding the zero
  closure has weight product equal to r raised to the cycle length.

Eigenvectors are built in closed form from the weight products along each
orbit and verified entrywise before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import NotAnEigenvalueError, VerificationError
from .fields import Field, FieldElement, PrimeField
from .graphs import FunctionalGraph, analyze, down_closure, image


class WeightedShift:
    """The linear map (x_a) -> (w_a * x_phi(a)) with exact field weights.

    Derived structure is computed once at construction: the zero-weight node
    set, its downward closure (all nodes whose orbit hits a zero weight), and
    the full cycle analysis of the graph.
    """

    __slots__ = ("graph", "field", "weights", "zero_set", "down_zero", "analysis")

    def __init__(self, graph: FunctionalGraph, field: Field, weights: Sequence):
        weights = tuple(field.element(w) for w in weights)
        if len(weights) != graph.n:
            raise ValueError(
                f"expected {graph.n} weights, got {len(weights)}"
            )
        self.graph = graph
        self.field = field
        self.weights = weights
        self.zero_set = frozenset(
            a for a, w in enumerate(weights) if w == field.zero()
        )
        self.down_zero = down_closure(graph, self.zero_set)
        self.analysis = analyze(graph)

    @property
    def n(self) -> int:
        return self.graph.n

    def cycle_product(self, cycle_index: int) -> FieldElement:
        """Product of the weights around the given cycle."""
        nodes, _ = self.analysis.cycles[cycle_index]
        out = self.field.one()
        for v in nodes:
            out = out * self.weights[v]
        return out

    def __repr__(self):
        w = ", ".join(str(x) for x in self.weights)
        return f"WeightedShift(phi={list(self.graph.phi)}, w=({w}) over {self.field!r})"


class Witness(NamedTuple):
    """Certificate that an eigenvalue r satisfies r**period == product."""

    cycle_id: int
    period: int
    product: FieldElement


@dataclass(frozen=True)
class SpectrumDescription:
    """The complete eigenvalue set of a shift.

    ``all_nonzero`` means every nonzero field element is an eigenvalue; it is
    only ever produced for infinite index sets with an unabsorbed wandering
    point.  Otherwise ``eigenvalues`` lists the nonzero eigenvalues in
    canonical order with one :class:`Witness` each, and ``includes_zero``
    records the kernel criterion separately.
    """

    includes_zero: bool
    all_nonzero: bool
    eigenvalues: tuple[FieldElement, ...]
    witnesses: tuple[Witness, ...]

    def __post_init__(self):
        if self.all_nonzero and self.eigenvalues:
            raise ValueError("all_nonzero spectra carry no explicit list")
        if len(self.eigenvalues) != len(self.witnesses):
            raise ValueError("one witness per explicit eigenvalue")

    @property
    def is_empty(self) -> bool:
        return not (self.includes_zero or self.all_nonzero or self.eigenvalues)

    def contains(self, value: FieldElement) -> bool:
        if value == value.field.zero():
            return self.includes_zero
        if self.all_nonzero:
            return True
        return value in self.eigenvalues

    def witness_for(self, value: FieldElement) -> Witness:
        for ev, wit in zip(self.eigenvalues, self.witnesses):
            if ev == value:
                return wit
        raise KeyError(f"{value} has no recorded witness")


@dataclass(frozen=True)
class EigenPair:
    """An eigenvalue with an explicit sparse eigenvector.

    The vector's support lives inside a single weak component of the graph;
    coordinates of other components are omitted and are zero.
    """

    eigenvalue: FieldElement
    vector: dict[int, FieldElement]
    witness_component: int


def apply(shift: WeightedShift, x: Sequence) -> tuple[FieldElement, ...]:
    """One application of the shift: result_a = w_a * x_phi(a)."""
    field = shift.field
    vec = tuple(field.element(v) for v in x)
    if len(vec) != shift.n:
        raise ValueError(f"expected a vector of length {shift.n}, got {len(vec)}")
    phi = shift.graph.phi
    return tuple(shift.weights[a] * vec[phi[a]] for a in range(shift.n))


def kernel_support(shift: WeightedShift) -> frozenset[int]:
    """Coordinates free in the kernel: the complement of phi(nonzero-weight nodes).

    The kernel consists of the vectors vanishing on that image, so it is
    nontrivial exactly when this set is nonempty.
    """
    alive = [a for a in range(shift.n) if a not in shift.zero_set]
    return frozenset(range(shift.n)) - image(shift.graph, alive)


def zero_in_spectrum(shift: WeightedShift) -> bool:
    """0 is an eigenvalue iff phi restricted to nonzero-weight nodes is not onto."""
    return bool(kernel_support(shift))


def spectrum(shift: WeightedShift) -> SpectrumDescription:
    """The complete eigenvalue set, from the closed-form classification.

    On a finite index set the nonzero eigenvalues are exactly the solutions
    of r**L == P over all cycles of length L whose weight product P is
    nonzero (equivalently: cycles disjoint from the zero closure).  Several
    cycles can certify the same eigenvalue; the smallest cycle id wins, so
    output is deterministic.
    """
    found: dict[FieldElement, Witness] = {}
    for cid, (nodes, length) in enumerate(shift.analysis.cycles):
        product = shift.cycle_product(cid)
        if product == shift.field.zero():
            continue
        for root in shift.field.nth_roots(product, length):
            if root not in found:
                found[root] = Witness(cid, length, product)
    ordered = tuple(sorted(found))
    return SpectrumDescription(
        includes_zero=zero_in_spectrum(shift),
        all_nonzero=False,
        eigenvalues=ordered,
        witnesses=tuple(found[r] for r in ordered),
    )


def _kernel_pair(shift: WeightedShift) -> EigenPair:
    support = kernel_support(shift)
    if not support:
        raise NotAnEigenvalueError("0 is not an eigenvalue: the shift is injective")
    node = min(support)
    return EigenPair(
        eigenvalue=shift.field.zero(),
        vector={node: shift.field.one()},
        witness_component=shift.analysis.component_id[node],
    )


def _cycle_pair(shift: WeightedShift, rho: FieldElement, cid: int) -> EigenPair:
    an = shift.analysis
    nodes, per = an.cycles[cid]
    theta = nodes[0]
    position = {v: t for t, v in enumerate(nodes)}
    comp = an.component_id[theta]
    vector: dict[int, FieldElement] = {}
    for a in range(shift.n):
        if an.component_id[a] != comp:
            continue
        s = max(an.tail_len[a], 1)
        t = position[shift.graph.step(a, s)]
        k = s + per - t
        entry = rho ** (-k)
        v = a
        for _ in range(k):
            entry = entry * shift.weights[v]
            v = shift.graph.phi[v]
        vector[a] = entry
    return EigenPair(eigenvalue=rho, vector=vector, witness_component=comp)


def _verify_pair(shift: WeightedShift, pair: EigenPair):
    zero = shift.field.zero()
    full = [pair.vector.get(a, zero) for a in range(shift.n)]
    if all(v == zero for v in full):
        raise VerificationError("constructed eigenvector is zero")
    shifted = apply(shift, full)
    for a in range(shift.n):
        if shifted[a] != pair.eigenvalue * full[a]:
            raise VerificationError(
                f"eigenvector check failed at node {a}: "
                f"{shifted[a]} != {pair.eigenvalue} * {full[a]}"
            )


def eigenvector(
    shift: WeightedShift,
    value: FieldElement,
    component_hint: int | None = None,
) -> EigenPair:
    """An explicit eigenvector for ``value``, verified exactly before return.

    For 0 this is the unit coordinate vector at the smallest kernel-free
    node.  For nonzero values the vector is supported on one component: the
    witness cycle's, anchored at its smallest cycle node theta with entry 1,
    and every other component coordinate derived from the weight product
    along its orbit into the cycle.  ``component_hint`` selects a different
    certifying component; it is validated.
    """
    value = shift.field.element(value)
    spec = spectrum(shift)
    if value == shift.field.zero():
        if component_hint is not None:
            raise ValueError("component_hint does not apply to the kernel vector")
        pair = _kernel_pair(shift)
        _verify_pair(shift, pair)
        return pair
    if not spec.contains(value):
        raise NotAnEigenvalueError(f"{value} is not an eigenvalue of {shift!r}")
    cid = spec.witness_for(value).cycle_id
    if component_hint is not None:
        an = shift.analysis
        candidates = [
            c
            for c, (nodes, length) in enumerate(an.cycles)
            if an.component_id[nodes[0]] == component_hint
            and shift.cycle_product(c) != shift.field.zero()
            and value**length == shift.cycle_product(c)
        ]
        if not candidates:
            raise NotAnEigenvalueError(
                f"component {component_hint} does not certify eigenvalue {value}"
            )
        cid = candidates[0]
    pair = _cycle_pair(shift, value, cid)
    _verify_pair(shift, pair)
    return pair


def unit_shift_spectrum(graph: FunctionalGraph, field: Field) -> SpectrumDescription:
    """Spectrum of the all-weights-one shift, computed via element orders.

    This is an independent route: r is a nonzero eigenvalue iff the
    multiplicative order of r divides some cycle length.  Over the rationals
    that means 1, plus -1 when an even cycle exists.  Must agree with
    ``spectrum`` on the unit-weight shift.
    """
    an = analyze(graph)
    lengths = [length for _, length in an.cycles]

    def first_witness(r: FieldElement, order: int) -> Witness:
        for cid, length in enumerate(lengths):
            if length % order == 0:
                return Witness(cid, length, field.one())
        raise AssertionError("caller guarantees a divisible cycle length")

    found: list[tuple[FieldElement, Witness]] = []
    if isinstance(field, PrimeField):
        for r in field.elements():
            if r == field.zero():
                continue
            order = field.element_order(r)
            if any(length % order == 0 for length in lengths):
                found.append((r, first_witness(r, order)))
    else:
        found.append((field.one(), first_witness(field.one(), 1)))
        minus_one = -field.one()
        if any(length % 2 == 0 for length in lengths):
            found.append((minus_one, first_witness(minus_one, 2)))
    found.sort(key=lambda rw: rw[0].value)
    onto = image(graph, range(graph.n)) == frozenset(range(graph.n))
    return SpectrumDescription(
        includes_zero=not onto,
        all_nonzero=False,
        eigenvalues=tuple(r for r, _ in found),
        witnesses=tuple(w for _, w in found),
    )


def restrict_to_component(
    shift: WeightedShift, component: int
) -> tuple[WeightedShift, tuple[int, ...]]:
    """The shift restricted to one weak component, with the node relabeling.

    Components are closed under phi in both directions, so the restriction
    is again a weighted shift.  Returns (restricted shift, original node of
    each new index).
    """
    members = shift.analysis.component_members(component)
    if not members:
        raise ValueError(f"no such component: {component}")
    rename = {old: new for new, old in enumerate(members)}
    phi = [rename[shift.graph.phi[old]] for old in members]
    weights = [shift.weights[old] for old in members]
    return WeightedShift(FunctionalGraph(phi), shift.field, weights), members


def _entries(vector: dict[int, FieldElement]) -> list[list]:
    return [[a, str(v)] for a, v in sorted(vector.items())]


def spectrum_report(shift: WeightedShift) -> dict:
    """Deterministic, JSON-ready description of the shift and its spectrum.

    Everything is canonically ordered; field elements appear as literal
    strings so the report is exact and reproducible.
    """
    an = shift.analysis
    spec = spectrum(shift)
    cycles = []
    for cid, (nodes, length) in enumerate(an.cycles):
        product = shift.cycle_product(cid)
        cycles.append(
            {
                "id": cid,
                "nodes": list(nodes),
                "length": length,
                "component": an.component_id[nodes[0]],
                "weight_product": str(product),
                "meets_zero_closure": nodes[0] in shift.down_zero,
            }
        )
    support = kernel_support(shift)
    eigen = []
    for value, wit in zip(spec.eigenvalues, spec.witnesses):
        pair = eigenvector(shift, value)
        eigen.append(
            {
                "value": str(value),
                "witness": {
                    "cycle_id": wit.cycle_id,
                    "period": wit.period,
                    "cycle_product": str(wit.product),
                },
                "component": pair.witness_component,
                "eigenvector": _entries(pair.vector),
            }
        )
    if spec.includes_zero:
        pair = eigenvector(shift, shift.field.zero())
        eigen.insert(
            0,
            {
                "value": str(shift.field.zero()),
                "witness": None,
                "component": pair.witness_component,
                "eigenvector": _entries(pair.vector),
            },
        )
    onto = not spec.includes_zero
    branch = "W ⊆ ↓Z, Γ = φ(Γ∖Z)" if onto else "W ⊆ ↓Z, Γ ≠ φ(Γ∖Z)"
    return {
        "kind": "finite",
        "field": shift.field.describe(),
        "n": shift.n,
        "phi": list(shift.graph.phi),
        "weights": [str(w) for w in shift.weights],
        "zero_set": sorted(shift.zero_set),
        "zero_closure": sorted(shift.down_zero),
        "kernel_support": sorted(support),
        "onto_off_zeros": onto,
        "branch": branch,
        "component_count": an.component_count,
        "cycles": cycles,
        "spectrum": {
            "includes_zero": spec.includes_zero,
            "all_nonzero": spec.all_nonzero,
            "eigenvalues": [str(v) for v in spec.eigenvalues],
            "empty": spec.is_empty,
        },
        "eigenpairs": eigen,
    }
