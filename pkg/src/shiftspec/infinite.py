"""Shifts on the naturals with a co-finite successor tail.

A presentation stores phi explicitly below a boundary B and fixes
phi(n) = n + 1 with one constant weight for every n >= B.  Everything the
classification needs (point classes, the zero closure, whether the image
covers the naturals) is decidable with finite work, yet a nonzero tail
weight realizes what no finite index set can: a wandering point whose orbit
never meets a zero weight, which makes every nonzero field element an
eigenvalue.  The classical one-sided shift is the B = 0 instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    WindowTooSmallError,
    ZeroEigenvalueError,
    ZeroTailWeightError,
)
from .fields import Field, FieldElement
from .graphs import FunctionalGraph, PointClass
from .shifts import SpectrumDescription, WeightedShift, Witness, eigenvector


class CoFinitePresentation:
    """A self-map of the naturals that is the successor map from B onward."""

    __slots__ = ("boundary", "phi_table", "weight_table", "field", "tail_weight")

    def __init__(
        self,
        field: Field,
        boundary: int,
        phi_table: Sequence[int],
        weight_table: Sequence,
        tail_weight,
    ):
        if boundary < 0:
            raise ValueError("boundary must be non-negative")
        phi_table = tuple(int(v) for v in phi_table)
        if len(phi_table) != boundary:
            raise ValueError(f"phi_table must have length {boundary}")
        for k, v in enumerate(phi_table):
            if v < 0:
                raise ValueError(f"phi_table[{k}] = {v} is not a natural number")
        weight_table = tuple(field.element(w) for w in weight_table)
        if len(weight_table) != boundary:
            raise ValueError(f"weight_table must have length {boundary}")
        self.field = field
        self.boundary = boundary
        self.phi_table = phi_table
        self.weight_table = weight_table
        self.tail_weight = field.element(tail_weight)

    def phi(self, node: int) -> int:
        return self.phi_table[node] if node < self.boundary else node + 1

    def weight(self, node: int) -> FieldElement:
        return self.weight_table[node] if node < self.boundary else self.tail_weight

    def __repr__(self):
        w = ", ".join(str(x) for x in self.weight_table)
        return (
            f"CoFinitePresentation(B={self.boundary}, phi_table={list(self.phi_table)}, "
            f"weights=({w}), tail={self.tail_weight} over {self.field!r})"
        )


@dataclass(frozen=True)
class PresentationSummary:
    """Classification of a presentation's points and its theorem branch data."""

    table_classes: tuple[PointClass, ...]
    wandering_absorbed: bool
    onto_off_zeros: bool

    @property
    def branch(self) -> str:
        left = "W ⊆ ↓Z" if self.wandering_absorbed else "W ⊄ ↓Z"
        right = "Γ = φ(Γ∖Z)" if self.onto_off_zeros else "Γ ≠ φ(Γ∖Z)"
        return f"{left}, {right}"


@dataclass(frozen=True)
class WindowVector:
    """The first K coordinates of an eigenvector, with its anchor node."""

    window: int
    values: tuple[FieldElement, ...]
    anchor: int

    def __post_init__(self):
        if len(self.values) != self.window:
            raise ValueError("values must fill the window exactly")


def _table_orbit(pres: CoFinitePresentation, start: int) -> tuple[list[int], bool]:
    """Walk phi from a table node until it escapes to the tail or repeats.

    Returns (visited table nodes in order, escaped?).
    """
    path = []
    seen = set()
    node = start
    while node < pres.boundary:
        if node in seen:
            return path, False
        seen.add(node)
        path.append(node)
        node = pres.phi_table[node]
    return path, True


def classify_presentation(pres: CoFinitePresentation) -> PresentationSummary:
    """Point classes for the table nodes plus the two theorem predicates.

    Tail nodes always wander (their orbit strictly increases), so the
    wandering set is nonempty for every presentation.  It is contained in
    the zero closure exactly when the tail weight vanishes.
    """
    classes = []
    for k in range(pres.boundary):
        path, escaped = _table_orbit(pres, k)
        if escaped:
            classes.append(PointClass.WANDERING)
            continue
        # orbit cycles below the boundary; periodic iff k returns to itself
        node = pres.phi_table[k]
        periodic = False
        for _ in range(pres.boundary):
            if node == k:
                periodic = True
                break
            node = pres.phi_table[node]
        classes.append(PointClass.PERIODIC if periodic else PointClass.QUASI_PERIODIC)
    zero = pres.field.zero()
    return PresentationSummary(
        table_classes=tuple(classes),
        wandering_absorbed=pres.tail_weight == zero,
        onto_off_zeros=_image_covers(pres),
    )


def _image_covers(pres: CoFinitePresentation) -> bool:
    """Whether phi maps the nonzero-weight nodes onto all of the naturals.

    The tail contributes every index above B, so only [0, B] needs checking
    against the finite table image.
    """
    zero = pres.field.zero()
    covered = {
        pres.phi_table[k]
        for k in range(pres.boundary)
        if pres.weight_table[k] != zero
    }
    if pres.tail_weight != zero:
        return all(m in covered for m in range(pres.boundary + 1))
    return False  # a finite table image cannot cover the infinite co-tail


def kernel_free_index(pres: CoFinitePresentation) -> int | None:
    """Smallest coordinate outside the image of the nonzero-weight nodes.

    A unit vector there spans part of the kernel; None when the shift is
    injective (image covers everything).
    """
    zero = pres.field.zero()
    covered = {
        pres.phi_table[k]
        for k in range(pres.boundary)
        if pres.weight_table[k] != zero
    }
    if pres.tail_weight != zero:
        missing = [m for m in range(pres.boundary + 1) if m not in covered]
        return min(missing) if missing else None
    m = 0
    while m in covered:
        m += 1
    return m


def _table_cycles(pres: CoFinitePresentation) -> list[tuple[tuple[int, ...], int]]:
    """All cycles of phi that live entirely below the boundary, canonical order."""
    found = {}
    for k in range(pres.boundary):
        path, escaped = _table_orbit(pres, k)
        if escaped:
            continue
        # the walk from k repeats; the repeated node starts the cycle
        node = pres.phi_table[path[-1]]
        start = path.index(node)
        cycle = path[start:]
        head = min(cycle)
        if head not in found:
            rotation = cycle.index(head)
            found[head] = tuple(cycle[rotation:] + cycle[:rotation])
    return [(found[h], len(found[h])) for h in sorted(found)]


def infinite_spectrum(pres: CoFinitePresentation) -> SpectrumDescription:
    """The complete eigenvalue set of a co-finite presentation.

    Nonzero tail weight: the tail is a wandering orbit free of zero weights,
    so every nonzero field element is an eigenvalue; zero membership reduces
    to the finite image check.  Zero tail weight: the wandering set is
    absorbed by the zero closure, the nonzero eigenvalues come from the
    zero-free cycles below the boundary, and zero is always an eigenvalue
    because a finite table cannot cover the co-tail.
    """
    zero = pres.field.zero()
    if pres.tail_weight != zero:
        return SpectrumDescription(
            includes_zero=not _image_covers(pres),
            all_nonzero=True,
            eigenvalues=(),
            witnesses=(),
        )
    found: dict[FieldElement, Witness] = {}
    for cid, (nodes, length) in enumerate(_table_cycles(pres)):
        product = pres.field.one()
        for v in nodes:
            product = product * pres.weight_table[v]
        if product == zero:
            continue
        for root in pres.field.nth_roots(product, length):
            if root not in found:
                found[root] = Witness(cid, length, product)
    ordered = tuple(sorted(found))
    return SpectrumDescription(
        includes_zero=True,
        all_nonzero=False,
        eigenvalues=ordered,
        witnesses=tuple(found[r] for r in ordered),
    )


def core_restriction(
    pres: CoFinitePresentation,
) -> tuple[WeightedShift, tuple[int, ...]] | None:
    """The finite shift on the table nodes whose orbits never reach the tail.

    Those nodes are closed under phi, so they carry an ordinary finite
    weighted shift; None when every table node escapes.  Returns the shift
    and the original label of each new index.
    """
    members = []
    for k in range(pres.boundary):
        _, escaped = _table_orbit(pres, k)
        if not escaped:
            members.append(k)
    if not members:
        return None
    rename = {old: new for new, old in enumerate(members)}
    phi = [rename[pres.phi_table[old]] for old in members]
    weights = [pres.weight_table[old] for old in members]
    return (
        WeightedShift(FunctionalGraph(phi), pres.field, weights),
        tuple(members),
    )


def _alignment(pres: CoFinitePresentation, alpha: int) -> tuple[int, int] | None:
    """Minimal (p, q), p, q >= 1, with phi^p(alpha) = phi^q(anchor), anchor = B.

    The anchor's orbit is B+1, B+2, ..., so q is determined by where
    alpha's orbit first climbs past the boundary; None when it never does.
    """
    boundary = pres.boundary
    node = alpha
    seen = set()
    p = 0
    while True:
        if p >= 1 and node > boundary:
            return p, node - boundary
        if node < boundary:
            if node in seen:
                return None
            seen.add(node)
            node = pres.phi_table[node]
        else:
            node += 1
        p += 1


def wandering_eigenvector_window(
    pres: CoFinitePresentation, r: FieldElement, window: int
) -> WindowVector:
    """First ``window`` coordinates of an eigenvector for nonzero r.

    Anchored at theta = B with value 1.  Every coordinate in theta's class
    is r**(q-p) times the weight product over alpha..phi^p(alpha) divided by
    the product over theta..phi^q(theta); both products include their final
    endpoint, which is shared and cancels.  Class-external coordinates are
    zero.  Requires a nonzero tail weight (the divided product lives on the
    tail) and a window wide enough to contain the anchor.
    """
    field = pres.field
    r = field.element(r)
    if r == field.zero():
        raise ZeroEigenvalueError("the wandering construction needs a nonzero eigenvalue")
    if pres.tail_weight == field.zero():
        raise ZeroTailWeightError("the wandering construction inverts tail weights")
    if window <= pres.boundary:
        raise WindowTooSmallError(
            f"window {window} does not reach past the boundary {pres.boundary}"
        )
    values = []
    for alpha in range(window):
        meet = _alignment(pres, alpha)
        if meet is None:
            values.append(field.zero())
            continue
        p, q = meet
        numerator = field.one()
        node = alpha
        for _ in range(p + 1):
            numerator = numerator * pres.weight(node)
            node = pres.phi(node)
        denominator = pres.tail_weight ** (q + 1)
        values.append(r ** (q - p) * numerator / denominator)
    return WindowVector(window=window, values=tuple(values), anchor=pres.boundary)


def window_verify(
    pres: CoFinitePresentation, r: FieldElement, x: WindowVector
) -> bool:
    """Exact check of w_a * x_phi(a) = r * x_a wherever both sides sit in the window."""
    r = pres.field.element(r)
    for alpha in range(x.window):
        target = pres.phi(alpha)
        if target >= x.window:
            continue
        if pres.weight(alpha) * x.values[target] != r * x.values[alpha]:
            return False
    return True


def window_defects(
    pres: CoFinitePresentation, r: FieldElement, x: WindowVector
) -> list[tuple[int, FieldElement, FieldElement]]:
    """The coordinates violating the eigen-relation, with both sides."""
    r = pres.field.element(r)
    out = []
    for alpha in range(x.window):
        target = pres.phi(alpha)
        if target >= x.window:
            continue
        left = pres.weight(alpha) * x.values[target]
        right = r * x.values[alpha]
        if left != right:
            out.append((alpha, left, right))
    return out


def presentation_report(pres: CoFinitePresentation, sample_window: int = 0) -> dict:
    """Deterministic, JSON-ready description of a presentation and its spectrum."""
    summary = classify_presentation(pres)
    spec = infinite_spectrum(pres)
    cycles = []
    for cid, (nodes, length) in enumerate(_table_cycles(pres)):
        product = pres.field.one()
        for v in nodes:
            product = product * pres.weight_table[v]
        cycles.append(
            {
                "id": cid,
                "nodes": list(nodes),
                "length": length,
                "weight_product": str(product),
            }
        )
    eigen = []
    if spec.includes_zero:
        free = kernel_free_index(pres)
        eigen.append(
            {
                "value": str(pres.field.zero()),
                "witness": None,
                "eigenvector": [[free, str(pres.field.one())]],
            }
        )
    if not spec.all_nonzero and spec.eigenvalues:
        core = core_restriction(pres)
        assert core is not None  # explicit eigenvalues come from table cycles
        shift, members = core
        for value, wit in zip(spec.eigenvalues, spec.witnesses):
            pair = eigenvector(shift, value)
            entries = [
                [members[a], str(v)] for a, v in sorted(pair.vector.items())
            ]
            eigen.append(
                {
                    "value": str(value),
                    "witness": {
                        "cycle_id": wit.cycle_id,
                        "period": wit.period,
                        "cycle_product": str(wit.product),
                    },
                    "eigenvector": entries,
                }
            )
    report = {
        "kind": "cofinite",
        "field": pres.field.describe(),
        "boundary": pres.boundary,
        "phi_table": list(pres.phi_table),
        "weight_table": [str(w) for w in pres.weight_table],
        "tail_weight": str(pres.tail_weight),
        "table_classes": [c.value for c in summary.table_classes],
        "tail_class": PointClass.WANDERING.value,
        "wandering_absorbed": summary.wandering_absorbed,
        "onto_off_zeros": summary.onto_off_zeros,
        "branch": summary.branch,
        "cycles": cycles,
        "spectrum": {
            "includes_zero": spec.includes_zero,
            "all_nonzero": spec.all_nonzero,
            "eigenvalues": [str(v) for v in spec.eigenvalues],
            "empty": spec.is_empty,
        },
        "eigenpairs": eigen,
    }
    if sample_window:
        r = pres.field.one()
        if pres.tail_weight != pres.field.zero():
            vec = wandering_eigenvector_window(pres, r, sample_window)
            report["sample_window"] = {
                "eigenvalue": str(r),
                "window": sample_window,
                "values": [str(v) for v in vec.values],
                "verified": window_verify(pres, r, vec),
            }
    return report
