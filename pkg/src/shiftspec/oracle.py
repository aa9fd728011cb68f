"""Independent ground truth for shift spectra via dense linear algebra.

The closed-form engine in :mod:`shiftspec.shifts` never touches a matrix;
this module builds the operator's dense matrix, computes its characteristic
polynomial with the division-free Berkowitz algorithm (correct over any
field, including GF(2) and GF(3) where dimension can exceed the
characteristic), and finds every in-field root exactly.  The two routes are
compared instance by instance in the differential tests; the oracle never
reads any intermediate data of the engine.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Sequence

from .errors import RootSearchOverflowError, ZeroPolynomialError
from .fields import Field, FieldElement, PrimeField, divisors
from .shifts import EigenPair, WeightedShift, apply

ROOT_SEARCH_MAGNITUDE_CUTOFF = 1 << 63


class Polynomial:
    """A polynomial with field coefficients, ascending degree, canonical.

    Trailing zero coefficients are trimmed; the zero polynomial has no
    coefficients at all.
    """

    __slots__ = ("field", "coefficients")

    def __init__(self, field: Field, coefficients: Sequence):
        coeffs = [field.element(c) for c in coefficients]
        while coeffs and coeffs[-1] == field.zero():
            coeffs.pop()
        self.field = field
        self.coefficients = tuple(coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coefficients) - 1

    def raw_coefficients(self) -> tuple:
        return tuple(c.value for c in self.coefficients)

    def evaluate(self, point: FieldElement) -> FieldElement:
        point = self.field.element(point)
        acc = self.field.zero()
        for c in reversed(self.coefficients):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.field == self.field
            and other.coefficients == self.coefficients
        )

    def __hash__(self):
        return hash((self.field, self.coefficients))

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == self.field.zero():
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return "Polynomial(" + " + ".join(terms) + ")"


class DenseMatrix:
    """A square matrix of field elements, rows of tuples."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        self.field = field
        self.rows = tuple(tuple(field.element(e) for e in row) for row in rows)
        self.n = len(self.rows)
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError("matrix must be square")

    def matvec(self, x: Sequence) -> tuple[FieldElement, ...]:
        vec = tuple(self.field.element(v) for v in x)
        if len(vec) != self.n:
            raise ValueError(f"expected a vector of length {self.n}")
        out = []
        for row in self.rows:
            acc = self.field.zero()
            for a, v in zip(row, vec):
                acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def __repr__(self):
        return f"DenseMatrix({[[str(e) for e in row] for row in self.rows]})"


def build_matrix(shift: WeightedShift) -> DenseMatrix:
    """Matrix A with A[a][phi(a)] = w_a and zeros elsewhere; A*x == apply(shift, x)."""
    n = shift.n
    zero = shift.field.zero()
    rows = []
    for a in range(n):
        row = [zero] * n
        row[shift.graph.phi[a]] = shift.weights[a]
        rows.append(row)
    return DenseMatrix(shift.field, rows)


def char_poly(matrix: DenseMatrix) -> Polynomial:
    """det(xI - A): monic, degree n, by the division-free Berkowitz scheme.

    Works on raw coefficient values with the field's primitive operations;
    never divides, so small characteristic is safe.
    """
    field = matrix.field
    n = matrix.n
    add, sub, mul = field._add, field._sub, field._mul
    zero, one = field._zero_raw, field._one_raw
    a = [[e.value for e in row] for row in matrix.rows]

    # coefficients in descending degree; after step k it is the char poly of
    # the leading (k+1)x(k+1) principal submatrix
    c = [one, sub(zero, a[0][0])]
    for k in range(1, n):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        s = [one, sub(zero, a[k][k])]
        vec = col
        for j in range(k):
            dot = zero
            for r, v in zip(row, vec):
                dot = add(dot, mul(r, v))
            s.append(sub(zero, dot))
            if j + 1 < k:
                vec = [
                    _dot(add, mul, zero, a[i][:k], vec) for i in range(k)
                ]
        new = []
        for i in range(k + 2):
            acc = zero
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                acc = add(acc, mul(s[i - j], c[j]))
            new.append(acc)
        c = new
    return Polynomial(field, list(reversed(c)))


def _dot(add, mul, zero, xs, ys):
    acc = zero
    for x, y in zip(xs, ys):
        acc = add(acc, mul(x, y))
    return acc


def char_poly_by_minors(matrix: DenseMatrix) -> Polynomial:
    """det(xI - A) by cofactor expansion over polynomial entries.

    Exponential in n; exists purely as a cross-oracle for small matrices.
    """
    field = matrix.field
    add, sub, mul = field._add, field._sub, field._mul
    zero, one = field._zero_raw, field._one_raw

    def padd(p, q):
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, v in enumerate(q):
            out[i] = add(out[i], v)
        return out

    def pmul(p, q):
        out = [zero] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] = add(out[i + j], mul(x, y))
        return out

    def pneg(p):
        return [sub(zero, v) for v in p]

    entries = [
        [
            [sub(zero, e.value), one] if i == j else [sub(zero, e.value)]
            for j, e in enumerate(row)
        ]
        for i, row in enumerate(matrix.rows)
    ]

    def det(rows_idx, cols_idx):
        if len(rows_idx) == 1:
            return entries[rows_idx[0]][cols_idx[0]]
        total = [zero]
        r = rows_idx[0]
        rest = rows_idx[1:]
        for pos, ccol in enumerate(cols_idx):
            minor = det(rest, cols_idx[:pos] + cols_idx[pos + 1 :])
            term = pmul(entries[r][ccol], minor)
            total = padd(total, term if pos % 2 == 0 else pneg(term))
        return total

    idx = tuple(range(matrix.n))
    return Polynomial(field, det(idx, idx))


def _rational_roots(raw_coeffs: tuple) -> set:
    """All rational roots of a polynomial with Fraction coefficients.

    Rational root theorem on the primitive integer form, after factoring out
    the power of x; the constant and leading coefficients must stay below a
    hard magnitude cutoff for divisor enumeration to stay cheap.
    """
    from fractions import Fraction

    first_nonzero = next(i for i, v in enumerate(raw_coeffs) if v != 0)
    roots: set = set()
    if first_nonzero > 0:
        roots.add(Fraction(0))
    coeffs = raw_coeffs[first_nonzero:]
    if len(coeffs) == 1:
        return roots
    denom_lcm = lcm(*(Fraction(v).denominator for v in coeffs))
    ints = [int(v * denom_lcm) for v in coeffs]
    content = gcd(*ints)
    ints = [v // content for v in ints]
    low, high = abs(ints[0]), abs(ints[-1])
    if low >= ROOT_SEARCH_MAGNITUDE_CUTOFF or high >= ROOT_SEARCH_MAGNITUDE_CUTOFF:
        raise RootSearchOverflowError(
            f"coefficient magnitude {max(low, high)} exceeds the root search cutoff"
        )
    at_one = sum(ints)
    at_minus_one = sum(v if i % 2 == 0 else -v for i, v in enumerate(ints))
    deg = len(ints) - 1
    for q in divisors(high):
        for p_abs in divisors(low):
            if gcd(p_abs, q) != 1:
                continue
            for p in (p_abs, -p_abs):
                # r = p/q is a root only if (p - q) | f(1) and (p + q) | f(-1)
                if p != q and at_one % (p - q) != 0:
                    continue
                if p != -q and at_minus_one % (p + q) != 0:
                    continue
                acc = 0
                qq = 1
                for v in reversed(ints):
                    acc = acc * p + v * qq
                    qq *= q
                if acc == 0:
                    roots.add(Fraction(p, q))
    return roots


def roots_in_field(poly: Polynomial, field: Field) -> frozenset[FieldElement]:
    """Every r in the field with poly(r) = 0, multiplicities discarded."""
    if poly.is_zero:
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    raw = poly.raw_coefficients()
    if len(raw) == 1:
        return frozenset()
    if isinstance(field, PrimeField):
        p = field.p
        found = []
        for r in range(p):
            acc = 0
            for v in reversed(raw):
                acc = (acc * r + v) % p
            if acc == 0:
                found.append(field.element(r))
        return frozenset(found)
    return frozenset(field.element(v) for v in _rational_roots(raw))


def oracle_spectrum(shift: WeightedShift) -> frozenset[FieldElement]:
    """Eigenvalue set straight from the characteristic polynomial."""
    return roots_in_field(char_poly(build_matrix(shift)), shift.field)


def verify_eigenpair(shift: WeightedShift, pair: EigenPair) -> bool:
    """Exact entrywise check that the pair satisfies shift(y) = lambda * y, y != 0."""
    zero = shift.field.zero()
    full = [pair.vector.get(a, zero) for a in range(shift.n)]
    if all(v == zero for v in full):
        return False
    shifted = apply(shift, full)
    lam = shift.field.element(pair.eigenvalue)
    return all(shifted[a] == lam * full[a] for a in range(shift.n))


def block_check(shift: WeightedShift, d: int = 2) -> bool:
    """Eigenvalues are unchanged when each scalar weight becomes w * I_d.

    Builds the operator on d-dimensional coordinate blocks and compares its
    in-field root set against the scalar oracle spectrum.
    """
    if d < 2:
        raise ValueError("block dimension must be at least 2")
    n = shift.n
    zero = shift.field.zero()
    size = n * d
    rows = [[zero] * size for _ in range(size)]
    for a in range(n):
        b = shift.graph.phi[a]
        for i in range(d):
            rows[a * d + i][b * d + i] = shift.weights[a]
    blocked = DenseMatrix(shift.field, rows)
    return roots_in_field(char_poly(blocked), shift.field) == oracle_spectrum(shift)
