"""Exact field arithmetic over prime fields GF(p) and the rationals.

Every value is exact: GF(p) elements are residues in ``[0, p)``, rational
elements are arbitrary-precision fractions in lowest terms with positive
denominator (``fractions.Fraction`` guarantees that canonical form).  The two
field-specific primitives the spectrum engine relies on are complete n-th
root extraction (:meth:`Field.nth_roots`) and multiplicative orders
(:meth:`Field.element_order`).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    MalformedLiteralError,
    MixedFieldError,
    ZeroDenominatorError,
    ZeroElementError,
    ZeroRadicandError,
)

DEFAULT_ENUMERATION_BOUND = 1 << 16

_LITERAL_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fine for n <= 2**16)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division, as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2 if d % 6 == 1 else 4
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def integer_nth_root(m: int, n: int) -> int | None:
    """The exact integer n-th root of m >= 0, or None if m is not a perfect power.

    Binary search; no floating point anywhere.
    """
    if m < 0 or n < 1:
        raise ValueError("integer_nth_root expects m >= 0 and n >= 1")
    if m in (0, 1):
        return m
    lo, hi = 1, 1 << (m.bit_length() // n + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        power = mid**n
        if power == m:
            return mid
        if power < m:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


class FieldElement:
    """An immutable element of a :class:`Field`.

    ``value`` is the canonical raw representation: an ``int`` residue for
    GF(p), a ``fractions.Fraction`` for the rationals.  Arithmetic operators
    require both operands to live in the same field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, _value):
        raise AttributeError(f"FieldElement is immutable (tried to set {name!r})")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFieldError(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, rhs.value))

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, rhs.value))

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(rhs.value, self.value))

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, rhs.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._div(self.value, rhs.value))

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._div(rhs.value, self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field._pow(self.value, k))

    def __neg__(self):
        return FieldElement(self.field, self.field._sub(self.field._zero_raw, self.value))

    def __bool__(self):
        return self.value != self.field._zero_raw

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.element(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self.value < rhs.value

    def __le__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self.value <= rhs.value

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._div(self.field._one_raw, self.value))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"{self.field!r}({self})"


class Field:
    """Abstract field context; see :class:`PrimeField` and :class:`RationalField`."""

    _zero_raw = None
    _one_raw = None

    def element(self, raw) -> FieldElement:
        raise NotImplementedError

    def zero(self) -> FieldElement:
        return FieldElement(self, self._zero_raw)

    def one(self) -> FieldElement:
        return FieldElement(self, self._one_raw)

    def parse(self, text: str) -> FieldElement:
        """Parse an element literal: optional sign, integer, optional ``/`` integer.

        Out-of-range residues reduce mod p; fraction literals over GF(p) mean
        multiplication by the inverse of the denominator.
        """
        m = _LITERAL_RE.match(text.strip())
        if m is None:
            raise MalformedLiteralError(f"bad element literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        return self._from_pair(num, den)

    def format(self, e: FieldElement) -> str:
        raise NotImplementedError

    def nth_roots(self, c: FieldElement, n: int) -> tuple[FieldElement, ...]:
        """All r != 0 with r**n == c, canonically sorted.  c must be nonzero."""
        raise NotImplementedError

    def element_order(self, r: FieldElement) -> int | None:
        """Least k >= 1 with r**k == 1, or None when no finite k exists."""
        raise NotImplementedError

    def describe(self) -> dict:
        """The field's serialized descriptor, as used in instance files."""
        raise NotImplementedError

    # raw-value arithmetic, shared with the oracle's inner loops
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _div(self, a, b):
        raise NotImplementedError

    def _pow(self, a, k: int):
        raise NotImplementedError

    def _from_pair(self, num: int, den: int) -> FieldElement:
        raise NotImplementedError


class PrimeField(Field):
    """GF(p) for prime p, with exhaustive enumeration capped at a hard bound.

    Root sets and multiplicative orders are found by scanning the p - 1
    nonzero residues, so construction rejects any p above
    ``enumeration_bound`` (default 2**16).
    """

    __slots__ = ("p", "enumeration_bound")

    def __init__(self, p: int, enumeration_bound: int = DEFAULT_ENUMERATION_BOUND):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > enumeration_bound:
            raise ValueError(
                f"p={p} exceeds the enumeration bound {enumeration_bound}"
            )
        self.p = p
        self.enumeration_bound = enumeration_bound

    _zero_raw = 0
    _one_raw = 1

    def element(self, raw) -> FieldElement:
        if isinstance(raw, FieldElement):
            if raw.field != self:
                raise MixedFieldError(f"element of {raw.field} is not in {self}")
            return raw
        return FieldElement(self, int(raw) % self.p)

    def elements(self):
        """All residues in canonical (ascending) order."""
        return tuple(FieldElement(self, r) for r in range(self.p))

    def format(self, e: FieldElement) -> str:
        return str(e.value)

    def _from_pair(self, num: int, den: int) -> FieldElement:
        if den % self.p == 0:
            raise ZeroDenominatorError(f"denominator {den} is 0 in GF({self.p})")
        return FieldElement(self, num * pow(den, -1, self.p) % self.p)

    def nth_roots(self, c: FieldElement, n: int) -> tuple[FieldElement, ...]:
        if n < 1:
            raise ValueError("root degree must be >= 1")
        cv = self.element(c).value
        if cv == 0:
            raise ZeroRadicandError("nth_roots requires a nonzero radicand")
        return tuple(
            FieldElement(self, r) for r in range(1, self.p) if pow(r, n, self.p) == cv
        )

    def element_order(self, r: FieldElement) -> int:
        rv = self.element(r).value
        if rv == 0:
            raise ZeroElementError("0 has no multiplicative order")
        # the order divides p - 1
        for k in divisors(self.p - 1):
            if pow(rv, k, self.p) == 1:
                return k
        raise AssertionError("unreachable: order must divide p - 1")

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _div(self, a, b):
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p

    def _pow(self, a, k: int):
        if k < 0 and a == 0:
            raise ZeroDivisionError("0 has no negative powers")
        return pow(a, k, self.p)

    def describe(self) -> dict:
        return {"kind": "gfp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gfp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField(Field):
    """The rational numbers with arbitrary-precision exact arithmetic."""

    __slots__ = ()

    _zero_raw = Fraction(0)
    _one_raw = Fraction(1)

    def element(self, raw) -> FieldElement:
        if isinstance(raw, FieldElement):
            if raw.field != self:
                raise MixedFieldError(f"element of {raw.field} is not in {self}")
            return raw
        return FieldElement(self, Fraction(raw))

    def format(self, e: FieldElement) -> str:
        return str(e.value)

    def _from_pair(self, num: int, den: int) -> FieldElement:
        if den == 0:
            raise ZeroDenominatorError("denominator 0 in a rational literal")
        return FieldElement(self, Fraction(num, den))

    def nth_roots(self, c: FieldElement, n: int) -> tuple[FieldElement, ...]:
        if n < 1:
            raise ValueError("root degree must be >= 1")
        cv = self.element(c).value
        if cv == 0:
            raise ZeroRadicandError("nth_roots requires a nonzero radicand")
        if n % 2 == 0 and cv < 0:
            return ()
        num_root = integer_nth_root(abs(cv.numerator), n)
        den_root = integer_nth_root(cv.denominator, n)
        if num_root is None or den_root is None:
            return ()
        root = Fraction(num_root, den_root)
        if n % 2 == 1:
            return (FieldElement(self, -root if cv < 0 else root),)
        return (FieldElement(self, -root), FieldElement(self, root))

    def element_order(self, r: FieldElement) -> int | None:
        rv = self.element(r).value
        if rv == 0:
            raise ZeroElementError("0 has no multiplicative order")
        if rv == 1:
            return 1
        if rv == -1:
            return 2
        return None

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b

    def _pow(self, a, k: int):
        if k < 0 and a == 0:
            raise ZeroDivisionError("0 has no negative powers")
        return a**k

    def describe(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Q"
