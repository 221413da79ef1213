"""
Exact Field Arithmetic

Prime fields GF(p), extension fields GF(p^k) and the rational function field
F2(t). Finite fields are table driven: the addition, multiplication, negation,
inverse and square-root tables are built once per FieldSpec from galois field
arrays, and elements carry the galois integer representation. F2(t) delegates
to rational_functions.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from .exceptions import (
    FieldDivisionError,
    FieldError,
    FieldMismatchError,
    IrreducibilityError,
    NotEnumerableError,
    ParseError,
)
from .rational_functions import ONE, T, ZERO, RationalFunctionArithmetic

logger = logging.getLogger(__name__)

PRIME = "prime"
EXTENSION = "extension"
RATIONAL_FUNCTION = "rational-function"

MAX_EXTENSION_ORDER = 64
MAX_PRIME = 251


class FiniteFieldTables:
    """Operation tables of a finite field indexed by galois integer representation."""

    def __init__(self, gf: type):
        elements = gf.elements
        self.order = len(elements)
        self.add = self._plain(elements[:, np.newaxis] + elements[np.newaxis, :])
        self.mul = self._plain(elements[:, np.newaxis] * elements[np.newaxis, :])
        self.neg = self._plain(-elements)
        self.inv = np.zeros(self.order, dtype=np.int64)
        self.inv[1:] = self._plain(np.reciprocal(elements[1:]))
        # -1 marks a non-square; the smallest root wins
        self.sqrt = np.full(self.order, -1, dtype=np.int64)
        for x in range(self.order - 1, -1, -1):
            self.sqrt[self.mul[x, x]] = x

    @staticmethod
    def _plain(array) -> np.ndarray:
        return np.asarray(array.view(np.ndarray), dtype=np.int64)


@dataclass(frozen=True)
class FieldSpec:
    """Description of one of the supported fields.

    Use the gf, gf_extension and f2t constructors rather than building the
    dataclass directly.
    """

    kind: str
    characteristic: int
    degree: int = 1
    modulus: Tuple[int, ...] = ()
    degree_cap: int = field(default=64, compare=False)

    def __post_init__(self):
        if self.kind == RATIONAL_FUNCTION:
            if self.characteristic != 2:
                raise FieldError("rational function fields are only available in characteristic 2")
            if self.degree_cap < 1:
                raise FieldError(f"degree cap must be positive, got {self.degree_cap}")
            return
        if self.kind not in (PRIME, EXTENSION):
            raise FieldError(f"unknown field kind: {self.kind}")
        p = self.characteristic
        if not galois.is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if self.kind == PRIME:
            if p > MAX_PRIME:
                raise FieldError(f"GF({p}) exceeds the table limit GF({MAX_PRIME})")
            return
        self._validate_extension()

    def _validate_extension(self) -> None:
        p, k = self.characteristic, self.degree
        if k < 2:
            raise FieldError(f"extension degree must be at least 2, got {k}; use GF {p}")
        if p ** k > MAX_EXTENSION_ORDER:
            raise FieldError(f"GF({p}^{k}) exceeds the enumeration limit of {MAX_EXTENSION_ORDER}")
        if len(self.modulus) != k + 1 or any(not 0 <= c < p for c in self.modulus):
            raise FieldError(f"modulus {self.modulus} is not a degree-{k} polynomial over GF({p})")
        if self.modulus[-1] != 1:
            raise FieldError(f"modulus {self.modulus} must be monic")
        # trial division by every monic polynomial of degree 1..k//2
        prime_field = galois.GF(p)
        modulus = self.modulus_poly
        for d in range(1, k // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                divisor = galois.Poly([1, *tail], field=prime_field)
                if int(modulus % divisor) == 0:
                    logger.error(f"Reducible modulus {self.modulus} over GF({p})")
                    raise IrreducibilityError(
                        f"modulus {self.modulus} is divisible by {divisor} over GF({p})"
                    )

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @classmethod
    def gf_extension(cls, p: int, k: int, modulus: Sequence[int]) -> "FieldSpec":
        """GF(p^k) as GF(p)[x]/(modulus), coefficients constant term first."""
        return cls(EXTENSION, p, k, tuple(int(c) for c in modulus))

    @classmethod
    def f2t(cls, degree_cap: int = 64) -> "FieldSpec":
        return cls(RATIONAL_FUNCTION, 2, degree_cap=degree_cap)

    @property
    def is_finite(self) -> bool:
        return self.kind != RATIONAL_FUNCTION

    @property
    def order(self) -> Optional[int]:
        return self.characteristic ** self.degree if self.is_finite else None

    @property
    def modulus_poly(self) -> galois.Poly:
        return galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.characteristic))

    @cached_property
    def galois_field(self) -> type:
        if self.kind == PRIME:
            return galois.GF(self.characteristic)
        if self.kind == EXTENSION:
            return galois.GF(self.order, irreducible_poly=self.modulus_poly)
        raise NotEnumerableError(f"{self} has no galois field class")

    @cached_property
    def tables(self) -> FiniteFieldTables:
        if not self.is_finite:
            raise NotEnumerableError(f"{self} is infinite and has no operation tables")
        tables = FiniteFieldTables(self.galois_field)
        logger.debug(f"Built operation tables for {self}")
        return tables

    @cached_property
    def rational(self) -> RationalFunctionArithmetic:
        if self.is_finite:
            raise FieldError(f"{self} is not a rational function field")
        return RationalFunctionArithmetic(self.degree_cap)

    @property
    def spec_text(self) -> str:
        if self.kind == PRIME:
            return f"GF {self.characteristic}"
        if self.kind == EXTENSION:
            coeffs = ",".join(str(c) for c in self.modulus)
            return f"GF {self.characteristic}^{self.degree} {coeffs}"
        return "F2T"

    def __str__(self) -> str:
        if self.kind == PRIME:
            return f"GF({self.characteristic})"
        if self.kind == EXTENSION:
            return f"GF({self.characteristic}^{self.degree})"
        return "F2(t)"

    # element construction

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, ZERO if not self.is_finite else 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, ONE if not self.is_finite else 1)

    @property
    def t(self) -> "FieldElement":
        if self.is_finite:
            raise FieldError(f"{self} has no transcendental t")
        return FieldElement(self, T)

    @property
    def generator(self) -> "FieldElement":
        """The class of x in GF(p)[x]/(modulus)."""
        if self.kind != EXTENSION:
            raise FieldError(f"{self} is not an extension field")
        return FieldElement(self, self.characteristic)

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        """Coerce an integer (its image under Z -> K), a coefficient sequence
        (extension fields, constant term first) or an element of this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} does not belong to {self}")
            return value
        if isinstance(value, (int, np.integer)):
            residue = int(value) % self.characteristic
            if self.is_finite:
                return FieldElement(self, residue)
            return FieldElement(self, (residue, 1))
        if self.kind != EXTENSION:
            raise FieldError(f"cannot build an element of {self} from {value!r}")
        coeffs = [int(c) for c in value]
        if len(coeffs) > self.degree:
            raise FieldError(f"{coeffs} has more than {self.degree} coefficients")
        return self.from_index(sum((c % self.characteristic) * self.characteristic ** i
                                   for i, c in enumerate(coeffs)))

    def from_index(self, index: int) -> "FieldElement":
        """Element with the given galois integer representation."""
        if not self.is_finite:
            raise NotEnumerableError(f"{self} is not enumerable")
        if not 0 <= index < self.order:
            raise FieldError(f"index {index} out of range for {self}")
        return FieldElement(self, int(index))

    def parse_element(self, text: str) -> "FieldElement":
        text = text.strip()
        try:
            if self.kind == PRIME:
                return self.element(int(text))
            if self.kind == EXTENSION:
                coeffs = [int(c) for c in text.split(":")]
                if any(not 0 <= c < self.characteristic for c in coeffs):
                    raise ParseError(f"coefficient out of range in {text!r} for {self}")
                return self.element(coeffs)
        except ValueError as e:
            raise ParseError(f"invalid {self} literal {text!r}: {e}")
        except FieldError as e:
            raise ParseError(str(e))
        return FieldElement(self, self.rational.parse(text))


class FieldElement:
    """An immutable element of a FieldSpec in canonical representation."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine {self!r} with {other!r}: {self.field} != {other.field}"
                )
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.element(other)
        raise TypeError(f"cannot combine {self!r} with {other!r}")

    def _wrap(self, value) -> "FieldElement":
        return FieldElement(self.field, value)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.field.is_finite:
            return self._wrap(int(self.field.tables.add[self.value, other.value]))
        return self._wrap(self.field.rational.add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        if self.field.is_finite:
            return self._wrap(int(self.field.tables.neg[self.value]))
        return self._wrap(self.field.rational.neg(self.value))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if self.field.is_finite:
            return self._wrap(int(self.field.tables.mul[self.value, other.value]))
        return self._wrap(self.field.rational.mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise FieldDivisionError(f"{self!r} has no inverse")
        if self.field.is_finite:
            return self._wrap(int(self.field.tables.inv[self.value]))
        return self._wrap(self.field.rational.inv(self.value))

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other.is_zero():
            raise FieldDivisionError(f"division by zero: {self!r} / {other!r}")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return self.value == (ZERO if not self.field.is_finite else 0)

    def is_one(self) -> bool:
        return self.value == (ONE if not self.field.is_finite else 1)

    @property
    def coefficients(self) -> Tuple[int, ...]:
        """Coefficient vector over GF(p), constant term first (finite fields)."""
        if not self.field.is_finite:
            raise NotEnumerableError(f"{self.field} elements have no coefficient vector")
        p, digits, n = self.field.characteristic, [], self.value
        for _ in range(self.field.degree):
            n, digit = divmod(n, p)
            digits.append(digit)
        return tuple(digits)

    @property
    def degree(self) -> Optional[int]:
        """Degree at infinity of an F2(t) element: deg num - deg den."""
        return self.field.rational.degree(self.value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        if self.field.kind == PRIME:
            return str(self.value)
        if self.field.kind == EXTENSION:
            return ":".join(str(c) for c in self.coefficients)
        return self.field.rational.format(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.field}, {self})"


def enumerate_elements(F: FieldSpec) -> Iterator[FieldElement]:
    """Yield every element once, zero first.

    The order is lexicographic on coefficient vectors read from the leading
    coefficient down, which is the galois integer order.

    Raises:
        NotEnumerableError: For F2(t)
    """
    if not F.is_finite:
        raise NotEnumerableError(f"{F} is infinite and not enumerable")
    for index in range(F.order):
        yield FieldElement(F, index)


def is_square(F: FieldSpec, a: FieldElement) -> Tuple[bool, Optional[FieldElement]]:
    """Decide whether a is a square; the witness b satisfies b*b == a."""
    a = F.element(a)
    if F.is_finite:
        root = int(F.tables.sqrt[a.value])
        return (True, FieldElement(F, root)) if root >= 0 else (False, None)
    root = F.rational.sqrt(a.value)
    return (True, FieldElement(F, root)) if root is not None else (False, None)


def square_decomposition(F: FieldSpec, a: FieldElement) -> Tuple[FieldElement, FieldElement]:
    """Write an F2(t) element as b^2 + t*c^2 and return (b, c)."""
    a = F.element(a)
    b, c = F.rational.square_decomposition(a.value)
    return FieldElement(F, b), FieldElement(F, c)


def square_class_degree(F: FieldSpec) -> int:
    """[K:K^2] for a field of characteristic 2.

    Raises:
        FieldError: In odd characteristic, where the degree is not used
    """
    if F.characteristic != 2:
        raise FieldError(f"square-class degree undefined in odd characteristic ({F})")
    return 1 if F.is_finite else 2


def parse_field_spec(text: str, degree_cap: int = 64) -> FieldSpec:
    """Parse `GF p`, `GF p^k c0,c1,...,ck` or `F2T`."""
    tokens = text.split()
    try:
        if tokens == ["F2T"]:
            return FieldSpec.f2t(degree_cap)
        if len(tokens) == 2 and tokens[0] == "GF" and "^" not in tokens[1]:
            return FieldSpec.gf(int(tokens[1]))
        if len(tokens) == 3 and tokens[0] == "GF" and "^" in tokens[1]:
            p, k = (int(x) for x in tokens[1].split("^"))
            modulus = [int(c) for c in tokens[2].split(",")]
            return FieldSpec.gf_extension(p, k, modulus)
    except ValueError as e:
        raise ParseError(f"invalid field spec {text!r}: {e}")
    raise ParseError(f"invalid field spec {text!r}; expected 'GF p', 'GF p^k <modulus>' or 'F2T'")
