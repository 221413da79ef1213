"""
Arithmetic in the rational function field F2(t).

Values are kept as a pair (numerator, denominator) of integer-coded GF(2)[t]
polynomials: bit i is the coefficient of t**i. The pair is always reduced
(gcd 1); over GF(2) every nonzero denominator is already monic, so the pair
is canonical.
"""

import logging
from typing import List, Optional, Tuple

import galois

from .exceptions import DegreeOverflowError, FieldDivisionError, ParseError

logger = logging.getLogger(__name__)

GF2 = galois.GF(2)

Fraction = Tuple[int, int]

ZERO: Fraction = (0, 1)
ONE: Fraction = (1, 1)
T: Fraction = (0b10, 1)


def to_poly(code: int) -> galois.Poly:
    return galois.Poly.Int(code, field=GF2)


def _from_degrees(degrees: List[int]) -> galois.Poly:
    if not degrees:
        return galois.Poly.Zero(field=GF2)
    return galois.Poly.Degrees(degrees, field=GF2)


def _degrees(code: int) -> List[int]:
    if code == 0:
        return []
    return [int(d) for d in to_poly(code).nonzero_degrees]


class RationalFunctionArithmetic:
    """Field operations for F2(t) with a cap on polynomial degrees."""

    def __init__(self, degree_cap: int = 64):
        self.degree_cap = degree_cap

    def canonical(self, num: galois.Poly, den: galois.Poly) -> Fraction:
        """
        Reduce num/den to canonical form.

        Raises:
            FieldDivisionError: If den is the zero polynomial
            DegreeOverflowError: If the reduced fraction exceeds the degree cap
        """
        if int(den) == 0:
            raise FieldDivisionError(f"zero denominator in {int(num):b}/0")
        if int(num) == 0:
            return ZERO
        g = galois.gcd(num, den)
        num, den = num // g, den // g
        if num.degree > self.degree_cap or den.degree > self.degree_cap:
            logger.error(f"F2(t) degree cap {self.degree_cap} exceeded")
            raise DegreeOverflowError(
                f"fraction of degrees {num.degree}/{den.degree} exceeds cap {self.degree_cap}"
            )
        return int(num), int(den)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        an, ad = to_poly(a[0]), to_poly(a[1])
        bn, bd = to_poly(b[0]), to_poly(b[1])
        return self.canonical(an * bd + bn * ad, ad * bd)

    def neg(self, a: Fraction) -> Fraction:
        # characteristic 2
        return a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return self.canonical(to_poly(a[0]) * to_poly(b[0]), to_poly(a[1]) * to_poly(b[1]))

    def inv(self, a: Fraction) -> Fraction:
        if a[0] == 0:
            raise FieldDivisionError("inverse of zero in F2(t)")
        return self.canonical(to_poly(a[1]), to_poly(a[0]))

    def sqrt(self, a: Fraction) -> Optional[Fraction]:
        """Square root, or None when a is not a square.

        A reduced fraction is a square exactly when numerator and denominator
        both lie in F2[t^2].
        """
        num_degrees, den_degrees = _degrees(a[0]), _degrees(a[1])
        if any(d % 2 for d in num_degrees) or any(d % 2 for d in den_degrees):
            return None
        return self.canonical(
            _from_degrees([d // 2 for d in num_degrees]),
            _from_degrees([d // 2 for d in den_degrees]),
        )

    def square_decomposition(self, a: Fraction) -> Tuple[Fraction, Fraction]:
        """Return (b, c) with a = b^2 + t*c^2.

        {1, t} is a basis of F2(t) over its squares: writing a = N*D / D^2,
        the even part of N*D is a square and so is the odd part divided by t.
        """
        num, den = to_poly(a[0]), to_poly(a[1])
        degrees = [int(d) for d in (num * den).nonzero_degrees] if a[0] else []
        even = _from_degrees([d // 2 for d in degrees if d % 2 == 0])
        odd = _from_degrees([(d - 1) // 2 for d in degrees if d % 2 == 1])
        return self.canonical(even, den), self.canonical(odd, den)

    def degree(self, a: Fraction) -> Optional[int]:
        """deg(numerator) - deg(denominator); None for zero."""
        if a[0] == 0:
            return None
        return to_poly(a[0]).degree - to_poly(a[1]).degree

    @staticmethod
    def format(a: Fraction) -> str:
        num = format(a[0], "b")[::-1]
        if a[1] == 1:
            return num
        return f"{num}/{format(a[1], 'b')[::-1]}"

    def parse(self, text: str) -> Fraction:
        """Parse `num` or `num/den`, each a 0/1 string with the constant term first."""
        parts = text.strip().split("/")
        if len(parts) > 2 or not all(p and set(p) <= {"0", "1"} for p in parts):
            raise ParseError(f"invalid F2(t) literal: {text!r}")
        codes = [int(p[::-1], 2) for p in parts]
        den = codes[1] if len(codes) == 2 else 1
        if int(den) == 0:
            raise ParseError(f"zero denominator in F2(t) literal: {text!r}")
        return self.canonical(to_poly(codes[0]), to_poly(den))
