"""
Property-based checks of the field axioms.
"""
import galois
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ...src.algebra.field import FieldSpec, is_square
from ...src.algebra.rational_functions import to_poly

FINITE_FIELDS = [
    FieldSpec.gf(2),
    FieldSpec.gf(3),
    FieldSpec.gf(5),
    FieldSpec.gf(7),
    FieldSpec.gf_extension(2, 2, (1, 1, 1)),
    FieldSpec.gf_extension(2, 3, (1, 1, 0, 1)),
    FieldSpec.gf_extension(3, 2, (2, 2, 1)),
]
F2T = FieldSpec.f2t(degree_cap=32)


@st.composite
def finite_triples(draw):
    F = draw(st.sampled_from(FINITE_FIELDS))
    index = st.integers(min_value=0, max_value=F.order - 1)
    return F, [F.from_index(draw(index)) for _ in range(3)]


@st.composite
def rational_functions(draw, nonzero=False):
    num = draw(st.integers(min_value=1 if nonzero else 0, max_value=63))
    den = draw(st.integers(min_value=1, max_value=63))
    return F2T.parse_element(f"{format(num, 'b')[::-1]}/{format(den, 'b')[::-1]}")


@pytest.mark.unit
@settings(deadline=None)
@given(finite_triples())
def test_finite_field_axioms(case):
    """Test associativity, commutativity and distributivity in finite fields."""
    F, (a, b, c) = case
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if not a.is_zero():
        assert a * a.inverse() == F.one


@pytest.mark.unit
@settings(deadline=None)
@given(finite_triples())
def test_finite_field_squares(case):
    """Test that every square is recognized with a valid root."""
    F, (a, _, _) = case
    ok, root = is_square(F, a * a)
    assert ok
    assert root * root == a * a


@pytest.mark.unit
@settings(max_examples=50, deadline=None)
@given(rational_functions(), rational_functions(), rational_functions(nonzero=True))
def test_rational_function_axioms(a, b, c):
    """Test field axioms in F2(t) on small fractions."""
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a / c) * c == a
    assert a + a == F2T.zero


@pytest.mark.unit
@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["add", "mul", "div"]), rational_functions(nonzero=True)),
                min_size=1, max_size=6))
def test_rational_function_canonical_form(steps):
    """Test that combined fractions stay reduced and their literals read back unchanged."""
    total = F2T.one
    for op, x in steps:
        if op == "add":
            total = total + x
        elif op == "mul":
            total = total * x
        else:
            total = total / x
    num, den = total.value
    if num:
        assert galois.gcd(to_poly(num), to_poly(den)) == to_poly(1)
    text = str(total)
    again = F2T.parse_element(text)
    assert again == total
    assert str(again) == text
