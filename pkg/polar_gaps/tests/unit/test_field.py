import pytest

from ...src.algebra.exceptions import (
    DegreeOverflowError,
    FieldDivisionError,
    FieldError,
    FieldMismatchError,
    IrreducibilityError,
    NotEnumerableError,
    ParseError,
)
from ...src.algebra.field import (
    FieldSpec,
    enumerate_elements,
    is_square,
    parse_field_spec,
    square_class_degree,
    square_decomposition,
)


@pytest.mark.unit
def test_prime_field_arithmetic(gf3):
    """Test reduction and inverses in GF(3)."""
    two = gf3.element(5)
    assert two == gf3.element(2)
    assert two * two == gf3.one
    assert two.inverse() == two
    assert -gf3.one == two
    assert gf3.one / two == two


@pytest.mark.unit
def test_extension_generator_satisfies_modulus(gf4):
    """Test that the generator of GF(4) is a root of x^2 + x + 1."""
    w = gf4.generator
    assert w * w == gf4.element([1, 1])
    assert w * w + w + gf4.one == gf4.zero
    assert w ** 3 == gf4.one
    assert str(w) == "0:1"


@pytest.mark.unit
def test_reducible_modulus_rejected():
    """Test that x^2 + 1 over GF(2) is refused as a modulus."""
    with pytest.raises(IrreducibilityError):
        FieldSpec.gf_extension(2, 2, (1, 0, 1))


@pytest.mark.unit
@pytest.mark.parametrize("build", [
    lambda: FieldSpec.gf(4),
    lambda: FieldSpec.gf(257),
    lambda: FieldSpec.gf_extension(2, 7, (1, 1, 0, 0, 0, 0, 0, 1)),
    lambda: FieldSpec.gf_extension(3, 2, (2, 0, 2)),
])
def test_invalid_field_specs(build):
    """Test rejection of non-prime characteristics, oversized and non-monic fields."""
    with pytest.raises(FieldError):
        build()


@pytest.mark.unit
def test_enumeration_order(gf4, f2t):
    """Test that elements enumerate once each, zero first, and F2(t) refuses."""
    elements = list(enumerate_elements(gf4))
    assert len(elements) == 4
    assert len(set(elements)) == 4
    assert elements[0] == gf4.zero
    with pytest.raises(NotEnumerableError):
        list(enumerate_elements(f2t))


@pytest.mark.unit
def test_mixed_fields_rejected(gf2, gf3):
    """Test that elements of different fields do not combine."""
    with pytest.raises(FieldMismatchError):
        gf2.one + gf3.one


@pytest.mark.unit
def test_division_by_zero(gf3, f2t):
    """Test division by zero in finite and rational function fields."""
    with pytest.raises(FieldDivisionError):
        gf3.one / gf3.zero
    with pytest.raises(FieldDivisionError):
        f2t.zero.inverse()


@pytest.mark.unit
def test_rational_function_arithmetic(f2t):
    """Test canonical fractions in F2(t)."""
    t = f2t.t
    assert t * t.inverse() == f2t.one
    assert t + t == f2t.zero
    assert f2t.parse_element("01") == t
    assert f2t.parse_element("1/01") == t.inverse()
    assert str(t) == "01"
    assert str(t.inverse()) == "1/01"
    assert ((f2t.one + t * t) / t).degree == 1


@pytest.mark.unit
def test_degree_cap_enforced():
    """Test that fractions past the degree cap raise."""
    F = FieldSpec.f2t(degree_cap=3)
    with pytest.raises(DegreeOverflowError):
        F.t ** 4


@pytest.mark.unit
def test_squares(gf3, f2t):
    """Test square detection with witnesses."""
    assert is_square(gf3, gf3.one) == (True, gf3.one)
    assert is_square(gf3, gf3.element(2)) == (False, None)
    t = f2t.t
    ok, root = is_square(f2t, t * t + f2t.one)
    assert ok and root * root == t * t + f2t.one
    assert not is_square(f2t, t)[0]


@pytest.mark.unit
def test_square_decomposition(f2t):
    """Test a = b^2 + t c^2 over F2(t)."""
    t = f2t.t
    for a in (t, f2t.one + t, (t * t * t + f2t.one) / (t + f2t.one), t.inverse()):
        b, c = square_decomposition(f2t, a)
        assert b * b + t * c * c == a


@pytest.mark.unit
def test_square_class_degree(gf2, gf4, gf3, f2t):
    """Test [K:K^2] for perfect fields and F2(t)."""
    assert square_class_degree(gf2) == 1
    assert square_class_degree(gf4) == 1
    assert square_class_degree(f2t) == 2
    with pytest.raises(FieldError):
        square_class_degree(gf3)


@pytest.mark.unit
def test_parse_field_spec(gf4):
    """Test the field spec syntax of form files."""
    assert parse_field_spec("GF 3") == FieldSpec.gf(3)
    assert parse_field_spec("GF 2^2 1,1,1") == gf4
    assert parse_field_spec("F2T", degree_cap=16).degree_cap == 16
    for text in ("GF", "GF x", "Q 3", "GF 2^2"):
        with pytest.raises(ParseError):
            parse_field_spec(text)


@pytest.mark.unit
def test_parse_element_errors(gf3, gf4, f2t):
    """Test invalid element literals."""
    for F, text in ((gf3, "x"), (gf4, "1:2"), (gf4, "1:1:1"), (f2t, "012"), (f2t, "1/0")):
        with pytest.raises(ParseError):
            F.parse_element(text)


@pytest.mark.unit
@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_odd_prime_square_count(p):
    """Test that GF(p) has (p + 1) / 2 squares, zero included."""
    F = FieldSpec.gf(p)
    squares = [a for a in enumerate_elements(F) if is_square(F, a)[0]]
    assert len(squares) == (p + 1) // 2


@pytest.mark.unit
@pytest.mark.parametrize("k, modulus", [(1, (1, 1)), (2, (1, 1, 1)), (3, (1, 1, 0, 1))])
def test_binary_fields_are_perfect(k, modulus):
    """Test that every element of GF(2^k) is a square."""
    F = FieldSpec.gf(2) if k == 1 else FieldSpec.gf_extension(2, k, modulus)
    for a in enumerate_elements(F):
        ok, root = is_square(F, a)
        assert ok
        assert root * root == a


@pytest.mark.unit
def test_partial_fractions_over_f2t(f2t):
    """Test 1/t + 1/(t + 1) = 1/(t^2 + t)."""
    t = f2t.t
    total = t.inverse() + (t + f2t.one).inverse()
    assert total == (t * t + t).inverse()
    assert str(total) == "1/011"
