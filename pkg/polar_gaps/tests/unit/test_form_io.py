import pytest

from ...src.algebra.exceptions import ParseError
from ...src.algebra.form_io import format_form, load_form, parse_form_text
from ...src.algebra.witt import gaps


@pytest.mark.unit
def test_parse_upper_rows(q_4_2):
    """Test parsing a form written with upper-part rows and comments."""
    text = "# Q(4,2)\nGF 2\n5\n1,0,0,0,0\n0,1,0,0\n\n0,0,0\n0,1\n0\n"
    assert parse_form_text(text) == q_4_2


@pytest.mark.unit
def test_parse_extension_field(gf4):
    """Test element literals of GF(4) written as coefficient lists."""
    phi = parse_form_text("GF 2^2 1,1,1\n2\n1,1\n0:1\n")
    assert phi.field == gf4
    assert phi.coeffs[1][1] == gf4.generator


@pytest.mark.unit
def test_format_then_parse(q_minus_5_2):
    """Test that a formatted form parses back to itself."""
    assert parse_form_text(format_form(q_minus_5_2)) == q_minus_5_2


@pytest.mark.unit
@pytest.mark.parametrize("text", [
    "GF 2\n",
    "GF 2\nx\n",
    "GF 2\n0\n",
    "GF 2\n2\n1,0\n",
    "GF 2\n2\n1,0,1\n1\n",
    "GF 2\n2\n0,0\n1,0\n",
    "GF 2\n2\nz,0\n1\n",
])
def test_malformed_forms(text):
    """Test that malformed form files raise ParseError."""
    with pytest.raises(ParseError):
        parse_form_text(text)


@pytest.mark.unit
def test_missing_file(tmp_path):
    """Test reading a non-existent form file."""
    with pytest.raises(ParseError):
        load_form(tmp_path / "missing.form")


@pytest.mark.unit
@pytest.mark.parametrize("name, expected", [
    ("q_plus_3_2.form", (2, 0, 0)),
    ("q_4_2.form", (2, 0, 1)),
    ("q_minus_5_2.form", (2, 2, 0)),
    ("conic_3.form", (1, 1, 0)),
    ("f2t_example.form", (1, 2, 1)),
])
def test_shipped_forms(forms_dir, name, expected):
    """Test the example form files in forms/."""
    report = gaps(load_form(forms_dir / name))
    assert (report.n, report.e, report.p) == expected
