"""
Form file reading and writing.

Format: line 1 the field spec, line 2 the dimension d, then d rows of the
upper-triangular coefficient matrix with comma-separated element literals.
Rows may list all d entries or only the d - i entries from the diagonal on.
Blank lines and lines starting with '#' are ignored.
"""

import logging
from pathlib import Path
from typing import Union

from .exceptions import FieldError, FormError, ParseError
from .field import parse_field_spec
from .forms import QuadraticForm

logger = logging.getLogger(__name__)


def parse_form_text(text: str, degree_cap: int = 64) -> QuadraticForm:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if len(lines) < 2:
        raise ParseError("form file needs a field spec line and a dimension line")
    field = parse_field_spec(lines[0], degree_cap)
    try:
        d = int(lines[1])
    except ValueError:
        raise ParseError(f"invalid dimension line: {lines[1]!r}")
    if d < 1:
        raise ParseError(f"dimension must be positive, got {d}")
    rows = lines[2:]
    if len(rows) != d:
        raise ParseError(f"expected {d} coefficient rows, found {len(rows)}")
    try:
        parsed = [[field.parse_element(entry) for entry in row.split(",")] for row in rows]
        return QuadraticForm.from_rows(field, parsed)
    except (FormError, FieldError) as e:
        raise ParseError(str(e))


def load_form(path: Union[str, Path], degree_cap: int = 64) -> QuadraticForm:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        logger.error(f"Failed to read form file {path}: {e}")
        raise ParseError(f"cannot read form file {path}: {e}")
    return parse_form_text(text, degree_cap)


def format_form(phi: QuadraticForm) -> str:
    lines = [phi.field.spec_text, str(phi.dim)] + phi.rows_text()
    return "\n".join(lines) + "\n"
