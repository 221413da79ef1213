import pytest

from ...src.algebra.exceptions import DimensionMismatchError, FieldError
from ...src.algebra.linalg import (
    Subspace,
    inverse_matrix,
    mat_vec,
    normalize,
    nullspace,
    row_reduce,
    solve,
    unit_vector,
    vector,
)


@pytest.mark.unit
def test_row_reduce_rank(gf3):
    """Test rank and pivots of a dependent system over GF(3)."""
    rows = [vector(gf3, r) for r in ((1, 2, 0), (2, 1, 0), (0, 1, 1))]
    reduced = row_reduce(gf3, rows, 3)
    assert reduced.rank == 2
    assert reduced.pivots == [0, 1]


@pytest.mark.unit
def test_nullspace_is_annihilated(gf3):
    """Test that nullspace vectors solve the system."""
    rows = [vector(gf3, (1, 1, 1)), vector(gf3, (0, 1, 2))]
    basis = nullspace(gf3, rows, 3)
    assert len(basis) == 1
    assert all(x.is_zero() for x in mat_vec(rows, basis[0]))


@pytest.mark.unit
def test_subspace_equality_is_canonical(gf2):
    """Test that different spanning sets give equal subspaces."""
    a = Subspace.span(gf2, 3, [vector(gf2, (1, 1, 0)), vector(gf2, (0, 1, 1))])
    b = Subspace.span(gf2, 3, [vector(gf2, (1, 0, 1)), vector(gf2, (0, 1, 1))])
    assert a == b
    assert a.dim == 2
    assert a.contains(vector(gf2, (1, 0, 1)))
    assert not a.contains(vector(gf2, (1, 0, 0)))


@pytest.mark.unit
def test_intersection_and_join(gf3):
    """Test intersection and join of coordinate planes."""
    e = [unit_vector(gf3, 3, i) for i in range(3)]
    xy = Subspace.span(gf3, 3, [e[0], e[1]])
    yz = Subspace.span(gf3, 3, [e[1], e[2]])
    assert xy.intersection(yz) == Subspace.span(gf3, 3, [e[1]])
    assert xy.join(yz) == Subspace.full(gf3, 3)
    assert Subspace.zero(gf3, 3).is_subspace_of(xy)


@pytest.mark.unit
def test_complements(gf2):
    """Test complement bases at non-pivot positions and relative complements."""
    line = Subspace.span(gf2, 3, [vector(gf2, (0, 1, 1))])
    complement = line.complement_basis()
    assert line.extend(*complement) == Subspace.full(gf2, 3)
    full = Subspace.full(gf2, 3)
    rest = full.relative_complement(line)
    assert len(rest) == 2
    assert line.extend(*rest) == full


@pytest.mark.unit
def test_coordinates_round_trip(gf3):
    """Test coordinates in an echelon basis and lifting back."""
    S = Subspace.span(gf3, 3, [vector(gf3, (1, 0, 2)), vector(gf3, (0, 1, 1))])
    v = vector(gf3, (2, 1, 2))
    assert S.lift(S.coordinates(v)) == v
    with pytest.raises(DimensionMismatchError):
        S.coordinates(vector(gf3, (0, 0, 1)))


@pytest.mark.unit
def test_inverse_and_solve(gf3):
    """Test matrix inversion and linear solving."""
    M = [vector(gf3, (1, 2)), vector(gf3, (0, 1))]
    inverse = inverse_matrix(gf3, M)
    product = [mat_vec(M, col) for col in zip(*inverse)]
    assert [tuple(c) for c in zip(*product)] == [unit_vector(gf3, 2, 0), unit_vector(gf3, 2, 1)]
    x = solve(gf3, M, vector(gf3, (1, 1)))
    assert mat_vec(M, x) == vector(gf3, (1, 1))
    singular = [vector(gf3, (1, 2)), vector(gf3, (2, 1))]
    with pytest.raises(FieldError):
        inverse_matrix(gf3, singular)
    assert solve(gf3, singular, vector(gf3, (1, 0))) is None


@pytest.mark.unit
def test_normalize(gf3):
    """Test scaling to a leading one and rejection of zero."""
    assert normalize(vector(gf3, (0, 2, 1))) == vector(gf3, (0, 1, 2))
    with pytest.raises(FieldError):
        normalize(vector(gf3, (0, 0)))
