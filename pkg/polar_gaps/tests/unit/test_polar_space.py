import pytest

from ...src.algebra.exceptions import (
    AnisotropicFormError,
    BudgetExceededError,
    DegenerateFormError,
    InfiniteFieldError,
    PreconditionError,
)
from ...src.algebra.forms import QuadraticForm
from ...src.algebra.linalg import vector
from ...src.geometry.polar_space import (
    ALGEBRAIC,
    SYNTHETIC,
    build_polar_space,
    count_points_naive,
    export_geometry,
)


@pytest.mark.unit
@pytest.mark.parametrize("space, points, lines, rank", [
    ("hyperbolic_space", 9, 6, 2),
    ("parabolic_space", 15, 15, 2),
    ("elliptic_space", 27, 45, 2),
    ("conic_space", 4, 0, 1),
])
def test_point_and_line_counts(request, space, points, lines, rank):
    """Test the sizes of the standard small polar spaces."""
    P = request.getfixturevalue(space)
    assert P.num_points == points
    assert len(P.lines) == lines
    assert P.rank == rank
    assert count_points_naive(P.form) == points


@pytest.mark.unit
def test_lines_have_q_plus_one_points(elliptic_space):
    """Test that every totally singular line has q+1 points, pairwise collinear."""
    P = elliptic_space
    for line in P.lines:
        assert len(line) == P.q + 1
        assert all(P.collinear(a, b) for a in line for b in line)
    assert (P.line_incidence.sum(axis=1) == P.q + 1).all()


@pytest.mark.unit
def test_self_collinearity_convention(hyperbolic_space):
    """Test x in x^perp and perp of the empty set."""
    P = hyperbolic_space
    assert all(P.collinear(i, i) for i in range(P.num_points))
    assert P.perp([]) == frozenset(range(P.num_points))
    assert 0 in P.perp([0])


@pytest.mark.unit
def test_grid_perps(hyperbolic_space):
    """Test that a point of the grid is collinear with four others."""
    P = hyperbolic_space
    for i in range(P.num_points):
        assert len(P.perp([i])) == 5


@pytest.mark.unit
@pytest.mark.parametrize("space, size", [
    ("hyperbolic_space", 2),
    ("parabolic_space", 3),
    ("elliptic_space", 2),
])
def test_hyperbolic_line_sizes(request, space, size):
    """Test hyperbolic line sizes and agreement of both methods."""
    P = request.getfixturevalue(space)
    for a in range(P.num_points):
        for b in range(a + 1, P.num_points):
            if P.collinear(a, b):
                continue
            line = P.hyperbolic_line(a, b, SYNTHETIC)
            assert len(line) == size
            assert {a, b} <= line
            assert line == P.hyperbolic_line(a, b, ALGEBRAIC)


@pytest.mark.unit
def test_rank_one_double_perp(conic_space):
    """Test that in rank 1 the synthetic double perp is every point."""
    P = conic_space
    assert P.hyperbolic_line(0, 1, SYNTHETIC) == frozenset(range(4))
    assert P.hyperbolic_line(0, 1, ALGEBRAIC) == frozenset({0, 1})


@pytest.mark.unit
def test_hyperbolic_line_preconditions(hyperbolic_space):
    """Test that collinear pairs and unknown methods are rejected."""
    P = hyperbolic_space
    a, b = P.lines[0][:2]
    with pytest.raises(PreconditionError):
        P.hyperbolic_line(a, b)
    with pytest.raises(PreconditionError):
        P.hyperbolic_line(a, a)
    c = next(x for x in range(P.num_points) if not P.collinear(a, x))
    with pytest.raises(ValueError):
        P.hyperbolic_line(a, c, "projective")


@pytest.mark.unit
def test_point_lookup(hyperbolic_space, gf2):
    """Test index_of for singular vectors, scaled vectors and non-singular vectors."""
    P = hyperbolic_space
    for i, point in enumerate(P.points):
        assert P.index_of(point.coordinates) == i
    with pytest.raises(KeyError):
        P.index_of(vector(gf2, (1, 1, 0, 0)))


@pytest.mark.unit
def test_point_lookup_normalizes(conic_space, gf3):
    """Test that a scaled singular vector finds its point."""
    P = conic_space
    v = P.vector(2)
    assert P.index_of(tuple(gf3.element(2) * a for a in v)) == 2


@pytest.mark.unit
def test_build_errors(f2t_form, anisotropic_plane, q_4_2, gf2):
    """Test the refusals of build_polar_space."""
    with pytest.raises(InfiniteFieldError):
        build_polar_space(f2t_form)
    with pytest.raises(AnisotropicFormError):
        build_polar_space(anisotropic_plane)
    with pytest.raises(BudgetExceededError):
        build_polar_space(q_4_2, point_budget=10)
    with pytest.raises(DegenerateFormError):
        build_polar_space(QuadraticForm.from_terms(gf2, 3, {(0, 1): 1}))


@pytest.mark.unit
def test_export_is_deterministic(hyperbolic_space, q_plus_3_2):
    """Test the geometry dump header and its stability across builds."""
    dump = export_geometry(hyperbolic_space)
    assert dump.startswith("# polar space export v1\nfield: GF 2\ndim: 4\n")
    assert "points: 9\n" in dump
    assert "lines: 6\n" in dump
    assert export_geometry(build_polar_space(q_plus_3_2)) == dump
