import pytest

from ...src.algebra.exceptions import (
    AnisotropicFormError,
    BudgetExceededError,
    DegenerateFormError,
    InconclusiveError,
)
from ...src.algebra.field import square_class_degree
from ...src.algebra.forms import QuadraticForm, eval_bilinear, eval_form, bilinearize, random_equivalent
from ...src.algebra.witt import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    GapReport,
    SearchLimits,
    certify_anisotropic,
    find_singular_vector,
    gaps,
    witt_decompose,
)


@pytest.mark.unit
@pytest.mark.parametrize("fixture, expected", [
    ("q_plus_3_2", (2, 0, 0, 0, HYPERBOLIC)),
    ("q_4_2", (2, 0, 1, 1, PARABOLIC)),
    ("q_minus_5_2", (2, 2, 0, 2, ELLIPTIC)),
    ("conic_3", (1, 1, 0, 1, ELLIPTIC)),
])
def test_gaps_of_standard_quadrics(request, fixture, expected):
    """Test (n, e, p, r, label) of the standard finite quadrics."""
    report = gaps(request.getfixturevalue(fixture))
    assert (report.n, report.e, report.p, report.r, report.label) == expected


@pytest.mark.unit
def test_gaps_over_f2t(f2t_form):
    """Test a mixed form over F2(t): one pair, an anisotropic plane, a radical line."""
    report = gaps(f2t_form, SearchLimits(search_degree=2, search_budget=5000))
    assert (report.n, report.e, report.p, report.r) == (1, 2, 1, 3)
    assert report.label == "(2,1)-orthogonal"


@pytest.mark.unit
def test_gap_labels():
    """Test labels derived from (e, p)."""
    assert GapReport.from_counts(3, 0, 0).label == HYPERBOLIC
    assert GapReport.from_counts(1, 2, 0).label == ELLIPTIC
    assert GapReport.from_counts(1, 0, 1).label == PARABOLIC
    assert GapReport.from_counts(1, 2, 1).as_dict() == {"n": 1, "e": 2, "p": 1, "r": 3,
                                                        "label": "(2,1)-orthogonal"}


@pytest.mark.unit
def test_decomposition_pairs_are_hyperbolic(q_minus_5_2):
    """Test that every split pair has phi(v) = phi(w) = 0 and f(v, w) = 1."""
    decomposition = witt_decompose(q_minus_5_2)
    f = bilinearize(q_minus_5_2)
    assert decomposition.n == 2
    for v, w in decomposition.pairs:
        assert eval_form(q_minus_5_2, v).is_zero()
        assert eval_form(q_minus_5_2, w).is_zero()
        assert eval_bilinear(f, v, w).is_one()
    assert len(decomposition.basis()) == 6


@pytest.mark.unit
def test_block_form_of_decomposition(q_4_2):
    """Test that the decomposition basis puts hyperbolic blocks first."""
    block = witt_decompose(q_4_2).block_form(q_4_2)
    assert block.coeffs[0][1].is_one() and block.coeffs[2][3].is_one()
    assert all(block.coeffs[i][i].is_zero() for i in range(4))
    assert not block.coeffs[4][4].is_zero()


@pytest.mark.unit
@pytest.mark.parametrize("seed", [1, 5, 9])
def test_gaps_are_invariant(q_4_2, q_minus_5_2, seed):
    """Test that random equivalents keep their gap report."""
    for phi in (q_4_2, q_minus_5_2):
        assert gaps(random_equivalent(phi, seed)) == gaps(phi)


@pytest.mark.unit
def test_degenerate_form_rejected(gf2):
    """Test that a singular radical vector makes the decomposition fail."""
    phi = QuadraticForm.from_terms(gf2, 2, {(0, 0): 1, (1, 1): 1})
    with pytest.raises(DegenerateFormError):
        witt_decompose(phi)


@pytest.mark.unit
def test_anisotropic_form_has_no_gap_report(anisotropic_plane):
    """Test that Witt index 0 is reported as an anisotropic form."""
    assert witt_decompose(anisotropic_plane).n == 0
    with pytest.raises(AnisotropicFormError):
        gaps(anisotropic_plane)


@pytest.mark.unit
def test_finite_search_budget(q_plus_3_2):
    """Test the point budget of the finite singular-vector search."""
    with pytest.raises(BudgetExceededError):
        find_singular_vector(q_plus_3_2, limits=SearchLimits(point_budget=5))
    v = find_singular_vector(q_plus_3_2)
    assert eval_form(q_plus_3_2, v).is_zero()


@pytest.mark.unit
def test_f2t_certificates(f2t):
    """Test the anisotropy certificate on norm forms over F2(t)."""
    norm = QuadraticForm.from_terms(f2t, 2, {(0, 0): 1, (0, 1): 1, (1, 1): 1})
    assert certify_anisotropic(norm) is True
    norm_and_t = QuadraticForm.from_terms(f2t, 3, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (2, 2): f2t.t})
    assert certify_anisotropic(norm_and_t) is True
    assert find_singular_vector(norm_and_t) is None
    plane = QuadraticForm.from_terms(f2t, 2, {(0, 1): 1})
    assert certify_anisotropic(plane) is False


@pytest.mark.unit
def test_f2t_search_inconclusive(f2t_form):
    """Test that an exhausted search without certificate is inconclusive."""
    with pytest.raises(InconclusiveError):
        find_singular_vector(f2t_form, limits=SearchLimits(search_degree=0, search_budget=1))


@pytest.mark.unit
def test_f2t_gaps_within_square_class_degree(f2t_form):
    """Test p <= [K:K^2] and e/2 + p <= [K:K^2] over F2(t)."""
    report = gaps(f2t_form, SearchLimits(search_degree=2, search_budget=5000))
    degree = square_class_degree(f2t_form.field)
    assert degree == 2
    assert report.p <= degree
    assert report.e // 2 + report.p <= degree
