import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recipeff.core import (
    MonomialTransform,
    ReciprocalMatrix,
    consistent_from_vector,
    is_consistent,
    make_reciprocal,
    monomial_similarity,
    pareto_dominates,
    perron,
    random_reciprocal,
)

positive_entry = st.floats(min_value=1.0 / 9.0, max_value=9.0)


def test_make_reciprocal_validate_accepts_exact():
    a = np.array([[1.0, 2.0, 4.0], [0.5, 1.0, 2.0], [0.25, 0.5, 1.0]])
    A = make_reciprocal(a)
    assert isinstance(A, ReciprocalMatrix)
    assert A.n == 3
    assert A[1, 2] == 2.0 and A[2, 1] == 0.5


def test_make_reciprocal_rejects_bad_diagonal():
    a = np.array([[1.0, 2.0], [0.5, 1.1]])
    with pytest.raises(ValueError, match=r"\(2,2\)"):
        make_reciprocal(a)


def test_make_reciprocal_rejects_reciprocity_violation():
    a = np.array([[1.0, 2.0], [0.6, 1.0]])
    with pytest.raises(ValueError, match=r"reciprocity violation at \(1,2\)"):
        make_reciprocal(a)


def test_make_reciprocal_rejects_nonpositive_with_location():
    a = np.array([[1.0, -2.0], [0.5, 1.0]])
    with pytest.raises(ValueError, match="row 1, column 2"):
        make_reciprocal(a)


def test_make_reciprocal_rejects_nonsquare_and_tiny():
    with pytest.raises(ValueError, match="square"):
        make_reciprocal(np.ones((2, 3)))
    with pytest.raises(ValueError, match="at least 2"):
        make_reciprocal(np.ones((1, 1)))
    with pytest.raises(ValueError, match="unknown mode"):
        make_reciprocal(np.ones((2, 2)), mode="repair")


def test_symmetrize_overwrites_lower_triangle():
    a = np.array([[1.0, 3.0], [7.0, 5.0]])  # junk diagonal and lower entry
    A = make_reciprocal(a, mode="symmetrize")
    assert A.a[0, 0] == 1.0 and A.a[1, 1] == 1.0
    assert A.a[0, 1] == 3.0
    assert A.a[1, 0] == 1.0 / 3.0


def test_canonical_storage_is_exact_reciprocal():
    # x * (1/x) is not exactly 1 for many doubles, which is why the lower
    # triangle stores 1/a_ij verbatim rather than being checked post hoc.
    A = random_reciprocal(6, seed=7)
    iu, ju = np.triu_indices(6, k=1)
    assert np.array_equal(A.a[ju, iu], 1.0 / A.a[iu, ju])
    prod = A.a * A.a.T
    assert np.max(np.abs(prod - 1.0)) <= 4e-16


def test_consistent_from_vector_and_detection():
    v = np.array([1.0, 2.0, 5.0, 0.5])
    A = consistent_from_vector(v)
    assert is_consistent(A)
    perturbed = A.a.copy()
    perturbed[0, 1] *= 1.3
    assert not is_consistent(make_reciprocal(perturbed, mode="symmetrize"))


def test_consistent_matrix_perron_is_the_vector():
    v = np.array([2.0, 1.0, 4.0, 0.25, 3.0])
    pp = perron(consistent_from_vector(v))
    assert abs(pp.r - 5.0) <= 1e-10
    assert np.max(np.abs(pp.w - v / v[0])) <= 1e-12


def test_perron_normalization_and_residual(base_matrix):
    pp = perron(base_matrix)
    assert pp.w[0] == 1.0
    assert np.all(pp.w > 0)
    assert pp.residual <= 1e-12
    assert pp.r >= base_matrix.n


def test_perron_nonconvergence_raises():
    A = random_reciprocal(4, seed=3)
    with pytest.raises(RuntimeError, match="did not converge"):
        perron(A, max_iter=2)


def test_monomial_transform_validation():
    with pytest.raises(ValueError, match="permutation"):
        MonomialTransform(perm=(0, 0, 1))
    with pytest.raises(ValueError, match="diag length"):
        MonomialTransform(perm=(0, 1), diag=(1.0,))
    with pytest.raises(ValueError, match="positive"):
        MonomialTransform(perm=(0, 1), diag=(1.0, -2.0))


def test_monomial_similarity_permutation_only():
    A = random_reciprocal(4, seed=11)
    Q = MonomialTransform(perm=(2, 0, 3, 1))
    B = monomial_similarity(A, Q)
    p = [2, 0, 3, 1]
    assert np.allclose(B.a, A.a[np.ix_(p, p)])


def test_monomial_similarity_maps_perron_vector():
    A = random_reciprocal(5, seed=23)
    Q = MonomialTransform(perm=(3, 1, 0, 4, 2), diag=(2.0, 0.5, 1.0, 3.0, 0.25))
    B = monomial_similarity(A, Q)
    wa = perron(A).w
    wb = perron(B).w
    image = Q.apply(wa)
    assert np.max(np.abs(wb - image / image[0])) <= 1e-10
    assert abs(perron(B).r - perron(A).r) <= 1e-10


def test_monomial_similarity_dimension_mismatch():
    A = random_reciprocal(3, seed=1)
    with pytest.raises(ValueError, match="dimension"):
        monomial_similarity(A, MonomialTransform(perm=(1, 0)))


def test_pareto_dominates_known_instance():
    A = make_reciprocal(np.array([[1.0, 1.0, 2.0], [1.0, 1.0, 1.0], [0.5, 1.0, 1.0]]))
    w = np.array([1.0, 2.0, 3.0])
    assert pareto_dominates(A, w, np.array([1.0, 2.0, 2.0]))
    assert not pareto_dominates(A, w, w)
    assert not pareto_dominates(A, np.array([1.0, 2.0, 2.0]), w)


def test_pareto_dominates_shape_check():
    A = random_reciprocal(3, seed=5)
    with pytest.raises(ValueError, match="length"):
        pareto_dominates(A, np.ones(3), np.ones(4))


def test_random_reciprocal_deterministic_and_bounded():
    A = random_reciprocal(5, seed=42)
    B = random_reciprocal(5, seed=42)
    assert np.array_equal(A.a, B.a)
    assert np.all(A.a >= 1.0 / 9.0 - 1e-12) and np.all(A.a <= 9.0 + 1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_random_reciprocal_is_canonical(n, seed):
    A = random_reciprocal(n, seed=seed)
    assert np.all(np.diag(A.a) == 1.0)
    iu, ju = np.triu_indices(n, k=1)
    assert np.array_equal(A.a[ju, iu], 1.0 / A.a[iu, ju])


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=3, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_perron_eigenvalue_at_least_n(n, seed):
    pp = perron(random_reciprocal(n, seed=seed))
    assert pp.r >= n - 1e-10
    assert pp.residual <= 1e-10 * pp.r


@settings(max_examples=30, deadline=None)
@given(st.lists(positive_entry, min_size=2, max_size=7))
def test_consistent_iff_rank_one_form(vs):
    A = consistent_from_vector(np.array(vs))
    assert is_consistent(A)
    assert abs(perron(A).r - len(vs)) <= 1e-9 * len(vs)
