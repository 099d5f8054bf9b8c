"""GF(2) elimination, solving and affine fitting against brute force."""
import numpy as np
import pytest

from contextua import gf2
from contextua.gf2 import (
    AffineForm,
    Certificate,
    Gf2Solution,
    Gf2System,
    fit_affine,
    input_vector,
    left_nullspace,
    linear_solve,
    nullspace,
    rank,
    row_space_contains,
    rref,
    solve,
    verify_certificate,
)

from conftest import exhaustive_affine_tables


def random_matrix(rng, rows, cols):
    return rng.integers(0, 2, size=(rows, cols)).astype(np.uint8)


def all_assignments(n):
    """All 2^n bit vectors as rows, in binary counting order."""
    indices = np.arange(1 << n)
    shifts = np.arange(n - 1, -1, -1)
    return ((indices[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


def brute_solutions(matrix, rhs):
    """Every solution of A x = b, found by exhaustive enumeration."""
    cand = all_assignments(matrix.shape[1])
    predicted = (cand @ matrix.T) % 2
    hits = np.all(predicted == rhs[None, :], axis=1)
    return cand[hits]


class TestRref:
    def test_reduced_equals_transform_times_input(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            mat = random_matrix(rng, int(rng.integers(1, 9)), int(rng.integers(1, 9)))
            result = rref(mat)
            assert np.array_equal((result.transform @ mat) % 2, result.reduced)

    def test_transform_is_invertible(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            mat = random_matrix(rng, int(rng.integers(1, 8)), int(rng.integers(1, 8)))
            result = rref(mat)
            assert rank(result.transform) == mat.shape[0]

    def test_echelon_shape(self):
        """Pivots increase strictly and pivot columns hold a single one."""
        rng = np.random.default_rng(13)
        for _ in range(150):
            mat = random_matrix(rng, int(rng.integers(1, 8)), int(rng.integers(1, 8)))
            result = rref(mat)
            assert list(result.pivots) == sorted(result.pivots)
            assert len(set(result.pivots)) == len(result.pivots)
            for row, p in enumerate(result.pivots):
                column = result.reduced[:, p]
                assert column[row] == 1 and int(column.sum()) == 1
            assert not result.reduced[result.rank :].any()

    def test_idempotent(self):
        rng = np.random.default_rng(14)
        for _ in range(100):
            mat = random_matrix(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
            reduced = rref(mat).reduced
            assert np.array_equal(rref(reduced).reduced, reduced)

    def test_known_ranks(self):
        assert rank(np.zeros((3, 4), dtype=np.uint8)) == 0
        assert rank(np.eye(5, dtype=np.uint8)) == 5
        assert rank([[1, 1], [1, 1]]) == 1
        assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]]) == 2

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            rref([[0, 2]])


class TestNullspaces:
    def test_left_nullspace_annihilates(self):
        rng = np.random.default_rng(21)
        for _ in range(150):
            mat = random_matrix(rng, int(rng.integers(1, 9)), int(rng.integers(1, 7)))
            basis = left_nullspace(mat)
            assert basis.shape[0] == mat.shape[0] - rank(mat)
            if basis.shape[0]:
                assert not ((basis @ mat) % 2).any()
                assert rank(basis) == basis.shape[0]

    def test_nullspace_annihilates(self):
        rng = np.random.default_rng(22)
        for _ in range(150):
            mat = random_matrix(rng, int(rng.integers(1, 7)), int(rng.integers(1, 9)))
            basis = nullspace(mat)
            assert basis.shape[0] == mat.shape[1] - rank(mat)
            if basis.shape[0]:
                assert not ((mat @ basis.T) % 2).any()
                assert rank(basis) == basis.shape[0]

    def test_nullspace_counts_all_solutions(self):
        """The basis spans exactly the brute-force homogeneous solutions."""
        rng = np.random.default_rng(23)
        for _ in range(60):
            mat = random_matrix(rng, int(rng.integers(1, 6)), int(rng.integers(1, 9)))
            basis = nullspace(mat)
            zero = np.zeros(mat.shape[0], dtype=np.uint8)
            assert brute_solutions(mat, zero).shape[0] == 1 << basis.shape[0]


class TestLinearSolve:
    def test_consistent_systems(self):
        rng = np.random.default_rng(31)
        for _ in range(150):
            mat = random_matrix(rng, int(rng.integers(1, 8)), int(rng.integers(1, 8)))
            seed = rng.integers(0, 2, size=mat.shape[1]).astype(np.uint8)
            rhs = (mat @ seed) % 2
            found = linear_solve(mat, rhs)
            assert found is not None
            assert np.array_equal((mat @ found) % 2, rhs)

    def test_inconsistent_returns_none(self):
        mat = np.array([[1, 0], [1, 0]], dtype=np.uint8)
        assert linear_solve(mat, [0, 1]) is None

    def test_deterministic(self):
        rng = np.random.default_rng(32)
        for _ in range(50):
            mat = random_matrix(rng, 4, 6)
            rhs = (mat @ rng.integers(0, 2, size=6).astype(np.uint8)) % 2
            first = linear_solve(mat, rhs)
            second = linear_solve(mat, rhs)
            assert np.array_equal(first, second)


class TestRowSpace:
    def test_membership_matches_brute_force(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            mat = random_matrix(rng, int(rng.integers(1, 6)), int(rng.integers(1, 7)))
            vec = rng.integers(0, 2, size=mat.shape[1]).astype(np.uint8)
            spanned = {
                tuple((sel @ mat) % 2) for sel in all_assignments(mat.shape[0])
            }
            assert row_space_contains(mat, vec) == (tuple(vec) in spanned)

    def test_empty_matrix_spans_only_zero(self):
        empty = np.zeros((0, 3), dtype=np.uint8)
        assert row_space_contains(empty, [0, 0, 0])
        assert not row_space_contains(empty, [0, 1, 0])


class TestSystemSolve:
    def test_label_validation(self):
        mat = np.eye(2, dtype=np.uint8)
        with pytest.raises(ValueError):
            Gf2System(matrix=mat, rhs=[0, 0], labels=("a",))
        with pytest.raises(ValueError):
            Gf2System(matrix=mat, rhs=[0, 0], labels=("a", "a"))

    def test_against_brute_force(self):
        """Existence agrees with enumeration; witnesses and proofs check out.

        Consistent draws get a planted solution so both outcomes show up in
        quantity.
        """
        rng = np.random.default_rng(42)
        solved = refuted = 0
        for _ in range(300):
            n = int(rng.integers(1, 13))
            r = int(rng.integers(1, 15))
            mat = random_matrix(rng, r, n)
            if rng.integers(0, 2):
                seed = rng.integers(0, 2, size=n).astype(np.uint8)
                rhs = (mat @ seed) % 2
            else:
                rhs = rng.integers(0, 2, size=r).astype(np.uint8)
            system = Gf2System(matrix=mat, rhs=rhs, labels=tuple(range(n)))
            outcome = solve(system)
            hits = brute_solutions(mat, rhs)
            if isinstance(outcome, Gf2Solution):
                solved += 1
                assert hits.shape[0] == 1 << outcome.dimension
                assert np.array_equal((mat @ outcome.assignment) % 2, rhs)
            else:
                refuted += 1
                assert hits.shape[0] == 0
                assert isinstance(outcome, Certificate)
                assert verify_certificate(system, outcome)
                sel = outcome.row_selector
                assert not ((sel @ mat) % 2).any()
                assert int(sel @ rhs) % 2 == 1
        assert solved > 50 and refuted > 50

    def test_certificate_selected_indices(self):
        system = Gf2System(
            matrix=[[1, 0], [1, 0], [0, 1]], rhs=[0, 1, 0], labels=("u", "v")
        )
        outcome = solve(system)
        assert isinstance(outcome, Certificate)
        assert outcome.selected == (0, 1)

    def test_solution_nullspace_satisfies_system(self):
        rng = np.random.default_rng(43)
        for _ in range(80):
            mat = random_matrix(rng, int(rng.integers(1, 6)), int(rng.integers(2, 9)))
            seed = rng.integers(0, 2, size=mat.shape[1]).astype(np.uint8)
            rhs = (mat @ seed) % 2
            labels = tuple(f"x{i}" for i in range(mat.shape[1]))
            outcome = solve(Gf2System(matrix=mat, rhs=rhs, labels=labels))
            assert isinstance(outcome, Gf2Solution)
            for row in outcome.nullspace:
                shifted = (outcome.assignment ^ row).astype(np.uint8)
                assert np.array_equal((mat @ shifted) % 2, rhs)


class TestAffine:
    def test_input_vector(self):
        assert input_vector(0, 2) == (0, 0)
        assert input_vector(1, 2) == (0, 1)
        assert input_vector(2, 2) == (1, 0)
        assert input_vector(3, 2) == (1, 1)
        assert input_vector(5, 3) == (1, 0, 1)

    def test_evaluate_checks_arity(self):
        form = AffineForm(a=(1, 0), c=1)
        with pytest.raises(ValueError):
            form.evaluate((1,))

    def test_fit_recovers_known_forms(self):
        xor = fit_affine([0, 1, 1, 0])
        assert xor == AffineForm(a=(1, 1), c=0)
        negated = fit_affine([1, 0, 0, 1])
        assert negated == AffineForm(a=(1, 1), c=1)
        constant = fit_affine([1, 1, 1, 1])
        assert constant == AffineForm(a=(0, 0), c=1)
        second_bit = fit_affine([0, 1, 0, 1])
        assert second_bit == AffineForm(a=(0, 1), c=0)

    def test_fit_rejects_non_affine(self):
        assert fit_affine([0, 1, 1, 1]) is None
        assert fit_affine([0, 0, 0, 1]) is None
        assert fit_affine([0, 1, 1, 0, 1, 0, 0, 0]) is None

    def test_exhaustive_agreement_small_arity(self):
        """fit_affine accepts exactly the affine tables for m <= 2."""
        for m in (1, 2):
            affine = exhaustive_affine_tables(m)
            for index in range(1 << (1 << m)):
                table = tuple((index >> k) & 1 for k in range(1 << m))
                form = fit_affine(table)
                if table in affine:
                    assert form is not None
                    recovered = tuple(
                        form.evaluate(input_vector(i, m)) for i in range(1 << m)
                    )
                    assert recovered == table
                else:
                    assert form is None

    def test_fit_recovers_random_forms(self):
        rng = np.random.default_rng(44)
        for _ in range(100):
            m = int(rng.integers(1, 4))
            planted = AffineForm(
                a=tuple(int(b) for b in rng.integers(0, 2, size=m)),
                c=int(rng.integers(0, 2)),
            )
            table = [planted.evaluate(input_vector(i, m)) for i in range(1 << m)]
            assert fit_affine(table) == planted

    def test_fit_requires_power_of_two(self):
        with pytest.raises(ValueError):
            fit_affine([0, 1, 0])
        with pytest.raises(ValueError):
            fit_affine([])
