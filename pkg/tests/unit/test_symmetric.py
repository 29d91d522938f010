"""Unit tests for the symmetric eigen kernel and orthogonal alignment."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from weyl_forge.core.exceptions import DomainError, InputValidationError, NumericalError
from weyl_forge.linalg.alignment import align_orthogonal, align_pair
from weyl_forge.linalg.symmetric import (
    SymMatrix,
    add_outer,
    inertia,
    sigma_decomposition,
    spectrum,
    sym_eigen,
)
from weyl_forge.polynomials.rooted import make_poly

ORDER = 5
square_entries = arrays(
    np.float64,
    (ORDER, ORDER),
    elements=st.floats(min_value=-10.0, max_value=10.0, allow_subnormal=False),
)


def _random_symmetric(rng: np.random.Generator, n: int) -> SymMatrix:
    x = rng.standard_normal((n, n))
    return SymMatrix(x + x.T)


def _random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix from the QR of a Gaussian matrix."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


class TestSymMatrix:
    """Test SymMatrix construction."""

    def test_symmetrizes(self) -> None:
        """Test averaging makes the entries exactly symmetric."""
        m = SymMatrix(np.array([[1.0, 2.0], [4.0, 3.0]]))
        assert m.entries[0, 1] == m.entries[1, 0] == 3.0

    def test_read_only(self) -> None:
        """Test the stored entries cannot be mutated."""
        m = SymMatrix(np.eye(2))
        with pytest.raises(ValueError):
            m.entries[0, 0] = 5.0

    def test_rejects_non_square(self) -> None:
        """Test non-square and empty inputs are domain errors."""
        with pytest.raises(DomainError):
            SymMatrix(np.zeros((2, 3)))
        with pytest.raises(DomainError):
            SymMatrix(np.zeros((0, 0)))

    def test_rejects_non_finite(self) -> None:
        """Test nan entries are validation errors."""
        with pytest.raises(InputValidationError):
            SymMatrix(np.array([[math.nan]]))


class TestSymEigen:
    """Test the cyclic Jacobi eigensolver."""

    def test_diagonal_input(self) -> None:
        """Test a diagonal matrix needs no rotations."""
        eig = sym_eigen(SymMatrix(np.diag([0.0, 3.0, 1.0])))
        assert eig.values.tolist() == [3.0, 1.0, 0.0]
        assert eig.sweeps == 0
        assert np.array_equal(np.abs(eig.vectors), np.eye(3)[:, [1, 2, 0]])

    def test_two_by_two(self) -> None:
        """Test the closed-form 2x2 eigenproblem."""
        eig = sym_eigen(SymMatrix(np.array([[0.0, 1.0], [1.0, 0.0]])))
        assert eig.values == pytest.approx([1.0, -1.0], abs=1e-14)
        r = 1.0 / math.sqrt(2.0)
        assert np.abs(eig.vectors) == pytest.approx(np.full((2, 2), r), abs=1e-14)
        assert eig.vectors[:, 0] == pytest.approx([r, r], abs=1e-14)

    @pytest.mark.filterwarnings("error")
    def test_tiny_off_diagonal(self) -> None:
        """Test a subnormal entry next to a large gap rotates without overflow."""
        m = np.array([[1.0, 1e-310, 0.0], [1e-310, 0.0, 1.0], [0.0, 1.0, 5.0]])
        eig = sym_eigen(SymMatrix(m))
        rebuilt = eig.vectors @ np.diag(eig.values) @ eig.vectors.T
        assert np.max(np.abs(rebuilt - m)) <= 1e-12
        assert eig.values[1] == pytest.approx(1.0, abs=1e-12)

    def test_negligible_entry_is_dropped(self) -> None:
        """Test entries below the last bit of both diagonals are zeroed."""
        m = np.array([[4.0, 1e-20, 1.0], [1e-20, 2.0, 0.0], [1.0, 0.0, 3.0]])
        eig = sym_eigen(SymMatrix(m))
        rebuilt = eig.vectors @ np.diag(eig.values) @ eig.vectors.T
        assert np.max(np.abs(rebuilt - m)) <= 1e-12
        assert np.max(np.abs(eig.vectors.T @ eig.vectors - np.eye(3))) <= 1e-12

    def test_zero_matrix(self) -> None:
        """Test all-zero input."""
        eig = sym_eigen(SymMatrix(np.zeros((4, 4))))
        assert eig.values.tolist() == [0.0] * 4

    def test_non_convergence(self) -> None:
        """Test that running out of sweeps is a numerical error with the residual."""
        m = SymMatrix(np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 5.0], [3.0, 5.0, 6.0]]))
        with pytest.raises(NumericalError) as exc:
            sym_eigen(m, max_sweeps=0)
        assert exc.value.details["residual"] > 0.0

    def test_sign_convention(self, rng: np.random.Generator) -> None:
        """Test the largest entry of each column is positive."""
        eig = sym_eigen(_random_symmetric(rng, 6))
        for j in range(6):
            col = eig.vectors[:, j]
            assert col[np.argmax(np.abs(col))] > 0.0

    @settings(max_examples=100, deadline=None)
    @given(x=square_entries)
    def test_reconstruction(self, x: np.ndarray) -> None:
        """Test orthonormality, reconstruction and sorted values."""
        m = SymMatrix(x)
        eig = sym_eigen(m)
        v = eig.vectors
        assert np.max(np.abs(v.T @ v - np.eye(ORDER))) <= 1e-10
        recon = v @ np.diag(eig.values) @ v.T
        assert np.max(np.abs(recon - m.entries)) <= 1e-10 * max(1.0, m.max_norm)
        assert all(a >= b for a, b in zip(eig.values, eig.values[1:]))

    @settings(max_examples=100, deadline=None)
    @given(x=square_entries)
    def test_traces(self, x: np.ndarray) -> None:
        """Test sum of values and of squares match the traces."""
        m = SymMatrix(x)
        values = sym_eigen(m).values
        bound = 1e-10 * max(1.0, m.fro_norm)
        assert abs(values.sum() - np.trace(m.entries)) <= bound
        assert abs((values**2).sum() - np.trace(m.entries @ m.entries)) <= bound * max(
            1.0, m.fro_norm
        )

    def test_spectrum_as_poly(self) -> None:
        """Test spectrum returns sorted roots."""
        f = spectrum(SymMatrix(np.diag([-1.0, 2.0])))
        assert f.roots == (2.0, -1.0)


class TestInertia:
    """Test tolerant inertia."""

    def test_mixed_signs(self) -> None:
        """Test diag(1,-1,0)."""
        i = inertia(SymMatrix(np.diag([1.0, -1.0, 0.0])))
        assert (i.n_plus, i.n_minus, i.n_zero) == (1, 1, 1)
        assert i.order == 3

    def test_rank_one(self) -> None:
        """Test a positive semidefinite rank-one matrix."""
        alpha = np.array([1.0, 2.0])
        i = inertia(SymMatrix(np.outer(alpha, alpha)))
        assert (i.n_plus, i.n_minus, i.n_zero) == (1, 0, 1)

    def test_negative_identity(self) -> None:
        """Test -I."""
        i = inertia(SymMatrix(-np.eye(3)))
        assert (i.n_plus, i.n_minus, i.n_zero) == (0, 3, 0)

    def test_negative_tolerance(self) -> None:
        """Test zero_tol must be nonnegative."""
        with pytest.raises(DomainError):
            inertia(SymMatrix(np.eye(2)), zero_tol=-1.0)

    def test_sylvester(self, rng: np.random.Generator) -> None:
        """Test inertia is invariant under orthogonal congruence."""
        for _ in range(20):
            m = _random_symmetric(rng, 5)
            v = _random_orthogonal(rng, 5)
            before, after = inertia(m), inertia(m.congruent(v))
            assert (after.n_plus, after.n_minus) == (before.n_plus, before.n_minus)


class TestOuterProducts:
    """Test rank-one updates and signed decompositions."""

    def test_add_outer(self) -> None:
        """Test +vv^T and -vv^T updates."""
        m = add_outer(SymMatrix(np.zeros((2, 2))), np.array([1.0, 0.0]), 1)
        assert m.entries.tolist() == [[1.0, 0.0], [0.0, 0.0]]
        m = add_outer(SymMatrix(np.eye(2)), np.array([1.0, 1.0]), -1)
        assert m.entries.tolist() == [[0.0, -1.0], [-1.0, 0.0]]

    def test_zero_vector(self, rng: np.random.Generator) -> None:
        """Test a zero vector leaves M unchanged."""
        m = _random_symmetric(rng, 3)
        assert np.array_equal(add_outer(m, np.zeros(3)).entries, m.entries)

    def test_add_outer_errors(self) -> None:
        """Test length and sign validation."""
        with pytest.raises(DomainError):
            add_outer(SymMatrix(np.eye(2)), np.ones(3))
        with pytest.raises(DomainError):
            add_outer(SymMatrix(np.eye(2)), np.ones(2), sign=2)

    def test_signed_sums_respect_counts(self, rng: np.random.Generator) -> None:
        """Test sum of p positive and q negative terms has n+ <= p, n- <= q."""
        for p, q in [(0, 0), (1, 0), (2, 1), (0, 3), (3, 3)]:
            h = SymMatrix(np.zeros((5, 5)))
            for vec in rng.standard_normal((p, 5)):
                h = add_outer(h, vec, 1)
            for vec in rng.standard_normal((q, 5)):
                h = add_outer(h, vec, -1)
            i = inertia(h)
            assert i.n_plus <= p
            assert i.n_minus <= q

    def test_sigma_decomposition(self, rng: np.random.Generator) -> None:
        """Test the spectral vectors reproduce H with matching counts."""
        for _ in range(20):
            h = _random_symmetric(rng, 6)
            plus, minus = sigma_decomposition(h)
            total = sum((np.outer(a, a) for a in plus), np.zeros((6, 6)))
            total -= sum((np.outer(b, b) for b in minus), np.zeros((6, 6)))
            assert np.max(np.abs(total - h.entries)) <= 1e-9 * max(1.0, h.max_norm)
            i = inertia(h)
            assert (len(plus), len(minus)) == (i.n_plus, i.n_minus)


class TestAlignment:
    """Test orthogonal alignment onto a matrix with a known spectrum."""

    def test_already_diagonal(self) -> None:
        """Test diag(3,1) aligns with the identity up to signs."""
        v = align_orthogonal(make_poly([3, 1]), SymMatrix(np.diag([3.0, 1.0])))
        assert np.abs(v) == pytest.approx(np.eye(2))

    def test_swap_matrix(self) -> None:
        """Test alignment of (1,-1) onto [[0,1],[1,0]]."""
        c = SymMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        v = align_orthogonal(make_poly([1, -1]), c)
        assert v @ np.diag([1.0, -1.0]) @ v.T == pytest.approx(c.entries, abs=1e-12)
        assert np.abs(v) == pytest.approx(np.full((2, 2), 1 / math.sqrt(2)))

    def test_degenerate_cluster(self) -> None:
        """Test any basis works for a repeated eigenvalue."""
        c = SymMatrix(5.0 * np.eye(2))
        v = align_orthogonal(make_poly([5, 5]), c)
        assert v @ np.diag([5.0, 5.0]) @ v.T == pytest.approx(c.entries)

    def test_spectrum_mismatch(self) -> None:
        """Test a wrong spectrum is reported with the worst pair."""
        with pytest.raises(DomainError) as exc:
            align_orthogonal(make_poly([3, 0]), SymMatrix(np.diag([3.0, 1.0])))
        assert exc.value.details["index"] == 2

    def test_degree_mismatch(self) -> None:
        """Test the degree must equal the order."""
        with pytest.raises(DomainError):
            align_orthogonal(make_poly([1]), SymMatrix(np.eye(2)))

    def test_random_orthogonality(self, rng: np.random.Generator) -> None:
        """Test returned V is orthogonal for random C."""
        for _ in range(20):
            c = _random_symmetric(rng, 6)
            v = align_orthogonal(spectrum(c), c)
            assert np.max(np.abs(v.T @ v - np.eye(6))) <= 1e-10

    def test_pair(self, rng: np.random.Generator) -> None:
        """Test V C1 V^T = C for two matrices with one spectrum."""
        h = make_poly([4.0, 1.0, 1.0, -2.0])
        c = SymMatrix.diagonal(h).congruent(_random_orthogonal(rng, 4))
        c1 = SymMatrix.diagonal(h).congruent(_random_orthogonal(rng, 4))
        v = align_pair(h, c, c1)
        assert np.max(np.abs(v @ c1.entries @ v.T - c.entries)) <= 1e-8
