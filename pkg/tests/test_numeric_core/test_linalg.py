import numpy as np
import pytest

from akns_rational.errors import PrecisionMismatchError, RankDeficientError
from akns_rational.numeric_core.linalg import eig_dense, solve_least_squares, solve_square
from akns_rational.numeric_core.scalar import DOUBLE, Precision


class TestLeastSquares:
    def test_identity(self):
        b = np.array([1.0, 2j, -3.0])
        assert np.allclose(solve_least_squares(np.eye(3, dtype=complex), b), b)

    def test_mean(self):
        x = solve_least_squares(np.array([[1.0], [1.0]]), np.array([1.0, 3.0]))
        assert x[0] == pytest.approx(2.0)

    def test_normal_equations(self):
        rng = np.random.default_rng(11)
        a = rng.standard_normal((40, 20)) + 1j * rng.standard_normal((40, 20))
        b = rng.standard_normal(40) + 1j * rng.standard_normal(40)
        expected = np.linalg.solve(a.conj().T @ a, a.conj().T @ b)
        assert np.max(np.abs(solve_least_squares(a, b) - expected)) < 1e-10

    def test_rank_deficient(self):
        a = np.array([[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]])
        with pytest.raises(RankDeficientError, match="rank 1 < 2"):
            solve_least_squares(a, np.ones(3))
        x = solve_least_squares(a, np.ones(3), allow_rank_deficient=True)
        assert x.shape == (2,)

    @pytest.mark.parametrize(
        ("shape", "rhs", "match"),
        [((2, 3), 2, "rows >= cols"), ((3, 2), 2, "expected 3")],
    )
    def test_shape_errors(self, shape, rhs, match):
        with pytest.raises(ValueError, match=match):
            solve_least_squares(np.ones(shape), np.ones(rhs))

    def test_extended_square(self):
        precision = Precision(30)
        a = precision.array([[2, 1], [1, 3]])
        b = precision.array([3, 5])
        x = solve_least_squares(a, b, precision)
        exact = precision.ctx.mpf("0.8"), precision.ctx.mpf("1.4")
        assert abs(x[0] - exact[0]) < 1e-28
        assert abs(x[1] - exact[1]) < 1e-28
        y = solve_square(a, b, precision)
        assert abs(y[1] - exact[1]) < 1e-28


class TestEigen:
    def test_diagonal(self):
        values = sorted(eig_dense(np.diag([1.0, 2j])), key=lambda z: z.imag)
        assert values[0] == pytest.approx(1.0)
        assert values[1] == pytest.approx(2j)

    def test_companion(self):
        values = sorted(eig_dense(np.array([[0.0, -1.0], [1.0, 0.0]])), key=lambda z: z.imag)
        assert abs(values[0] + 1j) < 1e-12
        assert abs(values[1] - 1j) < 1e-12

    def test_determinant_residual(self):
        rng = np.random.default_rng(2)
        a = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
        scale = np.linalg.norm(a, 2) ** 10
        for lam in eig_dense(a):
            assert abs(np.linalg.det(a - lam * np.eye(10))) < 1e-8 * scale

    def test_not_square(self):
        with pytest.raises(ValueError, match="square"):
            eig_dense(np.ones((2, 3)))

    def test_extended(self):
        precision = Precision(30)
        values = eig_dense(precision.array([[0, -1], [1, 0]]), precision)
        assert sorted(round(float(v.imag)) for v in values) == [-1, 1]


class TestPrecision:
    @pytest.mark.parametrize("digits", [0, 8, 15, 16.5, True])
    def test_invalid_digits(self, digits):
        with pytest.raises(ValueError, match="digits must be an integer"):
            Precision(digits)

    def test_mismatch(self):
        with pytest.raises(PrecisionMismatchError, match="cannot mix"):
            DOUBLE.ensure_same(Precision(30))

    def test_extended_array(self):
        precision = Precision(30)
        arr = precision.array([1, 2j])
        assert arr.dtype == object
        assert precision.norm(arr) == pytest.approx(np.sqrt(5))
        assert not DOUBLE.extended and precision.extended
