"""GMRES on plain numpy vectors with the Euclidean inner product."""

import numpy as np
import pytest

from akns_rational.numeric_core.gmres import GMRESStatus, gmres
from akns_rational.numeric_core.scalar import Precision


def _is_non_increasing(residuals):
    return all(b <= a * (1 + 1e-12) for a, b in zip(residuals, residuals[1:], strict=False))


class TestGMRES:
    def test_identity(self):
        """Identity converges after one Arnoldi step."""
        rhs = np.array([1.0, -2.0, 3j])
        result = gmres(lambda v: v, rhs, inner=np.vdot)
        assert result.converged
        assert result.iterations == 1
        assert np.allclose(result.solution, rhs, atol=1e-15)

    def test_diagonal(self):
        a = np.diag([2.0, 3.0]).astype(complex)
        result = gmres(lambda v: a @ v, np.array([2.0, 3.0], dtype=complex), inner=np.vdot, tol=1e-15)
        assert result.iterations <= 2
        assert np.max(np.abs(result.solution - 1)) < 1e-14

    def test_random_system(self):
        rng = np.random.default_rng(3)
        n = 30
        a = np.eye(n) + 0.1 * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        result = gmres(lambda v: a @ v, b, inner=np.vdot, tol=1e-13)
        assert result.converged
        assert _is_non_increasing(result.residuals)
        assert np.max(np.abs(result.solution - np.linalg.solve(a, b))) < 1e-10
        assert np.linalg.norm(a @ result.solution - b) <= 1e-12 * np.linalg.norm(b)

    def test_zero_rhs(self):
        result = gmres(lambda v: 2 * v, np.zeros(4, dtype=complex), inner=np.vdot)
        assert result.iterations == 0
        assert result.converged
        assert not np.any(result.solution)

    def test_maxiter_reported(self):
        rng = np.random.default_rng(5)
        a = rng.standard_normal((20, 20)) + 5 * np.eye(20)
        result = gmres(lambda v: a @ v, np.ones(20, dtype=complex), inner=np.vdot, tol=1e-14, maxiter=2)
        assert result.status is GMRESStatus.MAXITER
        assert result.iterations == 2
        assert _is_non_increasing(result.residuals)

    def test_singular_breakdown(self):
        """A rank-one operator stalls; the achieved residual is reported."""
        a = np.outer([1.0, 0.0], [1.0, 0.0]).astype(complex)
        result = gmres(lambda v: a @ v, np.array([1.0, 1.0], dtype=complex), inner=np.vdot)
        assert result.status is GMRESStatus.BREAKDOWN
        assert result.residual == pytest.approx(1.0)

    @pytest.mark.parametrize(("kwargs", "match"), [({"tol": 0.0}, "tol must be positive"), ({"maxiter": 0}, "maxiter must be >= 1")])
    def test_invalid_arguments(self, kwargs, match):
        with pytest.raises(ValueError, match=match):
            gmres(lambda v: v, np.ones(2, dtype=complex), inner=np.vdot, **kwargs)

    def test_extended_precision(self):
        precision = Precision(50)
        ctx = precision.ctx
        a = np.array([[ctx.mpc(4), ctx.mpc(1), ctx.mpc(0)], [ctx.mpc(1), ctx.mpc(3), ctx.mpc(0, 1)], [ctx.mpc(0), ctx.mpc(0, -1), ctx.mpc(2)]], dtype=object)
        x_true = precision.array([1, 2j, -1])
        rhs = a @ x_true
        result = gmres(lambda v: a @ v, rhs, inner=precision.vdot, tol=1e-45, precision=precision)
        assert result.converged
        assert max(abs(u - v) for u, v in zip(result.solution, x_true, strict=True)) < ctx.mpf(10) ** -44
