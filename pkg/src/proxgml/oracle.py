"""Independent full-grid validation solver.

Assembles the complete nonlinear finite-difference system on the 2D grid
(5-point Laplacian, steps d and h, scaled by -eps, plus the diagonal
reaction alpha*u^3 - beta*u) and drives it to a root with damped Newton.
Shares no code path with the line sweep, so agreement between the two is a
meaningful check.  Dense-friendly sizes only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .problem import FieldSolution, LineGrid, ProblemSpec, source_values, transverse_step

__all__ = ["NewtonReport", "NewtonDivergenceError", "newton_solve", "compare_fields"]


class NewtonDivergenceError(RuntimeError):
    """Damped Newton failed to reach the residual tolerance."""


@dataclass(frozen=True)
class NewtonReport:
    solution: FieldSolution
    iterations: int
    residual_sup: float
    residual_history: np.ndarray
    step_norms: np.ndarray


def _require_uniform_rectangle(grid: LineGrid) -> float:
    widths = grid.per_line_range[:, 1] - grid.per_line_range[:, 0]
    lows = grid.per_line_range[:, 0]
    if not (np.allclose(widths, widths[0], rtol=0, atol=1e-13 * abs(widths[0]))
            and np.allclose(lows, lows[0], rtol=0, atol=1e-13 * (1 + abs(lows[0])))):
        raise ValueError("full-grid oracle requires a rectangle with constant y-range")
    return transverse_step(grid, 0)


def _laplacian(N: int, M: int, d: float, h: float) -> sp.csc_matrix:
    # interior unknowns, line-major flattening: index = (n-1)*(M-1) + (j-1)
    nx, ny = N - 1, M - 1
    ex = np.ones(nx)
    ey = np.ones(ny)
    Lx = sp.diags([ex[:-1], -2.0 * ex, ex[:-1]], [-1, 0, 1]) / d**2
    Ly = sp.diags([ey[:-1], -2.0 * ey, ey[:-1]], [-1, 0, 1]) / h**2
    return (sp.kron(Lx, sp.eye(ny)) + sp.kron(sp.eye(nx), Ly)).tocsc()


def newton_solve(
    spec: ProblemSpec,
    grid: LineGrid,
    tol: float = 1e-10,
    max_newton: int = 50,
    _initial: np.ndarray | None = None,
) -> NewtonReport:
    """Damped Newton from a zero start; retries once from the flat root
    of u^3 - u - 1 if the zero start diverges."""
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    N, M = grid.n_lines, grid.m_nodes
    h = _require_uniform_rectangle(grid)
    A = -spec.epsilon * _laplacian(N, M, grid.d, h)
    f = source_values(spec, grid)[1:-1, 1:-1].ravel()
    u = np.zeros((N - 1) * (M - 1)) if _initial is None else _initial.copy()

    def F(v):
        return A @ v + spec.alpha * v**3 - spec.beta * v - f

    res_hist = []
    step_hist = []
    for it in range(max_newton):
        Fu = F(u)
        sup = float(np.max(np.abs(Fu))) if Fu.size else 0.0
        res_hist.append(sup)
        if sup <= tol:
            values = np.zeros((N + 1, M + 1))
            values[1:-1, 1:-1] = u.reshape(N - 1, M - 1)
            return NewtonReport(
                solution=FieldSolution(values),
                iterations=it,
                residual_sup=sup,
                residual_history=np.array(res_hist),
                step_norms=np.array(step_hist),
            )
        J = (A + sp.diags(3.0 * spec.alpha * u**2 - spec.beta)).tocsc()
        delta = spla.spsolve(J, -Fu)
        # halving line search on the euclidean residual norm
        base = np.linalg.norm(Fu)
        t = 1.0
        while t > 1e-10:
            if np.linalg.norm(F(u + t * delta)) < base:
                break
            t *= 0.5
        else:
            break
        u = u + t * delta
        step_hist.append(float(np.max(np.abs(t * delta))))
    if _initial is None:
        # zero start stalled; restart from the stable flat root
        return newton_solve(
            spec, grid, tol, max_newton,
            _initial=np.full((N - 1) * (M - 1), 1.3247179572447458),
        )
    raise NewtonDivergenceError(
        f"no convergence after {max_newton} iterations (residual {res_hist[-1]:.3e})"
    )


def compare_fields(u1: FieldSolution, u2: FieldSolution) -> tuple[float, float]:
    """(sup, rms) difference over interior nodes; grids must match."""
    if u1.values.shape != u2.values.shape:
        raise ValueError("field shapes differ")
    diff = u1.values[1:-1, 1:-1] - u2.values[1:-1, 1:-1]
    sup = float(np.max(np.abs(diff)))
    l2 = float(np.sqrt(np.mean(diff**2)))
    return sup, l2
