"""Outer proximal fixed-point driver and solution diagnostics.

One outer cycle: refresh the sweep coefficients with the current anchor,
run the backward pass (lines N-1 down to 1), measure the sup-norm change
against the anchor, and promote the result to the new anchor.  The loop
stops once the update drops below ``tol`` (or after a fixed iteration
count when one is forced).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linebvp import solve_line
from .problem import FieldSolution, LineGrid, ProblemSpec, source_values, transverse_step
from .sweep import IterateState, SweepCoefficients, forward_sweep, refresh_c

__all__ = [
    "SolveReport",
    "backward_pass",
    "proximal_iterate",
    "residual_field",
    "residual_norm",
    "error_estimate",
]


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a proximal run plus a-posteriori diagnostics."""

    solution: FieldSolution
    outer_iterations: int
    anchor_update_norm: float
    residual_sup: float
    error_estimates: np.ndarray  # per-line sup|E_n|, n = 1..N-1
    converged: bool
    update_history: np.ndarray  # sup-norm anchor update of every iteration


def backward_pass(
    coeffs: SweepCoefficients,
    spec: ProblemSpec,
    grid: LineGrid,
    u_boundary_N: np.ndarray,
) -> FieldSolution:
    """Solve lines N-1, N-2, ..., 1 and assemble the field.

    ``u_boundary_N`` is the Dirichlet data on the last line (all zeros for
    the homogeneous problem).
    """
    N, M = grid.n_lines, grid.m_nodes
    values = np.zeros((N + 1, M + 1))
    values[N] = np.asarray(u_boundary_N, dtype=float)
    for n in range(N - 1, 0, -1):
        values[n] = solve_line(n, coeffs, values[n + 1], spec, grid)
    return FieldSolution(values)


def proximal_iterate(
    spec: ProblemSpec,
    grid: LineGrid,
    tol: float = 1e-8,
    max_iter: int = 5000,
    fixed_iters: int | None = None,
) -> SolveReport:
    """Run the outer proximal loop from a zero anchor.

    ``fixed_iters`` forces exactly that many cycles with no convergence
    test (used to mirror a fixed-iteration reference schedule).
    Non-convergence within ``max_iter`` is reported, not raised.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    N, M = grid.n_lines, grid.m_nodes
    boundary = np.zeros(M + 1)
    state = IterateState(anchor=FieldSolution.zeros(grid), iteration=0)
    coeffs = forward_sweep(spec, grid, state)
    limit = fixed_iters if fixed_iters is not None else max_iter
    updates = []
    converged = False
    u = state.anchor
    for it in range(1, limit + 1):
        if it > 1:
            coeffs = refresh_c(coeffs, spec, grid, state)
        u = backward_pass(coeffs, spec, grid, boundary)
        diff = float(np.max(np.abs(u.values - state.anchor.values)))
        updates.append(diff)
        state = IterateState(anchor=u, iteration=it)
        if fixed_iters is None and diff <= tol:
            converged = True
            break
    if fixed_iters is not None:
        converged = bool(updates) and updates[-1] <= tol
    return SolveReport(
        solution=u,
        outer_iterations=state.iteration,
        anchor_update_norm=updates[-1] if updates else 0.0,
        residual_sup=residual_norm(spec, grid, u),
        error_estimates=error_estimate(coeffs, u, spec, grid),
        converged=converged,
        update_history=np.array(updates),
    )


def _transverse_second_derivative(grid: LineGrid, values: np.ndarray) -> np.ndarray:
    """3-point D_yy at interior transverse nodes; shape (N-1, M-1)."""
    h = np.array([transverse_step(grid, n) for n in range(1, grid.n_lines)])
    interior = values[1:-1]
    return (interior[:, 2:] - 2.0 * interior[:, 1:-1] + interior[:, :-2]) / h[:, None] ** 2


def residual_field(spec: ProblemSpec, grid: LineGrid, u: FieldSolution) -> np.ndarray:
    """Unregularized residual at every interior node; shape (N-1, M-1).

    This is the defect of the original finite-difference system (no
    proximal terms): -eps*(D_xx + D_yy)u + alpha*u^3 - beta*u - f.
    """
    v = u.values
    f = source_values(spec, grid)
    d_xx = (v[2:, 1:-1] - 2.0 * v[1:-1, 1:-1] + v[:-2, 1:-1]) / grid.d**2
    d_yy = _transverse_second_derivative(grid, v)
    mid = v[1:-1, 1:-1]
    return -spec.epsilon * (d_xx + d_yy) + spec.alpha * mid**3 - spec.beta * mid - f[1:-1, 1:-1]


def residual_norm(spec: ProblemSpec, grid: LineGrid, u: FieldSolution) -> float:
    """Sup-norm of the unregularized residual over interior nodes."""
    return float(np.max(np.abs(residual_field(spec, grid, u))))


def error_estimate(
    coeffs: SweepCoefficients, u: FieldSolution, spec: ProblemSpec, grid: LineGrid
) -> np.ndarray:
    """A-posteriori per-line sup|E_n| of the dropped sweep error terms.

    E_n = a_n*E_{n-1} + b_n*(T(u_n) - T(u_{n+1})) with E_0 = 0 and
    T(u) = (-alpha*u^3 + beta*u)*d^2/eps + u''*d^2, evaluated at the
    computed solution on interior transverse nodes.
    """
    N = grid.n_lines
    kap = grid.d**2 / spec.epsilon
    v = u.values
    # T on lines 1..N; interior transverse nodes only
    h = np.array([transverse_step(grid, n) for n in range(1, N + 1)])
    rows = v[1:]
    d2 = (rows[:, 2:] - 2.0 * rows[:, 1:-1] + rows[:, :-2]) / h[:, None] ** 2
    mid = rows[:, 1:-1]
    T = (-spec.alpha * mid**3 + spec.beta * mid) * kap + d2 * grid.d**2
    sup = np.empty(N - 1)
    E = np.zeros(mid.shape[1])
    for k in range(N - 1):  # line n = k+1; T[k] is T(u_{k+1}), T[k+1] is T(u_{k+2})
        E = coeffs.a[k] * E + coeffs.b[k] * (T[k] - T[k + 1])
        sup[k] = np.max(np.abs(E))
    return sup
