"""Per-line two-point boundary-value solves for the backward pass.

Each line n requires the linear BVP

    u - gamma * u'' = rhs(y),   gamma = b_n * d^2,   u(ends) = 0,

discretized by the standard 3-point stencil at the line's M+1 nodes with
physical step h.  The interior system is tridiagonal, strictly diagonally
dominant and an M-matrix, so the Thomas algorithm applies without pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problem import LineGrid, ProblemSpec, transverse_step
from .sweep import SweepCoefficients

__all__ = ["TridiagonalSystem", "assemble_line_system", "thomas_solve", "solve_line"]


@dataclass(frozen=True)
class TridiagonalSystem:
    """Interior-unknown tridiagonal system: sub/sup length M-2, diag M-1."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        m = self.diag.size
        if not (self.sub.size == m - 1 and self.sup.size == m - 1 and self.rhs.size == m):
            raise ValueError("inconsistent tridiagonal band lengths")


def assemble_line_system(b_n: float, d: float, h: float, rhs_values: np.ndarray) -> TridiagonalSystem:
    """Assemble (1 + 2g/h^2)*u_j - (g/h^2)*(u_{j-1} + u_{j+1}) = rhs_j, g = b_n*d^2.

    ``rhs_values`` holds the M-1 interior right-hand sides; the zero
    Dirichlet end values are already folded in.
    """
    if h <= 0.0:
        raise ValueError(f"transverse step must be positive, got {h}")
    if b_n <= 0.0:
        raise ValueError(f"b_n must be positive, got {b_n}")
    rhs = np.asarray(rhs_values, dtype=float)
    m = rhs.size
    g = b_n * d * d
    off = -g / (h * h)
    return TridiagonalSystem(
        sub=np.full(m - 1, off),
        diag=np.full(m, 1.0 + 2.0 * g / (h * h)),
        sup=np.full(m - 1, off),
        rhs=rhs,
    )


def thomas_solve(sys: TridiagonalSystem) -> np.ndarray:
    """Forward elimination + back substitution on the tridiagonal system."""
    m = sys.diag.size
    # plain python floats in the sequential loops; ~3x faster than ndarray
    # scalar indexing, which matters in the outer proximal iteration
    sub = sys.sub.tolist()
    diag = sys.diag.tolist()
    sup = sys.sup.tolist()
    rhs = sys.rhs.tolist()
    cp = [0.0] * m
    dp = [0.0] * m
    piv = diag[0]
    if piv == 0.0:
        raise ZeroDivisionError("zero pivot in tridiagonal elimination")
    cp[0] = sup[0] / piv if m > 1 else 0.0
    dp[0] = rhs[0] / piv
    for j in range(1, m):
        piv = diag[j] - sub[j - 1] * cp[j - 1]
        if piv == 0.0:
            raise ZeroDivisionError(f"zero pivot at row {j}")
        cp[j] = sup[j] / piv if j < m - 1 else 0.0
        dp[j] = (rhs[j] - sub[j - 1] * dp[j - 1]) / piv
    x = [0.0] * m
    x[m - 1] = dp[m - 1]
    for j in range(m - 2, -1, -1):
        x[j] = dp[j] - cp[j] * x[j + 1]
    return np.array(x)


def solve_line(
    n: int,
    coeffs: SweepCoefficients,
    u_next: np.ndarray,
    spec: ProblemSpec,
    grid: LineGrid,
) -> np.ndarray:
    """Solve line n given the already-computed line n+1.

    The cubic and linear reaction terms are lagged at line n+1, so the
    solve is linear; the unknown line contributes only its own transverse
    second derivative.  Returns the full M+1 node values with zero ends.
    """
    a_n = coeffs.a[n - 1]
    b_n = coeffs.b[n - 1]
    kap = grid.d**2 / spec.epsilon
    rhs_full = (
        a_n * u_next
        + b_n * (-spec.alpha * u_next**3 + spec.beta * u_next) * kap
        + coeffs.c[n - 1]
    )
    sys = assemble_line_system(b_n, grid.d, transverse_step(grid, n), rhs_full[1:-1])
    out = np.zeros(grid.m_nodes + 1)
    out[1:-1] = thomas_solve(sys)
    return out
