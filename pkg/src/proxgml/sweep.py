"""Forward recursion for the sweep coefficients a_n, b_n, c_n.

With q = 2 + K*d^2/eps the scalar recursion is

    a_1 = 1/q,            a_n = 1/(q - a_{n-1}),
    b_1 = a_1,            b_n = a_n*(b_{n-1} + 1),
    c_1 = a_1*ft_1*d^2/eps,   c_n = a_n*(c_{n-1} + ft_n*d^2/eps),

where ft_n = K*(u0)_n + f_n combines the proximal anchor with the source.
a and b depend only on (N, d, eps, K); only c has to be refreshed when the
anchor changes between outer iterations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problem import FieldSolution, LineGrid, ProblemSpec, source_values

__all__ = ["SweepCoefficients", "IterateState", "forward_sweep", "refresh_c", "scalar_coefficients"]


@dataclass(frozen=True)
class SweepCoefficients:
    """Sweep coefficients for lines 1..N-1; entry k belongs to line k+1.

    a, b: shape (N-1,).  c: shape (N-1, M+1), one value per transverse node.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        for arr in (self.a, self.b, self.c):
            arr.setflags(write=False)


@dataclass(frozen=True)
class IterateState:
    """Proximal anchor (u0) and the outer-iteration counter."""

    anchor: FieldSolution
    iteration: int = 0


def scalar_coefficients(spec: ProblemSpec, grid: LineGrid) -> tuple[np.ndarray, np.ndarray]:
    """The anchor-independent a_n and b_n for n = 1..N-1."""
    N = grid.n_lines
    q = 2.0 + spec.prox_weight * grid.d**2 / spec.epsilon
    a = np.empty(N - 1)
    b = np.empty(N - 1)
    a[0] = 1.0 / q
    b[0] = a[0]
    for k in range(1, N - 1):
        denom = q - a[k - 1]
        if denom <= 0.0:
            # cannot happen for K >= 0 (a_n < 1 < q - 1); kept as a guard
            raise ArithmeticError(f"non-positive sweep denominator at line {k + 1}")
        a[k] = 1.0 / denom
        b[k] = a[k] * (b[k - 1] + 1.0)
    return a, b


def _c_recursion(
    a: np.ndarray, spec: ProblemSpec, grid: LineGrid, state: IterateState
) -> np.ndarray:
    N = grid.n_lines
    kap = grid.d**2 / spec.epsilon
    K = spec.prox_weight
    f = source_values(spec, grid)
    anchor = state.anchor.values
    c = np.empty((N - 1, grid.m_nodes + 1))
    c[0] = a[0] * (K * anchor[1] + f[1]) * kap
    for k in range(1, N - 1):
        c[k] = a[k] * (c[k - 1] + (K * anchor[k + 1] + f[k + 1]) * kap)
    return c


def forward_sweep(spec: ProblemSpec, grid: LineGrid, state: IterateState) -> SweepCoefficients:
    """Compute all sweep coefficients for the current anchor."""
    if state.anchor.values.shape != (grid.n_lines + 1, grid.m_nodes + 1):
        raise ValueError("anchor shape does not match grid")
    a, b = scalar_coefficients(spec, grid)
    return SweepCoefficients(a=a, b=b, c=_c_recursion(a, spec, grid, state))


def refresh_c(
    coeffs: SweepCoefficients, spec: ProblemSpec, grid: LineGrid, state: IterateState
) -> SweepCoefficients:
    """Recompute c for a new anchor, reusing the anchor-independent a, b.

    Bit-identical to a fresh forward_sweep with the same anchor.
    """
    if state.anchor.values.shape != (grid.n_lines + 1, grid.m_nodes + 1):
        raise ValueError("anchor shape does not match grid")
    if coeffs.a.shape != (grid.n_lines - 1,):
        raise ValueError("coefficient length does not match grid")
    return SweepCoefficients(a=coeffs.a, b=coeffs.b, c=_c_recursion(coeffs.a, spec, grid, state))
