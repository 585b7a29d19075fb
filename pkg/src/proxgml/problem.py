"""Problem definition: PDE coefficients, domain geometry and line grids.

The solver works on a family of vertical lines x = x_n.  On curved strips
each line carries its own physical y-range [y1(x_n), y2(x_n)]; all lines
share M+1 reference nodes s_j = j/M in [0, 1], mapped affinely onto the
physical range.  Line-to-line arithmetic always pairs values at matching
reference nodes, so no interpolation is ever needed and the constant-width
case reduces to the plain finite-difference scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

__all__ = [
    "CartesianDomain",
    "PolarDomain",
    "ProblemSpec",
    "LineGrid",
    "FieldSolution",
    "build_cartesian_grid",
    "transverse_step",
    "line_ordinates",
    "source_values",
]


@dataclass(frozen=True)
class CartesianDomain:
    """Curvilinear strip  a <= x <= b,  y1(x) <= y <= y2(x)."""

    a: float
    b: float
    y1: Callable[[float], float]
    y2: Callable[[float], float]

    def __post_init__(self):
        if not self.b > self.a:
            raise ValueError(f"need b > a, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class PolarDomain:
    """Annulus r_inner <= r <= r_outer, 0 <= theta <= theta_period."""

    r_inner: float = 1.0
    r_outer: float = 2.0
    theta_period: float = 2.0 * np.pi

    def __post_init__(self):
        if not (self.r_outer > self.r_inner > 0.0):
            raise ValueError(
                f"need r_outer > r_inner > 0, got {self.r_inner}, {self.r_outer}"
            )


Domain = Union[CartesianDomain, PolarDomain]


@dataclass(frozen=True)
class ProblemSpec:
    """Semilinear problem -eps*Lap(u) + alpha*u^3 - beta*u = f with weight K.

    ``prox_weight`` is the proximal constant K; K = 0 degrades to the
    unregularized sweep.
    """

    epsilon: float
    alpha: float
    beta: float
    source: Callable[[float, float], float]
    prox_weight: float
    domain: Domain

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.prox_weight < 0.0:
            raise ValueError(f"prox_weight must be >= 0, got {self.prox_weight}")


@dataclass(frozen=True)
class LineGrid:
    """Line abscissae plus the shared transverse reference nodes.

    abscissae[n] = a + n*d for n = 0..N, d = (b - a)/N.
    per_line_range[n] = (y1(x_n), y2(x_n)).
    """

    n_lines: int
    d: float
    abscissae: np.ndarray
    m_nodes: int
    reference_nodes: np.ndarray
    per_line_range: np.ndarray  # shape (N+1, 2)

    def __post_init__(self):
        for arr in (self.abscissae, self.reference_nodes, self.per_line_range):
            arr.setflags(write=False)


def build_cartesian_grid(domain: CartesianDomain, N: int, M: int) -> LineGrid:
    """Partition [a, b] into N equal sub-intervals and each line into M.

    Rejects degenerate strips: every line must have y2(x_n) > y1(x_n).
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    if M < 2:
        raise ValueError(f"need M >= 2, got {M}")
    d = (domain.b - domain.a) / N
    abscissae = domain.a + d * np.arange(N + 1)
    lo = np.array([float(domain.y1(x)) for x in abscissae])
    hi = np.array([float(domain.y2(x)) for x in abscissae])
    bad = np.nonzero(hi <= lo)[0]
    if bad.size:
        n = int(bad[0])
        raise ValueError(
            f"degenerate strip width at line {n} (x={abscissae[n]}): "
            f"y2={hi[n]} <= y1={lo[n]}"
        )
    return LineGrid(
        n_lines=N,
        d=d,
        abscissae=abscissae,
        m_nodes=M,
        reference_nodes=np.arange(M + 1) / M,
        per_line_range=np.column_stack([lo, hi]),
    )


def transverse_step(grid: LineGrid, n: int) -> float:
    """Physical transverse step h_n = (y2(x_n) - y1(x_n)) / M on line n."""
    lo, hi = grid.per_line_range[n]
    return (hi - lo) / grid.m_nodes


def line_ordinates(grid: LineGrid, n: int) -> np.ndarray:
    """Physical y-coordinates of the M+1 nodes of line n."""
    lo, hi = grid.per_line_range[n]
    return lo + grid.reference_nodes * (hi - lo)


def source_values(spec: ProblemSpec, grid: LineGrid) -> np.ndarray:
    """Sample f pointwise at every grid node; shape (N+1, M+1)."""
    N, M = grid.n_lines, grid.m_nodes
    out = np.empty((N + 1, M + 1))
    for n in range(N + 1):
        x = grid.abscissae[n]
        y = line_ordinates(grid, n)
        vals = spec.source(x, y)
        out[n] = np.broadcast_to(np.asarray(vals, dtype=float), (M + 1,))
    return out


@dataclass(frozen=True)
class FieldSolution:
    """Per-line solution values; values[n][j] = u_n at reference node s_j."""

    values: np.ndarray  # shape (N+1, M+1)

    def __post_init__(self):
        self.values.setflags(write=False)

    @staticmethod
    def zeros(grid: LineGrid) -> "FieldSolution":
        return FieldSolution(np.zeros((grid.n_lines + 1, grid.m_nodes + 1)))
