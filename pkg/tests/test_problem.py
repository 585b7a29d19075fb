import numpy as np
import pytest

from proxgml.problem import (
    CartesianDomain,
    FieldSolution,
    PolarDomain,
    ProblemSpec,
    build_cartesian_grid,
    line_ordinates,
    transverse_step,
)

from conftest import UNIT_SQUARE, ones_source


def test_grid_spacing_unit_interval():
    grid = build_cartesian_grid(UNIT_SQUARE, 100, 100)
    assert grid.d == pytest.approx(0.01, abs=0)
    assert grid.abscissae[50] == pytest.approx(0.5, abs=1e-15)


def test_smallest_legal_grid():
    grid = build_cartesian_grid(UNIT_SQUARE, 2, 2)
    np.testing.assert_allclose(grid.abscissae, [0.0, 0.5, 1.0])
    np.testing.assert_allclose(grid.reference_nodes, [0.0, 0.5, 1.0])


def test_curved_strip_per_line_range():
    dom = CartesianDomain(a=0.0, b=1.0, y1=lambda x: 0.0, y2=lambda x: 1.0 + x)
    grid = build_cartesian_grid(dom, 4, 4)
    assert tuple(grid.per_line_range[2]) == (0.0, 1.5)


def test_rejects_small_n_or_m():
    with pytest.raises(ValueError):
        build_cartesian_grid(UNIT_SQUARE, 1, 10)
    with pytest.raises(ValueError):
        build_cartesian_grid(UNIT_SQUARE, 10, 1)


def test_rejects_degenerate_width():
    pinched = CartesianDomain(a=0.0, b=1.0, y1=lambda x: 0.0, y2=lambda x: 1.0 - x)
    with pytest.raises(ValueError, match="degenerate"):
        build_cartesian_grid(pinched, 4, 4)


def test_domain_invariants():
    with pytest.raises(ValueError):
        CartesianDomain(a=1.0, b=0.0, y1=lambda x: 0.0, y2=lambda x: 1.0)
    with pytest.raises(ValueError):
        PolarDomain(r_inner=2.0, r_outer=1.0)
    with pytest.raises(ValueError):
        ProblemSpec(epsilon=0.0, alpha=1, beta=1, source=ones_source,
                    prox_weight=1.0, domain=UNIT_SQUARE)
    with pytest.raises(ValueError):
        ProblemSpec(epsilon=0.1, alpha=1, beta=1, source=ones_source,
                    prox_weight=-1.0, domain=UNIT_SQUARE)


def test_transverse_step():
    grid = build_cartesian_grid(UNIT_SQUARE, 10, 100)
    assert transverse_step(grid, 3) == pytest.approx(0.01)
    dom = CartesianDomain(a=0.0, b=1.0, y1=lambda x: -1.0, y2=lambda x: 1.0)
    g2 = build_cartesian_grid(dom, 4, 4)
    assert transverse_step(g2, 0) == pytest.approx(0.5)
    g3 = build_cartesian_grid(
        CartesianDomain(a=0.0, b=1.0, y1=lambda x: 0.0, y2=lambda x: 1.5), 4, 3)
    assert transverse_step(g3, 1) == pytest.approx(0.5)


def test_grid_determinism_bit_identical():
    dom = CartesianDomain(a=-0.3, b=1.7, y1=np.sin, y2=lambda x: np.cos(x) + 2.0)
    g1 = build_cartesian_grid(dom, 17, 9)
    g2 = build_cartesian_grid(dom, 17, 9)
    assert np.array_equal(g1.abscissae, g2.abscissae)
    assert np.array_equal(g1.per_line_range, g2.per_line_range)
    assert g1.d == g2.d


def test_reference_mapping_affine_and_onto():
    dom = CartesianDomain(a=0.0, b=2.0, y1=lambda x: x, y2=lambda x: x + 1.0 + x * x)
    grid = build_cartesian_grid(dom, 5, 8)
    for n in range(6):
        y = line_ordinates(grid, n)
        lo, hi = grid.per_line_range[n]
        assert y[0] == pytest.approx(lo)
        assert y[-1] == pytest.approx(hi)
        np.testing.assert_allclose(np.diff(y), transverse_step(grid, n), rtol=1e-12)


def test_field_zeros_shape():
    grid = build_cartesian_grid(UNIT_SQUARE, 5, 7)
    u = FieldSolution.zeros(grid)
    assert u.values.shape == (6, 8)
    assert not u.values.flags.writeable
