"""Command-line entry point.

Modes:
  cartesian       proximal line solve on a rectangle, field CSV out
  polar-symbolic  annulus symbolic solve, line polynomials as JSON
  oracle          full-grid damped-Newton solve, field CSV out
  compare         cartesian solve vs oracle on the same grid, JSON report

Exit codes: 0 success, 2 invalid flags, 3 solver non-convergence, 4 I/O.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import sys

import numpy as np

from .oracle import NewtonDivergenceError, compare_fields, newton_solve
from .polarsym import PolarSymbolicConfig, symbolic_solve
from .problem import (
    CartesianDomain,
    FieldSolution,
    ProblemSpec,
    build_cartesian_grid,
    line_ordinates,
)
from .proximal import proximal_iterate, residual_norm
from .symalg import format_terms, to_json_dict

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3
EXIT_IO = 4

_ALLOWED_CALLS = {"sin": math.sin, "cos": math.cos, "exp": math.exp}
_ALLOWED_NODES = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub, ast.Mult, ast.Div,
    ast.Pow, ast.USub, ast.UAdd, ast.Constant, ast.Name, ast.Call, ast.Load,
)


def parse_source(text: str):
    """Build f(x, y) from 'const:<v>' or a small arithmetic expression.

    Expressions may use x, y, pi, + - * / ** and sin/cos/exp.
    """
    if text.startswith("const:"):
        v = float(text[len("const:"):])
        return lambda x, y: np.full_like(np.asarray(y, dtype=float), v)
    tree = ast.parse(text, mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise ValueError(f"unsupported element in source expression: {ast.dump(node)}")
        if isinstance(node, ast.Name) and node.id not in ("x", "y", "pi", "sin", "cos", "exp"):
            raise ValueError(f"unknown name {node.id!r} in source expression")
        if isinstance(node, ast.Call):
            if not (isinstance(node.func, ast.Name) and node.func.id in _ALLOWED_CALLS):
                raise ValueError("only sin, cos, exp calls are allowed")
    code = compile(tree, "<source>", "eval")
    env = {"sin": np.sin, "cos": np.cos, "exp": np.exp, "pi": math.pi}

    def f(x, y):
        return eval(code, {"__builtins__": {}}, dict(env, x=x, y=y))

    return f


def write_field_csv(path: str, grid, field: FieldSolution):
    with open(path, "w") as fh:
        fh.write("x,y,u\n")
        for n in range(grid.n_lines + 1):
            x = grid.abscissae[n]
            y = line_ordinates(grid, n)
            for j in range(grid.m_nodes + 1):
                fh.write(f"{x:.17g},{y[j]:.17g},{field.values[n, j]:.17g}\n")


def read_field_csv(path: str, grid) -> FieldSolution:
    """Reload a field written by write_field_csv onto the same grid."""
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    u = data[:, 2].reshape(grid.n_lines + 1, grid.m_nodes + 1)
    return FieldSolution(u)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="proxgml",
        description="Proximal generalized method of lines for Ginzburg-Landau-type problems",
    )
    p.add_argument("--mode", required=True,
                   choices=["cartesian", "polar-symbolic", "oracle", "compare"])
    p.add_argument("--eps", type=float, default=0.1, help="diffusion coefficient")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--K", type=float, default=50.0, help="proximal weight")
    p.add_argument("--N", type=int, default=100, help="number of line intervals")
    p.add_argument("--M", type=int, default=None,
                   help="transverse intervals per line (default: N)")
    p.add_argument("--f", default="const:1", help="source term, const:<v> or expression in x,y")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=5000)
    p.add_argument("--iters", type=int, default=None,
                   help="run exactly this many outer iterations (no convergence test)")
    p.add_argument("--out-field", default=None, help="field CSV path")
    p.add_argument("--out-expr", default=None, help="line-polynomial JSON path")
    p.add_argument("--out-report", default=None, help="comparison report JSON path")
    return p


def _cartesian_setup(args):
    domain = CartesianDomain(a=0.0, b=1.0, y1=lambda x: 0.0, y2=lambda x: 1.0)
    spec = ProblemSpec(
        epsilon=args.eps, alpha=args.alpha, beta=args.beta,
        source=parse_source(args.f), prox_weight=args.K, domain=domain,
    )
    M = args.M if args.M is not None else args.N
    return spec, build_cartesian_grid(domain, args.N, M)


def _run_cartesian(args) -> int:
    spec, grid = _cartesian_setup(args)
    report = proximal_iterate(spec, grid, tol=args.tol, max_iter=args.max_iter,
                              fixed_iters=args.iters)
    center = report.solution.values[grid.n_lines // 2, grid.m_nodes // 2]
    print(
        f"cartesian: iterations={report.outer_iterations} "
        f"converged={report.converged} update={report.anchor_update_norm:.3e} "
        f"residual={report.residual_sup:.3e} center={center:.6f}"
    )
    if args.out_field:
        write_field_csv(args.out_field, grid, report.solution)
    if args.iters is None and not report.converged:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _run_polar_symbolic(args) -> int:
    cfg = PolarSymbolicConfig(
        epsilon=args.eps, n_lines=args.N, prox_weight=args.K,
        alpha=args.alpha, beta=args.beta,
        iters=args.iters if args.iters is not None else 149,
    )
    lines = symbolic_solve(cfg)
    mid = cfg.n_lines // 2
    print(
        f"polar-symbolic: lines={cfg.n_lines - 1} iters={cfg.iters} "
        f"mid-line constant={lines[mid].coefficient((0, 0, 0, 0, 0)):.5f}"
    )
    if args.out_expr:
        payload = {
            "epsilon": cfg.epsilon,
            "prox_weight": cfg.prox_weight,
            "n_lines": cfg.n_lines,
            "iters": cfg.iters,
            "lines": [
                {
                    "line": n,
                    "radius": cfg.radius(n),
                    "text": format_terms(lines[n]),
                    **to_json_dict(lines[n]),
                }
                for n in range(1, cfg.n_lines)
            ],
        }
        with open(args.out_expr, "w") as fh:
            json.dump(payload, fh, indent=1)
    return EXIT_OK


def _run_oracle(args) -> int:
    spec, grid = _cartesian_setup(args)
    report = newton_solve(spec, grid, tol=min(args.tol, 1e-10))
    center = report.solution.values[grid.n_lines // 2, grid.m_nodes // 2]
    print(
        f"oracle: newton_iterations={report.iterations} "
        f"residual={report.residual_sup:.3e} center={center:.6f}"
    )
    if args.out_field:
        write_field_csv(args.out_field, grid, report.solution)
    return EXIT_OK


def _run_compare(args) -> int:
    spec, grid = _cartesian_setup(args)
    gml = proximal_iterate(spec, grid, tol=args.tol, max_iter=args.max_iter,
                           fixed_iters=args.iters)
    full = newton_solve(spec, grid)
    sup, l2 = compare_fields(gml.solution, full.solution)
    print(
        f"compare: gml_iterations={gml.outer_iterations} converged={gml.converged} "
        f"sup_diff={sup:.3e} l2_diff={l2:.3e}"
    )
    if args.out_report:
        payload = {
            "sup_diff": sup,
            "l2_diff": l2,
            "gml_iterations": gml.outer_iterations,
            "gml_converged": gml.converged,
            "gml_residual_sup": gml.residual_sup,
            "newton_iterations": full.iterations,
            "newton_residual_sup": full.residual_sup,
        }
        with open(args.out_report, "w") as fh:
            json.dump(payload, fh, indent=1)
    if args.iters is None and not gml.converged:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


_RUNNERS = {
    "cartesian": _run_cartesian,
    "polar-symbolic": _run_polar_symbolic,
    "oracle": _run_oracle,
    "compare": _run_compare,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        spec_checks = (args.eps > 0, args.K >= 0, args.N >= 2, args.tol > 0)
        if not all(spec_checks):
            parser.print_usage(sys.stderr)
            print("proxgml: invalid numeric parameters", file=sys.stderr)
            return EXIT_USAGE
        return _RUNNERS[args.mode](args)
    except (ValueError, SyntaxError) as exc:
        print(f"proxgml: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NewtonDivergenceError as exc:
        print(f"proxgml: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except OSError as exc:
        print(f"proxgml: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
