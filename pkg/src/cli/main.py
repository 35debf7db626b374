"""
Command-line front door: interp, linearize, solve, verify, nullspace
"""
import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import numpy as np

from src.config import DEFAULT_SEED, LOG_LEVEL, Tolerances, get_tolerances
from src.errors import (
    BlockPencilError,
    EigenSolverError,
    ParameterRangeError,
    RegularPolynomialError,
    SchemaError,
    SingularPolynomialError,
)
from src.interp import (
    chebyshev_coefficients,
    chebyshev_nodes,
    demo_function,
    divided_differences,
    lagrange_sample,
    sample_deviation,
)
from src.pencils.block_pencil import BlockPencil
from src.polycore.basis import NodeSet
from src.polycore.matrix_polynomial import MatrixPolynomial
from src.polycore.serialization import (
    complex_from_json,
    load_polynomial,
    matrix_from_json,
    polynomial_to_dict,
    read_json,
)
from src.spectral import (
    build_linearization,
    degree_shifts,
    infer_family,
    nullspace_minimal_basis,
    recover_minimal,
    solve_pep,
    verify_linearization,
    verify_pencil,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_SOLVER = 3


@dataclass
class RunConfig:
    """Everything one CLI run needs, built from the parsed arguments"""

    command: str
    input: Optional[Path] = None
    pencil: Optional[Path] = None
    family: Optional[str] = None
    param: int = 0
    param_flag: Optional[str] = None
    basis: str = "newton"
    kind: int = 1
    nodes: str = "cheb1"
    grade: int = 2
    function: str = "exp"
    A: Optional[Path] = None
    B: Optional[Path] = None
    want_left: bool = False
    seed: int = DEFAULT_SEED
    tol_overrides: Dict[str, str] = field(default_factory=dict)
    out: Optional[Path] = None
    verbose: int = 0

    @property
    def tolerances(self) -> Tolerances:
        return get_tolerances().with_overrides(self.tol_overrides)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        overrides = {}
        for item in args.tol or []:
            if "=" not in item:
                raise ParameterRangeError(f"--tol expects name=value, got '{item}'")
            name, value = item.split("=", 1)
            overrides[name.strip()] = value.strip()
        if args.eps is not None and args.mu is not None:
            raise ParameterRangeError("Pass --mu or --eps, not both")
        param = args.eps if args.eps is not None else args.mu
        flag = "eps" if args.eps is not None else "mu" if args.mu is not None else None
        return cls(
            command=args.command,
            input=Path(args.input) if getattr(args, "input", None) else None,
            pencil=Path(args.pencil) if getattr(args, "pencil", None) else None,
            family=getattr(args, "family", None),
            param=param if param is not None else 0,
            param_flag=flag,
            basis=getattr(args, "basis", "newton"),
            kind=args.kind,
            nodes=getattr(args, "nodes", "cheb1"),
            grade=getattr(args, "grade", 2),
            function=getattr(args, "function", "exp"),
            A=Path(args.A) if getattr(args, "A", None) else None,
            B=Path(args.B) if getattr(args, "B", None) else None,
            want_left=getattr(args, "left", False),
            seed=args.seed,
            tol_overrides=overrides,
            out=Path(args.out) if args.out else None,
            verbose=args.verbose,
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockpencils",
        description="Block minimal basis linearizations of matrix polynomials in Newton, Lagrange and Chebyshev bases",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mu", type=int, default=None, help="Block parameter mu (Newton, Lagrange)")
    common.add_argument("--eps", type=int, default=None, help="Block parameter eps (Chebyshev)")
    common.add_argument("--kind", type=int, choices=(1, 2), default=1, help="Chebyshev kind")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of every randomized check")
    common.add_argument("--tol", action="append", metavar="NAME=VALUE", help="Tolerance override (repeatable)")
    common.add_argument("--out", help="Output JSON file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    sub = parser.add_subparsers(dest="command", required=True)

    interp = sub.add_parser("interp", parents=[common], help="Interpolate a matrix function")
    interp.add_argument("--function", default="exp", help="'exp' or 'poly:<path or json>'")
    interp.add_argument("--basis", choices=("newton", "lagrange", "chebyshev"), default="newton")
    interp.add_argument("--grade", type=int, default=2)
    interp.add_argument("--nodes", default="cheb1", help="Node file, 'cheb1' or 'cheb2'")

    for name, text in (("linearize", "Build a linearization"), ("solve", "Solve the eigenvalue problem"),
                       ("nullspace", "Minimal bases of a singular polynomial")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("input", help="Polynomial JSON file")
        cmd.add_argument("--family", choices=("newton", "lagrange", "chebyshev"), default=None)
        cmd.add_argument("--A", help="JSON matrix A of the family")
        cmd.add_argument("--B", help="JSON matrix B of the family")
        if name == "solve":
            cmd.add_argument("--left", action="store_true", help="Also recover left eigenvectors")

    verify = sub.add_parser("verify", parents=[common], help="Check a linearization")
    verify.add_argument("input", help="Polynomial JSON file")
    verify.add_argument("--pencil", help="Pencil JSON file to check instead of building one")
    verify.add_argument("--family", choices=("newton", "lagrange", "chebyshev"), default=None)
    verify.add_argument("--A", help="JSON matrix A of the family")
    verify.add_argument("--B", help="JSON matrix B of the family")
    return parser


def write_json_atomic(path: Path, obj: Any):
    """Write JSON through a temporary file and an atomic rename"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with tmp.open("w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        f.flush()
        os.fsync(f.fileno())
    os.replace(str(tmp), str(path))


def _emit(config: RunConfig, obj: Any):
    if config.out is not None:
        write_json_atomic(config.out, obj)
        print(f"💾 Wrote {config.out}")


def _load_matrix(path: Optional[Path]) -> Optional[np.ndarray]:
    if path is None:
        return None
    return matrix_from_json(read_json(path), str(path))


def _require_input(config: RunConfig) -> Path:
    if config.input is None:
        raise ParameterRangeError(f"'{config.command}' needs a polynomial file")
    return config.input


def _load_input(config: RunConfig) -> MatrixPolynomial:
    """Read the polynomial and reject a block parameter flag of the wrong family"""
    P = load_polynomial(_require_input(config))
    family = config.family or infer_family(P)
    expected = "eps" if family == "chebyshev" else "mu"
    if config.param_flag is not None and config.param_flag != expected:
        raise ParameterRangeError(f"The {family} family takes --{expected}, not --{config.param_flag}")
    return P


def _linearize(config: RunConfig):
    P = _load_input(config)
    return build_linearization(P, config.family, config.param, _load_matrix(config.A), _load_matrix(config.B))


def _resolve_nodes(source: str, count: int) -> NodeSet:
    if source in ("cheb1", "cheb2"):
        return chebyshev_nodes(count - 1, int(source[-1]))
    doc = read_json(source)
    if not isinstance(doc, list) or len(doc) != count:
        raise SchemaError(f"{source} must hold a list of {count} nodes")
    return NodeSet([complex_from_json(z, f"nodes[{i}]") for i, z in enumerate(doc)])


def cmd_interp(config: RunConfig) -> int:
    """Interpolate a demo function and write the polynomial"""
    T = demo_function(config.function)
    k = config.grade
    if k < 1:
        raise ParameterRangeError(f"--grade must be >= 1, got {k}")
    if config.basis == "chebyshev":
        if config.nodes not in ("cheb1", "cheb2"):
            raise ParameterRangeError("The chebyshev basis samples at 'cheb1' or 'cheb2' nodes, not a node file")
        node_kind = int(config.nodes[-1])
        P = chebyshev_coefficients(T, k, config.kind, node_kind)
    else:
        nodes = _resolve_nodes(config.nodes, k + 1)
        P = divided_differences(T, nodes) if config.basis == "newton" else lagrange_sample(T, nodes)

    grid = np.linspace(-1.0, 1.0, 21)
    deviation = sample_deviation(T, P, grid)
    print(f"✅ {P.kind.value} interpolant of grade {k}, size {P.rows}x{P.cols}")
    print(f"   max deviation on [-1, 1]: {deviation:.3e}")
    _emit(config, polynomial_to_dict(P))
    return EXIT_OK


def cmd_linearize(config: RunConfig) -> int:
    """Build the pencil and write it"""
    lin = _linearize(config)
    pencil = lin.pencil
    print(f"✅ {pencil.family} pencil of size {pencil.shape[0]}x{pencil.shape[1]} (param {pencil.param})")
    print(f"   row blocks: {list(pencil.row_blocks)}")
    print(f"   col blocks: {list(pencil.col_blocks)}")
    _emit(config, pencil.to_dict())
    return EXIT_OK


def cmd_solve(config: RunConfig) -> int:
    """Solve P(lam) x = 0 and write the sorted eigenpairs"""
    P = _load_input(config)
    solution = solve_pep(P, config.family, config.param, _load_matrix(config.A), _load_matrix(config.B),
                         want_left=config.want_left, tol=config.tolerances, seed=config.seed)
    print(f"✅ {len(solution)} eigenvalues ({solution.family}, param {solution.param})")
    print(f"   {'lambda':>30}  {'residual':>10}")
    for pair in solution.pairs:
        label = "inf" if pair.is_infinite else f"{pair.value.real:+.10f}{pair.value.imag:+.10f}j"
        print(f"   {label:>30}  {pair.residual_right:10.2e}")
    print(f"   max residual: {solution.max_residual:.2e}")
    _emit(config, solution.to_json())
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    """Run the named checks; exit 1 if any fails"""
    tol = config.tolerances
    if config.pencil is not None:
        P = load_polynomial(_require_input(config))
        pencil = BlockPencil.from_dict(read_json(config.pencil))
        report = verify_pencil(pencil, P, tol)
    else:
        report = verify_linearization(_linearize(config), tol)

    for check in report.checks:
        mark = "✅" if check.passed else "❌"
        print(f"{mark} {check.name}: defect {check.defect:.2e}")
    _emit(config, report.to_dict())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_nullspace(config: RunConfig) -> int:
    """Minimal bases and indices of both sides, at pencil and polynomial level"""
    tol = config.tolerances
    lin = _linearize(config)
    right_shift, left_shift = degree_shifts(lin)
    bases = {side: nullspace_minimal_basis(lin.pencil, side, tol, config.seed) for side in ("right", "left")}
    if not any(len(b) for b in bases.values()):
        raise RegularPolynomialError("The polynomial appears regular: both rational nullspaces are trivial")

    result = {}
    for side, shift in (("right", right_shift), ("left", left_shift)):
        pencil_basis = bases[side]
        if len(pencil_basis):
            basis, indices = recover_minimal(lin, pencil_basis, side, tol)
        else:
            basis, indices = pencil_basis, []
        result[side] = {
            "pencil": pencil_basis.to_dict(),
            "polynomial": basis.to_dict(),
            "pencil_indices": list(pencil_basis.degrees),
            "indices": [int(e) for e in indices],
            "shift": shift,
        }
        print(f"✅ {side} minimal indices {result[side]['indices']} "
              f"(pencil {result[side]['pencil_indices']}, shift {shift})")
    _emit(config, result)
    return EXIT_OK


HANDLERS = {
    "interp": cmd_interp,
    "linearize": cmd_linearize,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "nullspace": cmd_nullspace,
}


def _configure_logging(verbose: int):
    level = {0: LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _fail(payload: Dict[str, str], code: int) -> int:
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Exit code: 0 ok, 1 verification failure, 2 input error, 3 solver diagnostic
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR

    _configure_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        return HANDLERS[config.command](config)
    except (SingularPolynomialError, EigenSolverError) as e:
        hint = {"hint": "run the nullspace command"} if isinstance(e, SingularPolynomialError) else {}
        return _fail({**e.to_dict(), **hint}, EXIT_SOLVER)
    except BlockPencilError as e:
        return _fail(e.to_dict(), EXIT_INPUT_ERROR)
    except FileNotFoundError as e:
        return _fail({"error": "FILE_NOT_FOUND", "message": str(e)}, EXIT_INPUT_ERROR)

