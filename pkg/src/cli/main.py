# proj/src/cli/main.py
"""
Command-line entry point: ``python -m src.cli {spectra,solve,index,verify}``.

Exit codes: 0 success, 1 verification or invariant failure, 2 usage error,
3 input-file error.
"""

import argparse
import json
import sys
from typing import Any, List, Literal, Optional

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, field_validator

from src.cli.reports import FORMATS, render, write_output
from src.cli.verification import CHECKS, SCALES, VerificationSuite
from src.core.base_processor import configure_logging
from src.core.config_manager import ConfigManager
from src.core.exceptions import InputFileError, InvariantFailure, PreconditionViolation, UsageError
from src.index.index_calculator import OPERATOR_TAGS, IndexCalculator
from src.solutions.decomposition import SolutionSolver
from src.spectra.sphere_spectra import SpectrumTableBuilder

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class RunConfig(BaseModel):
    """Validated arguments of one invocation."""

    subcommand: Literal["spectra", "solve", "index", "verify"]
    fmt: str = "json"
    output: Optional[str] = None
    # spectra
    n: Optional[int] = None
    j: Optional[int] = None
    l_max: int = Field(default=3, ge=0)
    # solve
    m: Optional[int] = None
    k: Optional[int] = Field(default=None, ge=0)
    kind: Literal["monogenic", "rs"] = "monogenic"
    decompose: bool = False
    basis: bool = False
    # index
    operator: str = "D_1/2"
    descriptor: Optional[str] = None
    dim: int = 4
    # verify
    only: List[str] = Field(default_factory=list)
    scale: str = "default"

    @field_validator("fmt")
    @classmethod
    def known_format(cls, value: str) -> str:
        if value not in FORMATS:
            raise ValueError(f"unknown output format {value!r}; expected one of {FORMATS}")
        return value

    @field_validator("operator")
    @classmethod
    def known_operator(cls, value: str) -> str:
        if value not in OPERATOR_TAGS:
            raise ValueError(f"unknown operator {value!r}; expected one of {OPERATOR_TAGS}")
        return value


def build_parser(default_format: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinorlab",
        description="Exact Clifford analysis: sphere spectra, solution spaces, index computations and verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", default=default_format, help=f"Output format {FORMATS}")
    common.add_argument("--output", default=None, help="Output file (stdout when omitted)")

    sub = parser.add_subparsers(dest="subcommand", required=True)

    spectra = sub.add_parser("spectra", parents=[common], help="Eigenvalue tables on the sphere S^n")
    spectra.add_argument("--n", type=int, required=True, help="Sphere dimension")
    spectra.add_argument("--j", type=int, default=0, help="Operator index; 0 selects the Dirac operator")
    spectra.add_argument("--lmax", dest="l_max", type=int, default=3, help="Highest level")

    solve = sub.add_parser("solve", parents=[common], help="Homogeneous solution spaces on R^m")
    solve.add_argument("--m", type=int, required=True, help="Euclidean dimension")
    solve.add_argument("--k", type=int, required=True, help="Polynomial degree")
    solve.add_argument("--kind", default="monogenic", help="'monogenic' or 'rs'")
    solve.add_argument("--decompose", action="store_true", help="Report the M1 + M2 + M3 direct sum (rs only)")
    solve.add_argument("--basis", action="store_true", help="Dump the basis in canonical text form")

    index = sub.add_parser("index", parents=[common], help="Index of an operator on a closed spin manifold")
    index.add_argument("--operator", default="D_1/2", help=f"One of {OPERATOR_TAGS}")
    index.add_argument("--j", type=int, default=None, help="Form degree of D_j")
    index.add_argument("--descriptor", default=None, help="Manifold descriptor JSON")
    index.add_argument("--dim", type=int, default=4, help="Dimension for a symbolic report without descriptor")

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suite")
    verify.add_argument(
        "--only", action="append", default=[], help=f"Run only this check (repeatable): {sorted(CHECKS)}"
    )
    verify.add_argument("--scale", default="default", help=f"Configuration section {SCALES}")
    return parser


def _run(run: RunConfig, config: ConfigManager) -> int:
    if run.subcommand == "spectra":
        payload: Any = SpectrumTableBuilder(config).process({"n": run.n, "j": run.j, "l_max": run.l_max})
    elif run.subcommand == "solve":
        payload = SolutionSolver(config).process(
            {"m": run.m, "k": run.k, "kind": run.kind, "decompose": run.decompose, "basis": run.basis}
        )
    elif run.subcommand == "index":
        payload = IndexCalculator(config).process(
            {"operator": run.operator, "j": run.j, "descriptor": run.descriptor, "dim": run.dim}
        )
    else:
        payload = VerificationSuite(config).process({"scale": run.scale, "only": run.only})

    write_output(render(payload, run.fmt), run.output)
    if run.subcommand == "verify" and not payload.passed:
        return EXIT_FAILED
    if run.subcommand == "solve" and payload.decomposition is not None and not payload.decomposition.passed:
        return EXIT_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    config = ConfigManager()
    try:
        configure_logging(config)
        parser = build_parser(config.get_config("app", "output.default_format", "json"))
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)
        run = RunConfig(**vars(args))
        return _run(run, config)
    except ValidationError as e:
        sys.stderr.write(f"error: {e.errors()[0]['msg']}\n")
        return EXIT_USAGE
    except (UsageError, PreconditionViolation) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except InputFileError as e:
        sys.stdout.write(json.dumps(e.to_dict(), indent=2) + "\n")
        return EXIT_INPUT
    except InvariantFailure as e:
        logger.error(f"invariant failure: {e}")
        sys.stderr.write(f"invariant failure: {e}\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
