"""
Command line interface

    geodiscord gen FAMILY [--d D | --d1 D1 --d2 D2] [--seed S] --out FILE
    geodiscord discord FILE [--bounds] [--closest] [--oracle] [--json]
    geodiscord frame --d D [--general | --paper | --reference] [--check]
    geodiscord sweep --dims 2x2 3x3 --count N [--seed S] [--format csv|json]

Exit codes: 0 success, 1 frame check failed, 2 invalid input, 3 infeasible
frame construction, 4 internal contract violation.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

import numpy as np

from ._version import __version__
from .core import DiscordAnalysis
from .entities.modelConstants import ModelConstants
from .entities.oracleConfig import OracleConfig
from .exceptions import (
    ContractViolationError,
    DimensionMismatchError,
    InfeasibleConstructionError,
    InvalidDimensionError,
    InvalidFrameError,
    InvalidStateError,
    PreconditionError,
)
from .initialize.regular_simplex_frame import regular_simplex_frame
from .initialize.reference_frame import reference_frame
from .initialize.paper_frame import paper_frame
from .initialize.state_family import FAMILIES, generate_state
from .solution.frame_projector import frame_projector, projector_deviations
from .solution.validate_frame import validate_frame
from .utils.state_io import load_state, save_state
from .utils.sweep import dims_from_strings, run_sweep, sweep_summary, sweep_to_csv, sweep_to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_CONTRACT = 4


def _dims(args) -> tuple:
    if args.d is not None:
        return args.d, args.d
    if args.d1 is None or args.d2 is None:
        raise PreconditionError("give either --d or both --d1 and --d2")
    return args.d1, args.d2


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    d1, d2 = _dims(args)
    rho = generate_state(args.family, d1, d2, args.seed, rank=args.rank, components=args.components)
    metadata = {"generator": args.family, "seed": args.seed, "label": args.label or f"{args.family}_{d1}x{d2}"}
    if args.rank is not None:
        metadata["rank"] = args.rank
    if args.components is not None:
        metadata["components"] = args.components
    digest = save_state(args.out, rho, metadata)
    print(digest)
    return EXIT_OK


def cmd_discord(args) -> int:
    state_file = load_state(args.input)
    config = OracleConfig(restarts=args.restarts, seed=args.seed)
    analysis = DiscordAnalysis(
        state_file.state,
        bounds=args.bounds,
        closest=args.closest,
        oracle=args.oracle,
        oracle_config=config,
    )
    analysis.run_analysis()
    report = analysis.get_report()

    if args.json:
        _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
        return EXIT_OK

    lines = [f"dims      {report.dims}", f"digest    {report.input_digest}", f"discord   {report.value:.15g}"]
    if report.bounds is not None:
        b = report.bounds
        lines += [
            f"lower     {b.lower_spectral:.15g}",
            f"upper     {b.tightest_upper:.15g}  (spectral {b.upper_spectral:.6g}, refined {b.upper_refined:.6g}, "
            f"ceiling {b.upper_ceiling:.6g}, j1 {b.j1:.6g}, j2 {b.j2:.6g})",
        ]
    if report.closest is not None:
        c = report.closest
        lines += [
            f"closest   distance {c.achieved_distance_sq:.15g}, feasible {c.feasible}, sign {c.sign:+d}",
        ]
    if report.oracle is not None:
        o = report.oracle
        lines += [
            f"oracle    {o.oracle:.15g}, gap {o.gap:.3e}, converged {o.oracle_result.converged}"
            + (" (upper bound only)" if o.upper_bound_only else ""),
        ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _frame_doc(d: int, vectors: np.ndarray, source: str) -> dict:
    report = validate_frame(vectors)
    doc = {
        "schema_version": ModelConstants.REPORT_SCHEMA_VERSION,
        "d": d,
        "source": source,
        "vectors": [[float(x) for x in v] for v in vectors],
        "check": {
            "passed": bool(report.passed),
            "sum_deviation": report.sum_deviation,
            "norm_deviation": report.norm_deviation,
            "dot_deviation": report.dot_deviation,
            "worst_pair": list(report.worst_pair) if report.worst_pair else None,
            "failed_relations": report.failed_relations(),
        },
    }
    if report.passed:
        idempotence, trace = projector_deviations(frame_projector(vectors), d - 1)
        doc["check"]["projector_idempotence"] = idempotence
        doc["check"]["projector_trace_deviation"] = trace
    return doc


def cmd_frame(args) -> int:
    d = args.d
    if args.paper:
        vectors, source = paper_frame(d).require().vectors[:, : d - 1], "paper"
    elif args.reference:
        vectors, source = reference_frame(d), "reference"
    else:
        vectors, source = regular_simplex_frame(d).vectors[:, : d - 1], "general"

    doc = _frame_doc(d, vectors, source)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for k, v in enumerate(vectors, start=1):
            print(f"y{k}: " + " ".join(f"{x: .12f}" for x in v))
        if args.check:
            check = doc["check"]
            status = "pass" if check["passed"] else "FAIL " + ",".join(check["failed_relations"])
            print(
                f"check: {status} (sum {check['sum_deviation']:.2e}, norm {check['norm_deviation']:.2e}, "
                f"dot {check['dot_deviation']:.2e}, worst pair {check['worst_pair']})"
            )
    if args.check and not doc["check"]["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = OracleConfig(restarts=args.restarts, seed=args.seed)
    table = run_sweep(
        dims_from_strings(args.dims),
        args.count,
        seed=args.seed,
        family=args.family,
        oracle_config=config,
        use_oracle=not args.no_oracle,
        workers=args.workers,
        progress=not args.quiet,
    )
    summary = sweep_summary(table)
    text = sweep_to_json(table, summary) if args.format == "json" else sweep_to_csv(table, summary)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodiscord",
        description="Geometric quantum discord of bipartite qudit states.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a state file")
    gen.add_argument("family", choices=FAMILIES, help="state family")
    gen.add_argument("--d", type=int, help="equal subsystem dimension")
    gen.add_argument("--d1", type=int, help="dimension of the first subsystem")
    gen.add_argument("--d2", type=int, help="dimension of the second (measured) subsystem")
    gen.add_argument("--rank", type=int, help="rank of mixed states (default full rank)")
    gen.add_argument("--components", type=int, help="terms of separable mixtures (default d1*d2)")
    gen.add_argument("--seed", type=int, default=ModelConstants.DEFAULT_SEED, help="random seed")
    gen.add_argument("--label", help="label stored in the file metadata")
    gen.add_argument("--out", required=True, help="output state file")
    gen.set_defaults(func=cmd_gen)

    discord = sub.add_parser("discord", help="compute the discord of a state file")
    discord.add_argument("input", help="state file")
    discord.add_argument("--bounds", action="store_true", help="evaluate upper and lower bounds")
    discord.add_argument("--closest", action="store_true", help="build the closest quantum-classical candidate")
    discord.add_argument("--oracle", action="store_true", help="compare against the numerical oracle")
    discord.add_argument("--restarts", type=int, default=ModelConstants.ORACLE_RESTARTS, help="oracle restarts (d2 >= 3)")
    discord.add_argument("--seed", type=int, default=ModelConstants.DEFAULT_SEED, help="oracle seed")
    discord.add_argument("--json", action="store_true", help="emit a JSON report")
    discord.add_argument("--out", help="write the report to a file instead of stdout")
    discord.set_defaults(func=cmd_discord)

    frame = sub.add_parser("frame", help="print and check a simplex frame")
    frame.add_argument("--d", type=int, required=True, help="number of frame vectors")
    kind = frame.add_mutually_exclusive_group()
    kind.add_argument("--general", action="store_true", help="regular simplex construction (default)")
    kind.add_argument(
        "--paper", "--sign-pattern", dest="paper", action="store_true", help="+-1 coefficient construction"
    )
    kind.add_argument("--reference", action="store_true", help="bundled printed frame (d = 3..6)")
    frame.add_argument("--check", action="store_true", help="validate the simplex relations, exit 1 on failure")
    frame.add_argument("--json", action="store_true", help="emit JSON")
    frame.set_defaults(func=cmd_frame)

    sweep = sub.add_parser("sweep", help="formula, bounds and oracle over many random states")
    sweep.add_argument("--dims", nargs="+", default=["2x2"], help="dimension pairs such as 2x2 3x3")
    sweep.add_argument("--count", type=int, default=10, help="states per dimension pair")
    sweep.add_argument("--family", choices=FAMILIES, default="mixed", help="state family")
    sweep.add_argument("--seed", type=int, default=ModelConstants.DEFAULT_SEED, help="master seed")
    sweep.add_argument("--restarts", type=int, default=ModelConstants.ORACLE_RESTARTS, help="oracle restarts (d2 >= 3)")
    sweep.add_argument("--no-oracle", action="store_true", help="skip the oracle")
    sweep.add_argument("--workers", type=int, default=1, help="worker processes")
    sweep.add_argument("--format", choices=["csv", "json"], default="csv", help="output format")
    sweep.add_argument("--quiet", action="store_true", help="hide the progress bar")
    sweep.add_argument("--out", help="output file instead of stdout")
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO)

    try:
        return args.func(args)
    except InvalidStateError as e:
        print(f"error: {e}", file=sys.stderr)
        for violation in e.violations:
            print(f"  - {violation}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except InfeasibleConstructionError as e:
        relation = f" (relation: {e.relation})" if e.relation else ""
        print(f"error: {e}{relation}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ContractViolationError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    except (PreconditionError, DimensionMismatchError, InvalidDimensionError, InvalidFrameError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
