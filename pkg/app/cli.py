"""Command line entry point.

Exit codes: 0 success, 1 failed check or internal contradiction, 2 bad
input, 3 finding (counterexample, non-lattice verdict, oracle disagreement).
"""

import argparse
import logging
import sys

from pydantic import ValidationError

from app.commands.common import add_shape_arguments
from app.commands.count_command import cmd_count
from app.commands.eg_command import cmd_eg
from app.commands.enumerate_command import cmd_enumerate
from app.commands.lattice_command import cmd_lattice_check
from app.commands.poset_command import cmd_poset
from app.commands.schubert_command import cmd_schubert
from app.commands.serve_command import cmd_serve
from app.commands.shapes_command import cmd_shapes
from app.commands.verify_command import cmd_verify
from app.core.config import settings
from app.core.logging import setup_logging
from app.schemas.common_schema import CommandOutcome, IStatusEnum
from app.utils.exceptions import DomainException

logger = logging.getLogger(__name__)


def _parse_args(argv: list[str] | None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="moon-pipedreams",
        description="Maximal fillings of moon polyominoes, pipe dreams and chute moves.",
    )
    parser.add_argument("--json", action="store_true", help="print the outcome as JSON")
    parser.add_argument("--log-level", default=None)
    parser.add_argument("--max-length", type=int, default=settings.MAX_LENGTH)
    parser.add_argument("--max-sn", type=int, default=settings.MAX_SN)
    commands = parser.add_subparsers(dest="command", required=True)

    enum = commands.add_parser("enumerate", help="list F01ne(M, k)")
    add_shape_arguments(enum)
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--rows", help="zeros per row, comma separated")
    enum.add_argument("--method", choices=("closure", "backtrack"), default="closure")
    enum.add_argument("--cross-check", action="store_true")
    enum.add_argument("--list", action="store_true")
    enum.set_defaults(handler=cmd_enumerate)

    poset = commands.add_parser("poset", help="chute poset of RC(w) or of a shape")
    add_shape_arguments(poset, required=False)
    poset.add_argument("--perm")
    poset.add_argument("--k", type=int, default=1)
    poset.add_argument("--dot", metavar="FILE")
    poset.set_defaults(handler=cmd_poset)

    lattice = commands.add_parser("lattice-check", help="is the chute poset a lattice")
    lattice.add_argument("--all-sn", type=int)
    lattice.add_argument("--perm")
    lattice.add_argument("--table", action="store_true")
    lattice.set_defaults(handler=cmd_lattice_check)

    verify = commands.add_parser("verify", help="run the acceptance suite")
    verify.add_argument("--quick", action="store_true")
    verify.add_argument("--only", help="criterion numbers, comma separated")
    verify.add_argument("--inject-fault", choices=("chute",))
    verify.set_defaults(handler=cmd_verify)

    schubert = commands.add_parser("schubert", help="Schubert polynomial of w")
    schubert.add_argument("--perm", required=True)
    schubert.add_argument("--oracle", action="store_true")
    schubert.set_defaults(handler=cmd_schubert)

    eg = commands.add_parser("eg", help="Edelman-Greene pairs of maximal fillings")
    add_shape_arguments(eg, required=False)
    eg.add_argument("--k", type=int, default=1)
    eg.add_argument("--check", action="store_true")
    eg.add_argument("--counterexample", action="store_true")
    eg.set_defaults(handler=cmd_eg)

    count = commands.add_parser("count", help="count k-triangulations of the n-gon")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--k", type=int, required=True)
    count.add_argument(
        "--method", choices=("formula", "determinant", "enumerate", "all"), default="formula"
    )
    count.add_argument("--reading", choices=("triangular", "square"), default="triangular")
    count.set_defaults(handler=cmd_count)

    shapes = commands.add_parser("shapes", help="moon shapes in a box")
    shapes.add_argument("--rows", type=int, default=3)
    shapes.add_argument("--cols", type=int, default=3)
    shapes.add_argument("--stack", action="store_true")
    shapes.add_argument("--list", action="store_true")
    shapes.set_defaults(handler=cmd_shapes)

    serve = commands.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="0.0.0.0")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--reload", action="store_true")
    serve.set_defaults(handler=cmd_serve)

    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    setup_logging(args.log_level)
    stream = sys.stdout
    try:
        outcome = args.handler(args)
    except DomainException as exc:
        stream = sys.stderr
        logger.error("command failed", extra={"command": args.command, "detail": str(exc)})
        outcome = CommandOutcome(
            status=IStatusEnum.finding if exc.exit_code == 3 else IStatusEnum.error,
            payload={"error": type(exc).__name__},
            human_summary=str(exc),
            exit_code=exc.exit_code,
        )
    except ValidationError as exc:
        stream = sys.stderr
        outcome = CommandOutcome(
            status=IStatusEnum.error,
            payload={"error": "ValidationError"},
            human_summary=str(exc),
        )

    if args.json:
        print(outcome.model_dump_json(indent=2))
    else:
        print(outcome.human_summary, file=stream)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
