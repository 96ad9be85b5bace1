import argparse

from app import engine
from app.commands.common import plural, shape_of
from app.deps.permutation_deps import parse_vector
from app.schemas.common_schema import CommandOutcome


def cmd_enumerate(args: argparse.Namespace) -> CommandOutcome:
    shape = shape_of(args)
    rows = parse_vector(args.rows)
    fillings = engine.filling.enumerate_maximal(
        shape, args.k, rows, method=args.method, cross_check=args.cross_check
    )
    lines = [plural(len(fillings), "filling")]
    if args.list:
        for filling in fillings:
            lines.extend(["", engine.filling.render_filling(filling)])
    return CommandOutcome(
        payload={
            "k": args.k,
            "rows": rows,
            "count": len(fillings),
            "fillings": [engine.filling.filling_document(f) for f in fillings],
        },
        human_summary="\n".join(lines),
    )
