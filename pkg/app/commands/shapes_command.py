import argparse

from app import engine
from app.commands.common import plural
from app.schemas.common_schema import CommandOutcome


def cmd_shapes(args: argparse.Namespace) -> CommandOutcome:
    shapes = engine.shape.enumerate_moon_shapes(args.rows, args.cols)
    if args.stack:
        shapes = [s for s in shapes if engine.shape.is_stack(s)]
    lines = [plural(len(shapes), "shape")]
    if args.list:
        for shape in shapes:
            lines.extend(["", engine.shape.render_shape(shape)])
    return CommandOutcome(
        payload={
            "count": len(shapes),
            "shapes": [[list(r) for r in s.rows] for s in shapes],
        },
        human_summary="\n".join(lines),
    )
