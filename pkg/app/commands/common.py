import argparse

from app.deps.permutation_deps import parse_vector
from app.deps.shape_deps import resolve_shape
from app.models.shape_model import MoonShape


def add_shape_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--shape", metavar="FILE", help="grid file, '#' cells and '.' gaps")
    group.add_argument("--staircase", type=int, metavar="N")
    group.add_argument("--reverse-staircase", type=int, metavar="N")
    group.add_argument("--ferrers", metavar="PARTS", help="comma separated row lengths")


def shape_of(args: argparse.Namespace) -> MoonShape:
    return resolve_shape(
        shape_file=args.shape,
        staircase=args.staircase,
        reverse_staircase=args.reverse_staircase,
        ferrers=parse_vector(args.ferrers),
    )


def has_shape(args: argparse.Namespace) -> bool:
    return any(
        getattr(args, name, None) is not None
        for name in ("shape", "staircase", "reverse_staircase", "ferrers")
    )


def plural(count: int, word: str) -> str:
    return f"{count} {word}" if count == 1 else f"{count} {word}s"
