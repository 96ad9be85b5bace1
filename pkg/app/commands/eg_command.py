import argparse

from app import engine
from app.commands.common import has_shape, shape_of
from app.schemas.common_schema import CommandOutcome, IStatusEnum
from app.utils.exceptions import ParseException


def _rows(rows) -> list[list[int]]:
    return [list(r) for r in rows]


def cmd_eg(args: argparse.Namespace) -> CommandOutcome:
    eg = engine.eg
    if args.counterexample:
        report = eg.check_counterexample()
        return CommandOutcome(
            payload=report.model_dump(),
            human_summary=(
                f"P={report.p} Q_top={report.q_top} Q_bot={report.q_bot}\n"
                f"witness {report.witness}: between={report.witness_between}, "
                f"attained={report.witness_in_image}\n"
                f"image {report.image_size} vs between {report.between_size}: "
                f"equal={report.image_equals_between}"
            ),
        )
    if not has_shape(args):
        raise ParseException("eg input", "", "give a shape or --counterexample")

    shape = shape_of(args)
    if args.check:
        report = eg.check_ne_se(shape, args.k)
        return CommandOutcome(
            status=IStatusEnum.ok if report.passed else IStatusEnum.finding,
            payload=report.model_dump(),
            human_summary=f"{report.fillings} fillings, P={report.p}, passed={report.passed}",
        )

    pairs = []
    lines = []
    for filling in engine.filling.enumerate_maximal(shape, args.k):
        p, q = eg.pair_of_filling(filling, args.k)
        pairs.append({"p": _rows(p.rows), "q": _rows(q.rows)})
        lines.append(f"P={_rows(p.rows)} Q={_rows(q.rows)}")
    return CommandOutcome(payload={"pairs": pairs}, human_summary="\n".join(lines))
