import argparse
from pathlib import Path

from app import engine
from app.commands.common import has_shape, shape_of
from app.deps.permutation_deps import parse_permutation
from app.models.chute_model import ChutePoset
from app.schemas.common_schema import CommandOutcome
from app.utils.exceptions import ParseException


def _extremes(poset: ChutePoset) -> tuple[list, list]:
    return (
        [poset.elements[i] for i in poset.maximal],
        [poset.elements[i] for i in poset.minimal],
    )


def cmd_poset(args: argparse.Namespace) -> CommandOutcome:
    pipedream, chute = engine.pipedream, engine.chute
    shape = shape_of(args) if has_shape(args) else None
    if args.perm is None and shape is None:
        raise ParseException("poset input", "", "give --perm or a shape")

    payload: dict = {}
    lines = []
    emphasize: list = []
    poset: ChutePoset | None = None
    if shape is not None:
        fillings = engine.filling.enumerate_maximal(shape, args.k)
        emphasize = [pipedream.from_filling(f) for f in fillings]
        poset = chute.chute_poset(emphasize, shape)
        top = pipedream.from_filling(engine.filling.d_top(shape, args.k))
        bottom = pipedream.from_filling(engine.filling.d_bot(shape, args.k))
        maxima, minima = _extremes(poset)
        verdict = chute.interval_check(shape, args.k)
        payload.update(
            fillings=len(fillings),
            max_is_d_top=maxima == [top],
            min_is_d_bot=minima == [bottom],
            interval=verdict.model_dump(),
        )
        lines.append(
            f"{len(fillings)} fillings; max = d_top: {maxima == [top]}; "
            f"min = d_bot: {minima == [bottom]}; interval={str(verdict.holds).lower()}"
        )

    if args.perm is not None:
        w = parse_permutation(args.perm)
        dreams = pipedream.enumerate_rc(w, max_length=args.max_length)
        poset = chute.chute_poset(dreams)
        maxima, minima = _extremes(poset)
        payload.update(
            w=str(w),
            nodes=len(poset),
            covers=len(poset.covers),
            max_is_bb_top=maxima == [pipedream.bb_top(w)],
            min_is_bb_bot=minima == [pipedream.bb_bot(w)],
        )
        lines.append(
            f"RC({w}): {len(poset)} nodes, {len(poset.covers)} covers; "
            f"unique max = bb_top: {maxima == [pipedream.bb_top(w)]}; "
            f"unique min = bb_bot: {minima == [pipedream.bb_bot(w)]}"
        )

    if args.dot and poset is not None:
        Path(args.dot).write_text(chute.poset_to_dot(poset, emphasize))
        lines.append(f"wrote {args.dot}")
    return CommandOutcome(payload=payload, human_summary="\n".join(lines))
