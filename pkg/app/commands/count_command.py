import argparse

from app import engine
from app.schemas.common_schema import CommandOutcome
from app.utils.exceptions import NonIntegralProductException


def cmd_count(args: argparse.Namespace) -> CommandOutcome:
    schubert = engine.schubert
    if args.method == "all":
        value = schubert.count_agreement(args.n, args.k)
    else:
        value = schubert.ktriangulation_count(
            args.n, args.k, args.method, reading=args.reading
        )
    payload = {"n": args.n, "k": args.k, "method": args.method, "value": value}
    lines = [f"{value} {args.k}-triangulations of the {args.n}-gon"]
    if args.reading == "triangular":
        try:
            square = schubert.ktriangulation_count(args.n, args.k, reading="square")
            payload["square"] = square
        except NonIntegralProductException as exc:
            payload["square"] = str(exc.value)
            lines.append(f"square index reading: non-integral {exc.value}")
    return CommandOutcome(payload=payload, human_summary="\n".join(lines))
