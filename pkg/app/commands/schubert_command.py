import argparse

from app import engine
from app.deps.permutation_deps import parse_permutation
from app.schemas.common_schema import CommandOutcome


def cmd_schubert(args: argparse.Namespace) -> CommandOutcome:
    schubert = engine.schubert
    w = parse_permutation(args.perm)
    if args.oracle:
        poly = schubert.cross_validate(w)
    else:
        poly = schubert.schubert_from_rc(w, max_length=args.max_length)
    text = schubert.format_polynomial(poly)
    return CommandOutcome(
        payload={"w": str(w), "text": text, **schubert.polynomial_document(poly)},
        human_summary=f"S_{w} = {text}",
    )
