import argparse
import json
from itertools import permutations

from app import engine
from app.core.config import settings
from app.deps.permutation_deps import parse_permutation
from app.models.pipedream_model import Permutation
from app.schemas.common_schema import CommandOutcome, IStatusEnum
from app.utils.exceptions import GuardExceededException, ParseException


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(one_line=p) for p in permutations(range(1, n + 1))]


def cmd_lattice_check(args: argparse.Namespace) -> CommandOutcome:
    if args.all_sn is not None:
        limit = min(args.max_sn, settings.MAX_SN_HARD)
        if args.all_sn > limit:
            raise GuardExceededException("all_sn", args.all_sn, limit)
        perms = all_permutations(args.all_sn)
    elif args.perm is not None:
        perms = [parse_permutation(args.perm)]
    else:
        raise ParseException("lattice input", "", "give --all-sn or --perm")

    table = engine.chute.lattice_table(perms, max_length=args.max_length)
    failures = table[~table["is_lattice"]]
    status = IStatusEnum.finding if len(failures) else IStatusEnum.ok
    summary = [
        f"{len(table)} permutations, {int(table['is_lattice'].sum())} lattices, "
        f"{len(failures)} counterexamples"
    ]
    for row in failures.itertuples():
        summary.append(f"  w={row.w}: {row.reason}, witness {row.witness}")
    if args.table:
        summary.extend(["", table.to_string(index=False)])
    return CommandOutcome(
        status=status,
        payload={"verdicts": json.loads(table.to_json(orient="records"))},
        human_summary="\n".join(summary),
    )
