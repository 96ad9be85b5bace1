import argparse
import logging
import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager

import pandas as pd

from app import engine
from app.commands.lattice_command import all_permutations
from app.core.config import settings
from app.engine.chute_engine import ChuteEngine
from app.engine.filling_engine import _cached_fixpoint
from app.models.chute_model import ChutableRect
from app.models.pipedream_model import Permutation, PipeDream
from app.models.shape_model import Cell, MoonShape, RowInterval
from app.schemas.common_schema import CommandOutcome, IStatusEnum
from app.schemas.verify_schema import ICriterionResult
from app.utils.exceptions import (DomainException, HypothesisViolatedException,
                                  NonIntegralProductException,
                                  NotChutableException, ParseException)

logger = logging.getLogger(__name__)

TEN_FILLINGS_SHAPE = MoonShape(
    rows=(
        RowInterval(1, 2, 3),
        RowInterval(2, 1, 4),
        RowInterval(3, 1, 4),
        RowInterval(4, 2, 3),
    )
)
WORD_EXAMPLE_CROSSES = ((1, 3), (2, 3), (2, 4), (3, 1), (3, 3), (4, 2), (4, 3))
COUNT_POINTS = {(5, 1): 5, (6, 1): 14, (7, 1): 42, (7, 2): 14, (8, 2): 84}

# (passed, detail, finding)
Check = tuple[bool, str, bool]


class FaultyChuteEngine(ChuteEngine):
    """Adds the south-west cross but leaves the north-east one in place."""

    def apply_chute(self, dream: PipeDream, rect: ChutableRect) -> PipeDream:
        rect = ChutableRect(*rect)
        if not self.is_chutable(dream, rect):
            raise NotChutableException(rect)
        crosses = dream.crosses | {Cell(*rect.south_west)}
        return engine.pipedream.dream(crosses, max(dream.ambient, sum(rect.south_west)))


FAULTS = {"chute": FaultyChuteEngine}


@contextmanager
def injected_fault(name: str | None) -> Iterator[None]:
    if name is None:
        yield
        return
    if name not in FAULTS:
        raise ParseException("fault", name, f"known faults: {sorted(FAULTS)}")
    original = engine.chute
    engine.chute = FAULTS[name](original.sort_key)
    _cached_fixpoint.cache_clear()
    logger.warning("fault injected", extra={"fault": name})
    try:
        yield
    finally:
        engine.chute = original
        _cached_fixpoint.cache_clear()


class Suite:
    def __init__(self, quick: bool = False):
        self.box = 3 if quick else settings.PROPERTY_BOX
        self.jonsson_box = 3 if quick else 4
        self.sn = 4 if quick else 5
        self.samples = 5 if quick else 20

    def ten_fillings(self) -> Check:
        count = len(engine.filling.enumerate_maximal(TEN_FILLINGS_SHAPE, 1))
        return count == 10, f"{count} fillings", False

    def word_example(self) -> Check:
        pipedream = engine.pipedream
        dream = pipedream.dream(WORD_EXAMPLE_CROSSES, 7)
        word = pipedream.word_of(dream)
        expected = Permutation(one_line=(1, 2, 6, 4, 7, 5, 3))
        traced = pipedream.permutation_of(dream)
        evaluated = pipedream.evaluate_word(word, 7)
        passed = (
            word.letters == (3, 5, 4, 5, 3, 6, 5)
            and traced == expected
            and evaluated == expected
        )
        return passed, f"word {word}, traced {traced}, evaluated {evaluated}", False

    def ten_fillings_interval(self) -> Check:
        w = engine.pipedream.shape_permutation(TEN_FILLINGS_SHAPE, 1)
        verdict = engine.chute.interval_check(TEN_FILLINGS_SHAPE, 1)
        passed = (
            w == Permutation(one_line=(1, 2, 6, 4, 5, 3))
            and verdict.holds
            and verdict.fillings == 10
        )
        return passed, f"w={w}, interval={verdict.holds}, size {verdict.interval_size}", False

    def filling_properties(self) -> Check:
        filling, pipedream = engine.filling, engine.pipedream
        failures = []
        shapes = engine.shape.enumerate_moon_shapes(self.box, self.box)
        for shape in shapes:
            for k in (1, 2):
                # backtracking is independent of chute moves
                fillings = filling.enumerate_maximal(shape, k, method="backtrack")
                dreams = [pipedream.from_filling(f) for f in fillings]
                checks = {
                    "reduced": all(pipedream.is_reduced(d) for d in dreams),
                    "permutation": len({pipedream.permutation_of(d) for d in dreams}) == 1,
                    "purity": len({len(d) for d in dreams}) == 1,
                    "interval": engine.chute.interval_check(shape, k).holds,
                    "top": sum(1 for f in fillings if not filling.inverse_chute_moves(f)) == 1,
                    "bottom": sum(1 for f in fillings if not filling.chute_moves(f)) == 1,
                    "connected": set(fillings) == set(filling.enumerate_maximal(shape, k)),
                }
                failed = [name for name, ok in checks.items() if not ok]
                if failed:
                    failures.append(f"{engine.shape.render_shape(shape)!r} k={k}: {failed}")
        detail = f"{len(shapes)} shapes x 2 values of k"
        if failures:
            detail += f"; {len(failures)} failures, first {failures[0]}"
        return not failures, detail, False

    def chute_closure(self) -> Check:
        pipedream, chute = engine.pipedream, engine.chute
        moves = 0
        for w in all_permutations(4):
            for dream in pipedream.rc_brute_force(w):
                for rect in chute.find_chutable(dream):
                    moved = chute.apply_chute(dream, rect)
                    moves += 1
                    if pipedream.permutation_of(moved) != w or not pipedream.is_reduced(moved):
                        return False, f"w={w}: {dream.label()} -> {moved.label()}", False
        return True, f"{moves} chutes", False

    def bb_extremes(self) -> Check:
        pipedream, chute = engine.pipedream, engine.chute
        perms = all_permutations(self.sn)
        for w in perms:
            top, bottom = pipedream.bb_top(w), pipedream.bb_bot(w)
            for dream in (top, bottom):
                if not pipedream.is_reduced(dream) or pipedream.permutation_of(dream) != w:
                    return False, f"w={w}: {dream.label()} is not a reduced dream of w", False
            poset = chute.chute_poset(pipedream.enumerate_rc(w, method="both"))
            if poset.maximal != [poset.index(top)] or poset.minimal != [poset.index(bottom)]:
                return False, f"w={w}: extremes are not bb_top/bb_bot", False
        return True, f"{len(perms)} permutations", False

    def lattice(self) -> Check:
        table = engine.chute.lattice_table(all_permutations(self.sn))
        failures = table[~table["is_lattice"]]
        detail = f"{len(table)} verdicts, {len(failures)} not lattices"
        if len(failures):
            first = failures.iloc[0]
            detail += f"; w={first['w']} witness {first['witness']}"
        return True, detail, bool(len(failures))

    def schubert(self) -> Check:
        schubert = engine.schubert
        perms = all_permutations(4) + schubert.sample_permutations(5, self.samples)
        for w in perms:
            schubert.cross_validate(w)
        return True, f"{len(perms)} permutations", False

    def counts(self) -> Check:
        schubert = engine.schubert
        for (n, k), expected in COUNT_POINTS.items():
            value = schubert.count_agreement(n, k)
            if value != expected:
                return False, f"(n,k)=({n},{k}): {value} != {expected}", False
        for n, k in COUNT_POINTS:
            if n > 7:
                continue
            for f in engine.filling.enumerate_maximal(engine.shape.staircase(n), k):
                chain = engine.filling.longest_ne_chain(f)
                crossing = engine.bijection.crossing_number(f)
                if chain != crossing:
                    return False, f"(n,k)=({n},{k}): chain {chain} vs crossing {crossing}", False
        try:
            square = schubert.ktriangulation_count(5, 1, reading="square")
        except NonIntegralProductException as exc:
            return True, f"square reading at (5,1) is {exc.value}", False
        return False, f"square reading at (5,1) is integral: {square}", False

    def vexillary(self) -> Check:
        pipedream, schubert = engine.pipedream, engine.schubert
        shapes = engine.shape.enumerate_moon_shapes(self.box, self.box)
        for shape in shapes:
            for k in (0, 1, 2):
                w = pipedream.shape_permutation(shape, k)
                if not schubert.is_vexillary(w):
                    return False, f"k={k}: {w} contains 2143", False
        remark = len(pipedream.enumerate_rc(Permutation(one_line=(4, 2, 5, 1, 3))))
        return remark == 2, f"{len(shapes)} shapes; |RC(4,2,5,1,3)|={remark}", False

    def ne_se(self) -> Check:
        checked = 0
        for shape in engine.shape.enumerate_stack_shapes(self.box, self.box):
            for k in (1, 2):
                try:
                    report = engine.eg.check_ne_se(shape, k)
                except HypothesisViolatedException:
                    continue
                checked += 1
                if not report.passed:
                    return False, f"{engine.shape.render_shape(shape)!r} k={k}: {report}", False
        return True, f"{checked} shape and k pairs", False

    def counterexample(self) -> Check:
        report = engine.eg.check_counterexample()
        passed = (
            report.p == [[3, 4, 5], [5]]
            and report.q_top == [[1, 2, 3], [3]]
            and report.q_bot == [[2, 3, 4], [4]]
            and report.witness_between
            and not report.image_equals_between
        )
        return passed, (
            f"image {report.image_size} vs between {report.between_size}, "
            f"witness attained {report.witness_in_image}"
        ), False

    def flip_subgraph(self) -> Check:
        for w in all_permutations(4):
            verdict = engine.chute.chute_subgraph_of_flips(w)
            if not verdict.holds:
                return False, f"w={w}: missing {verdict.missing}", False
        return True, "24 permutations", False

    def jonsson(self) -> Check:
        shapes = engine.shape.enumerate_stack_shapes(self.jonsson_box, self.jonsson_box)
        compared = 0
        for k in (1, 2):
            for report in engine.bijection.jonsson_sweep(shapes, k):
                compared += 1
                if not report.equal:
                    return False, f"heights {report.heights} k={k}: {report}", False
        return True, f"{compared} comparisons", False

    def criteria(self) -> list[tuple[int, str, Callable[[], Check]]]:
        return [
            (1, "ten fillings", self.ten_fillings),
            (2, "word and permutation", self.word_example),
            (3, "ten fillings interval", self.ten_fillings_interval),
            (4, "maximal filling properties", self.filling_properties),
            (5, "chute closure", self.chute_closure),
            (6, "bergeron-billey extremes", self.bb_extremes),
            (7, "lattice verdicts", self.lattice),
            (8, "schubert cross-validation", self.schubert),
            (9, "counting identities", self.counts),
            (10, "vexillary permutations", self.vexillary),
            (11, "north-east/south-east tableaux", self.ne_se),
            (12, "betweenness counterexample", self.counterexample),
            (13, "flip subgraph", self.flip_subgraph),
            (14, "column permutation invariance", self.jonsson),
        ]

    def run(self, only: set[int] | None = None) -> list[ICriterionResult]:
        results = []
        for number, name, check in self.criteria():
            if only and number not in only:
                continue
            started = time.perf_counter()
            try:
                passed, detail, finding = check()
            except DomainException as exc:
                passed, detail, finding = False, str(exc), False
            result = ICriterionResult(
                number=number,
                name=name,
                passed=passed,
                finding=finding,
                seconds=round(time.perf_counter() - started, 3),
                detail=detail,
            )
            logger.info(
                "criterion finished",
                extra={
                    "criterion": number,
                    "title": name,
                    "passed": passed,
                    "seconds": result.seconds,
                },
            )
            results.append(result)
        return results


def cmd_verify(args: argparse.Namespace) -> CommandOutcome:
    only = {int(v) for v in args.only.split(",")} if args.only else None
    if args.inject_fault and only is None:
        only = {5}
    with injected_fault(args.inject_fault):
        results = Suite(quick=args.quick).run(only)

    table = pd.DataFrame(
        [r.model_dump() for r in results], columns=list(ICriterionResult.model_fields)
    )
    failed = [r for r in results if not r.passed]
    findings = [r for r in results if r.finding]
    if failed:
        status, code = IStatusEnum.error, 1
    elif findings:
        status, code = IStatusEnum.finding, 3
    else:
        status, code = IStatusEnum.ok, 0
    summary = (
        f"{len(results) - len(failed)}/{len(results)} criteria passed, "
        f"{len(findings)} findings, {table['seconds'].sum():.1f}s\n\n"
        + table[["number", "name", "passed", "finding", "seconds"]].to_string(index=False)
    )
    return CommandOutcome(
        status=status,
        payload={"criteria": [r.model_dump() for r in results]},
        human_summary=summary,
        exit_code=code,
    )
