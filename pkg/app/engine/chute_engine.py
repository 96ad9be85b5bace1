import logging
from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import Any

import networkx as nx
import pandas as pd

from app import engine
from app.engine.base_engine import EngineBase
from app.models.chute_model import (ChutableRect, ChutePoset, IntervalVerdict,
                                    LatticeVerdict, OrderComparison,
                                    SubgraphVerdict)
from app.models.pipedream_model import Permutation, PipeDream
from app.models.shape_model import Cell, MoonShape
from app.utils.exceptions import (InternalContradiction, NotAnElbowException,
                                  NotChutableException)

logger = logging.getLogger(__name__)


def _label(element: Any) -> str:
    return element.label() if isinstance(element, PipeDream) else str(element)


def _key(element: Any) -> Any:
    return getattr(element, "sort_key", element)


class ChuteEngine(EngineBase[PipeDream]):
    # rectangles

    def find_chutable(
        self,
        dream: PipeDream,
        within: MoonShape | None = None,
        *,
        two_row: bool = False,
    ) -> list[ChutableRect]:
        """Rectangles whose north-east cross can drop to the south-west corner."""
        crosses = dream.crosses
        found = []
        for top, right in sorted(crosses):
            left = right - 1
            while left >= 1 and (top, left) in crosses:
                left -= 1
            if left < 1:
                continue
            bottom = top + 1
            while True:
                if (
                    (bottom, left) not in crosses
                    and (bottom, right) not in crosses
                    and all((bottom, c) in crosses for c in range(left + 1, right))
                ):
                    found.append(ChutableRect(top, bottom, left, right))
                    break
                if two_row or not all(
                    (bottom, c) in crosses for c in range(left, right + 1)
                ):
                    break
                bottom += 1
        if within is not None:
            found = [rect for rect in found if within.has(*rect.south_west)]
        return found

    def find_inverse_chutable(
        self,
        dream: PipeDream,
        within: MoonShape | None = None,
        *,
        two_row: bool = False,
    ) -> list[ChutableRect]:
        """Rectangles whose south-west cross can rise to the north-east corner."""
        crosses = dream.crosses
        found = []
        for bottom, left in sorted(crosses):
            right = left + 1
            while (bottom, right) in crosses:
                right += 1
            top = bottom - 1
            while top >= 1:
                if (
                    (top, left) not in crosses
                    and (top, right) not in crosses
                    and all((top, c) in crosses for c in range(left + 1, right))
                ):
                    found.append(ChutableRect(top, bottom, left, right))
                    break
                if two_row or not all(
                    (top, c) in crosses for c in range(left, right + 1)
                ):
                    break
                top -= 1
        if within is not None:
            found = [rect for rect in found if within.has(*rect.north_east)]
        return found

    def _matches(
        self, dream: PipeDream, rect: ChutableRect, elbows: set[tuple[int, int]]
    ) -> bool:
        top, bottom, left, right = rect
        if bottom <= top or right <= left or top < 1 or left < 1:
            return False
        return all(
            ((i, j) in dream.crosses) != ((i, j) in elbows)
            for i in range(top, bottom + 1)
            for j in range(left, right + 1)
        )

    def is_chutable(self, dream: PipeDream, rect: ChutableRect) -> bool:
        rect = ChutableRect(*rect)
        corners = {(rect.top, rect.left), rect.south_west, (rect.bottom, rect.right)}
        return self._matches(dream, rect, corners)

    def is_inverse_chutable(self, dream: PipeDream, rect: ChutableRect) -> bool:
        rect = ChutableRect(*rect)
        corners = {(rect.top, rect.left), rect.north_east, (rect.bottom, rect.right)}
        return self._matches(dream, rect, corners)

    def apply_chute(self, dream: PipeDream, rect: ChutableRect) -> PipeDream:
        rect = ChutableRect(*rect)
        if not self.is_chutable(dream, rect):
            raise NotChutableException(rect)
        crosses = (dream.crosses - {rect.north_east}) | {Cell(*rect.south_west)}
        return engine.pipedream.dream(crosses, max(dream.ambient, sum(rect.south_west)))

    def apply_inverse_chute(self, dream: PipeDream, rect: ChutableRect) -> PipeDream:
        rect = ChutableRect(*rect)
        if not self.is_inverse_chutable(dream, rect):
            raise NotChutableException(rect, inverse=True)
        crosses = (dream.crosses - {rect.south_west}) | {Cell(*rect.north_east)}
        return engine.pipedream.dream(crosses, max(dream.ambient, sum(rect.north_east)))

    def chute_moves(
        self,
        dream: PipeDream,
        within: MoonShape | None = None,
        *,
        two_row: bool = False,
    ) -> list[PipeDream]:
        return [
            self.apply_chute(dream, rect)
            for rect in self.find_chutable(dream, within, two_row=two_row)
        ]

    def inverse_chute_moves(
        self, dream: PipeDream, within: MoonShape | None = None
    ) -> list[PipeDream]:
        return [
            self.apply_inverse_chute(dream, rect)
            for rect in self.find_inverse_chutable(dream, within)
        ]

    # posets

    def poset_from_relations(
        self, elements: Sequence[Any], pairs: Iterable[tuple[int, int]]
    ) -> ChutePoset:
        """Poset generated by `pairs` (larger index -> smaller), as given."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        graph.add_edges_from(pairs)
        if not nx.is_directed_acyclic_graph(graph):
            raise InternalContradiction("the move relation has a cycle")
        return ChutePoset(
            elements=list(elements),
            hasse=nx.transitive_reduction(graph),
            order=nx.transitive_closure_dag(graph),
        )

    def chute_poset(
        self,
        elements: Iterable[PipeDream],
        within: MoonShape | None = None,
        *,
        two_row: bool = False,
    ) -> ChutePoset:
        ordered = sorted(set(elements), key=_key)
        pairs = self.edges(
            ordered,
            lambda d: self.chute_moves(d, within, two_row=two_row),
            label=_label,
        )
        return self.poset_from_relations(ordered, pairs)

    def is_lattice(self, poset: ChutePoset) -> LatticeVerdict:
        """Check every pair for a unique join and a unique meet."""
        order = poset.order
        nodes = sorted(order.nodes)
        up = {v: {v} | set(order.predecessors(v)) for v in nodes}
        down = {v: {v} | set(order.successors(v)) for v in nodes}

        def has_extreme(bounds: set[int], cone: dict[int, set[int]]) -> bool:
            return any(len(cone[z]) == len(bounds) for z in bounds)

        for x, y in combinations(nodes, 2):
            for bounds, cone, what in (
                (up[x] & up[y], up, "join"),
                (down[x] & down[y], down, "meet"),
            ):
                if not has_extreme(bounds, cone):
                    witness = (_label(poset.elements[x]), _label(poset.elements[y]))
                    return LatticeVerdict(
                        size=len(nodes),
                        is_lattice=False,
                        witness=witness,
                        reason=f"no unique {what}",
                    )
        return LatticeVerdict(size=len(nodes), is_lattice=True)

    def lattice_verdict(self, w: Permutation, *, max_length: int | None = None) -> LatticeVerdict:
        dreams = engine.pipedream.enumerate_rc(w, max_length=max_length)
        verdict = self.is_lattice(self.chute_poset(dreams))
        verdict.w = str(w)
        if not verdict.is_lattice:
            logger.error(
                "chute poset is not a lattice",
                extra={"w": str(w), "witness": verdict.witness, "reason": verdict.reason},
            )
        return verdict

    def lattice_table(
        self, perms: Iterable[Permutation], *, max_length: int | None = None
    ) -> pd.DataFrame:
        rows = [
            self.lattice_verdict(w, max_length=max_length).model_dump() for w in perms
        ]
        return pd.DataFrame(rows, columns=["w", "size", "is_lattice", "witness", "reason"])

    def two_row_order_comparison(self, w: Permutation) -> OrderComparison:
        dreams = engine.pipedream.enumerate_rc(w)
        general = self.chute_poset(dreams)
        two_row = self.chute_poset(dreams, two_row=True)
        labels = [_label(d) for d in general.elements]
        a, b = set(general.order.edges), set(two_row.order.edges)
        result = OrderComparison(
            w=str(w),
            coincide=a == b,
            only_general=[(labels[x], labels[y]) for x, y in sorted(a - b)],
            only_two_row=[(labels[x], labels[y]) for x, y in sorted(b - a)],
        )
        if not result.coincide:
            logger.warning(
                "two-row chutes generate a different order",
                extra={"w": str(w), "only_general": len(result.only_general)},
            )
        return result

    # intervals

    def interval(
        self, top: PipeDream, bottom: PipeDream
    ) -> list[PipeDream]:
        below = set(self.closure([top], self.chute_moves))
        above = set(self.closure([bottom], self.inverse_chute_moves))
        return self.canonical(below & above)

    def interval_check(self, shape: MoonShape, k: int) -> IntervalVerdict:
        pipedream = engine.pipedream
        fillings = engine.filling.enumerate_maximal(shape, k)
        dreams = {pipedream.from_filling(f) for f in fillings}
        top = pipedream.from_filling(engine.filling.d_top(shape, k))
        bottom = pipedream.from_filling(engine.filling.d_bot(shape, k))
        between = set(self.interval(top, bottom))
        return IntervalVerdict(
            holds=between == dreams,
            permutation=str(pipedream.permutation_of(top)),
            interval_size=len(between),
            fillings=len(dreams),
            missing=[d.label() for d in self.canonical(between - dreams)],
            extra=[d.label() for d in self.canonical(dreams - between)],
        )

    # flips

    def flip(self, dream: PipeDream, elbow: tuple[int, int]) -> PipeDream | None:
        cell = Cell(*elbow)
        if cell in dream.crosses:
            raise NotAnElbowException(tuple(cell))
        _, visits = engine.pipedream.trace(dream)
        return self._flip(dream, cell, visits)

    def _flip(
        self, dream: PipeDream, cell: Cell, visits: dict[Cell, list[int]]
    ) -> PipeDream | None:
        pipes = visits.get(cell, [])
        if len(pipes) < 2:
            return None
        a, b = pipes[0], pipes[1]
        for other in dream.crosses:
            through = visits.get(other, [])
            if a in through and b in through:
                crosses = (dream.crosses - {other}) | {cell}
                return engine.pipedream.dream(crosses, dream.ambient)
        return None

    def flips(self, dream: PipeDream) -> list[PipeDream]:
        _, visits = engine.pipedream.trace(dream)
        out = []
        for cell in sorted(visits):
            if cell in dream.crosses:
                continue
            flipped = self._flip(dream, cell, visits)
            if flipped is not None:
                out.append(flipped)
        return out

    def flip_graph(self, elements: Iterable[PipeDream]) -> nx.Graph:
        ordered = sorted(set(elements), key=_key)
        graph = nx.Graph()
        graph.add_nodes_from(range(len(ordered)))
        graph.add_edges_from(self.edges(ordered, self.flips, label=_label))
        graph.graph["elements"] = ordered
        return graph

    def chute_graph(self, elements: Iterable[PipeDream]) -> nx.Graph:
        ordered = sorted(set(elements), key=_key)
        graph = nx.Graph()
        graph.add_nodes_from(range(len(ordered)))
        graph.add_edges_from(self.edges(ordered, self.chute_moves, label=_label))
        graph.graph["elements"] = ordered
        return graph

    def chute_subgraph_of_flips(self, w: Permutation) -> SubgraphVerdict:
        dreams = engine.pipedream.enumerate_rc(w)
        chutes = self.chute_graph(dreams)
        flips = self.flip_graph(dreams)
        missing = [e for e in chutes.edges if not flips.has_edge(*e)]
        return SubgraphVerdict(
            w=str(w),
            holds=not missing,
            chute_edges=chutes.number_of_edges(),
            flip_edges=flips.number_of_edges(),
            missing=missing,
        )

    # graph output

    def poset_to_dot(self, poset: ChutePoset, emphasize: Iterable[Any] = ()) -> str:
        marked = set(emphasize)
        graph = nx.DiGraph()
        for i, element in enumerate(poset.elements):
            attrs = {"label": _label(element)}
            if element in marked:
                attrs.update(style="filled", fillcolor="lightgrey")
            graph.add_node(f"d{i}", **attrs)
        graph.add_edges_from((f"d{a}", f"d{b}") for a, b in poset.covers)
        return nx.nx_pydot.to_pydot(graph).to_string()

    def flip_graph_to_dot(self, graph: nx.Graph) -> str:
        elements = graph.graph.get("elements", [])
        out = nx.Graph()
        for i in graph.nodes:
            out.add_node(f"d{i}", label=_label(elements[i]) if elements else str(i))
        out.add_edges_from((f"d{a}", f"d{b}") for a, b in graph.edges)
        return nx.nx_pydot.to_pydot(out).to_string()


chute = ChuteEngine(_key)
