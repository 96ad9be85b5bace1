from typing import Any, NamedTuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from app.models.pipedream_model import PipeDream


class ChutableRect(NamedTuple):
    top: int
    bottom: int
    left: int
    right: int

    @property
    def north_east(self) -> tuple[int, int]:
        return (self.top, self.right)

    @property
    def south_west(self) -> tuple[int, int]:
        return (self.bottom, self.left)


class ChutePoset(BaseModel):
    """Elements in canonical order plus the cover graph.

    Edges of `hasse` point from the covering (larger) element to the covered
    one, both given by their index in `elements`; `order` is its transitive
    closure.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    elements: list[Any]
    hasse: nx.DiGraph
    order: nx.DiGraph

    @property
    def covers(self) -> list[tuple[int, int]]:
        return sorted(self.hasse.edges())

    @property
    def maximal(self) -> list[int]:
        return sorted(v for v in self.hasse.nodes if self.hasse.in_degree(v) == 0)

    @property
    def minimal(self) -> list[int]:
        return sorted(v for v in self.hasse.nodes if self.hasse.out_degree(v) == 0)

    def index(self, dream: PipeDream) -> int:
        return self.elements.index(dream)

    def __len__(self) -> int:
        return len(self.elements)


class LatticeVerdict(BaseModel):
    w: str = ""
    size: int
    is_lattice: bool
    witness: tuple[str, str] | None = None
    reason: str | None = None


class IntervalVerdict(BaseModel):
    holds: bool
    permutation: str
    interval_size: int
    fillings: int
    missing: list[str] = []
    extra: list[str] = []


class OrderComparison(BaseModel):
    w: str
    coincide: bool
    only_general: list[tuple[str, str]] = []
    only_two_row: list[tuple[str, str]] = []


class SubgraphVerdict(BaseModel):
    w: str
    holds: bool
    chute_edges: int
    flip_edges: int
    missing: list[Any] = []
