import logging
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from typing import Any, Generic, TypeVar

from app.utils.exceptions import NotClosedException

ElementType = TypeVar("ElementType", bound=Hashable)

logger = logging.getLogger(__name__)


class EngineBase(Generic[ElementType]):
    def __init__(self, sort_key: Callable[[ElementType], Any]):
        """
        Engine object with the default work-queue closure and listing helpers.
        **Parameters**
        * `sort_key`: canonical ordering of the elements the engine produces
        """
        self.sort_key = sort_key

    def canonical(self, items: Iterable[ElementType]) -> list[ElementType]:
        return sorted(set(items), key=self.sort_key)

    def closure(
        self,
        seeds: Iterable[ElementType],
        moves: Callable[[ElementType], Iterable[ElementType]],
        *,
        limit: int | None = None,
    ) -> list[ElementType]:
        """Everything reachable from `seeds`, in canonical order.

        Any scheduling of the queue gives the same set; the result is sorted.
        """
        seen = set(seeds)
        queue = deque(seen)
        while queue:
            current = queue.popleft()
            for nxt in moves(current):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
                    if limit is not None and len(seen) > limit:
                        logger.warning(
                            "closure exceeded limit", extra={"limit": limit}
                        )
                        return self.canonical(seen)
        return self.canonical(seen)

    def edges(
        self,
        elements: Sequence[ElementType],
        moves: Callable[[ElementType], Iterable[ElementType]],
        label: Callable[[ElementType], str] = str,
    ) -> list[tuple[int, int]]:
        """Index pairs (source, target) of every move inside `elements`."""
        position = {e: i for i, e in enumerate(elements)}
        out = set()
        for i, element in enumerate(elements):
            for target in moves(element):
                j = position.get(target)
                if j is None:
                    raise NotClosedException(label(element), label(target))
                out.add((i, j))
        return sorted(out)

    def get_multi(
        self, items: Sequence[ElementType], *, skip: int = 0, limit: int = 100
    ) -> list[ElementType]:
        return list(items[skip : skip + limit])
