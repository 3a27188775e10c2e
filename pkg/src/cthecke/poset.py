"""Finite posets given by labeled Hasse diagrams.

Elements are stored in a fixed order and referred to by index internally.
Both the weak-order intervals and the tableau class posets are materialized
as :class:`HassePoset` so that grading and lattice checks share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Generic, Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class HassePoset(Generic[T]):
    elements: tuple[T, ...]
    # (lower index, upper index, label)
    covers: tuple[tuple[int, int, int], ...]

    @cached_property
    def index(self) -> dict[T, int]:
        return {x: k for k, x in enumerate(self.elements)}

    @cached_property
    def _up(self) -> tuple[frozenset[int], ...]:
        # reflexive-transitive closure, computed in reverse topological order
        succ: list[list[int]] = [[] for _ in self.elements]
        indeg = [0] * len(self.elements)
        for lo, hi, _ in self.covers:
            succ[lo].append(hi)
            indeg[hi] += 1
        order = [k for k, d in enumerate(indeg) if d == 0]
        for k in order:
            for h in succ[k]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    order.append(h)
        if len(order) != len(self.elements):
            raise ValueError("cover relation contains a cycle")
        up: list[frozenset[int]] = [frozenset()] * len(self.elements)
        for k in reversed(order):
            acc = {k}
            for h in succ[k]:
                acc |= up[h]
            up[k] = frozenset(acc)
        return tuple(up)

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a: T, b: T) -> bool:
        return self.index[b] in self._up[self.index[a]]

    def labeled_edges(self) -> set[tuple[T, T, int]]:
        return {(self.elements[lo], self.elements[hi], lab) for lo, hi, lab in self.covers}

    def minimal(self) -> list[T]:
        has_lower = {hi for _, hi, _ in self.covers}
        return [x for k, x in enumerate(self.elements) if k not in has_lower]

    def maximal(self) -> list[T]:
        has_upper = {lo for lo, _, _ in self.covers}
        return [x for k, x in enumerate(self.elements) if k not in has_upper]

    def is_graded_by(self, rank: Callable[[T], int]) -> bool:
        """True iff every cover raises ``rank`` by exactly one and minima sit at 0."""
        if any(rank(x) != 0 for x in self.minimal()):
            return False
        return all(
            rank(self.elements[hi]) == rank(self.elements[lo]) + 1
            for lo, hi, _ in self.covers
        )

    def _least(self, candidates: Iterable[int]) -> int | None:
        cands = list(candidates)
        for c in cands:
            if all(d in self._up[c] for d in cands):
                return c
        return None

    def join(self, a: T, b: T) -> T | None:
        ub = self._up[self.index[a]] & self._up[self.index[b]]
        k = self._least(ub)
        return None if k is None else self.elements[k]

    def meet(self, a: T, b: T) -> T | None:
        ia, ib = self.index[a], self.index[b]
        lb = [k for k in range(len(self.elements)) if ia in self._up[k] and ib in self._up[k]]
        # greatest lower bound: the lower bound lying above all the others
        for c in lb:
            if all(c in self._up[d] for d in lb):
                return self.elements[c]
        return None

    def is_lattice(self) -> bool:
        xs = self.elements
        for p in range(len(xs)):
            for q in range(p + 1, len(xs)):
                if self.join(xs[p], xs[q]) is None or self.meet(xs[p], xs[q]) is None:
                    return False
        return bool(xs)
