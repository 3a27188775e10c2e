"""Compositions, the composition poset and skew composition shapes.

Diagrams use matrix coordinates with the top row numbered 1.  An inner shape
sits at the bottom of its outer shape: row ``i`` of ``inner`` is row
``len(outer) - len(inner) + i`` of ``outer``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import accumulate
from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def cells(self) -> frozenset[Cell]:
        return frozenset(
            Cell(r, c) for r, p in enumerate(self.parts, start=1) for c in range(1, p + 1)
        )

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self) -> str:
        return f"Composition{self}"


EMPTY = Composition(())


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order of parts."""

    def gen(m: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in gen(m - first):
                yield (first,) + rest

    return [Composition(p) for p in gen(n)]


def partitions_of(n: int) -> list[Composition]:
    return [a for a in compositions_of(n) if a.is_partition()]


def rearrange_to_partition(alpha: Composition) -> Composition:
    return Composition(tuple(sorted(alpha.parts, reverse=True)))


def covers_up(beta: Composition) -> set[Composition]:
    """Compositions covering ``beta`` in the composition poset.

    Either a new first row of length one, or one more cell at the end of a
    row that is the topmost row of its length.
    """
    out = {Composition((1,) + beta.parts)}
    seen = set()
    for k, b in enumerate(beta.parts):
        if b in seen:
            continue
        seen.add(b)
        out.add(Composition(beta.parts[:k] + (b + 1,) + beta.parts[k + 1 :]))
    return out


def covers_down(alpha: Composition) -> set[Composition]:
    """Compositions covered by ``alpha``; the inverse of :func:`covers_up`."""
    p = alpha.parts
    out = set()
    if p and p[0] == 1:
        out.add(Composition(p[1:]))
    for k, a in enumerate(p):
        if a >= 2 and (a - 1) not in p[:k]:
            out.add(Composition(p[:k] + (a - 1,) + p[k + 1 :]))
    return out


@lru_cache(maxsize=None)
def _leq_c(beta: tuple[int, ...], alpha: tuple[int, ...]) -> bool:
    db = sum(alpha) - sum(beta)
    if db < 0 or len(beta) > len(alpha):
        return False
    if db == 0:
        return beta == alpha
    return any(_leq_c(g.parts, alpha) for g in covers_up(Composition(beta)))


def leq_c(beta: Composition, alpha: Composition) -> bool:
    return _leq_c(beta.parts, alpha.parts)


def column_heights(alpha: Composition) -> tuple[int, ...]:
    """``|alpha|_j``: the number of cells in column ``j``, for ``j = 1..max part``."""
    if not alpha.parts:
        return ()
    return tuple(sum(1 for a in alpha.parts if a >= j) for j in range(1, max(alpha.parts) + 1))


def dominance_leq(alpha: Composition, beta: Composition) -> bool:
    """Dominance preorder: prefix sums of ``beta``'s column heights never exceed ``alpha``'s."""
    if alpha.size != beta.size:
        raise ValueError(f"size mismatch: {alpha} vs {beta}")
    ha, hb = column_heights(alpha), column_heights(beta)
    width = max(len(ha), len(hb))
    ha += (0,) * (width - len(ha))
    hb += (0,) * (width - len(hb))
    return all(b <= a for a, b in zip(accumulate(ha), accumulate(hb)))


def dominance_lt(alpha: Composition, beta: Composition) -> bool:
    return alpha != beta and dominance_leq(alpha, beta)


@dataclass(frozen=True, order=True)
class SkewShape:
    outer: Composition
    inner: Composition = EMPTY

    def __post_init__(self) -> None:
        if not leq_c(self.inner, self.outer):
            raise ValueError(f"{self.inner} is not below {self.outer} in the composition poset")

    @property
    def offset(self) -> int:
        return len(self.outer) - len(self.inner)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner.parts

    @cached_property
    def inner_cells(self) -> frozenset[Cell]:
        off = self.offset
        return frozenset(Cell(c.row + off, c.col) for c in self.inner.cells())

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return self.outer.cells() - self.inner_cells

    def __str__(self) -> str:
        if self.is_straight:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


_COMP = re.compile(r"^\((\d+(?:,\d+)*)?\)$")


def parse_composition(text: str) -> Composition:
    """Parse ``"(1,4,3)"``; whitespace is ignored."""
    s = re.sub(r"\s+", "", text)
    m = _COMP.match(s)
    if not m:
        raise ValueError(f"cannot parse composition {text!r}")
    body = m.group(1)
    return Composition(tuple(int(t) for t in body.split(","))) if body else EMPTY


def parse_shape(text: str) -> SkewShape:
    """Parse ``"(1,4,3)"`` or ``"(1,4,3)/(1,2)"``."""
    s = re.sub(r"\s+", "", text)
    outer, sep, inner = s.partition("/")
    return SkewShape(parse_composition(outer), parse_composition(inner) if sep else EMPTY)


def skew_shapes(max_outer: int, max_size: int | None = None) -> list[SkewShape]:
    """All skew shapes with ``|outer| <= max_outer`` (and ``|shape| <= max_size``)."""
    out = []
    for m in range(max_outer + 1):
        for alpha in compositions_of(m):
            for k in range(m + 1):
                if max_size is not None and m - k > max_size:
                    continue
                for beta in compositions_of(k):
                    if leq_c(beta, alpha):
                        out.append(SkewShape(alpha, beta))
    return out
