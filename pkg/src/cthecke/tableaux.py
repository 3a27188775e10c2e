"""Standard composition tableaux (SCT) of skew composition shapes.

A tableau is stored by its inverse: ``pos[k - 1]`` is the cell holding entry
``k``.  Equality and hashing use ``(shape, pos)``.

Text format: rows top to bottom separated by ``|``, entries separated by
spaces, inner-shape cells written as ``.``:

>>> t = parse_tableau("2 | . 5 4 1 | . . 3")
>>> str(t.shape), str(t)
('(1,4,3)/(1,2)', '2 | . 5 4 1 | . . 3')
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .compositions import (
    Cell,
    Composition,
    SkewShape,
    covers_down,
    leq_c,
)
from .permutations import Permutation

INF = float("inf")


def attacks(a: Cell, b: Cell) -> bool:
    """``a`` attacks ``b``: same column, or ``b`` one column right and strictly below."""
    if a.col == b.col:
        return a.row != b.row
    return b.col == a.col + 1 and a.row < b.row


def cells_attack(first: Iterable[Cell], second: Iterable[Cell]) -> bool:
    second = list(second)
    return any(attacks(a, b) for a in first for b in second)


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    pos: tuple[Cell, ...]
    entry: dict[Cell, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        pos = tuple(Cell(*c) for c in self.pos)
        object.__setattr__(self, "pos", pos)
        if len(set(pos)) != len(pos) or set(pos) != self.shape.cells:
            raise ValueError(f"filling is not a bijection onto the cells of {self.shape}")
        object.__setattr__(self, "entry", {c: k for k, c in enumerate(pos, start=1)})

    @classmethod
    def from_filling(cls, shape: SkewShape, filling: Mapping[Cell, int]) -> Tableau:
        n = len(filling)
        if sorted(filling.values()) != list(range(1, n + 1)):
            raise ValueError("filling must use each of 1..n exactly once")
        pos = [None] * n
        for c, k in filling.items():
            pos[k - 1] = Cell(*c)
        return cls(shape, tuple(pos))

    @property
    def n(self) -> int:
        return len(self.pos)

    def cell(self, k: int) -> Cell:
        return self.pos[k - 1]

    def row(self, k: int) -> int:
        return self.pos[k - 1].row

    def col(self, k: int) -> int:
        return self.pos[k - 1].col

    def value(self, c: Cell) -> float | None:
        """Entry at ``c``; inner cells read as infinity, cells outside the shape as ``None``."""
        if c in self.entry:
            return self.entry[c]
        if c in self.shape.inner_cells:
            return INF
        return None

    def attacks(self, i: int, j: int) -> bool:
        return attacks(self.cell(i), self.cell(j))

    def rows(self) -> list[list[int | None]]:
        """Rows of the outer diagram; ``None`` marks an inner cell."""
        return [
            [self.entry.get(Cell(r, c)) for c in range(1, p + 1)]
            for r, p in enumerate(self.shape.outer.parts, start=1)
        ]

    def swap(self, i: int) -> Tableau:
        """The filling with entries ``i`` and ``i + 1`` interchanged (not checked for validity)."""
        pos = list(self.pos)
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
        return Tableau(self.shape, tuple(pos))

    def __str__(self) -> str:
        return format_tableau(self)


def format_tableau(t: Tableau) -> str:
    return " | ".join(
        " ".join("." if v is None else str(v) for v in row) for row in t.rows()
    )


def parse_tableau(text: str) -> Tableau:
    """Inverse of :func:`format_tableau`; the inner shape is read off the dots."""
    rows = [r.split() for r in text.split("|")]
    if any(not r for r in rows):
        raise ValueError(f"empty row in tableau {text!r}")
    outer = Composition(tuple(len(r) for r in rows))
    dots = [sum(1 for tok in r if tok == ".") for r in rows]
    k = len(rows)
    while k > 0 and dots[k - 1] > 0:
        k -= 1
    if any(dots[:k]):
        raise ValueError(f"inner cells must form a bottom-aligned block in {text!r}")
    for r, d in zip(rows, dots):
        if any(tok == "." for tok in r[d:]):
            raise ValueError(f"inner cells must be left-justified in {text!r}")
    inner = Composition(tuple(dots[k:]))
    shape = SkewShape(outer, inner)
    filling = {
        Cell(ri, ci): int(tok)
        for ri, r in enumerate(rows, start=1)
        for ci, tok in enumerate(r, start=1)
        if tok != "."
    }
    return Tableau.from_filling(shape, filling)


def is_valid_sct(shape: SkewShape, filling: Mapping[Cell, int]) -> bool:
    """Check the three SCT rules for a bijective filling of ``shape``."""
    n = shape.size
    if set(filling) != shape.cells or sorted(filling.values()) != list(range(1, n + 1)):
        raise ValueError("filling is not a bijection onto [1, n]")
    inner = shape.inner_cells
    alpha = shape.outer.cells()

    def val(c: Cell) -> float:
        return INF if c in inner else filling[c]

    # rows decrease left to right
    for c, v in filling.items():
        right = Cell(c.row, c.col + 1)
        if right in filling and filling[right] >= v:
            return False
    # first column increases top to bottom
    first = sorted((c.row, v) for c, v in filling.items() if c.col == 1)
    if any(a[1] >= b[1] for a, b in zip(first, first[1:])):
        return False
    # triple rule, inner cells as infinity
    for (j, k), v in filling.items():
        if k < 2:
            continue
        for i in range(1, j):
            left = Cell(i, k - 1)
            if left not in alpha or not v < val(left):
                continue
            above = Cell(i, k)
            if above not in alpha or not v < val(above):
                return False
    return True


def is_valid(t: Tableau) -> bool:
    return is_valid_sct(t.shape, t.entry)


@dataclass(frozen=True)
class DescentData:
    D: frozenset[int]
    AD: frozenset[int]
    nAD: frozenset[int]
    Dc: frozenset[int]
    ND: frozenset[int]


def descent_set(t: Tableau) -> frozenset[int]:
    return frozenset(i for i in range(1, t.n) if t.col(i) <= t.col(i + 1))


def descent_data(t: Tableau) -> DescentData:
    D = descent_set(t)
    AD = frozenset(i for i in D if t.attacks(i, i + 1))
    Dc = frozenset(range(1, t.n)) - D
    ND = frozenset(
        i for i in Dc if t.cell(i + 1) == Cell(t.row(i), t.col(i) - 1)
    )
    return DescentData(D=D, AD=AD, nAD=D - AD, Dc=Dc, ND=ND)


def _added_cell(lower: Composition, upper: Composition, outer_len: int) -> Cell:
    """The cell of ``upper`` not in ``lower``, both bottom-aligned in a diagram of ``outer_len`` rows."""
    off = outer_len - len(upper)
    if len(upper) == len(lower) + 1 and upper.parts == (1,) + lower.parts:
        return Cell(off + 1, 1)
    if len(upper) == len(lower):
        diff = [r for r, (a, b) in enumerate(zip(lower.parts, upper.parts)) if a != b]
        if len(diff) == 1 and upper[diff[0]] == lower[diff[0]] + 1:
            r = diff[0]
            return Cell(off + r + 1, upper[r])
    raise ValueError(f"{lower} -> {upper} does not add a single cell")


@lru_cache(maxsize=None)
def _chains(beta: tuple[int, ...], gamma: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    if beta == gamma:
        return ((beta,),)
    out = []
    for delta in sorted(covers_down(Composition(gamma))):
        if leq_c(Composition(beta), delta):
            out.extend(ch + (gamma,) for ch in _chains(beta, delta.parts))
    return tuple(out)


def saturated_chains_c(beta: Composition, alpha: Composition) -> list[tuple[Composition, ...]]:
    """Saturated chains ``beta = c_0 < c_1 < ... < c_m = alpha`` in the composition poset."""
    return [tuple(Composition(p) for p in ch) for ch in _chains(beta.parts, alpha.parts)]


def tableau_of(chain: tuple[Composition, ...]) -> Tableau:
    """Tableau of a saturated chain listed bottom (inner shape) to top (outer shape).

    The step that enlarges ``alpha^k`` to ``alpha^(k-1)`` places entry ``k``.
    """
    beta, alpha = chain[0], chain[-1]
    n = len(chain) - 1
    pos = [None] * n
    for t, (lo, hi) in enumerate(zip(chain, chain[1:])):
        pos[n - t - 1] = _added_cell(lo, hi, len(alpha))
    return Tableau(SkewShape(alpha, beta), tuple(pos))


def chain_of(t: Tableau) -> tuple[Composition, ...]:
    """The chain ``alpha^n < ... < alpha^0`` of ``t``, listed from the inner shape up."""
    return tuple(_outer_above(t, m) for m in range(t.n, -1, -1))


def _row_lengths_above(t: Tableau, m: int) -> list[int]:
    lengths = [0] * len(t.shape.outer)
    for c in t.shape.inner_cells:
        lengths[c.row - 1] += 1
    for k in range(m + 1, t.n + 1):
        lengths[t.row(k) - 1] += 1
    return lengths


def _outer_above(t: Tableau, m: int) -> Composition:
    return Composition(tuple(x for x in _row_lengths_above(t, m) if x))


def enumerate_sct(shape: SkewShape) -> list[Tableau]:
    """All SCT of ``shape`` via the chain bijection, sorted by inverse array."""
    if not leq_c(shape.inner, shape.outer):
        raise ValueError(f"invalid shape {shape}")
    tabs = [tableau_of(ch) for ch in saturated_chains_c(shape.inner, shape.outer)]
    return sorted(tabs, key=lambda t: t.pos)


def restrict_above(t: Tableau, m: int) -> Tableau:
    """Delete entries ``1..m`` and subtract ``m`` from the rest; empty top rows are dropped."""
    if not 0 <= m <= t.n:
        raise ValueError(f"m={m} outside [0, {t.n}]")
    lengths = _row_lengths_above(t, m)
    dropped = 0
    while dropped < len(lengths) and lengths[dropped] == 0:
        dropped += 1
    if any(x == 0 for x in lengths[dropped:]):
        raise ValueError("removed cells do not form top rows; tableau is not an SCT")
    outer = Composition(tuple(lengths[dropped:]))
    pos = tuple(Cell(c.row - dropped, c.col) for c in t.pos[m:])
    return Tableau(SkewShape(outer, t.shape.inner), pos)


def column_word(t: Tableau) -> Permutation:
    """Columns read top to bottom, left to right.  Inner cells are skipped."""
    cols: dict[int, list[tuple[int, int]]] = {}
    for k, c in enumerate(t.pos, start=1):
        cols.setdefault(c.col, []).append((c.row, k))
    word = [k for j in sorted(cols) for _, k in sorted(cols[j])]
    return Permutation(tuple(word))
