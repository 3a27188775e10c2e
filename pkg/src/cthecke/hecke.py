"""
The 0-Hecke action on standard composition tableaux and its equivalence classes.

``pi_i`` fixes ``T`` when ``i`` is an ascent, kills it on an attacking descent,
and swaps ``i`` and ``i + 1`` on a non-attacking descent.  Words are written
``(j_k, ..., j_1)`` and act right to left, matching
:mod:`cthecke.permutations`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from .compositions import SkewShape
from .permutations import (
    Permutation,
    left_weak_leq,
    length,
    one_reduced_word,
    weak_interval,
)
from .poset import HassePoset
from .tableaux import (
    Tableau,
    column_word,
    descent_data,
    enumerate_sct,
    restrict_above,
)

HeckeWord = tuple[int, ...]


class _Zero:
    """The zero vector of the module; absorbs every further operator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False


ZERO = _Zero()
Result = Union[Tableau, _Zero]


class InvariantViolation(AssertionError):
    """A structural statement that must hold failed; indicates a bug."""


class NoAttackedEntry(LookupError):
    """No entry ``j > i`` attacked by ``i`` in the source tableau."""


def apply_pi(i: int, t: Tableau) -> Result:
    if not 1 <= i < t.n:
        raise ValueError(f"pi_{i} does not act on tableaux of size {t.n}")
    if t.col(i) > t.col(i + 1):
        return t
    if t.attacks(i, i + 1):
        return ZERO
    return t.swap(i)


def apply_word(word: Sequence[int], t: Result) -> Result:
    for i in reversed(tuple(word)):
        if t is ZERO:
            return ZERO
        t = apply_pi(i, t)
    return t


def apply_perm(sigma: Permutation, t: Tableau) -> Result:
    """``pi_sigma T`` through one reduced word of ``sigma``."""
    return apply_word(one_reduced_word(sigma), t)


def equivalence_key(t: Tableau) -> tuple[tuple[int, ...], ...]:
    """Per-column relative order of entries, read top to bottom."""
    cols: dict[int, list[tuple[int, int]]] = {}
    for k, c in enumerate(t.pos, start=1):
        cols.setdefault(c.col, []).append((c.row, k))
    key = []
    for j in sorted(cols):
        vals = [k for _, k in sorted(cols[j])]
        order = sorted(vals)
        key.append(tuple(order.index(v) for v in vals))
    return tuple(key)


def is_source(t: Tableau) -> bool:
    d = descent_data(t)
    return d.Dc == d.ND


def is_sink(t: Tableau) -> bool:
    d = descent_data(t)
    return d.D == d.AD


@dataclass(frozen=True)
class ClassPoset:
    """An equivalence class with its Hasse diagram.

    ``members`` are sorted by column word; ``covers`` holds
    ``(lower index, upper index, i)`` for every ``pi_i`` moving one member to
    another.
    """

    shape: SkewShape
    members: tuple[Tableau, ...]
    covers: tuple[tuple[int, int, int], ...]

    @classmethod
    def build(cls, shape: SkewShape, members: Sequence[Tableau]) -> ClassPoset:
        members = tuple(sorted(members, key=lambda t: column_word(t).word))
        index = {t: k for k, t in enumerate(members)}
        covers = []
        for k, t in enumerate(members):
            for i in range(1, t.n):
                u = apply_pi(i, t)
                if u is ZERO or u == t:
                    continue
                if u not in index:
                    raise InvariantViolation(f"pi_{i} maps {t} outside its class")
                covers.append((k, index[u], i))
        return cls(shape, members, tuple(covers))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def n(self) -> int:
        return self.shape.size

    @cached_property
    def index(self) -> dict[Tableau, int]:
        return {t: k for k, t in enumerate(self.members)}

    @cached_property
    def poset(self) -> HassePoset[Tableau]:
        return HassePoset(self.members, self.covers)

    @cached_property
    def source(self) -> Tableau:
        return source_of(self)

    @cached_property
    def sink(self) -> Tableau:
        return sink_of(self)

    @cached_property
    def _col(self) -> dict[Tableau, Permutation]:
        return {t: column_word(t) for t in self.members}

    def col(self, t: Tableau) -> Permutation:
        return self._col[t]

    def rank(self, t: Tableau) -> int:
        return length(self.col(t) * self.col(self.source).inverse())

    def leq(self, a: Tableau, b: Tableau) -> bool:
        return self.poset.leq(a, b)

    def rank_profile(self) -> list[int]:
        ranks = [self.rank(t) for t in self.members]
        return [ranks.count(r) for r in range(max(ranks) + 1)]


def partition_classes(shape: SkewShape) -> list[ClassPoset]:
    """Split SCT(shape) into equivalence classes, ordered by source column word."""
    groups: dict[tuple, list[Tableau]] = {}
    for t in enumerate_sct(shape):
        groups.setdefault(equivalence_key(t), []).append(t)
    classes = [ClassPoset.build(shape, g) for g in groups.values()]
    return sorted(classes, key=lambda e: e.col(e.source).word)


def class_containing(t: Tableau) -> ClassPoset:
    key = equivalence_key(t)
    members = [u for u in enumerate_sct(t.shape) if equivalence_key(u) == key]
    return ClassPoset.build(t.shape, members)


def _unique(e: ClassPoset, pred, what: str) -> Tableau:
    found = [t for t in e.members if pred(t)]
    if len(found) != 1:
        raise InvariantViolation(f"class of {e.shape} has {len(found)} {what} candidates")
    return found[0]


def source_of(e: ClassPoset) -> Tableau:
    return _unique(e, is_source, "source")


def sink_of(e: ClassPoset) -> Tableau:
    return _unique(e, is_sink, "sink")


def class_iso_check(e: ClassPoset) -> bool:
    """Column words map ``e`` isomorphically onto a weak-order interval, preserving rank."""
    src, snk = e.col(e.source), e.col(e.sink)
    if not left_weak_leq(src, snk):
        return False
    interval = weak_interval(src, snk)
    image = [e.col(t) for t in e.members]
    if len(set(image)) != len(image) or set(image) != set(interval.elements):
        return False
    mapped = {(e.col(a), e.col(b), lab) for a, b, lab in e.poset.labeled_edges()}
    if mapped != interval.labeled_edges():
        return False
    sinv = src.inverse()
    if any(e.rank(t) != length(e.col(t) * sinv) for t in e.members):
        return False
    if not e.poset.is_graded_by(e.rank):
        return False
    if e.poset.minimal() != [e.source] or e.poset.maximal() != [e.sink]:
        return False
    return e.poset.is_lattice()


def normalize_word(word: Sequence[int], t: Tableau) -> tuple[HeckeWord, Permutation]:
    """Drop the letters of ``word`` that fix the current tableau.

    The kept subword acts on ``t`` like ``word`` and is a reduced word of
    ``col(result) * col(t)^-1``, which is returned alongside.
    """
    kept = []
    cur = t
    for i in reversed(tuple(word)):
        nxt = apply_pi(i, cur)
        if nxt is ZERO:
            raise ValueError("word annihilates the tableau")
        if nxt != cur:
            kept.append(i)
            cur = nxt
    sub = tuple(reversed(kept))
    return sub, column_word(cur) * column_word(t).inverse()


def multi_flip(t: Tableau, i: int, j: int) -> Tableau:
    """``pi_{j-1} ... pi_i T`` for ``i`` strictly left of, and not attacking, ``[i+1, j]``."""
    if not 1 <= i < j <= t.n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}")
    block = range(i + 1, j + 1)
    if any(t.col(i) >= t.col(k) or t.attacks(i, k) for k in block):
        raise ValueError(f"{i} is not strictly left of / non-attacking [{i + 1}, {j}]")
    out = apply_word(tuple(range(j - 1, i - 1, -1)), t)
    if out is ZERO or out.entry[t.cell(i)] != j:
        raise InvariantViolation(f"multi_flip({i}, {j}) failed on {t}")
    return out


def shapes_above(t: Tableau) -> list[SkewShape]:
    return [restrict_above(t, m).shape for m in range(t.n + 1)]


def support_criterion(t1: Tableau, t2: Tableau) -> tuple[frozenset[int], dict[int, bool]]:
    """Support of ``col(t2) col(t1)^-1`` and, per index, whether the restricted shapes differ."""
    c1, c2 = column_word(t1), column_word(t2)
    if t1.shape != t2.shape or equivalence_key(t1) != equivalence_key(t2):
        raise ValueError("tableaux are not in a common class")
    if not left_weak_leq(c1, c2):
        raise ValueError("t1 is not below t2")
    sigma = c2 * c1.inverse()
    supp = frozenset(one_reduced_word(sigma))
    s1, s2 = shapes_above(t1), shapes_above(t2)
    return supp, {i: s1[i] != s2[i] for i in range(1, t1.n)}


def annihilator_indices(e: ClassPoset, t: Tableau) -> tuple[int, int]:
    """The entries ``i`` (last misplaced entry) and ``j`` (first larger entry ``i`` attacks in the source)."""
    t0 = e.source
    if t not in e.index:
        raise ValueError("tableau is not in the class")
    if t == t0:
        raise ValueError("the source tableau has no annihilator word")
    if not descent_data(t).D <= descent_data(t0).D:
        raise ValueError("descent set is not contained in the source's")
    i = max(k for k in range(1, t.n + 1) if t.cell(k) != t0.cell(k))
    js = [k for k in range(i + 1, t.n + 1) if t0.attacks(i, k)]
    if not js:
        raise NoAttackedEntry(f"no j for i={i} in class of {e.shape}")
    return i, min(js)


def annihilator_word(e: ClassPoset, t: Tableau) -> HeckeWord:
    """The word ``(j-1, ..., i+1, i)``: kills the source but moves ``t`` inside the class."""
    i, j = annihilator_indices(e, t)
    return tuple(range(j - 1, i - 1, -1))


def class_to_dot(e: ClassPoset, name: str = "E") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for k, t in enumerate(e.members):
        lines.append(f'  n{k} [label="{t}"];')
    for lo, hi, lab in sorted(e.covers):
        lines.append(f'  n{lo} -> n{hi} [label="pi_{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
