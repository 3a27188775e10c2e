"""Quasisymmetric functions in finitely many variables.

Everything is expanded into monomials, so identities are checked as exact
polynomial equalities.  Degree-``n`` quasisymmetric functions are determined
by their truncation to ``n`` variables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from .compositions import Composition, SkewShape, compositions_of, rearrange_to_partition
from .tableaux import Tableau, descent_set, enumerate_sct

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {e: Fraction(c) for e, c in self.terms.items() if c != 0}
        for e in clean:
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has the wrong number of variables")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars, {})

    def __add__(self, other: Polynomial) -> Polynomial:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_quasisymmetric(self) -> bool:
        """Coefficients depend only on the sequence of nonzero exponents."""
        seen: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            key = tuple(x for x in e if x)
            if seen.setdefault(key, c) != c:
                return False
        # every placement of each exponent pattern must appear
        for key in seen:
            for places in _placements(len(key), self.nvars):
                e = [0] * self.nvars
                for p, x in zip(places, key):
                    e[p] = x
                if tuple(e) not in self.terms:
                    return False
        return True

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"x{k}" if a == 1 else f"x{k}^{a}" for k, a in enumerate(e, start=1) if a
            )
            parts.append(f"{self.terms[e]} * {mono}" if mono else f"{self.terms[e]}")
        return " + ".join(parts)


def _placements(k: int, m: int) -> Iterable[tuple[int, ...]]:
    return combinations(range(m), k)


def descent_set_to_composition(s: Iterable[int], n: int) -> Composition:
    s = sorted(set(s))
    if any(not 1 <= x < n for x in s):
        raise ValueError(f"descent set {s} not inside [1, {n - 1}]")
    cuts = [0] + s + [n]
    return Composition(tuple(b - a for a, b in zip(cuts, cuts[1:]))) if n else Composition(())


def composition_to_descent_set(alpha: Composition) -> frozenset[int]:
    out, acc = set(), 0
    for p in alpha.parts[:-1]:
        acc += p
        out.add(acc)
    return frozenset(out)


def fundamental(s: Iterable[int], n: int, m: int) -> Polynomial:
    """Fundamental quasisymmetric function ``F_S`` of degree ``n`` in ``m`` variables."""
    if m < 1:
        raise ValueError("need at least one variable")
    s = set(s)
    terms: dict[Exponent, int] = {}
    for seq in combinations_with_replacement(range(m), n):
        if all(seq[k - 1] < seq[k] for k in s):
            e = [0] * m
            for v in seq:
                e[v] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return Polynomial(m, terms)


def _sum(polys: Iterable[Polynomial], m: int) -> Polynomial:
    total = Polynomial.zero(m)
    for p in polys:
        total = total + p
    return total


def characteristic(basis: Iterable[Tableau]) -> Counter:
    """Multiset of descent compositions of a tableau basis."""
    return Counter(descent_set_to_composition(descent_set(t), t.n) for t in basis)


def expand(char: Counter, m: int) -> Polynomial:
    """Monomial expansion of a multiset of fundamental indices."""
    return _sum(
        (
            Polynomial(m, {e: c * mult for e, c in fundamental(composition_to_descent_set(a), a.size, m).terms.items()})
            for a, mult in sorted(char.items())
        ),
        m,
    )


def quasischur(alpha: Composition | SkewShape, m: int) -> Polynomial:
    shape = alpha if isinstance(alpha, SkewShape) else SkewShape(alpha)
    return expand(characteristic(enumerate_sct(shape)), m)


def standard_young_tableaux(lam: Composition) -> list[tuple[tuple[int, ...], ...]]:
    """SYT of partition shape ``lam`` (English notation), grown one entry at a time."""
    if not lam.is_partition():
        raise ValueError(f"{lam} is not a partition")
    n = lam.size
    out = []

    def grow(rows: list[list[int]], k: int) -> None:
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(lam)):
            if len(rows[r]) < lam[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                grow(rows, k + 1)
                rows[r].pop()

    grow([[] for _ in lam], 1)
    return out


def syt_descents(t: tuple[tuple[int, ...], ...]) -> frozenset[int]:
    """``i`` is a descent when ``i + 1`` sits in a strictly lower row."""
    row = {v: r for r, vals in enumerate(t) for v in vals}
    return frozenset(i for i in range(1, len(row)) if row[i + 1] > row[i])


def schur(lam: Composition, m: int) -> Polynomial:
    n = lam.size
    return _sum((fundamental(syt_descents(t), n, m) for t in standard_young_tableaux(lam)), m)


def refinement_sum(lam: Composition, m: int) -> Polynomial:
    """Sum of quasisymmetric Schur functions over all rearrangements of ``lam``."""
    return _sum(
        (quasischur(a, m) for a in compositions_of(lam.size) if rearrange_to_partition(a) == lam),
        m,
    )
