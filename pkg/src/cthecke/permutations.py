"""
Permutations of ``[1, n]`` in one-line notation and the left weak order.

Composition is function composition, ``(s * t)(x) == s(t(x))``.  Under this
convention multiplying by the adjacent transposition ``s_i`` on the *left*
swaps the *values* ``i`` and ``i + 1`` in the one-line word:

>>> Permutation((2, 1, 3)).left_mul_simple(2)
Permutation(word=(3, 1, 2))

A reduced word ``(j_k, ..., j_1)`` stands for the product
``s_{j_k} * ... * s_{j_1}``; the rightmost letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .poset import HassePoset

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{len(self.word)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i < n:
            raise ValueError(f"s_{i} does not exist in S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_string(cls, text: str) -> Permutation:
        """Parse ``"16857423"`` (n < 10) or ``"1,6,8,..."``."""
        text = text.strip()
        if "," in text or " " in text:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> Permutation:
        """Product ``s_{j_k} * ... * s_{j_1}`` of any word ``(j_k, ..., j_1)``."""
        p = cls.identity(n)
        for i in reversed(tuple(word)):
            p = p.left_mul_simple(i)
        return p

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, x: int) -> int:
        return self.word[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.word[x - 1] for x in other.word))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def left_mul_simple(self, i: int) -> Permutation:
        if not 1 <= i < self.n:
            raise ValueError(f"s_{i} does not exist in S_{self.n}")
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.word))

    def left_descents(self) -> list[int]:
        """Indices ``i`` with ``l(s_i * self) < l(self)``: value ``i+1`` precedes ``i``."""
        pos = self.inverse().word
        return [i for i in range(1, self.n) if pos[i] < pos[i - 1]]

    def length(self) -> int:
        return length(self)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))


def length(sigma: Permutation) -> int:
    """Inversion count of the one-line word."""
    w = sigma.word
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


@lru_cache(maxsize=None)
def _reduced_words(word: tuple[int, ...]) -> frozenset[Word]:
    p = Permutation(word)
    descents = p.left_descents()
    if not descents:
        return frozenset({()})
    out = set()
    for i in descents:
        for tail in _reduced_words(p.left_mul_simple(i).word):
            out.add((i,) + tail)
    return frozenset(out)


def reduced_words(sigma: Permutation) -> frozenset[Word]:
    """All reduced words ``(j_k, ..., j_1)`` of ``sigma``, by stripping left descents."""
    return _reduced_words(sigma.word)


def one_reduced_word(sigma: Permutation) -> Word:
    out = []
    p = sigma
    while True:
        d = p.left_descents()
        if not d:
            return tuple(out)
        out.append(d[0])
        p = p.left_mul_simple(d[0])


def support(sigma: Permutation) -> frozenset[int]:
    return frozenset(one_reduced_word(sigma))


def left_weak_leq(sigma: Permutation, tau: Permutation) -> bool:
    if sigma.n != tau.n:
        raise ValueError("degree mismatch")
    return length(tau * sigma.inverse()) == length(tau) - length(sigma)


def weak_interval(sigma: Permutation, tau: Permutation) -> HassePoset[Permutation]:
    """The interval ``[sigma, tau]`` of the left weak order, with ``s_i``-labeled covers.

    Elements are listed in breadth-first order from ``sigma``; this is a
    linear extension, so ``elements[0]`` is the bottom.
    """
    if not left_weak_leq(sigma, tau):
        raise ValueError(f"{sigma} is not below {tau} in left weak order")
    elements = [sigma]
    index = {sigma: 0}
    covers = []
    lengths = {sigma: length(sigma)}
    for rho in elements:
        for i in range(1, rho.n):
            up = rho.left_mul_simple(i)
            l_up = length(up)
            if l_up != lengths[rho] + 1 or not left_weak_leq(up, tau):
                continue
            if up not in index:
                index[up] = len(elements)
                elements.append(up)
                lengths[up] = l_up
            covers.append((index[rho], index[up], i))
    return HassePoset(tuple(elements), tuple(covers))


def interval_rank(sigma: Permutation):
    """Rank function ``rho -> l(rho * sigma^-1)`` of any interval with bottom ``sigma``."""
    sinv = sigma.inverse()
    return lambda rho: length(rho * sinv)


def saturated_chains(sigma: Permutation, tau: Permutation) -> list[tuple[Permutation, ...]]:
    """All maximal chains ``sigma < ... < tau`` in left weak order, in lexicographic label order."""
    interval = weak_interval(sigma, tau)
    succ: dict[int, list[tuple[int, int]]] = {}
    for lo, hi, lab in interval.covers:
        succ.setdefault(lo, []).append((lab, hi))
    top = interval.index[tau]
    chains = []

    def walk(k: int, path: list[Permutation]) -> None:
        if k == top:
            chains.append(tuple(path))
            return
        for _, h in sorted(succ.get(k, [])):
            path.append(interval.elements[h])
            walk(h, path)
            path.pop()

    walk(0, [sigma])
    return chains


def chain_to_word(chain: tuple[Permutation, ...]) -> Word:
    """Reduced word ``(i_k, ..., i_1)`` of ``top * bottom^-1`` read off a saturated chain."""
    labels = []
    for lo, hi in zip(chain, chain[1:]):
        step = hi * lo.inverse()
        moved = [k for k in range(1, step.n + 1) if step(k) != k]
        if len(moved) != 2 or moved[1] != moved[0] + 1 or length(hi) != length(lo) + 1:
            raise ValueError(f"{lo} -> {hi} is not a cover")
        labels.append(moved[0])
    return tuple(reversed(labels))


def word_to_chain(sigma: Permutation, word: Word) -> tuple[Permutation, ...]:
    chain = [sigma]
    for i in reversed(word):
        chain.append(chain[-1].left_mul_simple(i))
    return tuple(chain)
