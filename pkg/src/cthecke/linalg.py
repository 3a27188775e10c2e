"""Exact sparse linear algebra over the rationals.

Rows are dicts ``{column: value}``.  Elimination is fraction-free: rational
rows are scaled to primitive integer rows and every update is an integer
combination followed by division by the row content, so no denominators ever
appear until the final reduced basis is read off.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Row = Mapping[int, int | Fraction]


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _integral(row: Row) -> dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return _primitive({c: int(v * den) for c, v in row.items() if v != 0})


def echelon(rows: Iterable[Row]) -> dict[int, dict[int, int]]:
    """Fraction-free Gauss-Jordan form, keyed by pivot column.

    Every returned row is primitive, and no pivot column occurs in any other
    row.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        r = _integral(raw)
        # reduce against existing pivots
        for p, prow in pivots.items():
            a = r.get(p)
            if a:
                b = prow[p]
                r = _combine(r, b, prow, a)
        if not r:
            continue
        p = min(r)
        b = r[p]
        # clear the new pivot column from earlier rows
        for q, qrow in list(pivots.items()):
            a = qrow.get(p)
            if a:
                pivots[q] = _combine(qrow, b, r, a)
        pivots[p] = r
    return pivots


def _combine(r: dict[int, int], b: int, s: dict[int, int], a: int) -> dict[int, int]:
    """Primitive part of ``b*r - a*s``."""
    out = {c: b * v for c, v in r.items()}
    for c, v in s.items():
        w = out.get(c, 0) - a * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    if out and out[min(out)] < 0:
        out = {c: -v for c, v in out.items()}
    return _primitive(out)


def rank(rows: Iterable[Row]) -> int:
    return len(echelon(rows))


def nullspace(rows: Iterable[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : row . x = 0 for all rows}``, one vector per free column.

    The basis vector for free column ``f`` has a 1 at ``f`` and zeros at the
    other free columns (reduced form).
    """
    piv = echelon(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for p, prow in piv.items():
            v = prow.get(f)
            if v:
                x[p] = Fraction(-v, prow[p])
        basis.append(x)
    return basis


Matrix = Sequence[Sequence[int | Fraction]]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[r][t] * b[t][c] for t in range(m) if a[r][t]) for c in range(k)] for r in range(n)]


def identity(d: int) -> list[list[int]]:
    return [[int(r == c) for c in range(d)] for r in range(d)]


def matrix_rank(a: Matrix) -> int:
    return rank({c: v for c, v in enumerate(row) if v} for row in a)


def column_space(a: Matrix) -> list[list[Fraction]]:
    """Reduced basis of the column space: rows of the echelon form of ``a^T``, scaled to pivot 1."""
    d = len(a[0]) if a else 0
    cols = ({r: a[r][c] for r in range(len(a)) if a[r][c]} for c in range(d))
    out = []
    for p, prow in sorted(echelon(cols).items()):
        out.append([Fraction(prow.get(r, 0), prow[p]) for r in range(len(a))])
    return out


def inverse(a: Matrix) -> list[list[Fraction]]:
    """Dense Gauss-Jordan inverse over the rationals."""
    d = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(r == c)) for c in range(d)] for r, row in enumerate(a)]
    for c in range(d):
        p = next((r for r in range(c, d) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for r in range(d):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[d:] for row in m]


def charpoly(a: Matrix) -> list[Fraction]:
    """Coefficients ``[c_0, ..., c_d]`` of ``det(x I - a)`` (Faddeev-LeVerrier)."""
    d = len(a)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    m = [[Fraction(0)] * d for _ in range(d)]
    for k in range(1, d + 1):
        m = matmul(a, m)
        for r in range(d):
            m[r][r] += coeffs[d - k + 1]
        am = matmul(a, m)
        coeffs[d - k] = -Fraction(sum(am[r][r] for r in range(d)), k)
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def rational_roots(coeffs: Sequence[Fraction], bound: int = 10**10) -> list[Fraction]:
    """Distinct rational roots of a polynomial given low-to-high (rational root test)."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    roots = []
    while c and c[0] == 0:
        c.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(c) <= 1:
        return roots
    den = 1
    for v in c:
        den = lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in c]
    if abs(ints[0]) > bound or abs(ints[-1]) > bound:
        return roots
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if sum(v * cand**e for e, v in enumerate(ints)) == 0:
                    roots.append(cand)
    return sorted(roots)
