"""Matrix realization of class modules and their endomorphism rings.

The module spanned by a class ``E`` is realized in the basis ``E.members``;
``M_i[t][s] = 1`` iff ``pi_i`` sends member ``s`` to member ``t``.  Module
endomorphisms are exactly the matrices commuting with every ``M_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .hecke import ZERO, ClassPoset, InvariantViolation, apply_pi
from .linalg import (
    charpoly,
    column_space,
    identity,
    inverse,
    matmul,
    matrix_rank,
    nullspace,
    rational_roots,
)
from .tableaux import descent_set

Matrix = list[list]


@dataclass(frozen=True)
class RepMatrices:
    cls: ClassPoset
    dim: int
    # matrices[i - 1] realizes pi_i
    matrices: tuple[tuple[tuple[int, ...], ...], ...]

    def M(self, i: int) -> tuple[tuple[int, ...], ...]:
        return self.matrices[i - 1]

    def act(self, word: Sequence[int], v: Sequence) -> list:
        for i in reversed(tuple(word)):
            m = self.M(i)
            v = [sum(m[r][c] * v[c] for c in range(self.dim) if m[r][c]) for r in range(self.dim)]
        return v


def _as_matrix(rows) -> list[list]:
    return [list(r) for r in rows]


def check_relations(rep: RepMatrices) -> list[str]:
    """Names of violated 0-Hecke relations (empty when the realization is a module)."""
    bad = []
    ms = [_as_matrix(m) for m in rep.matrices]
    for a, m in enumerate(ms, start=1):
        for col in range(rep.dim):
            nz = [m[r][col] for r in range(rep.dim) if m[r][col]]
            if len(nz) > 1 or any(x != 1 for x in nz):
                bad.append(f"column {col} of M_{a} is not a unit vector or zero")
        if matmul(m, m) != m:
            bad.append(f"M_{a}^2 != M_{a}")
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            x, y = ms[a], ms[b]
            if b == a + 1:
                if matmul(matmul(x, y), x) != matmul(matmul(y, x), y):
                    bad.append(f"braid relation fails for {a + 1},{b + 1}")
            elif matmul(x, y) != matmul(y, x):
                bad.append(f"M_{a + 1} and M_{b + 1} do not commute")
    return bad


def build_rep(e: ClassPoset) -> RepMatrices:
    d = len(e)
    mats = []
    for i in range(1, e.n):
        m = [[0] * d for _ in range(d)]
        for s, t in enumerate(e.members):
            u = apply_pi(i, t)
            if u is not ZERO:
                m[e.index[u]][s] = 1
        mats.append(tuple(tuple(r) for r in m))
    rep = RepMatrices(e, d, tuple(mats))
    bad = check_relations(rep)
    if bad:
        raise InvariantViolation("; ".join(bad))
    return rep


@dataclass(frozen=True)
class CommutantBasis:
    dim: int
    basis: tuple[tuple[tuple[Fraction, ...], ...], ...]


def commutant_equations(rep: RepMatrices) -> list[dict[int, int]]:
    """Rows of ``X M_i - M_i X = 0`` in the unknowns ``X[a][b] -> a * d + b``."""
    d = rep.dim
    rows = []
    for m in rep.matrices:
        for a in range(d):
            for b in range(d):
                row: dict[int, int] = {}
                for c in range(d):
                    if m[c][b]:
                        row[a * d + c] = row.get(a * d + c, 0) + m[c][b]
                    if m[a][c]:
                        row[c * d + b] = row.get(c * d + b, 0) - m[a][c]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def commutant(rep: RepMatrices) -> CommutantBasis:
    d = rep.dim
    vecs = nullspace(commutant_equations(rep), d * d)
    basis = tuple(tuple(tuple(v[a * d : (a + 1) * d]) for a in range(d)) for v in vecs)
    return CommutantBasis(len(basis), basis)


def _is_idempotent(p: Matrix) -> bool:
    return matmul(p, p) == p


def _fitting_projection(x: Matrix) -> Matrix | None:
    """Projection onto ``ker x^d`` along ``im x^d``; ``None`` when it is 0 or the identity."""
    d = len(x)
    n = identity(d)
    for _ in range(d):
        n = matmul(n, x)
    r = matrix_rank(n)
    if r in (0, d):
        return None
    ker = nullspace(({c: v for c, v in enumerate(row) if v} for row in n), d)
    img = column_space(n)
    basis_cols = ker + img  # as column vectors
    b = [[basis_cols[c][r_] for c in range(d)] for r_ in range(d)]
    keep = [[Fraction(int(r_ == c and c < len(ker))) for c in range(d)] for r_ in range(d)]
    return matmul(matmul(b, keep), inverse(b))


def _combo(basis, coeffs) -> Matrix:
    d = len(basis[0])
    return [[sum(c * bm[r][s] for c, bm in zip(coeffs, basis)) for s in range(d)] for r in range(d)]


def _pair_search(basis) -> Matrix | None:
    """Idempotents ``a I + b B`` of a two-dimensional algebra spanned by ``I`` and ``B``."""
    d = len(basis[0])
    eye = identity(d)
    others = [b for b in basis if not _is_scalar(b)]
    if len(basis) != 2 or not others:
        return None
    bm = [list(r) for r in others[0]]
    b2 = matmul(bm, bm)
    # B^2 = p I + q B: solve from two entries where I and B are independent
    rows = [(eye[r][s], bm[r][s], b2[r][s]) for r in range(d) for s in range(d)]
    p = q = None
    for (i1, x1, y1) in rows:
        for (i2, x2, y2) in rows:
            det = Fraction(i1 * x2 - i2 * x1)
            if det:
                p = (y1 * x2 - y2 * x1) / det
                q = (i1 * y2 - i2 * y1) / det
                break
        if p is not None:
            break
    if p is None:
        return None
    # with a = (1 - b q)/2: b^2 (q^2 + 4p) = 1
    disc = q * q + 4 * p
    if disc <= 0:
        return None
    num, den = disc.numerator, disc.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    b = Fraction(rd, rn)
    a = (1 - b * q) / 2
    cand = [[a * eye[r][s] + b * bm[r][s] for s in range(d)] for r in range(d)]
    return cand if _is_idempotent(cand) else None


def _is_scalar(m) -> bool:
    d = len(m)
    return all(m[r][s] == (m[0][0] if r == s else 0) for r in range(d) for s in range(d))


def _isqrt_exact(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None


def find_idempotent(cb: CommutantBasis, seed: int = 0, tries: int = 20) -> Matrix | None:
    """A nontrivial idempotent in the span of ``cb.basis``, or ``None``.

    Tiers: basis elements that are already idempotent; Fitting projections of
    ``X - lambda I`` for rational eigenvalues ``lambda`` of basis elements and
    seeded random combinations; closed-form solve when the algebra is
    two-dimensional.  Not finding one does not prove locality.
    """
    if cb.dim < 2:
        return None
    basis = [[list(r) for r in b] for b in cb.basis]
    d = len(basis[0])
    eye = identity(d)
    zero = [[0] * d for _ in range(d)]

    def nontrivial(p):
        return p is not None and p != eye and p != zero and _is_idempotent(p)

    for b in basis:
        if nontrivial(b):
            return b
    rng = random.Random(seed)
    candidates = list(basis) + [
        _combo(basis, [rng.randint(-3, 3) for _ in basis]) for _ in range(tries)
    ]
    for x in candidates:
        for lam in rational_roots(charpoly(x)):
            shifted = [[x[r][s] - lam * eye[r][s] for s in range(d)] for r in range(d)]
            p = _fitting_projection(shifted)
            if nontrivial(p):
                return p
    p = _pair_search(basis)
    return p if nontrivial(p) else None


@dataclass(frozen=True)
class Certificate:
    shape: str
    class_id: int
    dim_module: int
    dim_end: int
    verdict: str
    idempotent: Matrix | None = None
    summands: tuple[list, list] | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "shape": self.shape,
            "class_id": self.class_id,
            "dim_module": self.dim_module,
            "dim_end": self.dim_end,
            "verdict": self.verdict,
        }
        if self.idempotent is not None:
            out["idempotent"] = [[_num(v) for v in row] for row in self.idempotent]
            out["summands"] = [[[_num(v) for v in vec] for vec in part] for part in self.summands]
        return out


def _num(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else str(v)


def _orient(p: Matrix, e: ClassPoset) -> Matrix:
    """Pick between ``p`` and ``1 - p`` the one fixing the sink basis vector, if any."""
    d = len(p)
    k = e.index[e.sink]
    if all(p[r][k] == int(r == k) for r in range(d)):
        return p
    q = [[int(r == s) - p[r][s] for s in range(d)] for r in range(d)]
    if all(q[r][k] == int(r == k) for r in range(d)):
        return q
    return p


def certify_indecomposable(e: ClassPoset, class_id: int = 0, seed: int = 0) -> Certificate:
    cb = commutant(build_rep(e))
    if cb.dim == 1:
        return Certificate(str(e.shape), class_id, len(e), 1, "indecomposable")
    p = find_idempotent(cb, seed=seed)
    if p is None:
        return Certificate(str(e.shape), class_id, len(e), cb.dim, "undetermined")
    p = [[Fraction(v) for v in row] for row in _orient(p, e)]
    d = len(p)
    comp = [[int(r == s) - p[r][s] for s in range(d)] for r in range(d)]
    summands = (column_space(p), column_space(comp))
    return Certificate(str(e.shape), class_id, len(e), cb.dim, "decomposable-witness", p, summands)


def spanning_words(e: ClassPoset) -> dict:
    """For each member ``T``, a word ``w`` with ``pi_w(source) = T`` (breadth-first)."""
    words = {e.source: ()}
    queue = [e.source]
    succ: dict[int, list[tuple[int, int]]] = {}
    for lo, hi, lab in e.covers:
        succ.setdefault(lo, []).append((lab, hi))
    for t in queue:
        for lab, hi in sorted(succ.get(e.index[t], [])):
            u = e.members[hi]
            if u not in words:
                words[u] = (lab,) + words[t]
                queue.append(u)
    if len(words) != len(e):
        raise InvariantViolation("class is not generated by its source tableau")
    return words


@dataclass(frozen=True)
class Extension:
    ok: bool
    matrix: Matrix | None
    reason: str = ""


def _extend(rep: RepMatrices, words: dict, v: Sequence) -> Matrix:
    e = rep.cls
    cols = {e.index[t]: rep.act(w, list(v)) for t, w in words.items()}
    d = rep.dim
    return [[cols[s][r] for s in range(d)] for r in range(d)]


def endomorphism_from_source_image(e: ClassPoset, v: Sequence, rep: RepMatrices | None = None) -> Extension:
    """Try to extend ``source -> v`` to a module endomorphism of the class module."""
    if len(v) != len(e):
        raise ValueError(f"vector has length {len(v)}, class has {len(e)} members")
    rep = rep or build_rep(e)
    f = _extend(rep, spanning_words(e), v)
    for i, m in enumerate(rep.matrices, start=1):
        m = _as_matrix(m)
        if matmul(m, f) != matmul(f, m):
            return Extension(False, None, f"does not commute with pi_{i}")
    return Extension(True, f)


def source_image_space(e: ClassPoset, rep: RepMatrices | None = None) -> list[list[Fraction]]:
    """Basis of all ``v`` for which ``source -> v`` extends to an endomorphism."""
    rep = rep or build_rep(e)
    d = rep.dim
    words = spanning_words(e)
    units = [[int(r == c) for r in range(d)] for c in range(d)]
    fs = [_extend(rep, words, u) for u in units]
    rows = []
    for m in rep.matrices:
        m = _as_matrix(m)
        comms = [_sub(matmul(m, f), matmul(f, m)) for f in fs]
        for r in range(d):
            for s in range(d):
                row = {c: comms[c][r][s] for c in range(d) if comms[c][r][s]}
                if row:
                    rows.append(row)
    return nullspace(rows, d)


def _sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def support_descents_ok(e: ClassPoset, v: Sequence) -> bool:
    """Every member in the support of ``v`` has descent set inside the source's."""
    d0 = descent_set(e.source)
    return all(descent_set(t) <= d0 for t, a in zip(e.members, v) if a)
