"""Verification sweeps over all compositions up to a given size.

Each check returns a :class:`PropertyResult`; the first counterexample found
is recorded as text.  Sweeps are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .compositions import (
    SkewShape,
    compositions_of,
    dominance_leq,
    dominance_lt,
    partitions_of,
    rearrange_to_partition,
)
from .hecke import (
    ZERO,
    ClassPoset,
    NoAttackedEntry,
    annihilator_word,
    apply_word,
    class_iso_check,
    equivalence_key,
    partition_classes,
    shapes_above,
    support_criterion,
)
from .modrep import build_rep, certify_indecomposable, commutant, source_image_space
from .permutations import Permutation, length, one_reduced_word, reduced_words
from .qsym import characteristic, expand, quasischur, refinement_sum, schur
from .tableaux import column_word, descent_set, enumerate_sct

SUITES = ("endo", "poset", "dominance", "qsym")


@dataclass
class PropertyResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None
    notes: dict = field(default_factory=dict)

    def fail(self, text: str) -> None:
        if self.passed:
            self.counterexample = text
        self.passed = False

    def to_json(self) -> dict:
        out = asdict(self)
        if not out["notes"]:
            del out["notes"]
        if out["counterexample"] is None:
            del out["counterexample"]
        return out


def straight_shapes(max_n: int, min_n: int = 1) -> list[SkewShape]:
    return [SkewShape(a) for n in range(min_n, max_n + 1) for a in compositions_of(n)]


@lru_cache(maxsize=None)
def classes_of(shape: SkewShape) -> tuple[ClassPoset, ...]:
    return tuple(partition_classes(shape))


# ---------------------------------------------------------------- endo


def check_endomorphisms(shapes, seed: int = 0) -> tuple[PropertyResult, list[dict]]:
    res = PropertyResult("end_is_scalar")
    certs = []
    for shape in shapes:
        for k, e in enumerate(classes_of(shape)):
            cert = certify_indecomposable(e, k, seed=seed)
            rec = cert.to_json()
            res.checked += 1
            if shape.is_straight:
                if cert.dim_end != 1:
                    res.fail(f"{shape} class {k}: dim End = {cert.dim_end}")
            elif cert.dim_end > 1:
                rec["expected_decomposable"] = True
                res.notes["skew_decomposable"] = res.notes.get("skew_decomposable", 0) + 1
            certs.append(rec)
    return res, certs


def check_annihilators(shapes) -> PropertyResult:
    res = PropertyResult("annihilator_word")
    for shape in shapes:
        for e in classes_of(shape):
            d0 = descent_set(e.source)
            c = {t: column_word(t) for t in e.members}
            for t in e.members:
                if t == e.source or not descent_set(t) <= d0:
                    continue
                try:
                    word = annihilator_word(e, t)
                except NoAttackedEntry:
                    if shape.is_straight:
                        res.fail(f"{shape}: no j for {t}")
                    else:
                        res.notes["skew_j_not_found"] = res.notes.get("skew_j_not_found", 0) + 1
                    continue
                res.checked += 1
                sigma = Permutation.from_word(word, e.n)
                moved = apply_word(word, t)
                ok = (
                    apply_word(word, e.source) is ZERO
                    and moved is not ZERO
                    and moved in e.index
                    and column_word(moved) * c[t].inverse() == sigma
                )
                if not ok:
                    res.fail(f"{shape}: word {word} fails on {t}")
    return res


def check_two_routes(shapes) -> PropertyResult:
    """Commutant dimension equals the dimension of admissible source images."""
    res = PropertyResult("end_two_routes")
    for shape in shapes:
        for k, e in enumerate(classes_of(shape)):
            rep = build_rep(e)
            res.checked += 1
            a, b = commutant(rep).dim, len(source_image_space(e, rep))
            if a != b:
                res.fail(f"{shape} class {k}: commutant {a} vs source images {b}")
    return res


def check_decomposition_count(shapes) -> PropertyResult:
    res = PropertyResult("decomposition_count")
    for shape in shapes:
        res.checked += 1
        total = sum(len(e) for e in classes_of(shape))
        if total != len(enumerate_sct(shape)):
            res.fail(f"{shape}: classes sum to {total}")
    return res


# ---------------------------------------------------------------- poset


def check_class_isomorphism(shapes) -> PropertyResult:
    res = PropertyResult("class_isomorphism")
    for shape in shapes:
        for k, e in enumerate(classes_of(shape)):
            res.checked += 1
            if not class_iso_check(e):
                res.fail(f"{shape} class {k}")
    return res


def check_cover_steps(shapes) -> PropertyResult:
    """Each labeled Hasse edge multiplies the column word by ``s_i`` and adds one to its length."""
    res = PropertyResult("cover_is_bruhat_cover")
    for shape in shapes:
        for e in classes_of(shape):
            for lo, hi, i in e.covers:
                res.checked += 1
                c1, c2 = e.col(e.members[lo]), e.col(e.members[hi])
                if c2 != c1.left_mul_simple(i) or length(c2) != length(c1) + 1:
                    res.fail(f"{shape}: {e.members[lo]} -pi_{i}-> {e.members[hi]}")
    return res


def check_support_criterion(shapes) -> PropertyResult:
    res = PropertyResult("support_criterion")
    for shape in shapes:
        for e in classes_of(shape):
            for a in e.members:
                for b in e.members:
                    if not e.leq(a, b):
                        continue
                    res.checked += 1
                    sigma = e.col(b) * e.col(a).inverse()
                    via_words = frozenset(i for w in reduced_words(sigma) for i in w)
                    _, differs = support_criterion(a, b)
                    via_shapes = frozenset(i for i, d in differs.items() if d)
                    if via_words != via_shapes:
                        res.fail(f"{shape}: {a} <= {b}: {sorted(via_words)} vs {sorted(via_shapes)}")
    return res


def check_rank_inequality(shapes, seed: int = 0, samples: int = 20) -> PropertyResult:
    res = PropertyResult("rank_inequality")
    rng = random.Random(seed)
    for shape in shapes:
        n = shape.size
        if n < 2:
            continue
        for e in classes_of(shape):
            for _ in range(samples):
                t1 = rng.choice(e.members)
                word = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 2 * n)))
                sigma = Permutation.from_word(word, n)
                t2 = apply_word(one_reduced_word(sigma), t1)
                if t2 is ZERO:
                    continue
                res.checked += 1
                gap = e.rank(t2) - e.rank(t1)
                exact = sigma == e.col(t2) * e.col(t1).inverse()
                if gap > length(sigma) or (gap == length(sigma)) != exact:
                    res.fail(f"{shape}: {t1} sigma={sigma}")
    return res


def check_sources_and_sinks(shapes) -> PropertyResult:
    """Unique source/sink equal the poset's unique minimum/maximum; exactly one class has increasing columns."""
    res = PropertyResult("source_sink_and_increasing_class")
    for shape in shapes:
        increasing = 0
        for e in classes_of(shape):
            res.checked += 1
            if e.poset.minimal() != [e.source] or e.poset.maximal() != [e.sink]:
                res.fail(f"{shape}: source/sink mismatch")
            if all(_columns_increase(t) for t in e.members):
                increasing += 1
        if shape.is_straight and increasing != 1:
            res.fail(f"{shape}: {increasing} classes with increasing columns")
    return res


def _columns_increase(t) -> bool:
    return all(k == tuple(range(len(k))) for k in equivalence_key(t))


# ---------------------------------------------------------------- dominance


def check_dominance_drop(shapes) -> PropertyResult:
    res = PropertyResult("dominance_drop")
    for shape in shapes:
        for e in classes_of(shape):
            for lo, hi, i in e.covers:
                res.checked += 1
                s1, s2 = shapes_above(e.members[lo]), shapes_above(e.members[hi])
                if not dominance_lt(s2[i].outer, s1[i].outer):
                    res.fail(f"{shape}: edge pi_{i} from {e.members[lo]} does not drop")
                if any(s1[m] != s2[m] for m in range(e.n + 1) if m != i):
                    res.fail(f"{shape}: edge pi_{i} from {e.members[lo]} changes other shapes")
    return res


def check_dominance_symmetry(max_n: int) -> PropertyResult:
    res = PropertyResult("dominance_symmetric_part")
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        for a in comps:
            for b in comps:
                res.checked += 1
                both = dominance_leq(a, b) and dominance_leq(b, a)
                if both != (rearrange_to_partition(a) == rearrange_to_partition(b)):
                    res.fail(f"{a}, {b}")
    return res


# ---------------------------------------------------------------- qsym


def check_refinement(max_n: int, variables: int = 0) -> PropertyResult:
    res = PropertyResult("qsym_refinement")
    for n in range(1, max_n + 1):
        m = max(n, variables)
        for lam in partitions_of(n):
            res.checked += 1
            if refinement_sum(lam, m) != schur(lam, m):
                res.fail(f"lambda={lam}")
    return res


def check_module_characteristic(shapes, variables: int = 0) -> PropertyResult:
    res = PropertyResult("module_characteristic")
    for shape in shapes:
        res.checked += 1
        m = max(shape.size, variables, 1)
        total = sum((characteristic(e.members) for e in classes_of(shape)), start=characteristic([]))
        p = expand(total, m)
        if p != quasischur(shape, m) or not p.is_quasisymmetric():
            res.fail(str(shape))
    return res


# ---------------------------------------------------------------- driver


def run(suites, max_n: int, seed: int = 0, shapes=None, variables: int = 0) -> dict:
    """Run the selected suites; ``variables`` raises the qsym truncation above ``n``."""
    if shapes is None:
        shapes = straight_shapes(max_n)
    selected = list(SUITES) if "all" in suites else list(suites)
    props: list[PropertyResult] = []
    certs: list[dict] = []
    if "endo" in selected:
        r, certs = check_endomorphisms(shapes, seed)
        props += [r, check_annihilators(shapes), check_two_routes(shapes), check_decomposition_count(shapes)]
    if "poset" in selected:
        props += [
            check_class_isomorphism(shapes),
            check_cover_steps(shapes),
            check_support_criterion(shapes),
            check_rank_inequality(shapes, seed),
            check_sources_and_sinks(shapes),
        ]
    if "dominance" in selected:
        props += [check_dominance_drop(shapes), check_dominance_symmetry(max(s.size for s in shapes))]
    if "qsym" in selected:
        top = max(s.size for s in shapes)
        props += [check_refinement(top, variables), check_module_characteristic(shapes, variables)]
    return {
        "schema": 1,
        "scope": {"max_n": max_n, "shapes": [str(s) for s in shapes]},
        "seed": seed,
        "variables": variables,
        "suites": selected,
        "certificates": certs,
        "properties": [p.to_json() for p in props],
        "passed": all(p.passed for p in props),
    }
