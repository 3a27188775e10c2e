from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from cthecke.compositions import Composition, SkewShape, compositions_of, partitions_of, skew_shapes
from cthecke.hecke import class_containing, partition_classes
from cthecke.qsym import (
    Polynomial,
    characteristic,
    composition_to_descent_set,
    descent_set_to_composition,
    expand,
    fundamental,
    quasischur,
    refinement_sum,
    schur,
    standard_young_tableaux,
)
from cthecke.tableaux import descent_set, enumerate_sct, parse_tableau

from golden import WORKED_NODES, WORKED_SOURCE


def C(*parts):
    return Composition(tuple(parts))


def mono(m, **powers):
    e = [0] * m
    for k, v in powers.items():
        e[int(k[1:]) - 1] = v
    return tuple(e)


def brute_fundamental(s, n, m):
    terms = Counter()
    for seq in product(range(m), repeat=n):
        if all(seq[k] <= seq[k + 1] for k in range(n - 1)) and all(seq[k - 1] < seq[k] for k in s):
            e = [0] * m
            for v in seq:
                e[v] += 1
            terms[tuple(e)] += 1
    return Polynomial(m, dict(terms))


def ssyt_schur(lam, m):
    """Schur polynomial from semistandard tableaux: rows weak, columns strict."""
    cells = [(r, c) for r, length in enumerate(lam.parts) for c in range(length)]
    terms = Counter()
    for vals in product(range(m), repeat=len(cells)):
        f = dict(zip(cells, vals))
        if any((r, c + 1) in f and f[(r, c)] > f[(r, c + 1)] for r, c in cells):
            continue
        if any((r + 1, c) in f and f[(r, c)] >= f[(r + 1, c)] for r, c in cells):
            continue
        e = [0] * m
        for v in vals:
            e[v] += 1
        terms[tuple(e)] += 1
    return Polynomial(m, dict(terms))


def test_polynomial_basics():
    p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert p.terms == {(1, 0): Fraction(1)}
    assert p + Polynomial.zero(2) == p
    assert str(Polynomial(2, {(2, 0): 1, (1, 1): 3})) == "1 * x1^2 + 3 * x1*x2"
    assert str(Polynomial.zero(3)) == "0"
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1})
    with pytest.raises(ValueError):
        p + Polynomial.zero(3)


def test_quasisymmetry_detector():
    assert not Polynomial(2, {(1, 0): 1}).is_quasisymmetric()
    assert Polynomial(2, {(1, 0): 1, (0, 1): 1}).is_quasisymmetric()
    # quasisymmetric but not symmetric: M_(2,1) in two variables
    assert Polynomial(2, {(2, 1): 1}).is_quasisymmetric()


def test_descent_composition_examples():
    assert descent_set_to_composition(set(), 4) == C(4)
    assert descent_set_to_composition({2, 3}, 6) == C(2, 1, 3)
    with pytest.raises(ValueError):
        descent_set_to_composition({4}, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_descent_composition_roundtrip(n):
    for a in compositions_of(n):
        assert descent_set_to_composition(composition_to_descent_set(a), n) == a


def test_fundamental_examples():
    assert fundamental(set(), 1, 3) == Polynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert fundamental({1}, 2, 2) == Polynomial(2, {(1, 1): 1})
    with pytest.raises(ValueError):
        fundamental(set(), 1, 0)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_fundamental_brute_force(n, m):
    for a in compositions_of(n):
        s = composition_to_descent_set(a)
        f = fundamental(s, n, m)
        assert f == brute_fundamental(s, n, m)
        assert f.is_quasisymmetric()
        assert f.degrees() <= {n}


@pytest.mark.parametrize("n", range(1, 6))
def test_quasischur_extreme_shapes(n):
    assert quasischur(C(n), n) == fundamental(set(), n, n)
    assert quasischur(C(*[1] * n), n) == fundamental(set(range(1, n)), n, n)


def test_refinement_small_example():
    assert quasischur(C(2, 1), 3) + quasischur(C(1, 2), 3) == schur(C(2, 1), 3)


def test_schur_examples():
    assert schur(C(1), 2) == Polynomial(2, {(1, 0): 1, (0, 1): 1})
    assert schur(C(2), 2) == Polynomial(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur(C(1, 1), 2) == Polynomial(2, {(1, 1): 1})
    with pytest.raises(ValueError):
        schur(C(1, 2), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_matches_ssyt(n):
    for lam in partitions_of(n):
        for m in range(1, min(n, 4) + 1):
            assert schur(lam, m) == ssyt_schur(lam, m)


def test_syt_counts():
    # hook length formula values
    assert len(standard_young_tableaux(C(3, 2))) == 5
    assert len(standard_young_tableaux(C(3, 2, 1))) == 16
    assert len(standard_young_tableaux(C(4, 3, 1))) == 70


@pytest.mark.parametrize("n", range(1, 6))
def test_refinement_identity(n):
    for lam in partitions_of(n):
        assert refinement_sum(lam, n) == schur(lam, n)


def test_refinement_with_more_variables():
    for lam in partitions_of(3):
        assert refinement_sum(lam, 5) == schur(lam, 5)


def test_truncation_stability():
    big = quasischur(C(1, 3, 1), 6)
    small = quasischur(C(1, 3, 1), 5)
    truncated = {e[:5]: c for e, c in big.terms.items() if e[5] == 0}
    assert Polynomial(5, truncated) == small


def test_characteristic_examples():
    (only,) = partition_classes(SkewShape(C(4)))
    assert characteristic(only.members) == Counter({C(4): 1})
    worked = class_containing(parse_tableau(WORKED_SOURCE))
    want = Counter(descent_set_to_composition(descent_set(parse_tableau(s)), 8) for s in WORKED_NODES)
    assert characteristic(worked.members) == want
    assert sum(want.values()) == 8


@pytest.mark.parametrize("n", range(1, 7))
def test_module_characteristic_equals_quasischur(n):
    for a in compositions_of(n):
        shape = SkewShape(a)
        total = sum((characteristic(e.members) for e in partition_classes(shape)), Counter())
        assert total == characteristic(enumerate_sct(shape))
        p = expand(total, n)
        assert p == quasischur(a, n)
        assert p.is_quasisymmetric()


def test_skew_quasischur_is_quasisymmetric():
    for shape in [s for s in skew_shapes(5) if s.size and not s.is_straight]:
        assert quasischur(shape, shape.size).is_quasisymmetric()


def test_quasischur_quasisymmetric_in_extra_variables():
    for n in range(1, 6):
        for alpha in compositions_of(n):
            for extra in range(3):
                p = quasischur(alpha, n + extra)
                assert p.is_quasisymmetric()
                assert p.degrees() == {n}
