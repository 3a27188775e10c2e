import random

import pytest
from hypothesis import given, settings, strategies as st

from cthecke.compositions import Composition, SkewShape, compositions_of, dominance_lt, parse_shape, skew_shapes
from cthecke.hecke import (
    ZERO,
    NoAttackedEntry,
    annihilator_indices,
    annihilator_word,
    apply_pi,
    apply_word,
    class_containing,
    class_iso_check,
    class_to_dot,
    equivalence_key,
    is_sink,
    is_source,
    multi_flip,
    normalize_word,
    partition_classes,
    shapes_above,
    sink_of,
    source_of,
    support_criterion,
)
from cthecke.permutations import Permutation, length, one_reduced_word, reduced_words
from cthecke.tableaux import column_word, descent_data, descent_set, enumerate_sct, is_valid, parse_tableau

from golden import SKEW_PAIR, WORKED_EDGES, WORKED_NODES, WORKED_SINK, WORKED_SOURCE


def C(*parts):
    return Composition(tuple(parts))


def straight(max_n, min_n=1):
    return [SkewShape(a) for n in range(min_n, max_n + 1) for a in compositions_of(n)]


@pytest.fixture(scope="module")
def worked():
    return class_containing(parse_tableau(WORKED_SOURCE))


def test_zero_is_falsy_singleton():
    assert not ZERO
    assert type(ZERO)() is ZERO


def test_action_table_on_worked_source():
    t = parse_tableau(WORKED_SOURCE)
    for i in (3, 4, 5, 7):
        assert apply_pi(i, t) == t
    assert apply_pi(6, t) is ZERO
    assert str(apply_pi(1, t)) == "2 | 6 5 4 3 | 8 7 1"
    assert str(apply_pi(2, t)) == "1 | 6 5 4 2 | 8 7 3"
    with pytest.raises(ValueError):
        apply_pi(8, t)
    with pytest.raises(ValueError):
        apply_pi(0, t)


def test_worked_edges_by_direct_action():
    tabs = [parse_tableau(s) for s in WORKED_NODES]
    for tail, head, i in WORKED_EDGES:
        assert apply_pi(i, tabs[tail]) == tabs[head]


def test_apply_word_convention():
    t0 = parse_tableau(WORKED_SOURCE)
    assert apply_word((), t0) == t0
    # rightmost letter acts first: pi_2 then pi_3 kills the source
    assert apply_word((3, 2), t0) is ZERO
    assert apply_word((2, 3), t0) is not ZERO


@pytest.mark.parametrize("shape", straight(5) + [s for s in skew_shapes(5) if s.size], ids=str)
def test_idempotent_and_closed(shape):
    for t in enumerate_sct(shape):
        for i in range(1, t.n):
            u = apply_pi(i, t)
            if u is ZERO:
                continue
            assert is_valid(u)
            assert apply_pi(i, u) == u
            assert equivalence_key(u) == equivalence_key(t)


def test_reduced_words_act_alike():
    rng = random.Random(7)
    shapes = straight(5, 2)
    for _ in range(100):
        shape = rng.choice(shapes)
        t = rng.choice(enumerate_sct(shape))
        sigma = Permutation(tuple(rng.sample(range(1, t.n + 1), t.n)))
        results = {apply_word(w, t) for w in reduced_words(sigma)}
        assert len(results) == 1


def test_braid_relations_on_basis():
    for shape in straight(5, 3):
        for t in enumerate_sct(shape):
            for i in range(1, t.n - 1):
                assert apply_word((i, i + 1, i), t) == apply_word((i + 1, i, i + 1), t)
            for i in range(1, t.n):
                for j in range(i + 2, t.n):
                    assert apply_word((i, j), t) == apply_word((j, i), t)


def test_equivalence_examples(worked):
    keys = {equivalence_key(parse_tableau(s)) for s in WORKED_NODES}
    assert len(keys) == 1
    a, b = (parse_tableau(s) for s in SKEW_PAIR)
    assert equivalence_key(a) == equivalence_key(b)


def test_partition_examples():
    (e,) = partition_classes(parse_shape("(1,3)/(2)"))
    assert len(e) == 2
    (single,) = partition_classes(SkewShape(C(4)))
    assert len(single) == 1
    classes = partition_classes(SkewShape(C(1, 4, 3)))
    eights = [e for e in classes if len(e) == 8 and len(e.covers) == 9]
    assert any(str(e.source) == WORKED_SOURCE for e in eights)


def test_worked_class_structure(worked):
    assert sorted(map(str, worked.members)) == sorted(WORKED_NODES)
    assert str(worked.source) == WORKED_SOURCE
    assert str(worked.sink) == WORKED_SINK
    assert source_of(worked) == worked.source and sink_of(worked) == worked.sink
    got = {(str(a), str(b), i) for a, b, i in worked.poset.labeled_edges()}
    want = {(WORKED_NODES[a], WORKED_NODES[b], i) for a, b, i in WORKED_EDGES}
    assert got == want
    assert worked.rank_profile() == [1, 2, 2, 2, 1]


def test_skew_pair_source_sink():
    (e,) = partition_classes(parse_shape("(1,3)/(2)"))
    assert (str(e.source), str(e.sink)) == SKEW_PAIR
    assert apply_pi(1, e.source) == e.sink


def test_singleton_source_is_sink():
    (e,) = partition_classes(SkewShape(C(3)))
    assert e.source == e.sink and is_source(e.source) and is_sink(e.sink)
    assert class_iso_check(e)


@pytest.mark.parametrize("n", range(1, 7))
def test_classes_partition_and_source_sink(n):
    for alpha in compositions_of(n):
        shape = SkewShape(alpha)
        classes = partition_classes(shape)
        assert sum(len(e) for e in classes) == len(enumerate_sct(shape))
        for e in classes:
            assert sum(map(is_source, e.members)) == 1
            assert sum(map(is_sink, e.members)) == 1
            assert e.poset.minimal() == [e.source]
            assert e.poset.maximal() == [e.sink]


@pytest.mark.parametrize("n", range(1, 6))
def test_class_isomorphism_exhaustive(n):
    for shape in straight(n, n):
        for e in partition_classes(shape):
            assert class_iso_check(e)


def test_class_isomorphism_worked(worked):
    assert class_iso_check(worked)


@pytest.mark.parametrize("n", range(2, 7))
def test_cover_is_weak_cover(n):
    for shape in straight(n, n):
        for e in partition_classes(shape):
            for lo, hi, i in e.covers:
                c1, c2 = column_word(e.members[lo]), column_word(e.members[hi])
                # pinned convention: left multiplication by s_i swaps values i, i+1
                assert c2 == Permutation.simple(i, n) * c1
                assert length(c2) == length(c1) + 1


def test_normalize_word_examples(worked):
    t = worked.source
    assert normalize_word((3, 4, 5), t) == ((), Permutation.identity(8))
    sub, sigma = normalize_word((1,), t)
    assert sub == (1,) and sigma == Permutation.simple(1, 8)
    with pytest.raises(ValueError):
        normalize_word((6,), t)


def test_normalize_word_random(worked):
    rng = random.Random(3)
    for _ in range(200):
        t = rng.choice(worked.members)
        word = tuple(rng.choice([1, 2, 3, 4, 5, 7]) for _ in range(rng.randint(0, 8)))
        res = apply_word(word, t)
        if res is ZERO:
            continue
        sub, sigma = normalize_word(word, t)
        assert apply_word(sub, t) == res
        assert sigma == column_word(res) * column_word(t).inverse()
        assert len(sub) == length(sigma)
        assert Permutation.from_word(sub, t.n) == sigma
        it = iter(word)
        assert all(x in it for x in sub)


def test_multi_flip_examples(worked):
    t = parse_tableau("2 | 6 5 4 3 | 8 7 1")
    out = multi_flip(t, 2, 4)
    assert str(out) == "4 | 6 5 3 2 | 8 7 1"
    assert out.entry[t.cell(2)] == 4
    t0 = worked.source
    assert multi_flip(t0, 1, 2) == apply_pi(1, t0)
    with pytest.raises(ValueError):
        multi_flip(t0, 6, 7)


def _flip_ok(t, i, j):
    return all(t.col(i) < t.col(k) and not t.attacks(i, k) for k in range(i + 1, j + 1))


def test_multi_flip_random():
    rng = random.Random(11)
    checked = 0
    shapes = straight(6, 3)
    while checked < 100:
        t = rng.choice(enumerate_sct(rng.choice(shapes)))
        i = rng.randint(1, t.n - 1)
        j = rng.randint(i + 1, t.n)
        if not _flip_ok(t, i, j):
            continue
        out = multi_flip(t, i, j)
        assert is_valid(out)
        assert out.entry[t.cell(i)] == j
        word = tuple(range(j - 1, i - 1, -1))
        sigma = column_word(out) * column_word(t).inverse()
        assert word in reduced_words(sigma)
        checked += 1


def test_support_criterion_examples(worked):
    t = worked.source
    assert support_criterion(t, t) == (frozenset(), {i: False for i in range(1, 8)})
    supp, differs = support_criterion(worked.source, worked.sink)
    assert supp == {i for i, d in differs.items() if d}
    with pytest.raises(ValueError):
        support_criterion(worked.sink, worked.source)


@pytest.mark.parametrize("n", range(1, 6))
def test_support_criterion_exhaustive(n):
    for shape in straight(n, n):
        for e in partition_classes(shape):
            for a in e.members:
                for b in e.members:
                    if e.leq(a, b):
                        sigma = column_word(b) * column_word(a).inverse()
                        via_words = {i for w in reduced_words(sigma) for i in w}
                        _, differs = support_criterion(a, b)
                        assert via_words == {i for i, d in differs.items() if d}


@pytest.mark.parametrize("n", range(2, 7))
def test_dominance_drop(n):
    for shape in straight(n, n):
        for e in partition_classes(shape):
            for lo, hi, i in e.covers:
                s1, s2 = shapes_above(e.members[lo]), shapes_above(e.members[hi])
                assert dominance_lt(s2[i].outer, s1[i].outer)
                assert all(s1[m] == s2[m] for m in range(n + 1) if m != i)


def test_worked_annihilator(worked):
    d0 = descent_set(worked.source)
    qualifying = [t for t in worked.members if t != worked.source and descent_set(t) <= d0]
    assert [str(t) for t in qualifying] == ["2 | 6 5 4 3 | 8 7 1"]
    (t,) = qualifying
    assert annihilator_indices(worked, t) == (2, 4)
    word = annihilator_word(worked, t)
    assert word == (3, 2)
    assert apply_word(word, worked.source) is ZERO
    assert str(apply_word(word, t)) == "4 | 6 5 3 2 | 8 7 1"
    assert str(apply_word((2,), worked.source)) == "1 | 6 5 4 2 | 8 7 3"
    with pytest.raises(ValueError):
        annihilator_word(worked, worked.source)


@pytest.mark.parametrize("n", range(1, 8))
def test_annihilator_postconditions(n):
    for shape in straight(n, n):
        for e in partition_classes(shape):
            d0 = descent_set(e.source)
            for t in e.members:
                if t == e.source or not descent_set(t) <= d0:
                    continue
                word = annihilator_word(e, t)
                moved = apply_word(word, t)
                assert apply_word(word, e.source) is ZERO
                assert moved in e.index
                assert column_word(moved) * column_word(t).inverse() == Permutation.from_word(word, n)


def test_skew_annihilator_reports_missing_j():
    (e,) = partition_classes(parse_shape("(1,3)/(2)"))
    with pytest.raises(NoAttackedEntry):
        annihilator_word(e, e.sink)


def test_rank_inequality_random():
    rng = random.Random(5)
    for shape in straight(6, 3):
        for e in partition_classes(shape):
            n = e.n
            for _ in range(10):
                t1 = rng.choice(e.members)
                sigma = Permutation(tuple(rng.sample(range(1, n + 1), n)))
                t2 = apply_word(one_reduced_word(sigma), t1)
                if t2 is ZERO:
                    continue
                gap = e.rank(t2) - e.rank(t1)
                assert gap <= length(sigma)
                assert (gap == length(sigma)) == (sigma == column_word(t2) * column_word(t1).inverse())


def test_dot_output_deterministic(worked):
    dot = class_to_dot(worked, "E")
    assert dot == class_to_dot(class_containing(parse_tableau(WORKED_SINK)), "E")
    assert dot.count("->") == 9
    assert dot.count("[label=\"pi_") == 9
    for s in WORKED_NODES:
        assert f'label="{s}"' in dot


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(straight(6, 2)), st.data())
def test_descent_data_consistent_with_action(shape, data):
    t = data.draw(st.sampled_from(enumerate_sct(shape)))
    d = descent_data(t)
    for i in range(1, t.n):
        u = apply_pi(i, t)
        if i in d.Dc:
            assert u == t
        elif i in d.AD:
            assert u is ZERO
        else:
            assert u == t.swap(i)
