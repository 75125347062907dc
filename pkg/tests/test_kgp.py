"""Classes of orbit-graph nodes over a Levi set, and their closure order."""

from itertools import combinations

import pytest

from flagorbits import (
    Mismatch,
    build_root_datum,
    builtin_fixtures,
    class_hasse,
    class_of,
    coset_bruhat_leq,
    coset_of,
    distinct_ascents_check,
    enumerate_cosets,
    enumerate_elements,
    find_descent_counterexample,
    group_case,
    i_equivalence_classes,
    inv,
    kgp_leq,
    kgp_leq_induced,
    levi_conjugate_root_check,
    monoid_descent_check,
    p_maximal_set,
    pgl2_split,
    poset_leq,
    reduced_word,
    sl2_split,
    to_orbit_poset,
)


def all_levis(rank):
    for k in range(rank + 1):
        yield from combinations(range(1, rank + 1), k)


def test_rank_one_split_classes():
    g = sl2_split()
    assert p_maximal_set(g, ()) == ("0", "1", "2")
    assert p_maximal_set(g, (1,)) == ("2",)
    classes = i_equivalence_classes(g, (1,))
    assert len(classes) == 1
    assert classes[0].members == ("0", "1", "2")
    assert classes[0].top == "2"
    assert len(i_equivalence_classes(pgl2_split(), (1,))) == 1


def test_diagonal_a2_classes():
    g = builtin_fixtures()["group_case_a2"]
    classes = i_equivalence_classes(g, (1,))
    assert [c.top for c in classes] == ["1", "3", "5"]
    assert all(len(c.members) == 2 for c in classes)
    assert p_maximal_set(g, (1,)) == ("1", "3", "5")


def test_class_count_matches_fixed_points():
    for name, g in builtin_fixtures().items():
        for levi in all_levis(g.datum.rank):
            classes = i_equivalence_classes(g, levi)
            tops = p_maximal_set(g, levi)
            assert tuple(c.top for c in classes) == tops, (name, levi)
            assert sum(len(c.members) for c in classes) == len(g.nodes)


def test_top_order_equals_induced_order():
    for name, g in builtin_fixtures().items():
        for levi in all_levis(g.datum.rank):
            classes = i_equivalence_classes(g, levi)
            for c1 in classes:
                for c2 in classes:
                    assert kgp_leq(g, levi, c1, c2) == kgp_leq_induced(
                        g, levi, c1, c2
                    ), (name, levi)


def test_projection_is_monotone():
    for name in ("sl2_split", "group_case_a2"):
        g = builtin_fixtures()[name]
        poset = to_orbit_poset(g)
        for levi in all_levis(g.datum.rank):
            for u in g.nodes:
                for v in g.nodes:
                    if poset_leq(poset, u, v):
                        cu = class_of(g, levi, u)
                        cv = class_of(g, levi, v)
                        assert kgp_leq(g, levi, cu, cv), (name, levi, u, v)


def test_foreign_class_is_rejected():
    g = builtin_fixtures()["group_case_a2"]
    cls = i_equivalence_classes(g, (1,))[0]
    with pytest.raises(Mismatch):
        kgp_leq(g, (2,), cls, cls)
    with pytest.raises(Mismatch):
        kgp_leq(sl2_split(), (1,), cls, cls)


def test_monoid_descent_check_is_empty_everywhere():
    for name, g in builtin_fixtures().items():
        for levi in all_levis(g.datum.rank):
            assert monoid_descent_check(g, levi) == [], (name, levi)


def test_descent_counterexample_witnesses():
    fx = builtin_fixtures()
    # a non-dense class member can step outside its image class
    assert find_descent_counterexample(fx["group_case_a2"], (1,)) == ("1", "0", 2)
    assert find_descent_counterexample(fx["group_case_b2"], (1,)) == ("1", "0", 2)
    assert find_descent_counterexample(sl2_split(), (1,)) is None
    for levi in all_levis(2):
        assert find_descent_counterexample(fx["group_case_a1"], levi) is None


def test_distinct_ascents_split_rank_one_clean():
    for g in (sl2_split(), pgl2_split()):
        for levi in all_levis(1):
            assert distinct_ascents_check(g, levi) == []


def test_distinct_ascents_fails_on_diagonal_cases():
    fx = builtin_fixtures()
    # both simple roots of the doubled datum move the identity node to the
    # same class, so the two ascents coincide
    assert distinct_ascents_check(fx["group_case_a1"], ()) == [
        "DistinctAscents: v=0 alpha=1 beta=2"
    ]
    for levi in ((1,), (2,), (1, 2)):
        assert distinct_ascents_check(fx["group_case_a1"], levi) == []
    for name in ("group_case_a2", "group_case_b2"):
        g = fx[name]
        bad = [
            levi
            for levi in all_levis(g.datum.rank)
            if distinct_ascents_check(g, levi)
        ]
        assert len(bad) == 9, name
        assert distinct_ascents_check(g, ())[:2] == [
            "DistinctAscents: v=0 alpha=1 beta=3",
            "DistinctAscents: v=0 alpha=2 beta=4",
        ], name


def test_class_hasse_diagonal_a2():
    g = builtin_fixtures()["group_case_a2"]
    assert class_hasse(g, (1,)) == (("1", "3"), ("3", "5"))


def test_diagonal_class_poset_matches_coset_poset():
    for name in ("A1", "A2", "B2"):
        datum = build_root_datum(name)
        g = group_case(datum)
        elements = enumerate_elements(datum)
        by_id = {str(i): w for i, w in enumerate(elements)}
        r = datum.rank
        for levi in all_levis(r):
            if not levi:
                continue
            # left-block Levi sets close under left multiplication, matching
            # left cosets directly; right-block ones match after inverting
            for block, to_coset in (
                (levi, lambda w: coset_of(w, levi)),
                (tuple(a + r for a in levi), lambda w: coset_of(inv(w), levi)),
            ):
                classes = i_equivalence_classes(g, block)
                cosets = enumerate_cosets(datum, levi)
                image = {c.top: to_coset(by_id[c.top]) for c in classes}
                key = lambda c: reduced_word(c.min_rep)
                assert sorted(image.values(), key=key) == sorted(cosets, key=key)
                for c1 in classes:
                    for c2 in classes:
                        assert kgp_leq(g, block, c1, c2) == coset_bruhat_leq(
                            image[c1.top], image[c2.top]
                        ), (name, block)


def test_levi_conjugates_stay_in_nilradical():
    for name in ("A1", "A2", "B2", "G2", "A3", "B3"):
        datum = build_root_datum(name)
        for levi in all_levis(datum.rank):
            assert levi_conjugate_root_check(datum, levi) == [], (name, levi)
