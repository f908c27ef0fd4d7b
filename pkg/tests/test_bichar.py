import pytest

from monochar import (bicharacter_matrix, compute_c_m, conjugacy_classes, equivalent,
                      fixed_points, fixed_points_exhaustive, green_structure, schutz_data)
from monochar.bichar import bicharacter_exhaustive, character_class, lclass_fixed_points
from monochar.xform import compose_images

from catalog import ORACLE_BOUND, SUITE, table


def setup(name):
    tb = table(name)
    st = green_structure(tb)
    sd = schutz_data(tb, st)
    return tb, st, sd


def test_fixed_point_examples():
    tb, st, sd = setup("T2")
    assert fixed_points(tb, st, sd, 0, 0) == 4
    swap, c1 = tb.index((2, 1)), tb.index((1, 1))
    assert fixed_points(tb, st, sd, swap, swap) == 2
    assert fixed_points(tb, st, sd, c1, 0) == 2


def test_c_m_examples():
    tb, st, sd = setup("T3")
    cm = compute_c_m(tb, st, sd)
    assert len(cm) == 6
    ranks = [len(set(tb.images[s])) for s in cm.representatives]
    assert sorted(ranks) == [1, 2, 2, 3, 3, 3]
    tb2, st2, sd2 = setup("T2")
    assert len(compute_c_m(tb2, st2, sd2)) == 3


@pytest.mark.parametrize("name", ["group_S3", "group_S4", "group_Q8", "group_C5"])
def test_group_c_m_is_class_representatives(name):
    tb, st, sd = setup(name)
    cm = compute_c_m(tb, st, sd)
    cc = conjugacy_classes(sd.lgroup(0))
    assert len(cm) == len(cc)
    # one representative from each conjugacy class of the group itself
    classes = []
    for s in cm.representatives:
        conj = {tb.multiply(tb.multiply(g, s), h) for g in range(len(tb))
                for h in range(len(tb)) if tb.multiply(g, h) == 0}
        classes.append(frozenset(conj))
    assert len(set(classes)) == len(cm)
    assert set().union(*classes) == set(range(len(tb)))


def test_trivial_monoid():
    tb, st, sd = setup("T1")
    cm = compute_c_m(tb, st, sd)
    assert bicharacter_matrix(tb, st, sd, cm).entries == ((1,),)


@pytest.mark.parametrize("name", sorted(SUITE))
def test_c_m_size_is_sum_of_class_numbers(name):
    tb, st, sd = setup(name)
    cm = compute_c_m(tb, st, sd)
    expected = sum(len(conjugacy_classes(sd.lgroup(st.l_of[sd.regular_idempotent(jc.id)])))
                   for jc in st.regular_jclasses)
    assert len(cm) == expected
    assert len({character_class(tb, st, sd, s) for s in cm.representatives}) == len(cm)
    assert {character_class(tb, st, sd, x) for x in range(len(tb))} == {
        character_class(tb, st, sd, s) for s in cm.representatives}
    for s in cm.representatives:
        assert st.jclass_of(s).regular
        assert compose_images(tb.images[s], tb.images[s]) in {
            tb.images[x] for x in st.h_classes[st.h_of[s]]}


@pytest.mark.parametrize("name", [n for n in sorted(SUITE) if len(table(n)) <= ORACLE_BOUND])
def test_bicharacter_matches_exhaustive_loop(name):
    tb, st, sd = setup(name)
    cm = compute_c_m(tb, st, sd)
    B = bicharacter_matrix(tb, st, sd, cm)
    assert [list(r) for r in B.entries] == bicharacter_exhaustive(tb, cm)


@pytest.mark.parametrize("name", [n for n in sorted(SUITE) if len(table(n)) <= 30])
def test_fixed_points_all_pairs(name):
    tb, st, sd = setup(name)
    for s in range(len(tb)):
        for t in range(len(tb)):
            assert fixed_points(tb, st, sd, s, t) == fixed_points_exhaustive(tb, s, t)


@pytest.mark.parametrize("name", [n for n in sorted(SUITE) if len(table(n)) <= 80])
def test_equivalent_elements_share_bicharacter_values(name):
    tb, st, sd = setup(name)
    cm = compute_c_m(tb, st, sd)
    reps = cm.representatives
    for x in range(len(tb)):
        s = next(r for r in reps if equivalent(tb, st, sd, x, r))
        for t in reps:
            assert fixed_points_exhaustive(tb, x, t) == fixed_points_exhaustive(tb, s, t)
            assert fixed_points_exhaustive(tb, t, x) == fixed_points_exhaustive(tb, t, s)


@pytest.mark.parametrize("name", ["T3", "rand4", "big0", "cycle_with_collapse"])
def test_lclass_fixed_points(name):
    tb, st, sd = setup(name)
    imgs = tb.images
    for jc in st.regular_jclasses:
        for l in jc.l_ids:
            members = st.l_classes[l]
            stab = [g for g in range(len(tb)) if tb.multiply(members[0], g) in members]
            for m in range(0, len(tb), 3):
                for g in stab[:6]:
                    brute = sum(compose_images(compose_images(imgs[m], imgs[x]), imgs[g])
                                == imgs[x] for x in members)
                    assert lclass_fixed_points(tb, st, sd, m, g, l) == brute


def test_parallel_rows_are_identical():
    tb, st, sd = setup("T3")
    cm = compute_c_m(tb, st, sd)
    assert bicharacter_matrix(tb, st, sd, cm, jobs=4) == bicharacter_matrix(tb, st, sd, cm)
