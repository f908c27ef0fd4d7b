from itertools import permutations

import pytest

from monochar import green_structure, induced_permutation, schutzenberger, tau
from monochar.errors import NotAStabilizer, NotInGroup
from monochar.schutz import perm_inv, perm_mul, perm_order

from catalog import SUITE, table

pytestmark = pytest.mark.filterwarnings("ignore")


def hclass_of(tb, st, images):
    return st.h_of[tb.index(images)]


def left_acts(G, a, g):
    """``a`` followed by ``g`` acting on image(a)."""
    m = G.mapping(g)
    return tuple(m[x] for x in a)


def right_acts(D, a, d):
    """``a`` precomposed with the block permutation ``d``."""
    blocks = D.domain
    out = [0] * len(a)
    for k, blk in enumerate(blocks):
        target = a[blocks[d[k]][0] - 1]
        for i in blk:
            out[i - 1] = target
    return tuple(out)


def test_t3_examples():
    tb = table("T3")
    st = green_structure(tb)
    units = schutzenberger(tb, st, st.h_of[0])
    assert units.order == 6 and units.domain == (1, 2, 3)
    h = hclass_of(tb, st, (1, 1, 3))
    assert {tb.images[x] for x in st.h_classes[h]} == {(1, 1, 3), (3, 3, 1)}
    G = schutzenberger(tb, st, h)
    assert G.order == 2 and G.domain == (1, 3)
    assert schutzenberger(tb, st, hclass_of(tb, st, (2, 2, 2))).order == 1
    assert sorted(schutzenberger(tb, st, st.h_of[x]).order
                  for x in (0, tb.index((1, 1, 3)), tb.index((1, 1, 1)))) == [1, 2, 6]


def test_induced_permutation_examples():
    tb = table("T3")
    st = green_structure(tb)
    h = hclass_of(tb, st, (1, 1, 3))
    assert induced_permutation(tb, st, 0, h) == (0, 1)
    assert induced_permutation(tb, st, tb.index((3, 2, 1)), h) == (1, 0)
    with pytest.raises(NotAStabilizer):
        induced_permutation(tb, st, tb.index((1, 1, 1)), h)
    with pytest.raises(NotAStabilizer):
        induced_permutation(tb, st, tb.index((1, 1, 1)), h, "right")


def test_tau_examples():
    tb = table("T3")
    st = green_structure(tb)
    h = hclass_of(tb, st, (1, 1, 3))
    left = schutzenberger(tb, st, h, "left")
    right = schutzenberger(tb, st, h, "right")
    assert right.domain == ((1, 2), (3,))
    assert tau((1, 1, 3), left.identity, left, right) == right.identity
    assert tau((1, 1, 3), (1, 0), left, right) == (1, 0)
    with pytest.raises(NotInGroup):
        tau((1, 1, 3), (0, 0), left, right)
    units_l = schutzenberger(tb, st, st.h_of[0], "left")
    units_r = schutzenberger(tb, st, st.h_of[0], "right")
    for g1 in units_l.elements:
        for g2 in units_l.elements:
            assert (tau((1, 2, 3), perm_mul(g1, g2), units_l, units_r)
                    == perm_mul(tau((1, 2, 3), g1, units_l, units_r),
                                tau((1, 2, 3), g2, units_l, units_r)))


@pytest.mark.parametrize("name", sorted(SUITE))
def test_free_transitive_action(name):
    tb = table(name)
    st = green_structure(tb)
    imgs = tb.images
    for h, members in enumerate(st.h_classes):
        G = schutzenberger(tb, st, h, "left")
        D = schutzenberger(tb, st, h, "right")
        assert G.order == D.order == len(members)
        for a in members:
            for b in members:
                assert sum(left_acts(G, imgs[a], g) == imgs[b] for g in G.elements) == 1
                assert sum(right_acts(D, imgs[a], d) == imgs[b] for d in D.elements) == 1


@pytest.mark.parametrize("name", sorted(SUITE))
def test_groups_are_closed_and_generated(name):
    tb = table(name)
    st = green_structure(tb)
    for h in range(len(st.h_classes)):
        G = schutzenberger(tb, st, h)
        elems = set(G.elements)
        assert G.elements[0] == G.identity
        for g in G.elements:
            assert perm_inv(g) in elems
            for k in G.generators:
                assert perm_mul(g, k) in elems
        closure = {G.identity}
        frontier = [G.identity]
        while frontier:
            frontier = [perm_mul(x, k) for x in frontier for k in G.generators
                        if perm_mul(x, k) not in closure]
            closure.update(frontier)
        assert closure == elems


@pytest.mark.parametrize("name", sorted(SUITE))
def test_left_group_depends_on_lclass_only(name):
    tb = table(name)
    st = green_structure(tb)
    for l, members in enumerate(st.l_classes):
        groups = {(schutzenberger(tb, st, h).domain,
                   frozenset(schutzenberger(tb, st, h).elements))
                  for h in {st.h_of[x] for x in members}}
        assert len(groups) == 1


@pytest.mark.parametrize("name", sorted(SUITE))
def test_tau_is_isomorphism(name):
    tb = table(name)
    st = green_structure(tb)
    imgs = tb.images
    for jc in st.regular_jclasses:
        for h in {st.h_of[x] for x in jc.elements}:
            members = st.h_classes[h]
            if len(members) > 24:
                continue
            left = schutzenberger(tb, st, h, "left")
            right = schutzenberger(tb, st, h, "right")
            for a in members:
                a_img = imgs[a]
                tmap = {g: tau(a_img, g, left, right) for g in left.elements}
                assert set(tmap.values()) == set(right.elements)
                for g in left.elements:
                    assert left_acts(left, a_img, g) == right_acts(right, a_img, tmap[g])
                    for k in left.elements:
                        assert tmap[perm_mul(g, k)] == perm_mul(tmap[g], tmap[k])


def test_sift_matches_membership():
    tb = table("group_S4")
    st = green_structure(tb)
    tb2 = table("group_A4")
    A = schutzenberger(tb2, green_structure(tb2), 0)
    S = schutzenberger(tb, st, 0)
    for p in permutations(range(4)):
        assert S.sift(p)
        assert A.sift(p) == (p in A)
    assert S.exponent == 12 and A.exponent == 6
    assert perm_order((1, 2, 0, 3)) == 3
