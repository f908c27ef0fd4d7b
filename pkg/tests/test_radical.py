from fractions import Fraction

import pytest

from monochar import green_structure, lclass_radical, trace_form_radical
from monochar.errors import NotRegular, TooLarge
from monochar.linalg import RationalMatrix, nullspace, nullspace_naive, rank, same_span
from monochar.radical import lclass_module, lclass_radical_data
from monochar.xform import compose_images

from catalog import GROUPS, SUITE, table


def regular_lclasses(st):
    idem = set(st.idempotents)
    return [l for l, members in enumerate(st.l_classes) if idem & set(members)]


def full_system(tb, st, l, e):
    """``e m v = 0`` for every m, with the truncated action on kL."""
    basis = st.l_classes[l]
    pos = {x: i for i, x in enumerate(basis)}
    rows = []
    for m in range(len(tb)):
        em = tb.multiply(e, m)
        block = {}
        for col, x in enumerate(basis):
            y = tb.multiply(em, x)
            if y in pos:
                block.setdefault(y, [0] * len(basis))[col] += 1
        rows.extend(block[y] for y in sorted(block))
    return rows or [[0] * len(basis)]


def algebra_radical(tb):
    """Basis of rad(kM) as the kernel of the trace form."""
    n = len(tb)
    imgs = tb.images
    fix = [sum(compose_images(m, x) == x for x in imgs) for m in imgs]
    form = [[fix[tb.multiply(a, b)] for a in range(n)] for b in range(n)]
    return nullspace(form)


def test_group_radical_is_zero():
    tb = table("group_S3")
    st = green_structure(tb)
    assert lclass_radical(tb, st, 0).rows == 0


def test_semilattice():
    tb = table("semilattice")
    st = green_structure(tb)
    assert all(lclass_radical(tb, st, l).rows == 0 for l in regular_lclasses(st))
    assert trace_form_radical(tb) == 0


def test_t2_radical():
    tb = table("T2")
    assert trace_form_radical(tb) == 1
    rad = algebra_radical(tb)
    expected = [0] * 4
    expected[tb.index((1, 1))], expected[tb.index((2, 2))] = 1, -1
    assert same_span(rad, RationalMatrix.from_rows([expected]))


def test_t3_trace_form_fixture():
    assert trace_form_radical(table("T3")) == 7


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_groups_semisimple(name):
    assert trace_form_radical(table(f"group_{name}")) == 0


def test_bound():
    with pytest.raises(TooLarge):
        trace_form_radical(table("T3"), bound=20)


def test_non_regular_lclass():
    tb = table("nonregular")
    st = green_structure(tb)
    l = st.l_of[tb.index((1, 1, 2))]
    with pytest.raises(NotRegular):
        lclass_radical(tb, st, l)


@pytest.mark.parametrize("name", sorted(SUITE))
def test_reduced_system_matches_full_system(name):
    tb = table(name)
    st = green_structure(tb)
    for l in regular_lclasses(st):
        data = lclass_radical_data(tb, st, l)
        full = nullspace_naive(full_system(tb, st, l, data.idempotent))
        assert data.vectors.rows == full.rows
        if full.rows:
            assert same_span(data.vectors, full)


@pytest.mark.parametrize("name", [n for n in sorted(SUITE) if len(table(n)) <= 120])
def test_matches_algebra_radical_times_lclass(name):
    tb = table(name)
    st = green_structure(tb)
    rad = algebra_radical(tb)
    for l in regular_lclasses(st):
        basis = st.l_classes[l]
        pos = {x: i for i, x in enumerate(basis)}
        products = []
        for r in rad:
            for x in basis:
                v = [Fraction(0)] * len(basis)
                for a, c in enumerate(r):
                    y = tb.multiply(a, x)
                    if c and y in pos:
                        v[pos[y]] += c
                products.append(v)
        ours = lclass_radical(tb, st, l)
        dim = rank(products) if products else 0
        assert ours.rows == dim
        if dim:
            assert same_span(ours, RationalMatrix.from_rows(products))


@pytest.mark.parametrize("name", ["T2", "T3", "rand4", "big0", "order_preserving3"])
def test_trace_on_radical(name):
    tb = table(name)
    st = green_structure(tb)
    for l in regular_lclasses(st):
        data = lclass_radical_data(tb, st, l)
        if not data.dimension:
            continue
        basis = data.basis_elements
        pos = {x: i for i, x in enumerate(basis)}
        V = data.vectors
        for m in range(0, len(tb), max(1, len(tb) // 15)):
            for g in (x for x in basis if x in st.h_classes[st.h_of[data.idempotent]]):
                mapping = [pos.get(tb.multiply(tb.multiply(m, x), g), -1) for x in basis]
                images = []
                for v in V:
                    w = [Fraction(0)] * len(basis)
                    for i, c in enumerate(v):
                        if mapping[i] >= 0:
                            w[mapping[i]] += c
                    images.append(w)
                # N is invariant; express each image in the basis and sum diagonals
                coords = [solve_in_span(V, w) for w in images]
                assert data.trace(mapping) == sum(c[k] for k, c in enumerate(coords))


def solve_in_span(V, w):
    """Coordinates of ``w`` in the row basis ``V`` (must lie in its span)."""
    k = V.rows
    aug = [[V[i, j] for i in range(k)] + [w[j]] for j in range(V.cols)]
    sol = nullspace_naive(aug)
    vec = next(v for v in sol if v[k] != 0)
    return [-vec[i] / vec[k] for i in range(k)]


@pytest.mark.parametrize("name", ["T3", "rand4", "big1"])
def test_lclass_module_actions(name):
    tb = table(name)
    st = green_structure(tb)
    for l in regular_lclasses(st):
        mod = lclass_module(tb, st, l)
        for g, gen in enumerate(tb.generators):
            mat = mod.action_matrix(g)
            for i, x in enumerate(mod.basis):
                col = [mat[k][i] for k in range(len(mod.basis))]
                y = tb.lookup[compose_images(gen.images, tb.images[x])]
                if y in mod.basis:
                    assert col[mod.position(y)] == 1 and sum(col) == 1
                else:
                    assert sum(col) == 0
