"""Test elements C_M and fixed-point counts ``#{x : s x t = x}``.

The optimised counter walks the eggbox.  A fixed point ``x`` of
``x -> s x t`` must sit in an H-class whose R-class is fixed by left
multiplication by ``s`` and whose L-class is fixed by right multiplication by
``t``; inside such a cell the count reduces to a centraliser order in the
left Schützenberger group of the L-class.  :func:`fixed_points_exhaustive`
is the loop it is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumeration import MonoidTable
from .green import GreenStructure, green_pair, regular_hclass
from .groupchar import conjugacy_classes
from .schutz import PermGroup, left_permutation, perm_inv, schutzenberger
from .xform import compose_images, group_part_images, idempotent_power_images


@dataclass(eq=False)
class SchutzData:
    """Left Schützenberger groups, one per L-class, built on demand."""

    table: MonoidTable
    structure: GreenStructure
    _groups: dict = field(default_factory=dict, repr=False)

    def lgroup(self, l: int) -> PermGroup:
        g = self._groups.get(l)
        if g is None:
            members = self.structure.l_classes[l]
            h = self.structure.h_of[members[0]]
            g = self._groups[l] = schutzenberger(self.table, self.structure, h, "left")
        return g

    def hgroup(self, h: int) -> PermGroup:
        return self.lgroup(self.structure.h_l[h])

    def regular_idempotent(self, j: int) -> int | None:
        """The idempotent of the chosen regular H-class of J-class ``j``."""
        h = regular_hclass(self.structure, j)
        if h is None:
            return None
        idem = set(self.structure.jclasses[j].idempotents)
        return next(x for x in self.structure.h_classes[h] if x in idem)


def schutz_data(table: MonoidTable, structure: GreenStructure) -> SchutzData:
    return SchutzData(table, structure)


@dataclass(frozen=True)
class TestElements:
    """The ordered set C_M.

    ``jclass[i]`` and ``group_class[i]`` locate representative ``i`` by its
    J-class and the conjugacy class of the Schützenberger group it maps to.
    """

    __test__ = False  # not a pytest class

    representatives: tuple[int, ...]
    jclass: tuple[int, ...]
    group_class: tuple[int, ...]
    idempotent: dict  # regular J id -> chosen idempotent

    def __len__(self):
        return len(self.representatives)


def _transport(table, structure, sdata, f: int, e: int):
    """Bijection image(f) -> image(e) conjugating Γ(L_f) onto Γ(L_e)."""
    if structure.l_of[f] == structure.l_of[e]:
        return None
    jc = structure.jclass_of(e)
    x_h = jc.grid[(structure.r_of[f], structure.l_of[e])]
    x = structure.h_classes[x_h][0]
    return green_pair(table.images[f], table.images[x], "left").mapping


def group_element_class(table, structure, sdata, s: int, e: int) -> int:
    """Conjugacy class in Γ(L_e) of the group element ``s`` of e's J-class."""
    images = table.images
    f = table.lookup[idempotent_power_images(images[s])]
    lam = _transport(table, structure, sdata, f, e)
    G = sdata.lgroup(structure.l_of[e])
    pos = {p: i for i, p in enumerate(G.domain)}
    a = images[s]
    if lam is None:
        perm = tuple(pos[a[p - 1]] for p in G.domain)
    else:
        inv = {v: k for k, v in lam.items()}
        perm = tuple(pos[lam[a[inv[p] - 1]]] for p in G.domain)
    return conjugacy_classes(G).class_of[perm]


def compute_c_m(table: MonoidTable, structure: GreenStructure,
                sdata: SchutzData | None = None) -> TestElements:
    """One representative per character-equivalence class.

    Per regular J-class the classes are the conjugacy classes of its
    Schützenberger group; the representative is the group element of the
    J-class with lexicographically least image tuple.
    """
    sdata = sdata or schutz_data(table, structure)
    images = table.images
    reps, jcls, gcls = [], [], []
    chosen = {}
    for jc in structure.jclasses:
        if not jc.regular:
            continue
        e = sdata.regular_idempotent(jc.id)
        chosen[jc.id] = e
        G = sdata.lgroup(structure.l_of[e])
        cc = conjugacy_classes(G)
        best: list = [None] * len(cc)
        for f in jc.idempotents:
            for s in structure.h_classes[structure.h_of[f]]:
                k = group_element_class(table, structure, sdata, s, e)
                if best[k] is None or images[s] < images[best[k]]:
                    best[k] = s
        for k, s in enumerate(best):
            reps.append(s)
            jcls.append(jc.id)
            gcls.append(k)
    return TestElements(tuple(reps), tuple(jcls), tuple(gcls), chosen)


def character_class(table, structure, sdata, s: int):
    """``(J id, class index)`` of the character-equivalence class of ``s``."""
    g = table.lookup[group_part_images(table.images[s])]
    j = structure.j_of[g]
    e = sdata.regular_idempotent(j)
    return j, group_element_class(table, structure, sdata, g, e)


def equivalent(table, structure, sdata, s: int, t: int) -> bool:
    """Whether ``s`` and ``t`` take equal values under every character."""
    return character_class(table, structure, sdata, s) == character_class(
        table, structure, sdata, t)


# -- fixed-point counting ---------------------------------------------------

def fixed_points_exhaustive(table: MonoidTable, s: int, t: int) -> int:
    """``#{x : s x t = x}`` by looping over the monoid."""
    a = table.images[s]
    b = table.images[t]
    count = 0
    for x in table.images:
        if tuple([b[x[i - 1] - 1] for i in a]) == x:
            count += 1
    return count


def _cell_count(G: PermGroup, u, t_inv) -> int:
    cc = conjugacy_classes(G)
    k = cc.class_of[u]
    if cc.class_of[t_inv] != k:
        return 0
    return G.order // cc.sizes[k]


def _fixed_rclasses(table, structure, jc, s_img):
    lookup = table.lookup
    r_of = structure.r_of
    out = []
    for r in jc.r_ids:
        x = table.images[structure.r_classes[r][0]]
        y = lookup[compose_images(s_img, x)]
        if r_of[y] == r:
            out.append(r)
    return out


def _fixed_lclasses(table, structure, jc, t_img):
    lookup = table.lookup
    l_of = structure.l_of
    out = []
    for l in jc.l_ids:
        x = table.images[structure.l_classes[l][0]]
        y = lookup[compose_images(x, t_img)]
        if l_of[y] == l:
            out.append(l)
    return out


def _count_cells(table, structure, sdata, rs, ls, s_img, t_img) -> int:
    images = table.images
    grid_of = structure.jclasses
    total = 0
    for l in ls:
        G = sdata.lgroup(l)
        dom = G.domain
        pos = {p: i for i, p in enumerate(dom)}
        t_perm = tuple(pos[t_img[p - 1]] for p in dom)
        t_inv = perm_inv(t_perm)
        grid = grid_of[structure.l_j[l]].grid
        for r in rs:
            a = images[structure.h_classes[grid[(r, l)]][0]]
            u = left_permutation(a, compose_images(s_img, a), pos)
            total += _cell_count(G, u, t_inv)
    return total


def fixed_points_by_jclass(table: MonoidTable, structure: GreenStructure,
                           sdata: SchutzData, s: int, t: int) -> list[int]:
    """Per-J-class contributions to ``#{x : s x t = x}``."""
    s_img = table.images[s]
    t_img = table.images[t]
    out = []
    for jc in structure.jclasses:
        rs = _fixed_rclasses(table, structure, jc, s_img)
        if not rs:
            out.append(0)
            continue
        ls = _fixed_lclasses(table, structure, jc, t_img)
        out.append(_count_cells(table, structure, sdata, rs, ls, s_img, t_img)
                   if ls else 0)
    return out


def fixed_points(table: MonoidTable, structure: GreenStructure, sdata: SchutzData,
                 s: int, t: int) -> int:
    """``#{x in M : s x t = x}`` via the Green decomposition."""
    return sum(fixed_points_by_jclass(table, structure, sdata, s, t))


def lclass_fixed_points(table: MonoidTable, structure: GreenStructure,
                        sdata: SchutzData, m: int, g: int, l: int) -> int:
    """``#{x in L : m x g = x}`` for an L-class ``l`` with ``L g = L``.

    This is the trace of ``x -> m x g`` on the L-class module.
    """
    jc = structure.jclasses[structure.l_j[l]]
    s_img = table.images[m]
    t_img = table.images[g]
    if l not in _fixed_lclasses(table, structure, jc, t_img):
        return 0
    rs = _fixed_rclasses(table, structure, jc, s_img)
    return _count_cells(table, structure, sdata, rs, [l], s_img, t_img)


@dataclass(frozen=True)
class BicharacterMatrix:
    labels: tuple[tuple[int, ...], ...]  # image tuples of the C_M representatives
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __len__(self):
        return len(self.entries)


def _row(ctx, s):
    table, structure, sdata, reps = ctx
    return [fixed_points(table, structure, sdata, s, t) for t in reps]


def bicharacter_matrix(table: MonoidTable, structure: GreenStructure,
                       sdata: SchutzData, cm: TestElements, jobs: int = 1) -> BicharacterMatrix:
    from .parallel import parallel_map

    reps = cm.representatives
    rows = parallel_map(_row, reps, jobs, context=(table, structure, sdata, reps))
    labels = tuple(table.images[s] for s in reps)
    return BicharacterMatrix(labels, tuple(tuple(r) for r in rows))


def bicharacter_exhaustive(table: MonoidTable, cm: TestElements) -> list[list[int]]:
    reps = cm.representatives
    return [[fixed_points_exhaustive(table, s, t) for t in reps] for s in reps]

