"""Green's relations and the eggbox picture of a monoid table.

R-classes are the strong components of the right Cayley graph and L-classes
those of the left one; J-classes use both edge sets.  Image and kernel
equality are consequences here, never the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .enumeration import MonoidTable
from .errors import IllDefined, MonoidError, RankMismatch
from .xform import Transformation, image_of, kernel_of


@dataclass(frozen=True)
class JClass:
    id: int
    rank: int
    r_ids: tuple[int, ...]
    l_ids: tuple[int, ...]
    kernels: tuple[tuple[tuple[int, ...], ...], ...]  # one per R-class
    images: tuple[tuple[int, ...], ...]  # one per L-class
    grid: dict  # (r_id, l_id) -> h_id
    regular: bool
    idempotents: tuple[int, ...]
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def h_size(self) -> int:
        return len(self.elements) // (len(self.r_ids) * len(self.l_ids))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.r_ids), len(self.l_ids)


@dataclass(frozen=True)
class GreenStructure:
    r_of: tuple[int, ...]
    l_of: tuple[int, ...]
    h_of: tuple[int, ...]
    j_of: tuple[int, ...]
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    h_r: tuple[int, ...]
    h_l: tuple[int, ...]
    r_j: tuple[int, ...]
    l_j: tuple[int, ...]
    jclasses: tuple[JClass, ...]
    idempotents: tuple[int, ...]

    def h_j(self, h: int) -> int:
        return self.r_j[self.h_r[h]]

    def jclass_of(self, x: int) -> JClass:
        return self.jclasses[self.j_of[x]]

    @property
    def regular_jclasses(self) -> list[JClass]:
        return [j for j in self.jclasses if j.regular]


def _scc_labels(n: int, edges_from: Sequence[Sequence[int]]) -> np.ndarray:
    rows = []
    cols = []
    for x, targets in enumerate(edges_from):
        for y in targets:
            rows.append(x)
            cols.append(y)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="strong")
    return labels


def _relabel_by_min(labels) -> tuple[tuple[int, ...], list[list[int]]]:
    """Renumber classes so ids follow the minimal element index."""
    mapping: dict[int, int] = {}
    classes: list[list[int]] = []
    out = []
    for x, lab in enumerate(labels):
        lab = int(lab)
        cid = mapping.get(lab)
        if cid is None:
            cid = mapping[lab] = len(classes)
            classes.append([])
        classes[cid].append(x)
        out.append(cid)
    return tuple(out), classes


def green_structure(table: MonoidTable) -> GreenStructure:
    n = len(table)
    right = table.right_cayley
    left = table.left_cayley
    r_of, r_classes = _relabel_by_min(_scc_labels(n, right))
    l_of, l_classes = _relabel_by_min(_scc_labels(n, left))
    both = [tuple(right[x]) + tuple(left[x]) for x in range(n)]
    j_labels, j_raw = _relabel_by_min(_scc_labels(n, both))

    hkeys: dict[tuple[int, int], int] = {}
    h_of = []
    h_classes: list[list[int]] = []
    for x in range(n):
        key = (r_of[x], l_of[x])
        h = hkeys.get(key)
        if h is None:
            h = hkeys[key] = len(h_classes)
            h_classes.append([])
        h_classes[h].append(x)
        h_of.append(h)
    h_r = tuple(k[0] for k in hkeys)
    h_l = tuple(k[1] for k in hkeys)

    images = table.images
    idem = tuple(x for x in range(n)
                 if tuple([images[x][i - 1] for i in images[x]]) == images[x])
    idem_set = set(idem)

    # J-classes: descending rank, then lexicographically least member
    def jkey(members):
        return (-len(set(images[members[0]])), min(images[m] for m in members))

    order = sorted(range(len(j_raw)), key=lambda k: jkey(j_raw[k]))
    renum = {old: new for new, old in enumerate(order)}
    j_of = tuple(renum[j] for j in j_labels)

    r_j = [0] * len(r_classes)
    for r, members in enumerate(r_classes):
        r_j[r] = j_of[members[0]]
    l_j = [0] * len(l_classes)
    for l, members in enumerate(l_classes):
        l_j[l] = j_of[members[0]]

    jclasses = []
    for new, old in enumerate(order):
        members = tuple(sorted(j_raw[old]))
        r_ids = tuple(sorted({r_of[x] for x in members}))
        l_ids = tuple(sorted({l_of[x] for x in members}))
        grid = {(r_of[x], l_of[x]): h_of[x] for x in members}
        idems = tuple(x for x in members if x in idem_set)
        jclasses.append(JClass(
            id=new,
            rank=len(set(images[members[0]])),
            r_ids=r_ids,
            l_ids=l_ids,
            kernels=tuple(kernel_of(images[r_classes[r][0]]) for r in r_ids),
            images=tuple(image_of(images[l_classes[l][0]]) for l in l_ids),
            grid=grid,
            regular=bool(idems),
            idempotents=idems,
            elements=members,
        ))

    return GreenStructure(
        r_of=r_of,
        l_of=l_of,
        h_of=tuple(h_of),
        j_of=j_of,
        r_classes=tuple(tuple(c) for c in r_classes),
        l_classes=tuple(tuple(c) for c in l_classes),
        h_classes=tuple(tuple(c) for c in h_classes),
        h_r=h_r,
        h_l=h_l,
        r_j=tuple(r_j),
        l_j=tuple(l_j),
        jclasses=tuple(jclasses),
        idempotents=idem,
    )


def idempotents(table: MonoidTable) -> list[int]:
    images = table.images
    return [x for x, a in enumerate(images)
            if tuple([a[i - 1] for i in a]) == a]


def regular_hclass(structure: GreenStructure, j: int) -> int | None:
    """The idempotent-containing H-class of ``j`` with least (R id, L id)."""
    jc = structure.jclasses[j]
    if not jc.regular:
        return None
    h_of = structure.h_of
    return min((h_of[e] for e in jc.idempotents),
               key=lambda h: (structure.h_r[h], structure.h_l[h]))


def group_idempotent(structure: GreenStructure, h: int) -> int | None:
    """The idempotent of H-class ``h`` if it is a group."""
    idem = set(structure.idempotents)
    for x in structure.h_classes[h]:
        if x in idem:
            return x
    return None


@dataclass(frozen=True)
class PartialBijection:
    """A bijection between two equal-size point sets (or kernel blocks).

    Not in general an element of the monoid.
    """

    domain: tuple
    mapping: dict

    def __post_init__(self):
        if len(set(self.mapping.values())) != len(self.mapping):
            raise IllDefined("partial bijection is not injective")

    def __call__(self, p):
        return self.mapping[p]

    @property
    def codomain(self) -> tuple:
        return tuple(sorted(self.mapping.values()))

    def inverse(self) -> "PartialBijection":
        inv = {v: k for k, v in self.mapping.items()}
        return PartialBijection(tuple(sorted(inv)), inv)

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())

    def after(self, a: Transformation) -> Transformation:
        """The map ``i -> self(a(i))``; defined when image(a) lies in the domain."""
        return Transformation(self.mapping[x] for x in a.images)


def _as_images(a) -> tuple[int, ...]:
    return a.images if isinstance(a, Transformation) else tuple(a)


def green_pair(a, a_prime, side: str = "left") -> PartialBijection:
    """The "fake" Green pair carrying ``a`` to ``a_prime``.

    ``side="left"`` returns ``lam`` on ``image(a)`` with ``lam(a(i)) = a'(i)``;
    it needs ``a`` and ``a'`` to share their kernel.  ``side="right"`` returns
    the dual map on kernel blocks, sending the block of ``a`` over a point
    ``p`` of the common image to the block of ``a'`` over ``p``.  O(n).
    """
    a = _as_images(a)
    b = _as_images(a_prime)
    if len(a) != len(b):
        raise MonoidError("degree mismatch")
    if side == "left":
        lam: dict[int, int] = {}
        for x, y in zip(a, b):
            prev = lam.setdefault(x, y)
            if prev != y:
                raise IllDefined(f"a sends two points to {x} but a' does not")
        if len(set(lam.values())) != len(lam):
            raise RankMismatch(f"ranks {len(lam)} and {len(set(b))} differ")
        return PartialBijection(tuple(sorted(lam)), lam)
    if side == "right":
        if len(set(a)) != len(set(b)):
            raise RankMismatch(f"ranks {len(set(a))} and {len(set(b))} differ")
        if image_of(a) != image_of(b):
            raise IllDefined("right Green pairs need a common image")
        ka = {a[blk[0] - 1]: blk for blk in kernel_of(a)}
        kb = {b[blk[0] - 1]: blk for blk in kernel_of(b)}
        mu = {ka[p]: kb[p] for p in ka}
        return PartialBijection(tuple(sorted(mu)), mu)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def to_dot(table: MonoidTable, structure: GreenStructure) -> str:
    """Graphviz source for the eggbox: one cluster per J-class."""
    lines = ["digraph eggbox {", "  node [shape=plaintext];"]
    for jc in structure.jclasses:
        lines.append(f"  subgraph cluster_J{jc.id} {{")
        flag = "regular" if jc.regular else "non-regular"
        lines.append(f'    label="J{jc.id} rank {jc.rank} ({flag})";')
        rows = []
        idem = set(jc.idempotents)
        for r in jc.r_ids:
            cells = []
            for l in jc.l_ids:
                h = jc.grid[(r, l)]
                members = structure.h_classes[h]
                star = "*" if any(x in idem for x in members) else ""
                text = "<BR/>".join(
                    "".join(map(str, table.images[x])) for x in members[:4])
                if len(members) > 4:
                    text += f"<BR/>(+{len(members) - 4})"
                cells.append(f"<TD>{star}{text}</TD>")
            rows.append("<TR>" + "".join(cells) + "</TR>")
        body = "".join(rows)
        lines.append(f'    J{jc.id} [label=<<TABLE BORDER="0" CELLBORDER="1" '
                     f'CELLSPACING="0">{body}</TABLE>>];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
