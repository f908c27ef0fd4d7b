"""Schützenberger groups of H-classes as permutation groups.

The left group of an H-class acts on the common image of its elements, the
right group on their common kernel blocks.  Permutations are tuples over
positions ``0..k-1`` of ``PermGroup.domain`` and compose left to right like
transformations: ``perm_mul(p, q)`` applies ``p`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .enumeration import MonoidTable
from .errors import NotAStabilizer, NotInGroup
from .green import GreenStructure
from .xform import image_of, kernel_of


def perm_mul(p, q):
    return tuple([q[i] for i in p])


def perm_inv(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_order(p) -> int:
    k = 1
    q = p
    ident = tuple(range(len(p)))
    while q != ident:
        q = perm_mul(q, p)
        k += 1
    return k


@dataclass(eq=False)
class PermGroup:
    """A fully listed permutation group on ``domain``.

    ``elements[0]`` is the identity.  A stabiliser chain is kept for sifting,
    though plain membership goes through the element index.
    """

    domain: tuple
    elements: list
    generators: list = field(default_factory=list)

    def __post_init__(self):
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._chain = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.domain)

    @property
    def identity(self):
        return tuple(range(len(self.domain)))

    def __contains__(self, p) -> bool:
        return tuple(p) in self.index

    def __len__(self):
        return len(self.elements)

    @cached_property
    def exponent(self) -> int:
        from math import lcm
        out = 1
        for g in self.elements:
            out = lcm(out, perm_order(g))
        return out

    def stabilizer_chain(self):
        """Levels ``(base_point, transversal)`` with transversal: point -> coset rep."""
        if self._chain is None:
            chain = []
            current = self.elements
            for b in range(self.degree):
                if len(current) == 1:
                    break
                trans = {}
                for g in current:
                    trans.setdefault(g[b], g)
                if len(trans) > 1:
                    chain.append((b, trans))
                current = [g for g in current if g[b] == b]
            self._chain = chain
        return self._chain

    def sift(self, p) -> bool:
        """Membership by sifting through the stabiliser chain."""
        p = tuple(p)
        for b, trans in self.stabilizer_chain():
            t = trans.get(p[b])
            if t is None:
                return False
            p = perm_mul(p, perm_inv(t))
        return p == self.identity

    def mapping(self, p) -> dict:
        """``p`` as a dict on domain points."""
        return {self.domain[i]: self.domain[j] for i, j in enumerate(p)}


def _closure(gens, ident):
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _reduce_generators(candidates, ident):
    gens = []
    span = {ident}
    for g in candidates:
        if g not in span:
            gens.append(g)
            span = _closure(gens, ident)
    return gens


def left_permutation(base, b, domain_pos):
    """Permutation ``lam`` of image(base) with ``lam(base(i)) = b(i)``."""
    out = [0] * len(domain_pos)
    for x, y in zip(base, b):
        out[domain_pos[x]] = domain_pos[y]
    return tuple(out)


def right_permutation(base, b, blocks):
    """Permutation ``mu`` of kernel blocks of ``base`` with ``base(mu(K)) = b(K)``."""
    over = {base[blk[0] - 1]: k for k, blk in enumerate(blocks)}
    return tuple(over[b[blk[0] - 1]] for blk in blocks)


def schutzenberger(table: MonoidTable, structure: GreenStructure, h: int,
                   side: str = "left") -> PermGroup:
    """The left (image) or right (kernel-block) Schützenberger group of ``h``.

    Elements are listed in the order of the H-class members, so the base
    element (least index) yields the identity first.
    """
    members = structure.h_classes[h]
    images = table.images
    base = images[members[0]]
    if side == "left":
        domain = image_of(base)
        pos = {p: i for i, p in enumerate(domain)}
        elements = [left_permutation(base, images[b], pos) for b in members]
    elif side == "right":
        domain = kernel_of(base)
        elements = [right_permutation(base, images[b], domain) for b in members]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    # the H-class lists every element, so generators come from a greedy pass
    gens = _reduce_generators(elements, elements[0])
    return PermGroup(domain, elements, gens)


def induced_permutation(table: MonoidTable, structure: GreenStructure, m: int,
                        h: int, side: str = "left"):
    """Permutation of image(H) (left) or kernel blocks (right) induced by ``m``.

    Left: ``m`` must satisfy ``a * m in H``; the permutation is ``m``
    restricted to the image.  Right: ``m * a in H``; blocks are sent to the
    block containing their image under ``m``.
    """
    members = structure.h_classes[h]
    images = table.images
    a_idx = members[0]
    base = images[a_idx]
    mm = images[m]
    if side == "left":
        prod = table.multiply(a_idx, m)
        if structure.h_of[prod] != h:
            raise NotAStabilizer(f"element {m} does not stabilise H-class {h} on the left")
        domain = image_of(base)
        pos = {p: i for i, p in enumerate(domain)}
        return tuple(pos[mm[p - 1]] for p in domain)
    if side == "right":
        prod = table.multiply(m, a_idx)
        if structure.h_of[prod] != h:
            raise NotAStabilizer(f"element {m} does not stabilise H-class {h} on the right")
        blocks = kernel_of(base)
        where = {}
        for k, blk in enumerate(blocks):
            for i in blk:
                where[i] = k
        return tuple(where[mm[blk[0] - 1]] for blk in blocks)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def tau(a, g, left: PermGroup, right: PermGroup):
    """The element ``d`` of the right group with ``g . a = a . d``.

    ``a`` is an image tuple in the H-class, ``g`` a permutation in ``left``
    (positions of ``left.domain``).  O(n), no group search.
    """
    g = tuple(g)
    if g not in left:
        raise NotInGroup("g is not in the left Schützenberger group")
    a = tuple(a)
    dom = left.domain
    gmap = {dom[i]: dom[j] for i, j in enumerate(g)}
    blocks = right.domain
    over = {a[blk[0] - 1]: k for k, blk in enumerate(blocks)}
    try:
        d = tuple(over[gmap[a[blk[0] - 1]]] for blk in blocks)
    except KeyError:
        raise NotInGroup("a is not in the H-class of these groups") from None
    if d not in right:
        raise NotInGroup("no element of the right group matches")
    return d
