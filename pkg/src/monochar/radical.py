"""L-class modules and the subspace N_e(kL).

For an L-class ``L`` of a regular J-class, ``kL`` is the left module where
``m . x = m x`` when that product stays in ``L`` and ``0`` otherwise.  With
``e`` an idempotent of ``L``,

    N_e(kL) = {v in kL : e m v = 0 for every m in M}.

Only ``y = e m`` lying in the R-class of ``e`` can move ``v`` back into
``L`` (landing in the group ``H_e``), and two such ``y`` in the same H-class
differ by a unit of ``H_e`` on the left, which just permutes the targets.
So one ``y`` per H-class of ``R_e`` gives an equivalent system with rows
``(y, z)``, ``z in H_e``:  ``sum_{x in L, y x = z} v_x = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumeration import MonoidTable
from .errors import NotRegular, TooLarge
from .green import GreenStructure
from .linalg import RationalMatrix, nullspace_with_free, rank
from .xform import compose_images


@dataclass(frozen=True)
class LClassModule:
    """``kL`` with its basis and the action of each monoid generator.

    ``actions[g][i]`` is the basis position of ``generator_g * basis[i]``, or
    -1 when the product leaves the L-class.
    """

    l: int
    basis: tuple[int, ...]
    idempotent: int
    actions: tuple[tuple[int, ...], ...]

    def position(self, x: int) -> int:
        return self.basis.index(x)

    def action_matrix(self, g: int) -> list[list[int]]:
        n = len(self.basis)
        mat = [[0] * n for _ in range(n)]
        for i, k in enumerate(self.actions[g]):
            if k >= 0:
                mat[k][i] = 1
        return mat


def _lclass_idempotent(table, structure, l: int) -> int:
    idem = set(structure.idempotents)
    for x in structure.l_classes[l]:
        if x in idem:
            return x
    raise NotRegular(f"L-class {l} lies in a non-regular J-class")


def lclass_module(table: MonoidTable, structure: GreenStructure, l: int) -> LClassModule:
    e = _lclass_idempotent(table, structure, l)
    basis = structure.l_classes[l]
    pos = {x: i for i, x in enumerate(basis)}
    actions = []
    for g in table.generators:
        row = []
        for x in basis:
            y = table.lookup[compose_images(g.images, table.images[x])]
            row.append(pos.get(y, -1))
        actions.append(tuple(row))
    return LClassModule(l, tuple(basis), e, tuple(actions))


def radical_system(table: MonoidTable, structure: GreenStructure, l: int) -> RationalMatrix:
    """The linear system whose solutions form N_e(kL), columns = L members."""
    e = _lclass_idempotent(table, structure, l)
    basis = structure.l_classes[l]
    jc = structure.jclass_of(e)
    r_e = structure.r_of[e]
    h_e = structure.h_of[e]
    images = table.images
    lookup = table.lookup
    h_of = structure.h_of
    acting = sorted(structure.h_classes[jc.grid[(r_e, ll)]][0] for ll in jc.l_ids)
    rows = []
    for y in acting:
        eqs: dict[int, list[int]] = {}
        yimg = images[y]
        for col, x in enumerate(basis):
            z = lookup[compose_images(yimg, images[x])]
            if h_of[z] == h_e:
                eqs.setdefault(z, []).append(col)
        for z in sorted(eqs):
            row = [0] * len(basis)
            for col in eqs[z]:
                row[col] = 1
            rows.append(row)
    return RationalMatrix.from_rows(rows, len(basis))


@dataclass(frozen=True)
class LClassRadical:
    l: int
    idempotent: int
    basis_elements: tuple[int, ...]
    vectors: RationalMatrix  # rows span N_e(kL)
    free: tuple[int, ...]  # coordinate position reading off each vector

    @property
    def dimension(self) -> int:
        return self.vectors.rows

    def trace(self, mapping) -> Fraction:
        """Trace on N of the operator sending basis position ``i`` to ``mapping[i]``.

        ``mapping[i] = -1`` means the basis element is sent to 0.  N must be
        invariant under the operator.
        """
        pre: dict[int, list[int]] = {}
        for i, k in enumerate(mapping):
            if k >= 0:
                pre.setdefault(k, []).append(i)
        total = Fraction(0)
        for vec, f in zip(self.vectors.entries, self.free):
            for i in pre.get(f, ()):
                total += vec[i]
        return total


def lclass_radical_data(table: MonoidTable, structure: GreenStructure, l: int) -> LClassRadical:
    e = _lclass_idempotent(table, structure, l)
    system = radical_system(table, structure, l)
    vectors, free = nullspace_with_free(system)
    return LClassRadical(l, e, structure.l_classes[l], vectors, free)


def lclass_radical(table: MonoidTable, structure: GreenStructure, l: int) -> RationalMatrix:
    """A basis of N_e(kL), one vector per row, over the L-class basis."""
    return lclass_radical_data(table, structure, l).vectors


def trace_form_radical(table: MonoidTable, bound: int = 512) -> int:
    """dim rad(kM) as the kernel dimension of ``(a, b) -> tr(left mult by ab)``.

    Valid in characteristic zero.  Independent of the Green machinery; meant
    as a test oracle.
    """
    n = len(table)
    if n > bound:
        raise TooLarge(f"|M| = {n} exceeds the trace-form bound {bound}")
    images = table.images
    fix = []
    for m in images:
        c = 0
        for x in images:
            if tuple([x[i - 1] for i in m]) == x:
                c += 1
        fix.append(c)
    mult = table.multiply
    form = [[fix[mult(a, b)] for b in range(n)] for a in range(n)]
    return n - rank(form)
