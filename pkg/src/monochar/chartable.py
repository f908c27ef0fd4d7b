"""The monoid character table and the Cartan matrix.

For a regular J-class with chosen idempotent ``e`` and ``G = H_e``, let
``W = kL_e / N_e(kL_e)``, a (kM, kG)-bimodule.  Over a splitting field
``W = sum_chi S_chi (x) V_chi^*`` with ``S_chi`` running over the simple
modules attached to the J-class, hence

    chi_S(m) = 1/|G| sum_{g in G} tr_W(m, g) conj(chi(g)),
    tr_W(m, g) = #{x in L_e : m x g = x} - tr_N(m, g).

The bicharacter ``B[s][t] = #{x : s x t = x}`` is the character of kM as a
bimodule, so ``B = X^T C X`` with ``C[i][j]`` the multiplicity of
``S_i (x) S_j^*`` among its composition factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bichar import BicharacterMatrix, SchutzData, TestElements, lclass_fixed_points
from .cyclotomic import Cyclotomic
from .enumeration import MonoidTable
from .errors import (NegativeEntry, NonIntegralDimension, NonIntegralResult,
                     NotRegularJClassData)
from .green import GreenStructure
from .groupchar import group_character_table
from .radical import LClassRadical, lclass_radical_data
from .xform import compose_images


@dataclass(frozen=True)
class MonoidCharTable:
    labels: tuple[tuple[int, int], ...]  # (regular J id, irreducible index)
    columns: tuple[tuple[int, ...], ...]  # image tuples of the C_M representatives
    values: tuple[tuple[Cyclotomic, ...], ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, ij):
        i, j = ij
        return self.values[i][j]


@dataclass(frozen=True)
class CartanMatrix:
    labels: tuple[tuple[int, int], ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __len__(self):
        return len(self.entries)


def jclass_rows(table: MonoidTable, structure: GreenStructure, sdata: SchutzData,
                cm: TestElements, j: int, radical: LClassRadical | None = None):
    """Character rows of the simple modules attached to regular J-class ``j``."""
    e = cm.idempotent.get(j)
    if e is None:
        raise NotRegularJClassData(f"J-class {j} has no chosen idempotent")
    l_e = structure.l_of[e]
    if radical is None:
        radical = lclass_radical_data(table, structure, l_e)
    G = sdata.lgroup(l_e)
    gt = group_character_table(G)
    images = table.images
    lookup = table.lookup
    e_img = images[e]
    dom = G.domain
    pos = {p: i for i, p in enumerate(dom)}
    # element of H_e acting on image(e) by each class representative
    class_elems = []
    for rep in gt.reps:
        h = tuple(dom[rep[pos[v]]] for v in e_img)
        class_elems.append(lookup[h])

    basis = radical.basis_elements
    bpos = {x: i for i, x in enumerate(basis)}
    order = G.order
    conj = [[c.conjugate() for c in row] for row in gt.values]
    rows = [[None] * len(cm) for _ in gt.values]
    for col, m in enumerate(cm.representatives):
        m_img = images[m]
        traces = []
        for h in class_elems:
            h_img = images[h]
            fix = lclass_fixed_points(table, structure, sdata, m, h, l_e)
            mapping = [bpos.get(lookup[compose_images(compose_images(m_img, images[x]), h_img)], -1)
                       for x in basis]
            tr = fix - radical.trace(mapping)
            if tr.denominator != 1:
                raise NonIntegralResult(f"trace on L-class quotient is {tr}")
            traces.append(int(tr))
        for i in range(len(gt.values)):
            acc = Cyclotomic(0)
            for k, size in enumerate(gt.sizes):
                if traces[k]:
                    acc = acc + conj[i][k] * (size * traces[k])
            rows[i][col] = acc * Fraction(1, order)
    return [tuple(r) for r in rows]


def _rows_job(ctx, j):
    table, structure, sdata, cm, radicals = ctx
    return jclass_rows(table, structure, sdata, cm, j, radicals.get(j) if radicals else None)


def character_table(table: MonoidTable, structure: GreenStructure, sdata: SchutzData,
                    cm: TestElements, radicals: dict | None = None,
                    jobs: int = 1) -> MonoidCharTable:
    """The square table of simple characters on C_M.

    ``radicals`` optionally maps a regular J id to precomputed
    :class:`LClassRadical` data for the L-class of its chosen idempotent.
    """
    from .parallel import parallel_map

    regular = [jc.id for jc in structure.jclasses if jc.regular]
    blocks = parallel_map(_rows_job, regular, jobs,
                          context=(table, structure, sdata, cm, radicals))
    labels, values = [], []
    for j, rows in zip(regular, blocks):
        for i, row in enumerate(rows):
            labels.append((j, i))
            values.append(row)
    columns = tuple(table.images[s] for s in cm.representatives)
    return MonoidCharTable(tuple(labels), columns, tuple(values))


def simple_dimensions(X: MonoidCharTable) -> list[int]:
    identity = tuple(range(1, len(X.columns[0]) + 1))
    col = X.columns.index(identity)
    dims = []
    for row in X.values:
        v = row[col]
        if not v.is_integer() or int(v) <= 0:
            raise NonIntegralDimension(f"simple dimension {v} is not a positive integer")
        dims.append(int(v))
    return dims


def invert(matrix):
    """Inverse of a square matrix of Cyclotomic values (Gauss-Jordan)."""
    n = len(matrix)
    aug = [[Cyclotomic(x) for x in row] + [Cyclotomic(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise NonIntegralResult("character table is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Cyclotomic(0)
            for t in range(k):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def _transpose(a):
    return [list(r) for r in zip(*a)]


def cartan_matrix(X: MonoidCharTable, B: BicharacterMatrix) -> CartanMatrix:
    """Solve ``B = X^T C X`` exactly and check C is a non-negative integer matrix."""
    if tuple(B.labels) != tuple(X.columns):
        raise NonIntegralResult("bicharacter and character table index different C_M")
    Y = invert(X.values)
    Bc = [[Cyclotomic(v) for v in row] for row in B.entries]
    C = _matmul(_matmul(_transpose(Y), Bc), Y)
    out = []
    for row in C:
        ints = []
        for v in row:
            if not v.is_integer():
                raise NonIntegralResult(f"Cartan entry {v} is not an integer")
            k = int(v)
            if k < 0:
                raise NegativeEntry(f"Cartan entry {k} is negative")
            ints.append(k)
        out.append(tuple(ints))
    return CartanMatrix(X.labels, tuple(out))


def reconstruct_bicharacter(X: MonoidCharTable, C: CartanMatrix) -> list[list[Cyclotomic]]:
    """``X^T C X``; equals the combinatorial bicharacter."""
    Cc = [[Cyclotomic(v) for v in row] for row in C.entries]
    return _matmul(_matmul(_transpose([list(r) for r in X.values]), Cc),
                   [list(r) for r in X.values])
