"""Conjugacy classes and exact character tables of small permutation groups.

Character tables follow Dixon's method.  Class algebra structure constants
are reduced modulo a prime ``p = 1 mod exponent`` and their common
eigenvectors give the characters mod ``p``.  A discrete Fourier transform of
eigenvalue multiplicities then lifts each value to a cyclotomic integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sympy import isprime, primitive_root

from .cyclotomic import Cyclotomic
from .errors import ContractViolation
from .schutz import PermGroup, perm_inv, perm_mul, perm_order


@dataclass
class ConjugacyClasses:
    reps: list  # representative permutations
    sizes: list
    members: list  # list of lists
    class_of: dict  # permutation -> class index

    def __len__(self):
        return len(self.reps)


def conjugacy_classes(G: PermGroup) -> ConjugacyClasses:
    """Conjugation orbits; representatives are the earliest listed elements."""
    cached = getattr(G, "_classes", None)
    if cached is not None:
        return cached
    class_of: dict = {}
    reps, sizes, members = [], [], []
    inverses = [perm_inv(g) for g in G.elements]
    for x in G.elements:
        if x in class_of:
            continue
        k = len(reps)
        orbit = {perm_mul(perm_mul(gi, x), g) for g, gi in zip(G.elements, inverses)}
        ordered = sorted(orbit, key=G.index.__getitem__)
        for y in ordered:
            class_of[y] = k
        reps.append(x)
        sizes.append(len(ordered))
        members.append(ordered)
    out = ConjugacyClasses(reps, sizes, members, class_of)
    G._classes = out
    return out


@dataclass
class GroupCharTable:
    """Irreducible characters (rows) on conjugacy classes (columns)."""

    group: PermGroup
    classes: ConjugacyClasses
    values: list  # rows of Cyclotomic

    @property
    def reps(self):
        return self.classes.reps

    @property
    def sizes(self):
        return self.classes.sizes

    @property
    def degrees(self) -> list[int]:
        return [int(row[0]) for row in self.values]

    def __len__(self):
        return len(self.values)

    def character(self, i: int, g) -> Cyclotomic:
        return self.values[i][self.classes.class_of[tuple(g)]]


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime ``p = 1 mod exponent`` with ``p > 2 sqrt(order)``."""
    p = exponent + 1
    while not (isprime(p) and p * p > 4 * order):
        p += exponent
    return p


def _nullspace_mod(rows, ncols: int, p: int):
    """Basis of ``{c : rows . c = 0}`` over GF(p)."""
    m = [list(r) for r in rows]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivcols.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pc in enumerate(pivcols):
            v[pc] = (-m[i][fcol]) % p
        basis.append(v)
    return basis


def _class_constants(G: PermGroup, cc: ConjugacyClasses):
    """``a[i][j][k] = #{(x, y) in C_i x C_j : x y = z}`` for fixed ``z`` in C_k."""
    r = len(cc)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, z in enumerate(cc.reps):
        for i in range(r):
            for x in cc.members[i]:
                j = cc.class_of[perm_mul(perm_inv(x), z)]
                a[i][j][k] += 1
    return a


def _split_common_eigenspaces(mats, r: int, p: int):
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for M in mats:
        if all(len(s) == 1 for s in spaces):
            break
        new = []
        for basis in spaces:
            if len(basis) == 1:
                new.append(basis)
                continue
            # M restricted to span(basis); columns of S are basis vectors
            MS = [[sum(M[row][t] * v[t] for t in range(r)) % p for v in basis]
                  for row in range(r)]
            found = 0
            for lam in range(p):
                A = [[(MS[row][c] - lam * basis[c][row]) % p for c in range(len(basis))]
                     for row in range(r)]
                null = _nullspace_mod(A, len(basis), p)
                if null:
                    vecs = [[sum(c[t] * basis[t][row] for t in range(len(basis))) % p
                             for row in range(r)] for c in null]
                    new.append(vecs)
                    found += len(null)
                    if found == len(basis):
                        break
            if found != len(basis):
                raise ContractViolation("class matrix not diagonalisable mod p")
        spaces = new
    if not all(len(s) == 1 for s in spaces):
        raise ContractViolation("common eigenspaces did not split")
    return [s[0] for s in spaces]


def _char_sort(rows):
    # trivial-first convention: dimension ascending, then values descending
    rows = sorted(rows, key=lambda row: tuple(c.sort_key for c in row), reverse=True)
    return sorted(rows, key=lambda row: int(row[0]))


def group_character_table(G: PermGroup) -> GroupCharTable:
    cached = getattr(G, "_chartable", None)
    if cached is not None:
        return cached
    cc = conjugacy_classes(G)
    r = len(cc)
    order = G.order
    if r == 1:
        table = GroupCharTable(G, cc, [[Cyclotomic(1)]])
        G._chartable = table
        return table
    e = G.exponent
    p = dixon_prime(order, e)
    a = _class_constants(G, cc)
    mats = [[[a[i][j][k] % p for k in range(r)] for j in range(r)] for i in range(1, r)]
    vecs = _split_common_eigenspaces(mats, r, p)

    inv_class = [cc.class_of[perm_inv(g)] for g in cc.reps]
    orders = [perm_order(g) for g in cc.reps]
    powers = []
    for g, o in zip(cc.reps, orders):
        row = []
        q = G.identity
        for _ in range(o):
            row.append(cc.class_of[q])
            q = perm_mul(q, g)
        powers.append(row)

    w = pow(primitive_root(p), (p - 1) // e, p)
    rows = []
    for v in vecs:
        inv0 = pow(v[0], -1, p)
        omega = [(x * inv0) % p for x in v]
        s = sum(omega[k] * omega[inv_class[k]] * pow(cc.sizes[k], -1, p)
                for k in range(r)) % p
        d2 = (order * pow(s, -1, p)) % p
        degree = next((d for d in range(1, isqrt(order) + 1) if (d * d) % p == d2), None)
        if degree is None:
            raise ContractViolation("no character degree matches mod p")
        modvals = [(degree * omega[k] * pow(cc.sizes[k], -1, p)) % p for k in range(r)]
        row = []
        for k in range(r):
            o = orders[k]
            z = pow(w, e // o, p)
            oinv = pow(o, -1, p)
            mult = {}
            for l in range(o):
                m = sum(modvals[powers[k][j]] * pow(z, (-j * l) % o, p)
                        for j in range(o)) * oinv % p
                if m > degree:
                    raise ContractViolation("eigenvalue multiplicity out of range")
                if m:
                    mult[l] = m
            row.append(Cyclotomic.from_exponents(o, mult))
        rows.append(row)

    table = GroupCharTable(G, cc, _char_sort(rows))
    _check_orthogonality(table)
    G._chartable = table
    return table


def _check_orthogonality(table: GroupCharTable):
    sizes = table.sizes
    order = sum(sizes)
    vals = table.values
    conj = [[c.conjugate() for c in row] for row in vals]
    for i in range(len(vals)):
        for j in range(i, len(vals)):
            s = Cyclotomic(0)
            for k, sz in enumerate(sizes):
                s = s + vals[i][k] * conj[j][k] * sz
            if s != (order if i == j else 0):
                raise ContractViolation("character table fails row orthogonality")
