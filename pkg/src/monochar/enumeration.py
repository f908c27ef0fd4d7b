"""Enumeration of the monoid generated by a set of transformations."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import DegreeMismatch, EmptyGenerators, MonoidError, NotAnElement
from .xform import Transformation, compose_images


class ParseError(MonoidError):
    """Bad generator file; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True, eq=False)
class MonoidTable:
    """A fully enumerated transformation monoid.

    ``elements[0]`` is always the identity.  ``right_cayley[x][g]`` is the index
    of ``elements[x] * generators[g]`` and ``left_cayley[x][g]`` the index of
    ``generators[g] * elements[x]``.  ``words[x]`` is the BFS word (generator
    indices) that first reached ``x``.
    """

    degree: int
    generators: tuple[Transformation, ...]
    images: tuple[tuple[int, ...], ...]
    right_cayley: tuple[tuple[int, ...], ...]
    left_cayley: tuple[tuple[int, ...], ...]
    words: tuple[tuple[int, ...], ...]
    lookup: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.images)

    @property
    def order(self) -> int:
        return len(self.images)

    def element(self, x: int) -> Transformation:
        return Transformation(self.images[x])

    @property
    def elements(self) -> list[Transformation]:
        return [Transformation(a) for a in self.images]

    def index(self, images: Sequence[int]) -> int:
        """Index of the element with the given image tuple."""
        try:
            return self.lookup[tuple(images)]
        except KeyError:
            raise NotAnElement(f"{list(images)} is not in the monoid") from None

    def get(self, images: Sequence[int]) -> int | None:
        return self.lookup.get(tuple(images))

    def multiply(self, x: int, y: int) -> int:
        return self.lookup[compose_images(self.images[x], self.images[y])]


def _check_generators(generators) -> tuple[Transformation, ...]:
    gens = tuple(g if isinstance(g, Transformation) else Transformation(g)
                 for g in generators)
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    n = gens[0].degree
    for g in gens:
        if g.degree != n:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {n}")
    return gens


def enumerate_monoid(generators) -> MonoidTable:
    """Breadth-first closure of ``{identity} | generators`` under composition.

    Elements are numbered in discovery order, which is by word length and
    then generator index.  Cost is O(|M| * |gens| * n).
    """
    gens = _check_generators(generators)
    n = gens[0].degree
    gen_images = [g.images for g in gens]
    identity = tuple(range(1, n + 1))

    images = [identity]
    words: list[tuple[int, ...]] = [()]
    lookup = {identity: 0}
    right: list[list[int]] = []
    x = 0
    while x < len(images):
        a = images[x]
        row = []
        for gi, g in enumerate(gen_images):
            c = tuple([g[i - 1] for i in a])
            y = lookup.get(c)
            if y is None:
                y = len(images)
                lookup[c] = y
                images.append(c)
                words.append(words[x] + (gi,))
            row.append(y)
        right.append(row)
        x += 1

    left = [tuple(lookup[tuple([a[i - 1] for i in g])] for g in gen_images)
            for a in images]
    return MonoidTable(
        degree=n,
        generators=gens,
        images=tuple(images),
        right_cayley=tuple(tuple(r) for r in right),
        left_cayley=tuple(left),
        words=tuple(words),
        lookup=lookup,
    )


def contains(generators, t) -> bool:
    """Whether ``t`` lies in the monoid generated by ``generators``."""
    gens = _check_generators(generators)
    t = t if isinstance(t, Transformation) else Transformation(t)
    if t.degree != gens[0].degree:
        raise DegreeMismatch(f"{t} has degree {t.degree}, expected {gens[0].degree}")
    if t.images == tuple(range(1, t.degree + 1)):
        return True
    # a search that stops as soon as t shows up; the full table is not kept
    target = t.images
    gen_images = [g.images for g in gens]
    seen = {tuple(range(1, t.degree + 1))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gen_images:
                c = tuple([g[i - 1] for i in a])
                if c == target:
                    return True
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return False


def index_of(table: MonoidTable, t) -> int:
    images = t.images if isinstance(t, Transformation) else tuple(t)
    return table.index(images)


def parse_generators(text: str) -> list[Transformation]:
    """Parse the generator file format: one transformation per line."""
    gens = []
    degree = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if degree is None:
            degree = len(values)
        elif len(values) != degree:
            raise ParseError(f"expected {degree} entries, got {len(values)}", lineno)
        try:
            gens.append(Transformation(values))
        except MonoidError as exc:
            raise ParseError(str(exc), lineno) from None
    if not gens:
        raise ParseError("no generators found")
    return gens


def read_generators(path: str | Path) -> list[Transformation]:
    return parse_generators(Path(path).read_text())


def full_transformation_generators(n: int) -> list[Transformation]:
    """A standard generating set of the full transformation monoid T_n."""
    if n == 1:
        return [Transformation([1])]
    swap = [2, 1] + list(range(3, n + 1))
    cycle = list(range(2, n + 1)) + [1]
    collapse = [1, 1] + list(range(3, n + 1))
    gens = [swap, cycle, collapse] if n > 2 else [swap, collapse]
    return [Transformation(g) for g in gens]
