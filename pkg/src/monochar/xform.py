"""Transformations of {1..n} and their elementary operations.

Products are written left to right: ``compose(a, b)`` applies ``a`` first and
then ``b``.  Under this convention L-related elements of a transformation
monoid share their image and R-related elements share their kernel.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DegreeMismatch, MonoidError


class Transformation:
    """A total map on ``{1..n}`` stored as its tuple of images (1-indexed)."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n < 1:
            raise MonoidError("a transformation needs degree >= 1")
        for x in images:
            if not 1 <= x <= n:
                raise MonoidError(f"image {x} out of range 1..{n}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Transformation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "Transformation":
        """Parse the textual form ``"2 1 3"``."""
        return cls(int(tok) for tok in text.split())

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Transformation") -> bool:
        return self.images < other.images

    def __repr__(self):
        return f"Transformation({list(self.images)})"

    def __str__(self):
        return " ".join(map(str, self.images))

    @property
    def image(self) -> tuple[int, ...]:
        return image_of(self.images)

    @property
    def kernel(self) -> tuple[tuple[int, ...], ...]:
        return kernel_of(self.images)

    @property
    def rank(self) -> int:
        return len(set(self.images))

    def is_idempotent(self) -> bool:
        return compose_images(self.images, self.images) == self.images


# Raw tuple kernels.  The enumeration and counting code works on image tuples
# directly; the Transformation wrapper is the public element type.

def compose_images(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple([b[x - 1] for x in a])


def image_of(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(set(a)))


def kernel_of(a: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    blocks: dict[int, list[int]] = {}
    for i, x in enumerate(a, start=1):
        blocks.setdefault(x, []).append(i)
    # members are appended in ascending order; sort blocks by first member
    return tuple(sorted(tuple(b) for b in blocks.values()))


def compose(a: Transformation, b: Transformation) -> Transformation:
    """Return ``c`` with ``c(i) = b(a(i))``.  O(n)."""
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree} differ")
    return Transformation(compose_images(a.images, b.images))


def profile(a: Transformation):
    """Return ``(image, kernel, rank)`` of ``a``.

    The image is sorted, the kernel blocks are listed by smallest member.
    """
    img = image_of(a.images)
    return img, kernel_of(a.images), len(img)


def idempotent_power(a: Transformation) -> Transformation:
    """The unique idempotent power of ``a``."""
    return Transformation(idempotent_power_images(a.images))


def idempotent_power_images(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(a)
    p = a
    # the first idempotent among a, a^2, a^3, ... is the only one
    while compose_images(p, p) != p:
        p = compose_images(p, a)
    return p


def group_part_images(a: Sequence[int]) -> tuple[int, ...]:
    """Return ``a^(omega+1)``, the element of the maximal subgroup at ``a^omega``."""
    e = idempotent_power_images(a)
    return compose_images(e, a)
