"""Exact arithmetic in cyclotomic fields.

A value lives in Q(zeta_e) for its conductor ``e`` and is stored by its
coordinates on the power basis ``1, zeta_e, ..., zeta_e^(phi(e)-1)``.  The
conductor is always the least one, so two values are equal exactly when
their representations are.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

from sympy import divisors as _sympy_divisors, totient


@lru_cache(maxsize=None)
def divisors(e: int) -> list[int]:
    return _sympy_divisors(e)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, constant term first."""
    num = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in divisors(e)[:-1]:
        num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        assert r == 0
        out[k] = q
        if q:
            for i, c in enumerate(den):
                num[k + i] -= q * c
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def _phi(e: int) -> int:
    return int(totient(e))


def _reduce(vec, e: int) -> list:
    """Reduce a coefficient list (any length) modulo Phi_e."""
    poly = cyclotomic_polynomial(e)
    deg = len(poly) - 1
    vec = list(vec)
    for k in range(len(vec) - 1, deg - 1, -1):
        c = vec[k]
        if c:
            # poly is monic
            for i in range(deg):
                vec[k - deg + i] -= c * poly[i]
            vec[k] = 0
    vec = vec[:deg]
    vec += [0] * (deg - len(vec))
    return vec


@lru_cache(maxsize=None)
def _power_basis(e: int):
    """Reduced coordinates of zeta_e^k for k = 0..e-1."""
    deg = _phi(e)
    rows = []
    for k in range(e):
        v = [0] * max(k + 1, deg)
        v[k] = 1
        rows.append(tuple(_reduce(v, e)))
    return tuple(rows)


def _from_exponents(e: int, coeffs: dict) -> list:
    """Coordinates of sum c_k zeta_e^k."""
    deg = _phi(e)
    out = [Fraction(0)] * deg
    basis = _power_basis(e)
    for k, c in coeffs.items():
        if c:
            row = basis[k % e]
            for i, b in enumerate(row):
                if b:
                    out[i] += c * b
    return out


@lru_cache(maxsize=None)
def _subfield_solver(e: int, d: int):
    """Data for testing membership of Q(zeta_d) inside Q(zeta_e)."""
    step = e // d
    basis = _power_basis(e)
    cols = [basis[(step * k) % e] for k in range(_phi(d))]
    # B: phi(e) x phi(d); find pivot rows by elimination on a copy
    m = len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(m)] for i in range(_phi(e))]
    pivots = []
    work = [r[:] for r in rows]
    used = set()
    for col in range(m):
        piv = next(i for i in range(len(work)) if i not in used and work[i][col] != 0)
        used.add(piv)
        pivots.append(piv)
        for i in range(len(work)):
            if i != piv and work[i][col] != 0:
                f = work[i][col] / work[piv][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[piv])]
    sub = [rows[p] for p in pivots]
    inv = _invert(sub)
    return pivots, inv, rows


def _invert(a):
    n = len(a)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                g = aug[i][col]
                aug[i] = [x - g * y for x, y in zip(aug[i], aug[col])]
    return [r[n:] for r in aug]


def _descend(vec, e: int):
    """Return ``(d, coords)`` for the least conductor d of the value."""
    if e == 1 or not any(vec[1:]):
        return 1, [vec[0]]
    for d in divisors(e)[1:-1]:
        pivots, inv, rows = _subfield_solver(e, d)
        rhs = [vec[p] for p in pivots]
        coords = [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in inv]
        if all(sum((r[j] * coords[j] for j in range(len(coords))), Fraction(0)) == vec[i]
               for i, r in enumerate(rows)):
            return d, coords
    return e, vec


class Cyclotomic:
    """An element of a cyclotomic field with rational coordinates."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, value=0):
        if isinstance(value, Cyclotomic):
            self.conductor, self.coeffs = value.conductor, value.coeffs
        else:
            self.conductor = 1
            self.coeffs = (Fraction(value),)

    @classmethod
    def _make(cls, e: int, vec) -> "Cyclotomic":
        vec = [Fraction(x) for x in vec]
        d, coords = _descend(vec, e)
        obj = cls.__new__(cls)
        obj.conductor = d
        obj.coeffs = tuple(coords)
        return obj

    @classmethod
    def from_exponents(cls, e: int, coeffs: dict) -> "Cyclotomic":
        """``sum_k coeffs[k] * zeta_e^k``."""
        return cls._make(e, _from_exponents(e, coeffs))

    @classmethod
    def zeta(cls, e: int, k: int = 1) -> "Cyclotomic":
        return cls.from_exponents(e, {k % e: 1})

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _lift(self, big: int) -> list:
        if big == self.conductor:
            return list(self.coeffs)
        step = big // self.conductor
        return _from_exponents(big, {step * k: c for k, c in enumerate(self.coeffs)})

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return Cyclotomic(self.coeffs[0] + other.coeffs[0])
        big = lcm(self.conductor, other.conductor)
        return Cyclotomic._make(big, [a + b for a, b in zip(self._lift(big), other._lift(big))])

    __radd__ = __add__

    def __neg__(self):
        obj = Cyclotomic.__new__(Cyclotomic)
        obj.conductor = self.conductor
        obj.coeffs = tuple(-c for c in self.coeffs)
        return obj

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:
            c = other.coeffs[0]
            if self.conductor == 1:
                return Cyclotomic(self.coeffs[0] * c)
            obj = Cyclotomic.__new__(Cyclotomic)
            if c == 0:
                return Cyclotomic(0)
            obj.conductor = self.conductor
            obj.coeffs = tuple(x * c for x in self.coeffs)
            return obj
        if self.conductor == 1:
            return other * self
        big = lcm(self.conductor, other.conductor)
        a = self._lift(big)
        b = other._lift(big)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._make(big, _reduce(prod, big))

    __rmul__ = __mul__

    def galois(self, j: int) -> "Cyclotomic":
        """Image under zeta -> zeta^j (j coprime to the conductor)."""
        e = self.conductor
        if e == 1:
            return self
        if gcd(j, e) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        return Cyclotomic.from_exponents(e, {(j * k) % e: c for k, c in enumerate(self.coeffs)})

    def conjugate(self) -> "Cyclotomic":
        if self.conductor == 1:
            return self
        return self.galois(self.conductor - 1)

    def norm(self) -> Fraction:
        e = self.conductor
        out = Cyclotomic(1)
        for j in range(1, e):
            if gcd(j, e) == 1:
                out = out * self.galois(j)
        return out.rational()

    def inverse(self) -> "Cyclotomic":
        if self.conductor == 1:
            if self.coeffs[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return Cyclotomic(1 / self.coeffs[0])
        e = self.conductor
        others = Cyclotomic(1)
        for j in range(2, e):
            if gcd(j, e) == 1:
                others = others * self.galois(j)
        n = (self * others).rational()
        return others * Cyclotomic(1 / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:
            c = other.coeffs[0]
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return self * Cyclotomic(1 / c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        if self.conductor == 1:
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def sort_key(self):
        """Total order: rationals by value above all irrationals."""
        if self.conductor == 1:
            return (1, self.coeffs[0], ())
        return (0, self.conductor, self.coeffs)

    def is_integer(self) -> bool:
        return self.conductor == 1 and self.coeffs[0].denominator == 1

    def __int__(self):
        q = self.rational()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    def __complex__(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum((complex(float(c)) * z ** k for k, c in enumerate(self.coeffs)), 0j)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        e = int(data["conductor"])
        return cls._make(e, [Fraction(c) for c in data["coeffs"]])

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        if self.conductor == 1:
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "1" if k == 0 else (f"E({self.conductor})" if k == 1
                                    else f"E({self.conductor})^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append(f"{c}*{z}")
        return "+".join(terms).replace("+-", "-")


def _coerce(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Rational)):
        return Cyclotomic(x)
    return None


ZERO = Cyclotomic(0)
ONE = Cyclotomic(1)
