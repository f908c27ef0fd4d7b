import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monochar import Cyclotomic
from monochar.cyclotomic import cyclotomic_polynomial

Z = Cyclotomic.zeta


@st.composite
def cyclotomics(draw, max_conductor=12):
    e = draw(st.integers(1, max_conductor))
    coeffs = draw(st.dictionaries(st.integers(0, e - 1),
                                  st.fractions(min_value=-5, max_value=5, max_denominator=4),
                                  max_size=4))
    return Cyclotomic.from_exponents(e, coeffs)


def close(x, z):
    return abs(complex(x) - z) < 1e-9


def test_examples():
    assert Z(4) ** 2 == -1
    assert Z(3) + Z(3, 2) == -1
    assert Z(5).conjugate() == Z(5, 4)


def test_canonical_forms():
    assert Z(6) ** 2 == Z(3)
    assert (Z(6) ** 2).conductor == 3
    assert (Z(4) ** 2).conductor == 1
    r2 = Z(8) + Z(8, 7)
    assert r2.conductor == 8 and r2 * r2 == 2
    golden = Z(5) + Z(5, 4)
    assert golden.conductor == 5 and golden * golden + golden == 1
    # sum of primitive 12th roots of unity is 0
    assert Z(12) + Z(12, 5) + Z(12, 7) + Z(12, 11) == 0
    # an element of Q(zeta_3) written with conductor 12
    x = Cyclotomic.from_exponents(12, {4: 1, 8: 2})
    assert x.conductor == 3 and x == Z(3) + 2 * Z(3, 2)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_rational_behaviour():
    h = Cyclotomic(Fraction(1, 2))
    assert h == Fraction(1, 2) and hash(h) == hash(Fraction(1, 2))
    assert Cyclotomic(3).is_integer() and int(Cyclotomic(3)) == 3
    assert not h.is_integer()
    assert not Z(3).is_rational
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(0).inverse()


def test_str_and_json():
    assert str(Cyclotomic(Fraction(-3, 2))) == "-3/2"
    x = Z(3) * 2
    assert "E(3)" in str(x)
    data = json.loads(json.dumps(x.to_json()))
    assert data == {"conductor": 3, "coeffs": ["0", "2"]}
    assert Cyclotomic.from_json(data) == x


@given(cyclotomics(), cyclotomics())
def test_ring_operations_match_complex(a, b):
    za, zb = complex(a), complex(b)
    assert close(a + b, za + zb)
    assert close(a - b, za - zb)
    assert close(a * b, za * zb)
    assert close(a.conjugate(), za.conjugate())


@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@settings(max_examples=60)
@given(cyclotomics(max_conductor=10))
def test_inverse(a):
    if not a:
        return
    assert a * a.inverse() == 1
    assert close(a.inverse(), 1 / complex(a))
    assert a.norm() != 0


@given(cyclotomics(), cyclotomics())
def test_equality_is_value_equality(a, b):
    assert (a == b) == (abs(complex(a) - complex(b)) < 1e-9)
    if a == b:
        assert hash(a) == hash(b)


@given(cyclotomics(max_conductor=9), cyclotomics(max_conductor=9), st.sampled_from([1, 2, 4, 5, 7, 8]))
def test_galois_is_ring_automorphism(a, b, j):
    e = 9 * 8 * 5 * 7
    j = next(k for k in range(j, e) if all(k % p for p in (2, 3, 5, 7)))
    assert (a * b).galois(j) == a.galois(j) * b.galois(j)
    assert (a + b).galois(j) == a.galois(j) + b.galois(j)


@given(cyclotomics())
def test_json_roundtrip(a):
    assert Cyclotomic.from_json(json.loads(json.dumps(a.to_json()))) == a


def test_power_and_division():
    z = Z(7)
    assert z ** 7 == 1 and z ** -1 == Z(7, 6)
    assert (z + 1) / (z + 1) == 1
    assert close(Z(12, 5), cmath.exp(2j * cmath.pi * 5 / 12))
