import json

import pytest
from hypothesis import given, settings

from eqcobord.characters import Character
from eqcobord.repring import (Element, Monomial, elem_add, elem_mul, elem_square,
                              mono_mul, mono_substitute_twist)

from conftest import elements, monomials


def v(*chars, q=2):
    return Monomial.from_chars(q, chars)


A, B = 0b01, 0b10


def test_mono_mul_examples():
    assert mono_mul(v(A), v(A)) == Monomial.from_counts(2, {A: 2})
    assert mono_mul(v(A), Monomial.one(2)) == v(A)
    assert (v(A, B) * v(A)).degree == 3


def test_monomial_rejects_trivial_character():
    with pytest.raises(ValueError, match="trivial"):
        Monomial.from_chars(2, [0, 1])


def test_elem_add_cancels():
    m = Element.monomial(v(A))
    assert elem_add(m, m) == Element.zero(2)
    assert m + Element.zero(2) == m


def test_frobenius_example():
    x = Element.from_monomials(2, [v(A), v(B)])
    assert elem_mul(x, x) == Element.from_monomials(2, [v(A, A), v(B, B)])
    assert elem_square(x) == elem_mul(x, x)
    assert elem_square(Element.zero(2)) == Element.zero(2)
    assert x * Element.zero(2) == Element.zero(2)
    assert x * Element.one(2) == x


def test_square_of_monomial_element():
    assert elem_square(Element.monomial(v(A, B))) == Element.monomial(v(A, A, B, B))


def test_twist_examples():
    y1 = Monomial.from_chars(2, [0b01])
    assert mono_substitute_twist(y1, Character.trivial(2)) == Monomial.from_chars(4, [0b0100])
    y1y2 = Monomial.from_chars(2, [0b01, 0b10])
    twisted = mono_substitute_twist(y1y2, Character.of([1], 2))
    assert twisted == Monomial.from_chars(4, [Character.of([1, 3], 4).bits,
                                              Character.of([1, 4], 4).bits])
    assert twisted.degree == y1y2.degree


def test_rendering():
    assert str(Element.zero(2)) == "0"
    assert str(Element.one(2)) == "1"
    x = Element.from_monomials(3, [Monomial.from_counts(3, {0b011: 2, 0b100: 1}),
                                   Monomial.from_chars(3, [1])])
    assert str(x) == "v[1] + v[1,2]^2*v[3]"


def test_rank_mismatch():
    with pytest.raises(ValueError, match="rank mismatch"):
        Element.one(2) + Element.one(3)


@settings(max_examples=200)
@given(elements(), elements(), elements())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + a == Element.zero(3)


@given(elements(), elements())
def test_square_is_frobenius(a, b):
    assert a.square() == a * a
    assert (a + b).square() == a.square() + b.square()


@given(monomials(), monomials())
def test_grading(m1, m2):
    prod = Element.monomial(m1) * Element.monomial(m2)
    assert all(t.degree == m1.degree + m2.degree for t in prod)


@given(elements())
def test_round_trip(a):
    assert Element.parse(str(a), 3) == a
    assert Element.from_json(json.loads(json.dumps(a.to_json()))) == a
    assert [t.factors for t in a.terms] == sorted(t.factors for t in a.terms)
