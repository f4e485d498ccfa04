from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codetops import FieldElement, all_elements, field_of_order, frobenius, make_field
from codetops.errors import (
    BadArgs,
    FieldDivisionByZero,
    FieldMismatch,
    NoBuiltinModulus,
    NonPrime,
    ReducibleModulus,
)
from codetops.field import BUILTIN_MODULI, arith, inv, is_irreducible, neg

ALL_Q = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81]


def test_prime_field():
    F = make_field(3)
    assert (F.p, F.m, F.q) == (3, 1, 3)


def test_gf4_modulus_has_no_roots():
    # degree 2 with no root in GF(2) means irreducible
    assert all((x * x + x + 1) % 2 for x in (0, 1))
    F = make_field(2, 2, [1, 1, 1])
    assert F.q == 4


@pytest.mark.parametrize("p", [4, 1, 0, 9, 15])
def test_non_prime(p):
    with pytest.raises(NonPrime):
        make_field(p)


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])  # (x+1)^2


def test_no_builtin():
    with pytest.raises(NoBuiltinModulus):
        make_field(2, 7)
    with pytest.raises(NoBuiltinModulus):
        field_of_order(128)
    with pytest.raises(NonPrime):
        field_of_order(12)


@pytest.mark.parametrize("q", sorted(BUILTIN_MODULI))
def test_builtin_moduli_irreducible(q):
    p, m, mod = BUILTIN_MODULI[q]
    assert is_irreducible(mod, p)
    F = make_field(p, m)
    # multiplicative group is cyclic of order q-1 only if every nonzero element
    # satisfies a^(q-1) = 1 and the field has no zero divisors
    nz = np.arange(1, q)
    prod = F.mul(nz[:, None], nz[None, :])
    assert not np.any(prod == 0)


def test_small_products():
    F = make_field(3)
    two = F.element(2)
    assert arith(two, two, "mul") == F.element(1)
    assert inv(two) == two
    G = field_of_order(4)
    x = G.element(2)
    assert x * x == G.element(3)  # x^2 = x + 1


def test_frobenius_examples():
    F = make_field(3)
    assert frobenius(F.element(2), 0) == F.element(2)
    G = field_of_order(4)
    assert frobenius(G.element(2), 1) == G.element(3)
    H = field_of_order(9)
    for a in all_elements(H):
        assert frobenius(frobenius(a, 1), 1) == a


def test_element_order():
    assert [e.value for e in all_elements(make_field(2))] == [0, 1]
    assert [e.value for e in all_elements(make_field(3))] == [0, 1, 2]
    assert [e.coeffs for e in all_elements(field_of_order(4))] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert repr(all_elements(field_of_order(4))) == "[0, 1, x, 1+x]"


@pytest.mark.parametrize("q", ALL_Q)
def test_axioms_exhaustive(q):
    F = field_of_order(q)
    a = np.arange(q)
    A, B = np.meshgrid(a, a, indexing="ij")
    add, mul = F.add(A, B), F.mul(A, B)
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    assert np.all(F.add(a, F.neg(a)) == 0)
    assert np.all(F.mul(a[1:], F.inv(a[1:])) == 1)
    # associativity and distributivity over all triples
    A3, B3, C3 = np.meshgrid(a, a, a, indexing="ij")
    assert np.array_equal(F.add(F.add(A3, B3), C3), F.add(A3, F.add(B3, C3)))
    assert np.array_equal(F.mul(F.mul(A3, B3), C3), F.mul(A3, F.mul(B3, C3)))
    assert np.array_equal(F.mul(A3, F.add(B3, C3)), F.add(F.mul(A3, B3), F.mul(A3, C3)))


@pytest.mark.parametrize("q", ALL_Q)
def test_frobenius_automorphism(q):
    F = field_of_order(q)
    a = np.arange(q)
    A, B = np.meshgrid(a, a, indexing="ij")
    images = set()
    for e in range(F.m):
        fa = F.frob(a, e)
        assert sorted(fa.tolist()) == list(range(q))
        assert np.array_equal(F.frob(F.add(A, B), e), F.add(F.frob(A, e), F.frob(B, e)))
        assert np.array_equal(F.frob(F.mul(A, B), e), F.mul(F.frob(A, e), F.frob(B, e)))
        assert np.array_equal(fa[: F.p], np.arange(F.p))  # prime subfield fixed
        images.add(tuple(fa))
    assert len(images) == F.m
    # frob(a, 1) = a^p
    assert all(int(F.frob(x, 1)) == F.power(x, F.p) for x in range(q))
    assert np.array_equal(F.frob(a, F.m), a)


def test_errors():
    F, G = make_field(3), make_field(5)
    with pytest.raises(FieldMismatch):
        arith(F.element(1), G.element(1), "add")
    with pytest.raises(FieldDivisionByZero):
        inv(F.element(0))
    with pytest.raises(FieldDivisionByZero):
        arith(F.element(1), F.element(0), "div")
    with pytest.raises(BadArgs):
        arith(F.element(1), F.element(1), "pow")
    with pytest.raises(BadArgs):
        F.element(3)


def test_neg_and_sub():
    G = field_of_order(9)
    for a, b in product(all_elements(G), repeat=2):
        assert a - b == a + neg(b)
        if b:
            assert (a / b) * b == a


def test_element_text_roundtrip():
    for q in (3, 4, 27):
        F = field_of_order(q)
        for c in range(q):
            assert F.parse_code(F.format_code(c)) == c
    G = field_of_order(4)
    assert G.format_code(3) == "11" and G.header() == "q=2^2 poly=1,1,1"


def test_equality_and_hash():
    assert make_field(2, 2) == field_of_order(4)
    assert len({make_field(3), make_field(3), make_field(5)}) == 2
    F = make_field(3)
    assert FieldElement(F, 2) == FieldElement(F, 2) and hash(FieldElement(F, 2)) == hash(F.element(2))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([7, 8, 25, 49]), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 30))
def test_power_law(q, x, y, e):
    F = field_of_order(q)
    a, b = x % q, y % q
    assert F.power(F.mul(a, b), e) == F.mul(F.power(a, e), F.power(b, e))
    if a:
        assert F.power(a, q - 1) == 1
