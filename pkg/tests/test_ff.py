import random

import pytest

from lincomp.errors import DivisionByZero, FieldMismatch, NotPrime
from lincomp.ff import (
    ExtField,
    arith,
    field_descriptor,
    field_from_descriptor,
    find_irreducible,
    make_prime_field,
)


def test_make_prime_field():
    assert make_prime_field(2).q == 2
    assert make_prime_field(7919).q == 7919  # prime by trial division
    with pytest.raises(NotPrime):
        make_prime_field(4)
    with pytest.raises(NotPrime):
        make_prime_field(1)


def test_find_irreducible_examples():
    assert find_irreducible(2, 1) == (0, 1)          # x
    assert find_irreducible(2, 2) == (1, 1, 1)       # x^2 + x + 1
    assert find_irreducible(3, 2) == (1, 0, 1)       # x^2 + 1


def test_find_irreducible_is_least():
    # oracle: exhaust monic quadratics over F_2 and check x^2+x+1 is the
    # only one without a root
    for c0 in range(2):
        for c1 in range(2):
            poly = (c0, c1, 1)
            has_root = any((c0 + c1 * x + x * x) % 2 == 0 for x in range(2))
            assert has_root == (poly != (1, 1, 1))


def test_basic_arith_f3():
    f3 = ExtField(3, 1)
    two = f3.elem(2)
    assert (two + two).to_list() == [1]
    assert arith("add", two, two) == f3.elem(1)
    assert arith("inv", f3.one()) == f3.one()


def test_f4_multiplication():
    f4 = ExtField(2, 2, modulus=(1, 1, 1))
    alpha = f4.elem([0, 1])
    assert (alpha * alpha).to_list() == [1, 1]  # x^2 reduces to x + 1


def test_inv_zero_and_mismatch():
    f4 = ExtField(2, 2)
    with pytest.raises(DivisionByZero):
        f4.zero().inv()
    f2 = ExtField(2, 1)
    with pytest.raises(FieldMismatch):
        _ = f4.one() + f2.one()


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2),
                                 (3, 3), (5, 1), (5, 2), (5, 3)])
def test_field_axioms_random(q, n):
    fld = ExtField(q, n)
    rng = random.Random(1000 * q + n)
    for _ in range(1000):
        a = fld.from_int(rng.randrange(fld.order))
        b = fld.from_int(rng.randrange(fld.order))
        c = fld.from_int(rng.randrange(fld.order))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inv() == fld.one()


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
                                 (2, 6), (3, 1), (3, 2), (3, 3), (5, 1),
                                 (5, 2), (7, 1), (7, 2), (13, 1)])
def test_frobenius_exhaustive(q, n):
    fld = ExtField(q, n)
    assert fld.order <= 64 or n == 1
    for a in fld.elements():
        assert a ** fld.order == a


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_degree_one_matches_integers(q):
    fld = ExtField(q, 1)
    for x in range(q):
        for y in range(q):
            assert (fld.elem(x) + fld.elem(y)).to_list() == [(x + y) % q]
            assert (fld.elem(x) * fld.elem(y)).to_list() == [(x * y) % q]
            assert (fld.elem(x) - fld.elem(y)).to_list() == [(x - y) % q]


def test_descriptor_roundtrip():
    fld = ExtField(3, 2)
    d = field_descriptor(fld)
    assert d == {"q": 3, "n": 2, "modulus": [1, 0, 1]}
    assert field_from_descriptor(d) == fld
