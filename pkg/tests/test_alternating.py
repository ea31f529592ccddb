from itertools import combinations, permutations, product
from math import comb

import pytest

from milnor.alternating import (
    AltVector,
    TripleIndex,
    basis_position,
    canonicalize,
    parse_alt_vector,
    triple_at,
    triples,
    unit,
)

from oracles import perm_sign, wedge_coefficient


def e(n, pos):
    v = [0] * comb(n, 3)
    v[pos] = 1
    return AltVector.from_coeffs(n, v)


@pytest.mark.parametrize("ijk, expected", [
    ((2, 3, 1), ((1, 2, 3), 1)),
    ((1, 3, 2), ((1, 2, 3), -1)),
    ((1, 1, 3), None),
    ((3, 2, 1), ((1, 2, 3), -1)),
    ((3, 1, 2), ((1, 2, 3), 1)),
])
def test_canonicalize(ijk, expected):
    assert canonicalize(*ijk, n=4) == expected


def test_canonicalize_range():
    with pytest.raises(ValueError):
        canonicalize(0, 1, 2, 3)
    with pytest.raises(ValueError):
        canonicalize(1, 2, 5, 4)


def test_basis_position_examples():
    assert basis_position(TripleIndex(1, 2, 3), 5) == 0
    assert basis_position(TripleIndex(3, 4, 5), 5) == 9
    # enumerate the 10 lex-ordered triples for n = 5 and look up (1,2,4)
    assert list(combinations(range(1, 6), 3)).index((1, 2, 4)) == 1
    assert basis_position(TripleIndex(1, 2, 4), 5) == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_basis_position_is_lex_bijection(n):
    lex = list(combinations(range(1, n + 1), 3))
    assert [basis_position(TripleIndex(*t), n) for t in lex] == list(range(len(lex)))
    for p in range(len(lex)):
        assert basis_position(triple_at(p, n), n) == p
    assert tuple(triples(n)) == tuple(lex)


def test_basis_position_rejects_noncanonical():
    with pytest.raises(ValueError):
        basis_position(TripleIndex(2, 1, 3), 4)


def test_unit_examples():
    assert unit(1, 2, 3, 4) == e(4, 0)
    assert unit(2, 1, 3, 4) == -e(4, 0)
    assert unit(2, 2, 3, 4).is_zero()
    with pytest.raises(ValueError):
        unit(1, 2, 7, 4)


@pytest.mark.parametrize("n", range(3, 7))
def test_unit_is_alternating(n):
    for ijk in product(range(1, n + 1), repeat=3):
        base = unit(*ijk, n)
        for p in permutations(range(3)):
            permuted = tuple(ijk[x] for x in p)
            assert unit(*permuted, n) == perm_sign(p) * base


@pytest.mark.parametrize("n", [3, 4, 5])
def test_unit_matches_wedge_oracle(n):
    for ijk in product(range(1, n + 1), repeat=3):
        v = unit(*ijk, n)
        for t, c in zip(triples(n), v.coeffs):
            assert c == wedge_coefficient(*ijk, *t)


def test_vector_arithmetic():
    a = unit(1, 2, 3, 4) + 2 * unit(1, 3, 4, 4)
    assert a - a == AltVector.zero(4)
    assert (3 * a).coeffs == tuple(3 * c for c in a.coeffs)
    assert a[3, 1, 4] == -2
    with pytest.raises(ValueError):
        a + AltVector.zero(5)
    with pytest.raises(ValueError):
        AltVector(4, (1, 2))


def test_text_form_round_trip():
    v = unit(1, 2, 3, 4) - 2 * unit(1, 3, 4, 4)
    assert str(v) == "+1*X[1,2,3] -2*X[1,3,4]"
    assert str(AltVector.zero(4)) == "0"
    assert parse_alt_vector(str(v), 4) == v
    assert parse_alt_vector("0", 4).is_zero()
    assert parse_alt_vector("-1*X[2,1,3] +3*X[1,2,3]", 4) == 4 * unit(1, 2, 3, 4)
    with pytest.raises(ValueError):
        parse_alt_vector("+1*Y[1,2,3]", 4)
