from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from milnor.alternating import AltVector, triples, unit
from milnor.linalg import IntMatrix, integer_rank, smith_normal_form
from milnor.quotient import (
    AbelianGroup,
    LinkingMatrix,
    LinkingMatrixError,
    MilnorClass,
    classes_equal,
    coset_reduce,
    mod2_rank,
    presentation_matrix,
    quotient_group,
    rank,
    rank_lower_bound,
    relator,
    relator_pairs,
    unit_classes_trivial,
    verify_dependencies,
)
from milnor.linalg import solve_in_column_lattice

from conftest import random_linking_matrix

X = lambda i, j, k: unit(i, j, k, 5)  # noqa: E731


def all_ones(n):
    return LinkingMatrix.from_rows([[int(i != j) for j in range(n)] for i in range(n)])


def linking_matrices(nmin=3, nmax=6, lo=-4, hi=4):
    return st.integers(nmin, nmax).flatmap(lambda n: st.lists(
        st.integers(lo, hi), min_size=comb(n, 2), max_size=comb(n, 2)).map(
        lambda u: LinkingMatrix.from_upper(n, u)))


def test_linking_matrix_validation():
    with pytest.raises(LinkingMatrixError, match=r"\(1,2\)"):
        LinkingMatrix.from_rows([[0, 1], [2, 0]])
    with pytest.raises(LinkingMatrixError, match="diagonal"):
        LinkingMatrix.from_rows([[1, 0], [0, 0]])
    with pytest.raises(LinkingMatrixError):
        LinkingMatrix.from_rows([[0, 1, 0], [1, 0]])


# relator values for the trivial 5x5 example, in increasing-index form
FIVE_RELATORS = {
    (3, 1): X(1, 2, 3),
    (1, 2): X(1, 2, 3) + X(1, 2, 4),
    (4, 1): X(1, 2, 4) + X(1, 3, 4),
    (1, 4): -X(1, 2, 4) - X(1, 3, 4) + X(1, 4, 5),
    (1, 5): -X(1, 3, 5) - X(1, 4, 5),
    (5, 1): X(1, 2, 5) + X(1, 3, 5),
    (3, 2): -X(1, 2, 3) - X(2, 3, 4),
    (2, 4): -X(2, 3, 4) + X(2, 4, 5),
    (2, 5): -X(2, 3, 5) - X(2, 4, 5),
    (4, 5): X(3, 4, 5),
}


@pytest.mark.parametrize("jk", sorted(FIVE_RELATORS))
def test_relators_of_trivial_example(trivial_five, jk):
    assert relator(trivial_five, *jk) == FIVE_RELATORS[jk]


def test_explicit_solutions_of_trivial_example(trivial_five):
    v = {jk: relator(trivial_five, *jk) for jk in FIVE_RELATORS}
    solutions = {
        (1, 2, 3): v[3, 1],
        (1, 2, 4): v[1, 2] - v[3, 1],
        (1, 3, 4): v[4, 1] - v[1, 2] + v[3, 1],
        (1, 4, 5): v[1, 4] + v[4, 1],
        (1, 3, 5): -v[1, 5] - v[1, 4] - v[4, 1],
        (1, 2, 5): v[5, 1] + v[1, 5] + v[1, 4] + v[4, 1],
        (2, 3, 4): -v[3, 2] - v[3, 1],
        (2, 4, 5): v[2, 4] - v[3, 2] - v[3, 1],
        (2, 3, 5): v[3, 2] + v[3, 1] - v[2, 5] - v[2, 4],
        (3, 4, 5): v[4, 5],
    }
    assert sorted(solutions) == list(triples(5))
    for t, combo in solutions.items():
        assert combo == X(*t)


def test_relator_errors(trivial_five):
    with pytest.raises(ValueError):
        relator(trivial_five, 2, 2)
    with pytest.raises(ValueError):
        relator(trivial_five, 0, 2)


def test_relator_zero_column():
    lam = LinkingMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    for j in (1, 2, 4):
        assert relator(lam, j, 3).is_zero()


def test_presentation_shapes(trivial_five, rng):
    assert presentation_matrix(trivial_five).shape == (10, 20)
    assert presentation_matrix(random_linking_matrix(rng, 6)).shape == (20, 30)
    assert presentation_matrix(LinkingMatrix.zeros(4)) == IntMatrix.zeros(4, 12)
    with pytest.raises(LinkingMatrixError):
        presentation_matrix(LinkingMatrix.zeros(2))


def test_presentation_columns_follow_pair_order(rng):
    lam = random_linking_matrix(rng, 5)
    P = presentation_matrix(lam)
    for c, (j, k) in enumerate(relator_pairs(5)):
        assert tuple(P.column(c)) == relator(lam, j, k).coeffs


def test_quotient_examples(trivial_five):
    assert quotient_group(trivial_five).is_trivial()
    assert str(quotient_group(trivial_five)) == "trivial"
    assert quotient_group(LinkingMatrix.zeros(4)) == AbelianGroup((), 4)
    assert str(quotient_group(LinkingMatrix.zeros(4))) == "Z^4"
    assert quotient_group(all_ones(9)).free_rank >= 12


def test_four_component_all_ones_is_infinite_cyclic():
    # pairwise linking numbers 1: M is Z
    assert quotient_group(all_ones(4)) == AbelianGroup((), 1)


def test_abelian_group_rendering():
    g = AbelianGroup.from_diagonal([1, 2, 6, 0], 6)
    assert g == AbelianGroup((2, 6), 3)
    assert str(g) == "Z^3 + Z/2 + Z/6"
    assert str(AbelianGroup((3,), 1)) == "Z + Z/3"
    assert g.mod2_rank() == 5


def test_rank_examples(trivial_five, rng):
    assert rank(trivial_five) == 0
    assert rank(LinkingMatrix.zeros(6)) == 20
    for _ in range(20):
        assert rank(random_linking_matrix(rng, 6)) >= 1


@settings(max_examples=60, deadline=None)
@given(linking_matrices())
def test_rank_nullity(lam):
    P = presentation_matrix(lam)
    assert rank(lam) == comb(lam.n, 3) - integer_rank(P)


@settings(max_examples=60, deadline=None)
@given(linking_matrices())
def test_mod2_rank_properties(lam):
    r2 = mod2_rank(lam)
    assert r2 == mod2_rank(lam.reduce_mod2())
    assert r2 >= rank(lam)
    # second route: count even Smith invariants over Z
    assert r2 == quotient_group(lam).mod2_rank()


def test_mod2_rank_examples():
    assert mod2_rank(LinkingMatrix.zeros(4)) == 4
    # the all-ones 4x4 matrix has mod-2 rank 1 (M = Z); the unique rank-4 case is zero
    assert mod2_rank(all_ones(4)) == 1


def test_mod2_rank_invariant_under_even_shift(rng):
    for _ in range(30):
        n = rng.randint(3, 6)
        lam = random_linking_matrix(rng, n)
        shift = random_linking_matrix(rng, n)
        shifted = LinkingMatrix.from_rows(
            [[a + 2 * b for a, b in zip(r, s)] for r, s in zip(lam.rows, shift.rows)])
        assert mod2_rank(shifted) == mod2_rank(lam)


def test_rank_lower_bound_values():
    assert rank_lower_bound(6) == 1
    assert rank_lower_bound(7) == 6
    assert (343 - 441 + 140 - 6) // 6 == 6
    # at n = 9 the formula gives 174 / 6 = 29, stronger than the count
    # C(9,3) - 2 C(9,2) = 84 - 72 = 12 of generators minus relators
    assert (729 - 729 + 180 - 6) // 6 == 29
    assert rank_lower_bound(9) == 29
    assert comb(9, 3) - 2 * comb(9, 2) == 12
    with pytest.raises(ValueError):
        rank_lower_bound(5)


def test_rank_lower_bound_always_integral():
    for n in range(6, 2000):
        assert (n ** 3 - 9 * n ** 2 + 20 * n - 6) % 6 == 0
        assert rank_lower_bound(n) == comb(n, 3) - (n * n - 3 * n + 1)


def test_rank_bound_on_random_sevens(rng):
    for _ in range(10):
        assert rank(random_linking_matrix(rng, 7)) >= rank_lower_bound(7)


def test_coset_reduce_examples(trivial_five, rng):
    for t in triples(5):
        assert coset_reduce(trivial_five, X(*t)).is_zero()
    assert unit_classes_trivial(trivial_five)
    for _ in range(10):
        lam = random_linking_matrix(rng, 5)
        for j, k in relator_pairs(5):
            assert coset_reduce(lam, relator(lam, j, k)).is_zero()
    v = AltVector.from_coeffs(4, [3, -1, 0, 7])
    assert coset_reduce(LinkingMatrix.zeros(4), v) == v


@settings(max_examples=60, deadline=None)
@given(linking_matrices(), st.data())
def test_coset_reduce_canonical(lam, data):
    m = comb(lam.n, 3)
    v = AltVector.from_coeffs(lam.n, data.draw(st.lists(st.integers(-6, 6), min_size=m, max_size=m)))
    c = coset_reduce(lam, v)
    assert coset_reduce(lam, c) == c
    assert classes_equal(lam, v, c)
    # adding any relator combination gives the same canonical form
    k = data.draw(st.lists(st.integers(-3, 3), min_size=lam.n * (lam.n - 1),
                           max_size=lam.n * (lam.n - 1)))
    shifted = v
    for coef, (a, b) in zip(k, relator_pairs(lam.n)):
        shifted = shifted + coef * relator(lam, a, b)
    assert coset_reduce(lam, shifted) == c


@settings(max_examples=60, deadline=None)
@given(linking_matrices(nmax=5), st.data())
def test_classes_equal_agrees_with_coset_reduce(lam, data):
    m = comb(lam.n, 3)
    vec = st.lists(st.integers(-3, 3), min_size=m, max_size=m)
    v = AltVector.from_coeffs(lam.n, data.draw(vec))
    w = AltVector.from_coeffs(lam.n, data.draw(vec))
    assert classes_equal(lam, v, w) == (coset_reduce(lam, v) == coset_reduce(lam, w))


def test_classes_equal_examples(trivial_five):
    z3 = LinkingMatrix.zeros(3)
    assert classes_equal(z3, unit(1, 2, 3, 3), unit(1, 2, 3, 3))
    assert not classes_equal(z3, unit(1, 2, 3, 3), AltVector.zero(3))
    assert classes_equal(trivial_five, X(1, 2, 3), AltVector.zero(5))
    with pytest.raises(ValueError):
        classes_equal(trivial_five, unit(1, 2, 3, 4), AltVector.zero(5))


def test_solve_finds_x123_in_trivial_example(trivial_five):
    P = presentation_matrix(trivial_five)
    x = solve_in_column_lattice(P, list(X(1, 2, 3).coeffs))
    assert x is not None and P.apply(x) == list(X(1, 2, 3).coeffs)


def test_trivial_iff_units_vanish(rng):
    for _ in range(40):
        lam = random_linking_matrix(rng, rng.randint(3, 5), 0, 2)
        assert quotient_group(lam).is_trivial() == unit_classes_trivial(lam)


def test_milnor_class_semantics(trivial_five):
    a = MilnorClass(trivial_five, X(1, 2, 3))
    b = MilnorClass(trivial_five, AltVector.zero(5))
    assert a == b and hash(a) == hash(b)
    z = LinkingMatrix.zeros(3)
    assert MilnorClass(z, unit(1, 2, 3, 3)) != MilnorClass(z, AltVector.zero(3))
    with pytest.raises(ValueError):
        MilnorClass(trivial_five, unit(1, 2, 3, 4))


def test_verify_dependencies(trivial_five, rng):
    report = verify_dependencies(trivial_five)
    assert report.ok and report.checked == 10
    assert verify_dependencies(LinkingMatrix.zeros(4)).ok
    for _ in range(100):
        assert verify_dependencies(random_linking_matrix(rng, 6)).ok


def test_snf_of_presentation_reconstructs(rng):
    lam = random_linking_matrix(rng, 5)
    P = presentation_matrix(lam)
    snf = smith_normal_form(P)
    assert [x for x in snf.d if x] == sorted(x for x in snf.d if x)


def test_rank_bound_numerator_factors():
    sympy = pytest.importorskip("sympy")
    n = sympy.symbols("n")
    m = n - 3
    assert sympy.expand((m - 1) * m * (m + 1) - 6 * m - (n ** 3 - 9 * n ** 2 + 20 * n - 6)) == 0
