"""Laurent arithmetic, quantum shuffles, character families, one-dimensional modules."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from klr_crystals import (
    Character,
    InvalidDatumError,
    LaurentPoly,
    char_Lin,
    char_equal_up_to_monomial,
    char_sign,
    char_trivial,
    coset_shuffles,
    e_op,
    eps_from_char,
    gamma,
    onedim_classify,
    onedim_families,
    qfact,
    qint,
    qshuffle,
    serre_defect,
    shuffle_degree,
    unit_char,
)


def P(pairs):
    return LaurentPoly(dict(pairs))


def test_qint_values():
    assert qint(0) == LaurentPoly.zero()
    assert qint(1) == LaurentPoly.one()
    assert qint(2) == P([(1, 1), (-1, 1)])
    assert qint(3) == P([(2, 1), (0, 1), (-2, 1)])


def test_qfact_values():
    assert qfact(0) == LaurentPoly.one()
    assert qfact(1) == LaurentPoly.one()
    assert qfact(2) == qint(2)
    assert qfact(3) == P([(3, 1), (1, 2), (-1, 2), (-3, 1)])
    assert qfact(3).at_q1() == 6


def test_laurent_basics():
    a = P([(2, 3), (0, -1)])
    b = P([(0, 1), (-2, 1)])
    assert (a + b).pairs() == ((-2, 1), (2, 3))  # constant terms cancel
    assert (a * b).pairs() == ((-2, -1), (0, 2), (2, 3))
    assert a * 0 == LaurentPoly.zero()
    assert not LaurentPoly.zero()
    assert a.at_q1() == 2


poly_st = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(poly_st, poly_st, poly_st)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a + (-a) == LaurentPoly.zero()
    assert a * LaurentPoly.one() == a
    assert (a * b).at_q1() == a.at_q1() * b.at_q1()


def test_coset_shuffles_counts_and_order():
    pats = coset_shuffles(1, 2)
    assert len(pats) == comb(3, 1)
    assert [p.left_slots for p in pats] == [(0,), (1,), (2,)]
    assert [p.inversions for p in pats] == [(), ((0, 0),), ((0, 0), (0, 1))]
    for m1, m2 in [(0, 0), (0, 3), (2, 2), (3, 2)]:
        assert len(coset_shuffles(m1, m2)) == comb(m1 + m2, m1)


def test_shuffle_degrees():
    pats = coset_shuffles(1, 2)
    degs = [shuffle_degree(3, (1,), (0, 1), p) for p in pats]
    assert degs == [0, 1, -1]


def test_shuffle_example_exact():
    left = char_Lin(3, 1, 1)
    right = Character(3, {(0, 1): LaurentPoly.one()})
    got = qshuffle(left, right)
    want = Character(
        3,
        {(1, 0, 1): LaurentPoly.one(), (0, 1, 1): P([(1, 1), (-1, 1)])},
    )
    assert got == want
    assert got.mass_q1() == 3
    assert set(got.terms) == {(1, 0, 1), (0, 1, 1)}


def test_shuffle_equal_letters():
    c = char_Lin(3, 0, 1)
    got = qshuffle(c, c)
    assert got == Character(3, {(0, 0): P([(0, 1), (-2, 1)])})
    # one global power of q away from the divided-power normal form
    assert char_equal_up_to_monomial(got, char_Lin(3, 0, 2)) == -1


def test_shuffle_unit_and_associativity():
    c = char_trivial(4, 1, 3)
    assert qshuffle(c, unit_char(4)) == c
    assert qshuffle(unit_char(4), c) == c
    a = char_Lin(4, 1, 1)
    b = char_Lin(4, 0, 1)
    d = char_Lin(4, 2, 1)
    assert qshuffle(qshuffle(a, b), d) == qshuffle(a, qshuffle(b, d))


@given(
    st.integers(2, 4),
    st.lists(st.integers(0, 3), min_size=1, max_size=2),
    st.lists(st.integers(0, 3), min_size=1, max_size=2),
)
def test_shuffle_mass_and_q1_symmetry(ell, s1, s2):
    c1 = Character(ell, {tuple(x % ell for x in s1): LaurentPoly.one()})
    c2 = Character(ell, {tuple(x % ell for x in s2): LaurentPoly.one()})
    ab = qshuffle(c1, c2)
    ba = qshuffle(c2, c1)
    assert ab.mass_q1() == comb(len(s1) + len(s2), len(s1))
    assert {s: p.at_q1() for s, p in ab.terms.items()} == {
        s: p.at_q1() for s, p in ba.terms.items()
    }


def test_character_families():
    assert char_trivial(4, 0, 6).terms == {(0, 1, 2, 3, 0, 1): LaurentPoly.one()}
    assert char_trivial(3, 1, 4).terms == {(1, 2, 0, 1): LaurentPoly.one()}
    assert char_sign(3, 1, 3).terms == {(1, 0, 2): LaurentPoly.one()}
    assert char_Lin(3, 0, 3).terms == {(0, 0, 0): qfact(3)}
    assert char_trivial(3, 2, 0) == unit_char(3)
    assert char_sign(3, 2, 0) == unit_char(3)
    assert char_Lin(3, 2, 0) == unit_char(3)


def test_character_contents():
    assert char_trivial(4, 0, 6).content() == gamma(4, 0, 6, "plus")
    assert char_sign(4, 0, 3).content() == gamma(4, 0, 3, "minus")
    assert unit_char(4).content().height == 0
    with pytest.raises(InvalidDatumError):
        Character(3, {(0,): LaurentPoly.one(), (1,): LaurentPoly.one()})


def test_eps_from_char():
    c = char_trivial(4, 0, 6)
    assert [eps_from_char(c, j, "right") for j in range(4)] == [0, 1, 0, 0]
    assert [eps_from_char(c, j, "left") for j in range(4)] == [1, 0, 0, 0]
    mixed = qshuffle(char_Lin(3, 1, 1), Character(3, {(0, 1): LaurentPoly.one()}))
    assert eps_from_char(mixed, 1, "right") == 2  # the (0,1,1) term wins


def test_eps_closed_forms_small_grid():
    for ell in (2, 3, 4, 5):
        for i in range(ell):
            for k in range(1, 2 * ell + 1):
                c = char_trivial(ell, i, k)
                for j in range(ell):
                    assert eps_from_char(c, j, "right") == (j == (i + k - 1) % ell)
                    assert eps_from_char(c, j, "left") == (j == i % ell)


def test_e_op():
    c = char_trivial(4, 0, 6)
    assert e_op(c, 1) == char_trivial(4, 0, 5)
    assert not e_op(c, 0)
    mixed = qshuffle(char_Lin(3, 1, 1), Character(3, {(0, 1): LaurentPoly.one()}))
    dropped = e_op(mixed, 1)
    assert dropped.terms == {(1, 0): LaurentPoly.one(), (0, 1): P([(1, 1), (-1, 1)])}


def test_serre_defect_zero_on_module_characters():
    c = qshuffle(char_Lin(3, 1, 1), Character(3, {(0, 1): LaurentPoly.one()}))
    assert not serre_defect(c, 1, 0)
    assert not serre_defect(c, 0, 1)
    d = qshuffle(char_Lin(2, 0, 1), char_Lin(2, 1, 1))
    assert not serre_defect(d, 0, 1)
    assert not serre_defect(d, 1, 0)


def test_serre_defect_flags_non_module():
    fake = Character(3, {(0, 0): LaurentPoly.one()})
    with pytest.raises(InvalidDatumError):
        serre_defect(fake, 0, 1)


def test_serre_defect_rejects_equal_colors():
    with pytest.raises(InvalidDatumError):
        serre_defect(char_trivial(3, 0, 2), 1, 1)


def test_onedim_small_cases():
    assert onedim_classify(3, 1) == {(0,), (1,), (2,)}
    assert onedim_classify(3, 2) == {
        (0, 1), (1, 2), (2, 0), (1, 0), (2, 1), (0, 2),
    }
    assert onedim_classify(2, 3) == {(0, 1, 0), (1, 0, 1)}


def test_onedim_matches_families_and_sizes():
    for ell in (2, 3, 4, 5):
        for m in range(1, 5):
            got = onedim_classify(ell, m)
            assert got == onedim_families(ell, m)
            if m == 1:
                assert len(got) == ell
            elif ell == 2:
                assert len(got) == 2
            else:
                assert len(got) == 2 * ell


def test_char_equal_up_to_monomial_negative():
    a = char_trivial(3, 0, 2)
    b = char_sign(3, 0, 2)
    assert char_equal_up_to_monomial(a, a) == 0
    assert char_equal_up_to_monomial(a, b) is None
