from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charbasis.oracles import tau_tuples, verify_bset_identity_all
from charbasis.partitions import compositions, is_lattice, pad, partitions, partitions_upto
from charbasis.symfunc import h_in_p, mn_character
from charbasis.tableaux import (
    LRMethod,
    SkewShape,
    Tableau,
    enumerate_bset,
    enumerate_cst,
    is_valid_bset_member,
    jdt_rectify,
    kostka,
    lr_coefficient,
    multi_lr,
    reading_word,
    superstandard,
)

BOTH = (LRMethod.LATTICE_PAIR, LRMethod.JDT)


def skew(outer, inner, rows):
    return Tableau(SkewShape(outer, inner), tuple(tuple(r) for r in rows))


def test_reading_word_of_lr_pair():
    # (S, T) pair for c^{4211}_{21,311}: S of shape (3,1,1) then T of shape (2,1)
    s = Tableau.straight([[1, 1, 1], [2], [3]])
    t = Tableau.straight([[1, 2], [4]])
    word = reading_word(s) + reading_word(t)
    assert word == (1, 1, 1, 2, 3, 2, 1, 4)
    assert is_lattice(word)


def test_reading_word_trivial():
    assert reading_word(Tableau.straight([[1, 1, 2]])) == (2, 1, 1)
    assert reading_word(Tableau.straight([])) == ()


def test_enumerate_cst_examples():
    assert len(list(enumerate_cst((2, 1), (1, 1, 1)))) == 2
    assert list(enumerate_cst((3, 2), (3, 2))) == [superstandard((3, 2))]
    assert list(enumerate_cst((1, 1), (2,))) == []
    one = list(enumerate_cst(SkewShape((2, 1), (1, 1)), (1,)))
    assert len(one) == 1 and one[0].cells() == {(1, 2): 1}


def test_enumerated_tableaux_are_column_strict():
    for t in enumerate_cst(SkewShape((4, 3, 1), (2, 1)), (2, 2, 1)):
        assert t.is_column_strict()
        assert t.content() == Counter({1: 2, 2: 2, 3: 1})


def test_kostka_small_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0
    assert kostka((3, 2), (2, 2, 1)) == 2
    with pytest.raises(ValueError):
        kostka((2,), (1,))


@pytest.mark.parametrize("mu", [mu for n in range(1, 6) for mu in partitions(n)])
def test_kostka_matches_character_route(mu):
    # <h_mu, s_la> from the p expansion of h_mu and Murnaghan-Nakayama characters
    hp = h_in_p(mu)
    for la in partitions(sum(mu)):
        value = sum((c * mn_character(la, rho) for rho, c in hp.items()), Fraction(0))
        assert value == kostka(la, mu)


@pytest.mark.parametrize("method", BOTH)
def test_lr_worked_example(method):
    assert lr_coefficient((2, 1), (3, 1, 1), (4, 2, 1, 1), method) == 2
    assert lr_coefficient((3, 1, 1), (2, 1), (4, 2, 1, 1), method) == 2


@pytest.mark.parametrize("method", BOTH)
def test_lr_trivial(method):
    assert lr_coefficient((2, 1), (), (2, 1), method) == 1
    assert lr_coefficient((1,), (1,), (2,), method) == 1
    assert lr_coefficient((1,), (1,), (3,), method) == 0


def test_jdt_worked_example():
    target = superstandard((2, 1))
    nu, mu = (4, 2, 1, 1), (3, 1, 1)
    a = skew(nu, mu, [[1], [1], [], [2]])
    b = skew(nu, mu, [[1], [2], [], [1]])
    assert jdt_rectify(a) == target
    assert jdt_rectify(b) == target
    found = [t for t in enumerate_cst(SkewShape(nu, mu), (2, 1)) if jdt_rectify(t) == target]
    assert sorted(t.rows for t in found) == sorted([a.rows, b.rows])


def test_lr_symmetry():
    for la in partitions_upto(4):
        for mu in partitions_upto(4):
            for nu in partitions(sum(la) + sum(mu)):
                for method in BOTH:
                    assert lr_coefficient(la, mu, nu, method) == lr_coefficient(mu, la, nu, method)


def test_lr_methods_agree():
    for n in range(8):
        for nu in partitions(n):
            for k in range(n + 1):
                for la in partitions(k):
                    for mu in partitions(n - k):
                        assert lr_coefficient(la, mu, nu, LRMethod.LATTICE_PAIR) == lr_coefficient(
                            la, mu, nu, LRMethod.JDT
                        )


def _skew_tableaux(max_cells=6, max_outer=7):
    for n in range(max_outer + 1):
        for outer in partitions(n):
            for k in range(n + 1):
                for inner in partitions(k):
                    if n - k > max_cells or not all(
                        i <= o for i, o in zip(inner, outer)
                    ) or len(inner) > len(outer):
                        continue
                    for content in compositions(n - k):
                        if len(content) <= 3:
                            yield from enumerate_cst(SkewShape(outer, inner), content)


def test_jdt_is_confluent():
    count = 0
    for t in _skew_tableaux():
        assert jdt_rectify(t, top_first=True) == jdt_rectify(t, top_first=False)
        count += 1
    assert count > 1000


def test_multi_lr_examples():
    assert multi_lr([(5, 1), (2,), (1,)], (5, 4)) == 1
    assert multi_lr([(3, 1)], (3, 1)) == 1
    assert multi_lr([(1,), (1,)], (2,)) == 1
    assert multi_lr([(1,), (1,)], (3,)) == 0


def test_bset_example_counts():
    gamma, la = (5, 4), (5, 2, 2)
    assert len(list(enumerate_bset([(5, 1), (2,), (1,)], gamma, la))) == 1
    assert len(list(enumerate_bset([(4, 2), (2,), (1,)], gamma, la))) == 4
    assert len(list(enumerate_bset([(4, 2), (1, 1), (1,)], gamma, la))) == 1


def test_bset_example_members():
    taus = [(5, 1), (2,), (1,)]
    (seq,) = enumerate_bset(taus, (5, 4), (5, 2, 2))
    assert seq.tableaux[1] == skew((5, 3), (5, 1), [[], [2, 3]])
    assert seq.tableaux[2] == skew((5, 4), (5, 3), [[], [3]])
    assert is_valid_bset_member(seq, taus)

    taus = [(4, 2), (2,), (1,)]
    got = {(s.tableaux[1], s.tableaux[2]) for s in enumerate_bset(taus, (5, 4), (5, 2, 2))}
    expected = {
        (skew((4, 4), (4, 2), [[], [3, 3]]), skew((5, 4), (4, 4), [[1], []])),
        (skew((5, 3), (4, 2), [[3], [3]]), skew((5, 4), (5, 3), [[], [1]])),
        (skew((4, 4), (4, 2), [[], [1, 3]]), skew((5, 4), (4, 4), [[3], []])),
        (skew((5, 3), (4, 2), [[3], [1]]), skew((5, 4), (5, 3), [[], [3]])),
    }
    assert got == expected


def test_bset_size_mismatch():
    with pytest.raises(ValueError):
        list(enumerate_bset([(2,)], (3,), (3,)))


@pytest.mark.parametrize("taus", list(tau_tuples(5, 4)))
def test_bset_identity_small(taus):
    assert verify_bset_identity_all(taus)


@pytest.mark.parametrize("tail0, tau1", [((1,), (2,)), ((2,), (2,)), ((2,), (1, 1))])
def test_bset_padding_independence(tail0, tau1):
    counts = []
    for n in (14, 15):
        taus = [pad(n - 3, tail0), tau1, (1,)]
        counts.append(len(list(enumerate_bset(taus, pad(n, (4,)), pad(n, (2, 2))))))
    assert counts[0] == counts[1]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([t for t in tau_tuples(6, 3) if sum(map(sum, t)) == 6]))
def test_bset_members_are_valid(taus):
    for gamma in partitions(6):
        for seq in enumerate_bset(taus, gamma, (3, 2, 1)):
            assert is_valid_bset_member(seq, taus)
            assert seq.outer == gamma
