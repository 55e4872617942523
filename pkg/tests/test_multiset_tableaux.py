import re

import pytest

from charbasis.multiset_tableaux import (
    CellLabel,
    FillProfile,
    MultisetTableau,
    barred_group_word,
    count_by_shape,
    enumerate_mct,
    enumerate_mct_prime,
    is_lattice_tableau,
    relabel_blocks,
)
from charbasis.partitions import (
    alpha_of,
    compositions,
    enumerate_multiset_partitions,
    m_tilde,
    partitions,
    partitions_upto,
)

P = FillProfile


def cell(text: str) -> CellLabel:
    """``"2~13"`` is the label {2-bar, 1, 3}; ``"2~"`` and ``"12"`` likewise."""
    m = re.fullmatch(r"(?:(\d)~)?(\d*)", text)
    barred = int(m.group(1)) if m.group(1) else None
    return CellLabel(barred, tuple(int(c) for c in m.group(2)))


def tab(gamma, first_row, *upper_top_down) -> MultisetTableau:
    """Rows above the first are given from the top down, as they are drawn."""
    upper = tuple(tuple(cell(c) for c in row.split()) for row in reversed(upper_top_down))
    return MultisetTableau(tuple(gamma), tuple(cell(c) for c in first_row.split()), upper)


SAMPLE = tab((3, 3, 2, 1), "3~1", "3", "1~11 2~4", "2~ 2 1~2", "1~ 1 1")
LEFT = tab((4,), "", "1~ 1~1 2~1 2~2")
RIGHT = tab((4,), "", "1~ 2~1 2~1 1~2")

# the eight tableaux with gamma = (4), barred content (2,2), unbarred content (2,1);
# the first seven have set entries, the first five also avoid singletons in row 1
EIGHT = [
    tab((4,), "", "1~ 1~1 2~1 2~2"),
    tab((4,), "2~1", "1~ 1~ 2~1 2"),
    tab((4,), "2~2", "1~ 1~ 1 2~1"),
    tab((4,), "2~1", "1~ 1~ 1 2~2"),
    tab((4,), "", "1~ 1~ 2~1 2~12"),
    tab((4,), "1", "1~ 1~ 2~1 2~2"),
    tab((4,), "2", "1~ 1~ 2~1 2~1"),
    tab((4,), "", "1~ 1~ 2~11 2~2"),
]

PAIRS = [
    tab((4,), "", "1~ 1~1 2~1 2~2"),
    tab((4,), "2", "1~ 1~ 2~1 2~1"),
    tab((4,), "2~1", "1~ 1~ 2~1 2"),
    tab((4,), "2~2", "1~ 1~ 1 2~1"),
    tab((4,), "2~1", "1~ 1~ 1 2~2"),
    tab((4,), "1", "1~ 1~ 2~1 2~2"),
]


def test_sample_tableau():
    assert SAMPLE.is_column_strict()
    assert SAMPLE.shape.outer == (4, 3, 3, 2, 1)
    assert SAMPLE.shape.inner == (3,)
    assert barred_group_word(SAMPLE) == (1, 2, 3, 1, 1, 2)
    assert dict(SAMPLE.barred_content()) == {1: 3, 2: 2, 3: 1}
    assert dict(SAMPLE.unbarred_content()) == {1: 5, 2: 2, 3: 1, 4: 1}


def test_lattice_examples():
    assert barred_group_word(LEFT) == (1, 2, 1, 2)
    assert is_lattice_tableau(LEFT)
    assert barred_group_word(RIGHT) == (1, 2, 2, 1)
    assert not is_lattice_tableau(RIGHT)
    assert barred_group_word(tab((1,), "1", "2")) == ()
    assert is_lattice_tableau(tab((1,), "1", "2"))


def test_render():
    assert SAMPLE.render().splitlines() == [
        "[3]",
        "[1~|11] [2~|4]",
        "[2~] [2] [1~|2]",
        "[1~] [1] [1]",
        "[.] [.] [.] [3~|1]",
    ]


def test_labels_need_content():
    with pytest.raises(ValueError):
        CellLabel(None, ())


@pytest.mark.parametrize(
    "profile, count", [(P.MULTISET, 8), (P.SET, 7), (P.SET_NO_SINGLETON_ROW1, 5), (P.PAIR, 6)]
)
def test_worked_example_counts(profile, count):
    assert len(list(enumerate_mct((4,), (2, 2), (2, 1), profile))) == count


def test_worked_example_tableaux():
    def as_set(ts):
        return {(t.first_row, t.upper) for t in ts}

    assert as_set(enumerate_mct((4,), (2, 2), (2, 1), P.MULTISET)) == as_set(EIGHT)
    assert as_set(enumerate_mct((4,), (2, 2), (2, 1), P.SET)) == as_set(EIGHT[:7])
    assert as_set(enumerate_mct((4,), (2, 2), (2, 1), P.SET_NO_SINGLETON_ROW1)) == as_set(EIGHT[:5])
    assert as_set(enumerate_mct((4,), (2, 2), (2, 1), P.PAIR)) == as_set(PAIRS)
    for t in EIGHT + PAIRS:
        assert t.is_column_strict() and is_lattice_tableau(t)


def test_empty_tableau():
    assert len(list(enumerate_mct((), (), ()))) == 1
    assert len(list(enumerate_mct((), (), (), lattice_only=False))) == 1


def test_first_row_never_purely_barred():
    for t in enumerate_mct(None, (2, 1), (1, 1), P.MULTISET, lattice_only=False):
        assert all(lab.unbarred for lab in t.first_row)
        assert t.is_column_strict()


def test_enumeration_is_sorted_and_deterministic():
    a = list(enumerate_mct(None, (2, 1), (2, 1), P.MULTISET))
    b = list(enumerate_mct(None, (2, 1), (2, 1), P.MULTISET))
    assert a == b
    for gamma in {t.gamma for t in a}:
        keys = [t.sort_key() for t in a if t.gamma == gamma]
        assert keys == sorted(keys)


def test_mct_prime_example():
    pi = ((1,), (1, 2), (1, 2))
    t = tab((4,), "12", "1~ 1~ 2~1 2~12")
    assert is_lattice_tableau(t)
    assert t in list(enumerate_mct_prime((4,), (2, 2), pi))


def test_relabel_example():
    pi = ((1,), (1, 1), (1, 1), (2,))
    t = tab((3, 3), "2~2", "2~ 1~2 1~3", "1~ 1~ 1")
    t_prime = tab((3, 3), "2~11", "2~ 1~11 1~2", "1~ 1~ 1")
    assert barred_group_word(t) == barred_group_word(t_prime) == (1, 1, 2, 2, 1, 1)
    assert relabel_blocks(t, pi) == t_prime
    assert t in list(enumerate_mct((3, 3), (4, 2), (1, 2, 1), P.PAIR))
    assert t_prime in list(enumerate_mct_prime((3, 3), (4, 2), pi))


def test_mct_prime_trivial():
    (only,) = enumerate_mct_prime((), (), ((1,),))
    assert only.first_row == (cell("1"),) and only.upper == ()


def _contents(max_size):
    for n in range(1, max_size + 1):
        for mu in compositions(n):
            yield tuple(i + 1 for i, m in enumerate(mu) for _ in range(m))


@pytest.mark.parametrize("content", list(_contents(4)))
def test_relabelling_bijection(content):
    """Tableaux for a multiset partition pi are the PAIR tableaux of content
    alpha(pi) with letter i replaced by the i-th distinct block."""
    for pi in enumerate_multiset_partitions(content):
        for la in partitions_upto(2):
            primes = {(t.gamma, t.first_row, t.upper) for t in enumerate_mct_prime(None, la, pi)}
            pairs = {
                (r.gamma, r.first_row, r.upper)
                for r in (relabel_blocks(t, pi) for t in enumerate_mct(None, la, alpha_of(pi), P.PAIR))
            }
            assert primes == pairs
            assert sorted(alpha_of(pi), reverse=True) == list(m_tilde(pi))


def _key(t):
    return (t.gamma, t.first_row, t.upper)


@pytest.mark.parametrize(
    "la, alpha",
    [(la, al) for n in range(6) for la in partitions_upto(n) for al in compositions(n - sum(la))],
)
def test_profile_containments(la, alpha):
    multi = {_key(t) for t in enumerate_mct(None, la, alpha, P.MULTISET)}
    sets = {_key(t) for t in enumerate_mct(None, la, alpha, P.SET)}
    no_single = {_key(t) for t in enumerate_mct(None, la, alpha, P.SET_NO_SINGLETON_ROW1)}
    pair = {_key(t) for t in enumerate_mct(None, la, alpha, P.PAIR)}
    assert no_single <= sets <= multi
    assert pair <= multi
    for k in no_single:
        assert all(lab.size >= 2 for lab in k[1])


def test_lattice_filter_is_a_filter():
    every = list(enumerate_mct(None, (2, 1), (1, 1), P.MULTISET, lattice_only=False))
    lattice = list(enumerate_mct(None, (2, 1), (1, 1), P.MULTISET, lattice_only=True))
    assert lattice == [t for t in every if is_lattice_tableau(t)]
    assert len(lattice) < len(every)


def test_count_by_shape():
    counts = count_by_shape(enumerate_mct(None, (), (1,)))
    assert counts == {(): 1, (1,): 1}
    assert set(partitions(1)) <= set(counts)
