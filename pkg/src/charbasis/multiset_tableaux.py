"""Multiset-valued column-strict tableaux of shape ``(r, gamma)/(gamma_1)``.

A cell label holds at most one barred letter and a multiset of unbarred
letters. Labels are ordered by reverse lex with every barred letter below every
unbarred one. The first row of such a tableau lives in columns
``gamma_1 + 1 .. r`` while the second row stops at column ``gamma_1``, so the
first row never shares a column with the rest: a tableau is a weakly
increasing first row plus a column-strict filling of the straight shape
``gamma``.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .partitions import (
    Multiset,
    MultisetPartition,
    Partition,
    Word,
    content_of,
    distinct_blocks,
    is_lattice,
    multiset,
    partitions,
    revlex_key,
    sub_multisets,
)
from .tableaux import SkewShape


@dataclass(frozen=True)
class CellLabel:
    barred: int | None
    unbarred: Multiset = ()
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "unbarred", multiset(self.unbarred))
        if self.barred is None and not self.unbarred:
            raise ValueError("a cell label cannot be empty")
        letters = [(1, u) for u in self.unbarred]
        if self.barred is not None:
            letters.append((0, self.barred))
        object.__setattr__(self, "key", revlex_key(letters))

    def __lt__(self, other: "CellLabel") -> bool:
        return self.key < other.key

    def __le__(self, other: "CellLabel") -> bool:
        return self.key <= other.key

    @property
    def size(self) -> int:
        return len(self.unbarred) + (self.barred is not None)

    def __str__(self) -> str:
        sep = "," if any(u > 9 for u in self.unbarred) else ""
        un = sep.join(str(u) for u in self.unbarred)
        if self.barred is None:
            return f"[{un}]"
        if not un:
            return f"[{self.barred}~]"
        return f"[{self.barred}~|{un}]"


def label(barred: int | None = None, *unbarred: int) -> CellLabel:
    return CellLabel(barred, tuple(unbarred))


@dataclass(frozen=True)
class MultisetTableau:
    """A tableau of shape ``(r, gamma)/(gamma_1)``.

    ``first_row`` holds the ``r - gamma_1`` filled cells of row 1 (left to
    right); ``upper`` holds rows 2, 3, ... which form a straight shape ``gamma``.
    """

    gamma: Partition
    first_row: tuple[CellLabel, ...]
    upper: tuple[tuple[CellLabel, ...], ...]

    @property
    def r(self) -> int:
        return (self.gamma[0] if self.gamma else 0) + len(self.first_row)

    @property
    def shape(self) -> SkewShape:
        g1 = self.gamma[0] if self.gamma else 0
        outer = ((self.r,) if self.r else ()) + self.gamma
        return SkewShape(outer, (g1,) if g1 else ())

    def cells(self) -> dict[tuple[int, int], CellLabel]:
        g1 = self.gamma[0] if self.gamma else 0
        out = {(1, g1 + j): lab for j, lab in enumerate(self.first_row, start=1)}
        for i, row in enumerate(self.upper, start=2):
            for j, lab in enumerate(row, start=1):
                out[(i, j)] = lab
        return out

    def labels(self) -> Iterator[CellLabel]:
        """Labels in reading order: bottom row first, right to left."""
        yield from reversed(self.first_row)
        for row in self.upper:
            yield from reversed(row)

    def barred_content(self) -> Counter:
        return Counter(lab.barred for lab in self.labels() if lab.barred is not None)

    def unbarred_content(self) -> Counter:
        return Counter(u for lab in self.labels() for u in lab.unbarred)

    def unbarred_blocks(self) -> tuple[Multiset, ...]:
        """Non-empty unbarred parts of the cells, as a sorted multiset of multisets."""
        return tuple(sorted((lab.unbarred for lab in self.labels() if lab.unbarred), key=revlex_key, reverse=True))

    def is_column_strict(self) -> bool:
        cells = self.cells()
        for (i, j), lab in cells.items():
            right = cells.get((i, j + 1))
            above = cells.get((i + 1, j))
            if right is not None and right.key < lab.key:
                return False
            if above is not None and above.key <= lab.key:
                return False
        return True

    def sort_key(self) -> tuple:
        return (self.r, tuple(lab.key for lab in self.first_row), tuple(tuple(lab.key for lab in row) for row in self.upper))

    def render(self) -> str:
        """ASCII picture, top row first; skewed cells are ``[.]``."""
        g1 = self.gamma[0] if self.gamma else 0
        lines = [" ".join(str(lab) for lab in row) for row in reversed(self.upper)]
        lines.append(" ".join(["[.]"] * g1 + [str(lab) for lab in self.first_row]))
        return "\n".join(lines)


def reading_word(t: MultisetTableau) -> tuple[CellLabel, ...]:
    return tuple(t.labels())


def barred_group_word(t: MultisetTableau) -> Word:
    """Barred letters read class by class.

    Cells are grouped by their unbarred part ``S`` (the empty part first, then
    reverse lex increasing); within a class the barred letters are read in
    reading order.
    """
    groups: dict[Multiset, list[int]] = {}
    for lab in t.labels():
        if lab.barred is not None:
            groups.setdefault(lab.unbarred, []).append(lab.barred)
    word: list[int] = []
    for s in sorted(groups, key=revlex_key):
        word.extend(groups[s])
    return tuple(word)


def is_lattice_tableau(t: MultisetTableau) -> bool:
    return is_lattice(barred_group_word(t))


class FillProfile(enum.Enum):
    MULTISET = "multiset"
    SET = "set"
    SET_NO_SINGLETON_ROW1 = "set_no_singleton_row1"
    PAIR = "pair"


# A parts function receives the remaining unbarred tokens and yields
# (unbarred multiset of the label, tokens consumed).
PartsFn = Callable[[Counter], Iterator[tuple[Multiset, Counter]]]
AdmitFn = Callable[[CellLabel, bool], bool]


def _letter_parts(profile: FillProfile) -> PartsFn:
    def parts(remaining: Counter) -> Iterator[tuple[Multiset, Counter]]:
        pool = multiset(remaining.elements())
        for sub in sub_multisets(pool):
            if profile is FillProfile.PAIR and len(sub) > 1:
                continue
            if profile in (FillProfile.SET, FillProfile.SET_NO_SINGLETON_ROW1) and len(set(sub)) != len(sub):
                continue
            yield sub, Counter(sub)

    return parts


def _block_parts(remaining: Counter) -> Iterator[tuple[Multiset, Counter]]:
    yield (), Counter()
    for block in sorted(remaining, key=revlex_key):
        yield block, Counter({block: 1})


def _admit(profile: FillProfile) -> AdmitFn:
    def admit(lab: CellLabel, first_row: bool) -> bool:
        if first_row:
            if not lab.unbarred:
                return False
            if profile is FillProfile.SET_NO_SINGLETON_ROW1 and lab.size < 2:
                return False
        return True

    return admit


def _search(
    gamma: Partition,
    barred: Counter,
    tokens: Counter,
    token_weight: Callable[[Counter], int],
    parts: PartsFn,
    admit: AdmitFn,
) -> Iterator[MultisetTableau]:
    barred = +Counter(barred)
    tokens = +Counter(tokens)
    cells = [(i, j) for i, part in enumerate(gamma) for j in range(part)]
    grid: dict[tuple[int, int], CellLabel] = {}

    def candidates(bar: Counter, tok: Counter) -> Iterator[tuple[CellLabel, int | None, Counter]]:
        bar_opts = [None] + sorted(b for b, c in bar.items() if c > 0)
        for un, used in parts(tok):
            for b in bar_opts:
                if b is None and not un:
                    continue
                yield CellLabel(b, un), b, used

    def first_rows(bar: Counter, tok: Counter, low: tuple | None) -> Iterator[tuple[CellLabel, ...]]:
        if not +bar and not +tok:
            yield ()
            return
        # every first-row label takes at least one token and at most one barred letter
        if sum(bar.values()) > token_weight(tok):
            return
        for lab, b, used in candidates(bar, tok):
            if low is not None and lab.key < low:
                continue
            if not admit(lab, True):
                continue
            nbar = bar.copy()
            if b is not None:
                nbar[b] -= 1
            ntok = tok.copy()
            ntok.subtract(used)
            for rest in first_rows(+nbar, +ntok, lab.key):
                yield (lab,) + rest

    def fill(k: int, bar: Counter, tok: Counter) -> Iterator[MultisetTableau]:
        if sum(bar.values()) + token_weight(tok) < len(cells) - k:
            return
        if k == len(cells):
            upper = tuple(tuple(grid[(i, j)] for j in range(part)) for i, part in enumerate(gamma))
            for row in first_rows(bar, tok, None):
                yield MultisetTableau(gamma, row, upper)
            return
        i, j = cells[k]
        left = grid.get((i, j - 1))
        below = grid.get((i - 1, j))
        for lab, b, used in candidates(bar, tok):
            if left is not None and lab.key < left.key:
                continue
            if below is not None and lab.key <= below.key:
                continue
            if not admit(lab, False):
                continue
            nbar = bar.copy()
            if b is not None:
                nbar[b] -= 1
            ntok = tok.copy()
            ntok.subtract(used)
            grid[(i, j)] = lab
            yield from fill(k + 1, +nbar, +ntok)
            del grid[(i, j)]

    yield from fill(0, barred, tokens)


def _run(
    gamma: Partition | None,
    barred: Counter,
    tokens: Counter,
    token_weight: Callable[[Counter], int],
    parts: PartsFn,
    admit: AdmitFn,
    lattice_only: bool,
) -> Iterator[MultisetTableau]:
    if gamma is None:
        max_cells = sum(barred.values()) + token_weight(tokens)
        gammas = [g for k in range(max_cells + 1) for g in partitions(k)]
    else:
        gammas = [tuple(gamma)]
    for g in gammas:
        found = [
            t
            for t in _search(g, barred, tokens, token_weight, parts, admit)
            if not lattice_only or is_lattice_tableau(t)
        ]
        found.sort(key=MultisetTableau.sort_key)
        yield from found


def enumerate_mct(
    gamma: Partition | None,
    barred: Sequence[int],
    unbarred: Sequence[int],
    profile: FillProfile = FillProfile.MULTISET,
    lattice_only: bool = True,
) -> Iterator[MultisetTableau]:
    """Tableaux in ``MCT_gamma(barred, unbarred)`` satisfying ``profile``.

    ``barred`` and ``unbarred`` give the letter multiplicities (``barred[j-1]``
    copies of the barred letter ``j``). ``gamma=None`` runs over every shape.
    Output is sorted by ``r`` and then by the labels, row by row.
    """
    bar = Counter(content_of(barred))
    tok = Counter(content_of(unbarred))
    return _run(
        gamma, bar, tok, lambda c: sum(c.values()), _letter_parts(profile), _admit(profile), lattice_only
    )


def enumerate_mct_prime(
    gamma: Partition | None,
    barred: Sequence[int],
    pi: MultisetPartition,
    lattice_only: bool = True,
) -> Iterator[MultisetTableau]:
    """Tableaux whose non-empty unbarred cell parts are exactly the blocks of ``pi``."""
    bar = Counter(content_of(barred))
    tok = Counter(tuple(multiset(b)) for b in pi)
    return _run(
        gamma,
        bar,
        tok,
        lambda c: sum(c.values()),
        _block_parts,
        _admit(FillProfile.MULTISET),
        lattice_only,
    )


def count_by_shape(tableaux: Iterable[MultisetTableau]) -> Counter:
    return Counter(t.gamma for t in tableaux)


def single_row_set_tableaux(content: Multiset, max_cells: int | None = None) -> Iterator[tuple[CellLabel, ...]]:
    """Weakly increasing single rows of non-empty sets with the given content."""
    tok = Counter(content)
    parts = _letter_parts(FillProfile.SET)

    def rec(tok: Counter, low: tuple | None) -> Iterator[tuple[CellLabel, ...]]:
        if not +tok:
            yield ()
            return
        for un, used in parts(tok):
            if not un:
                continue
            lab = CellLabel(None, un)
            if low is not None and lab.key < low:
                continue
            ntok = tok.copy()
            ntok.subtract(used)
            for rest in rec(+ntok, lab.key):
                yield (lab,) + rest

    for row in rec(tok, None):
        if max_cells is None or len(row) <= max_cells:
            yield row


def relabel_blocks(t: MultisetTableau, pi: MultisetPartition) -> MultisetTableau:
    """Replace unbarred letter ``i`` by the ``i``-th distinct block of ``pi``."""
    blocks = distinct_blocks(pi)

    def conv(lab: CellLabel) -> CellLabel:
        if not lab.unbarred:
            return lab
        (i,) = lab.unbarred
        return CellLabel(lab.barred, blocks[i - 1])

    return MultisetTableau(
        t.gamma,
        tuple(conv(lab) for lab in t.first_row),
        tuple(tuple(conv(lab) for lab in row) for row in t.upper),
    )
