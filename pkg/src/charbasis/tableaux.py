"""Integer (skew) column-strict tableaux, jeu de taquin and Littlewood-Richardson counts.

Cells use French coordinates: row 1 is the bottom row, ``(row, col)`` are
1-indexed. A tableau stores the filled cells of each row from left to right;
skewed cells of the inner shape are implicit.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import (
    Partition,
    Word,
    contains,
    is_lattice,
    size,
)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def row_range(self, i: int) -> range:
        """Filled columns of row ``i`` (1-indexed)."""
        lo = self.inner[i - 1] if i - 1 < len(self.inner) else 0
        return range(lo + 1, self.outer[i - 1] + 1)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, len(self.outer) + 1) for j in self.row_range(i)]

    def reading_cells(self) -> list[tuple[int, int]]:
        """Cells bottom row to top row, right to left within a row."""
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in reversed(self.row_range(i))
        ]


@dataclass(frozen=True)
class Tableau:
    """An integer-filled (skew) tableau."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cells(cls, shape: SkewShape, cells: dict[tuple[int, int], int]) -> "Tableau":
        rows = tuple(
            tuple(cells[(i, j)] for j in shape.row_range(i))
            for i in range(1, len(shape.outer) + 1)
        )
        return cls(shape, rows)

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        """Build a straight-shape tableau from its rows, bottom row first."""
        shape = SkewShape(tuple(len(r) for r in rows if r))
        return cls(shape, tuple(tuple(r) for r in rows if r))

    def cells(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, row in enumerate(self.rows, start=1):
            for j, v in zip(self.shape.row_range(i), row):
                out[(i, j)] = v
        return out

    def content(self) -> Counter:
        return Counter(v for row in self.rows for v in row)

    def is_column_strict(self) -> bool:
        cells = self.cells()
        for (i, j), v in cells.items():
            if (i, j + 1) in cells and cells[(i, j + 1)] < v:
                return False
            if (i + 1, j) in cells and cells[(i + 1, j)] <= v:
                return False
        return True


def superstandard(la: Partition) -> Tableau:
    return Tableau.straight([[i] * part for i, part in enumerate(la, start=1)])


def reading_word(t: Tableau) -> Word:
    """Bottom row to top row, right to left within each row."""
    return tuple(v for row in t.rows for v in reversed(row))


# -- column-strict fillings ---------------------------------------------------


def _fillings(
    shape: SkewShape,
    limit: Sequence[int],
    exact: bool,
    prefix: Counter | None = None,
) -> Iterator[dict[tuple[int, int], int]]:
    """Column-strict fillings of ``shape`` with letter ``i`` used at most
    ``limit[i-1]`` times (exactly, when ``exact``).

    When ``prefix`` is given, only fillings whose reading word extends the
    letter counts in ``prefix`` to a lattice word are produced. Cells are
    filled in reading order, so both constraints prune as we go.
    """
    order = shape.reading_cells()
    remaining = list(limit)
    counts = Counter(prefix) if prefix is not None else None
    cells: dict[tuple[int, int], int] = {}
    n = len(order)
    letters = range(1, len(limit) + 1)

    def left_to_place(k: int) -> int:
        return n - k

    def rec(k: int) -> Iterator[dict[tuple[int, int], int]]:
        if k == n:
            if not exact or not any(remaining):
                yield dict(cells)
            return
        if exact and sum(remaining) != left_to_place(k):
            return
        i, j = order[k]
        hi = cells.get((i, j + 1), len(limit))
        lo = cells.get((i - 1, j), 0) + 1
        for v in letters:
            if v < lo or v > hi or not remaining[v - 1]:
                continue
            if counts is not None and v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            remaining[v - 1] -= 1
            cells[(i, j)] = v
            if counts is not None:
                counts[v] += 1
            yield from rec(k + 1)
            if counts is not None:
                counts[v] -= 1
            del cells[(i, j)]
            remaining[v - 1] += 1

    yield from rec(0)


def enumerate_cst(shape: SkewShape | Partition, content: Sequence[int]) -> Iterator[Tableau]:
    """Column-strict tableaux of ``shape`` using letter ``i`` exactly ``content[i-1]`` times."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    if sum(content) != shape.size:
        return
    for cells in _fillings(shape, tuple(content), exact=True):
        yield Tableau.from_cells(shape, cells)


@lru_cache(maxsize=None)
def kostka(la: Partition, mu: Sequence[int]) -> int:
    if size(la) != size(mu):
        raise ValueError(f"kostka: |{list(la)}| != |{list(mu)}|")
    return sum(1 for _ in _fillings(SkewShape(tuple(la)), tuple(mu), exact=True))


# -- jeu de taquin --------------------------------------------------------------


def _inner_corners(inner: list[int]) -> list[int]:
    """Rows (0-indexed) holding a removable cell of the inner shape."""
    return [
        i
        for i in range(len(inner))
        if inner[i] > 0 and (i + 1 == len(inner) or inner[i + 1] < inner[i])
    ]


def jdt_rectify(t: Tableau, top_first: bool = True) -> Tableau:
    """Rectify a skew tableau by inward jeu de taquin slides.

    Inner corners are slid from the topmost row down (``top_first``) or from
    the bottom row up; the result does not depend on the choice.
    """
    cells = {(i - 1, j - 1): v for (i, j), v in t.cells().items()}
    inner = list(t.shape.inner)
    while any(inner):
        corners = _inner_corners(inner)
        r = corners[-1] if top_first else corners[0]
        c = inner[r] - 1
        inner[r] -= 1
        while True:
            right = cells.get((r, c + 1))
            up = cells.get((r + 1, c))
            if right is None and up is None:
                break
            if right is None or (up is not None and up <= right):
                cells[(r, c)] = up
                del cells[(r + 1, c)]
                r += 1
            else:
                cells[(r, c)] = right
                del cells[(r, c + 1)]
                c += 1
    nrows = max((i for i, _ in cells), default=-1) + 1
    rows = [sorted((j, v) for (i, j), v in cells.items() if i == r) for r in range(nrows)]
    return Tableau.straight([[v for _, v in row] for row in rows])


def rectified_shape(t: Tableau) -> Partition:
    return jdt_rectify(t).shape.outer


# -- Littlewood-Richardson ----------------------------------------------------------


class LRMethod(enum.Enum):
    LATTICE_PAIR = "lattice_pair"
    JDT = "jdt"


def _counts_vector(c: Counter, length: int) -> tuple[int, ...]:
    return tuple(c[i] for i in range(1, length + 1))


def lr_coefficient(
    la: Partition, mu: Partition, nu: Partition, method: LRMethod = LRMethod.LATTICE_PAIR
) -> int:
    """``c^nu_{la, mu}`` counted by pairs of tableaux or by jeu de taquin classes."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    if size(la) + size(mu) != size(nu):
        return 0
    if method is LRMethod.LATTICE_PAIR:
        total = 0
        for s_cells in _fillings(SkewShape(la), nu, exact=False, prefix=Counter()):
            used = Counter(s_cells.values())
            rest = tuple(nu[i] - used[i + 1] for i in range(len(nu)))
            if any(r < 0 for r in rest):
                continue
            total += sum(1 for _ in _fillings(SkewShape(mu), rest, exact=True, prefix=used))
        return total
    if not contains(nu, mu):
        return 0
    target = superstandard(la)
    return sum(
        1
        for t in enumerate_cst(SkewShape(nu, mu), la)
        if jdt_rectify(t) == target
    )


def lr_tableaux(outer: Partition, inner: Partition, content: Sequence[int] | None = None) -> Iterator[Tableau]:
    """Skew tableaux of shape ``outer/inner`` with lattice reading word."""
    shape = SkewShape(tuple(outer), tuple(inner))
    if content is None:
        limit, exact = (shape.size,) * shape.size, False
    else:
        limit, exact = tuple(content), True
    for cells in _fillings(shape, limit, exact=exact, prefix=Counter()):
        yield Tableau.from_cells(shape, cells)


@lru_cache(maxsize=None)
def skew_expansion(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """``s_{outer/inner} = sum_tau c^outer_{inner, tau} s_tau`` as a dict."""
    if not contains(outer, inner):
        return {}
    out: Counter = Counter()
    for t in lr_tableaux(outer, inner):
        c = t.content()
        out[tuple(c[i] for i in range(1, len(c) + 1))] += 1
    return dict(out)


def _extensions(inner: Partition, k: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Partitions ``nu`` containing ``inner`` with ``|nu| = |inner| + k`` (and ``nu`` inside ``bound``)."""
    target = size(inner) + k
    max_len = len(inner) + k if bound is None else len(bound)
    inner_padded = list(inner) + [0] * max(0, max_len - len(inner))
    if len(inner_padded) > max_len:
        return

    def rec(i: int, prev: int, used: int, acc: list[int]) -> Iterator[Partition]:
        if i == max_len:
            if used == target:
                yield tuple(p for p in acc if p)
            return
        lo = inner_padded[i]
        hi = prev
        if bound is not None:
            hi = min(hi, bound[i] if i < len(bound) else 0)
        hi = min(hi, target - used)
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, v, used + v, acc)
            acc.pop()

    yield from rec(0, target, 0, [])


@lru_cache(maxsize=None)
def lr_product(la: Partition, mu: Partition) -> dict[Partition, int]:
    """``s_la * s_mu`` in the Schur basis."""
    if size(mu) > size(la):
        la, mu = mu, la
    out = {}
    for nu in _extensions(la, size(mu)):
        c = sum(1 for _ in lr_tableaux(nu, la, mu))
        if c:
            out[nu] = c
    return out


def multi_lr(taus: Sequence[Partition], target: Partition) -> int:
    """Coefficient of ``s_target`` in ``s_taus[0] * s_taus[1] * ...``."""
    target = tuple(target)
    if sum(size(t) for t in taus) != size(target):
        return 0
    if not taus:
        return int(target == ())
    current = {tuple(taus[0]): 1} if contains(target, tuple(taus[0])) else {}
    for tau in taus[1:]:
        nxt: Counter = Counter()
        for rho, c in current.items():
            for nu, d in lr_product(rho, tuple(tau)).items():
                if contains(target, nu):
                    nxt[nu] += c * d
        current = nxt
    return current.get(target, 0)


# -- B-sets ---------------------------------------------------------------------


@dataclass(frozen=True)
class TableauSequence:
    tableaux: tuple[Tableau, ...]

    @property
    def shapes(self) -> tuple[Partition, ...]:
        """Rectified shapes of the members."""
        return tuple(rectified_shape(t) for t in self.tableaux)

    @property
    def outer(self) -> Partition:
        return self.tableaux[-1].shape.outer

    def word(self) -> Word:
        return tuple(v for t in self.tableaux for v in reading_word(t))


def _bset_search(
    taus: Sequence[Partition], gamma: Partition | None, la: Partition | None
) -> Iterator[TableauSequence]:
    taus = [tuple(t) for t in taus]
    t0 = superstandard(taus[0])
    if gamma is not None and not contains(gamma, taus[0]):
        return
    counts = t0.content()
    if la is not None and any(counts[i + 1] > (la[i] if i < len(la) else 0) for i in range(len(taus[0]))):
        return
    total = sum(size(t) for t in taus)
    letter_cap = len(la) if la is not None else total
    chain: list[Tableau] = [t0]

    def rec(i: int, inner: Partition, counts: Counter) -> Iterator[TableauSequence]:
        if i == len(taus):
            if gamma is not None and inner != gamma:
                return
            if la is not None and (
                _counts_vector(counts, len(la)) != la or sum(counts.values()) != size(la)
            ):
                return
            yield TableauSequence(tuple(chain))
            return
        tau = taus[i]
        for outer in _extensions(inner, size(tau), gamma):
            shape = SkewShape(outer, inner)
            if la is not None:
                limit = tuple(la[k] - counts[k + 1] for k in range(len(la)))
            else:
                limit = (size(tau),) * letter_cap
            for cells in _fillings(shape, limit, exact=False, prefix=counts):
                t = Tableau.from_cells(shape, cells)
                if rectified_shape(t) != tau:
                    continue
                chain.append(t)
                yield from rec(i + 1, outer, counts + t.content())
                chain.pop()

    yield from rec(1, taus[0], counts)


def enumerate_bset(
    taus: Sequence[Partition], gamma_full: Partition, lambda_full: Partition
) -> Iterator[TableauSequence]:
    """Tableau sequences ``(T_0, ..., T_l)`` with ``T_0`` superstandard of shape
    ``taus[0]``, each ``T_i`` a column-strict skew tableau stacked on the previous
    outer shape and rectifying to shape ``taus[i]``, lattice concatenated reading
    word of content ``lambda_full`` and final outer shape ``gamma_full``."""
    gamma_full, lambda_full = tuple(gamma_full), tuple(lambda_full)
    total = sum(size(t) for t in taus)
    if not taus or size(gamma_full) != total or size(lambda_full) != total:
        raise ValueError("enumerate_bset: |gamma| = |lambda| = sum |tau_i| is required")
    yield from _bset_search(taus, gamma_full, lambda_full)


def bset_tally(taus: Sequence[Partition]) -> Counter:
    """``|B^{gamma,lambda}_{taus}|`` for every pair ``(gamma, lambda)`` at once."""
    tally: Counter = Counter()
    for seq in _bset_search(taus, None, None):
        c = Counter(seq.word())
        tally[(seq.outer, tuple(c[i] for i in range(1, len(c) + 1)))] += 1
    return tally


def is_valid_bset_member(seq: TableauSequence, taus: Sequence[Partition]) -> bool:
    """Check the defining conditions directly (used by tests)."""
    ts = seq.tableaux
    if len(ts) != len(taus) or ts[0] != superstandard(tuple(taus[0])):
        return False
    for prev, t in zip(ts, ts[1:]):
        if t.shape.inner != prev.shape.outer or not t.is_column_strict():
            return False
    return seq.shapes == tuple(tuple(t) for t in taus) and is_lattice(seq.word())

