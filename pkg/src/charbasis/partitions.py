"""Partitions, compositions, multisets and multiset partitions.

Everything here is a plain tuple so values hash, compare and print cheaply:

* a partition is a weakly decreasing tuple of positive ints, ``()`` is the
  partition of 0;
* a composition is a tuple of positive ints;
* a multiset is a sorted tuple of letters (``(1, 1, 2)`` is {{1,1,2}});
* a multiset partition is a tuple of blocks (multisets), listed from the
  largest block to the smallest in reverse lex order;
* a word is a tuple of positive ints.
"""
from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Multiset = tuple[int, ...]
MultisetPartition = tuple[Multiset, ...]
Word = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and freeze ``parts`` as a partition."""
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {list(parts)}")
    return parts


def as_composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"not a composition (parts must be positive): {list(parts)}")
    return parts


def sort_partition(parts: Iterable[int]) -> Partition:
    """``sort(alpha)``: the partition obtained by sorting a composition."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def size(la: Sequence[int]) -> int:
    return sum(la)


def tail(la: Partition) -> Partition:
    """The partition with its first part removed."""
    return la[1:]


def pad(n: int, la: Partition) -> Partition:
    """``(n - |la|, la)``; raises if the result is not a partition."""
    first = n - sum(la)
    if first < (la[0] if la else 0):
        raise ValueError(f"n={n} too small to pad {list(la)}")
    return (first,) + la if first > 0 else la


def multiplicities(la: Partition) -> Counter:
    return Counter(la)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> Iterator[Partition]:
    """Partitions of size 0, 1, ..., n, each size in lex-decreasing order."""
    for k in range(n + 1):
        yield from partitions(k)


def compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p >= i) for i in range(1, la[0] + 1))


def z_of(la: Partition) -> int:
    out = 1
    for part, mult in Counter(la).items():
        out *= part**mult * factorial(mult)
    return out


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


def is_horizontal_strip(nu: Partition, la: Partition) -> bool:
    """True iff ``nu/la`` is a horizontal strip (no two cells in a column)."""
    if not contains(nu, la):
        return False
    return all(nu[i + 1] <= (la[i] if i < len(la) else 0) for i in range(len(nu) - 1))


def horizontal_strips_removed(nu: Partition) -> Iterator[Partition]:
    """All ``la`` such that ``nu/la`` is a horizontal strip."""
    ranges = []
    for i, part in enumerate(nu):
        low = nu[i + 1] if i + 1 < len(nu) else 0
        ranges.append(range(part, low - 1, -1))

    def rec(i: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(ranges):
            yield tuple(p for p in prefix if p)
            return
        for v in ranges[i]:
            yield from rec(i + 1, prefix + (v,))

    yield from rec(0, ())


def dominates(la: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(la), len(mu))):
        a += la[i] if i < len(la) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


# -- multisets ---------------------------------------------------------------


def multiset(letters: Iterable[int]) -> Multiset:
    return tuple(sorted(letters))


def multiset_from_counts(counts: dict[int, int] | Sequence[int]) -> Multiset:
    """``{1: 2, 3: 1}`` or ``(2, 0, 1)`` (exponents of 1, 2, 3, ...) -> ``(1, 1, 3)``."""
    if not isinstance(counts, dict):
        counts = {i + 1: c for i, c in enumerate(counts)}
    return tuple(letter for letter in sorted(counts) for _ in range(counts[letter]))


def content_of(mu: Sequence[int]) -> Multiset:
    """The multiset {{1^mu_1, 2^mu_2, ...}}."""
    return multiset_from_counts(tuple(mu))


def revlex_key(letters: Iterable) -> tuple:
    """Sort key realising the reverse lex order on multisets.

    Letters are compared from the largest down; a multiset that runs out first
    is smaller. That is exactly tuple comparison of the decreasingly sorted
    letters.
    """
    return tuple(sorted(letters, reverse=True))


def reverse_lex_less(m: Iterable, n: Iterable) -> bool:
    """Strict reverse lex comparison of two multisets of comparable letters.

    Objects with a ``key`` attribute (``CellLabel``) are compared by that key.
    """
    km = m.key if hasattr(m, "key") else revlex_key(m)
    kn = n.key if hasattr(n, "key") else revlex_key(n)
    return km < kn


def sub_multisets(ms: Multiset) -> Iterator[Multiset]:
    """Every sub-multiset of ``ms`` (including empty and ``ms`` itself) once."""
    counts = sorted(Counter(ms).items())

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(counts):
            yield ()
            return
        letter, c = counts[i]
        for rest in rec(i + 1):
            for k in range(c + 1):
                yield (letter,) * k + rest

    yield from rec(0)


def multiset_difference(a: Multiset, b: Multiset) -> Multiset:
    left = Counter(a)
    left.subtract(b)
    if any(v < 0 for v in left.values()):
        raise ValueError(f"{b} is not contained in {a}")
    return multiset(left.elements())


def enumerate_multiset_partitions(
    content: Iterable[int], set_blocks_only: bool = False
) -> Iterator[MultisetPartition]:
    """Each multiset partition of ``content`` exactly once.

    Blocks come out in reverse lex decreasing order; since the reverse lex
    largest block must hold the largest remaining letter, the recursion never
    dead-ends on that letter.
    """
    content = multiset(content)

    def rec(remaining: Multiset, bound: tuple | None) -> Iterator[MultisetPartition]:
        if not remaining:
            yield ()
            return
        top = remaining[-1]
        rest = remaining[:-1]
        for extra in sub_multisets(rest):
            block = multiset(extra + (top,))
            if set_blocks_only and len(set(block)) != len(block):
                continue
            key = revlex_key(block)
            if bound is not None and key > bound:
                continue
            for tail_blocks in rec(multiset_difference(rest, extra), key):
                yield (block,) + tail_blocks

    yield from rec(content, None)


def m_tilde(pi: Iterable[Multiset]) -> Partition:
    """Block multiplicities of a multiset partition, as a partition."""
    return tuple(sorted(Counter(tuple(b) for b in pi).values(), reverse=True))


def distinct_blocks(pi: Iterable[Multiset]) -> list[Multiset]:
    """Distinct blocks of ``pi`` in reverse lex increasing order."""
    return sorted({tuple(b) for b in pi}, key=revlex_key)


def alpha_of(pi: Iterable[Multiset]) -> Composition:
    """Block multiplicities listed in reverse lex increasing block order."""
    counts = Counter(tuple(b) for b in pi)
    return tuple(counts[b] for b in distinct_blocks(counts))


def is_lattice(word: Iterable[int]) -> bool:
    """Every prefix holds at least as many ``i`` as ``i + 1``."""
    counts: Counter = Counter()
    for letter in word:
        counts[letter] += 1
        if letter > 1 and counts[letter] > counts[letter - 1]:
            return False
    return True


def bell(n: int) -> int:
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


# -- text form ----------------------------------------------------------------

_PARTITION_RE = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[2,1]"`` or ``"[]"``."""
    m = _PARTITION_RE.match(text)
    if not m:
        raise ValueError(f"bad partition literal {text!r}")
    body = m.group(1)
    parts = tuple(int(x) for x in body.split(",")) if body else ()
    return as_partition(parts)


def parse_composition(text: str) -> Composition:
    m = _PARTITION_RE.match(text)
    if not m:
        raise ValueError(f"bad composition literal {text!r}")
    body = m.group(1)
    return as_composition(int(x) for x in body.split(",")) if body else ()


def format_partition(la: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in la) + "]"
