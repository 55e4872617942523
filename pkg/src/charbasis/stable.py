"""The induced (h-tilde) and irreducible (s-tilde) character bases.

``h_mu`` expands in h-tilde over multiset partitions, ``h-tilde_mu`` expands in
s-tilde through Kostka numbers and horizontal strips. Both maps are
unitriangular (size first, then dominance), so s-tilde in the h basis comes
from triangular inversion. The product rules count lattice multiset tableaux.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .multiset_tableaux import (
    FillProfile,
    count_by_shape,
    enumerate_mct,
    enumerate_mct_prime,
)
from .partitions import (
    Composition,
    MultisetPartition,
    Partition,
    as_partition,
    content_of,
    enumerate_multiset_partitions,
    horizontal_strips_removed,
    m_tilde,
    partitions,
    sort_partition,
)
from .symfunc import Basis, SymExpr, at_inner, change_basis, h_in_s, multiply
from .tableaux import kostka


def _clean(d: dict) -> dict[Partition, Fraction]:
    return {k: Fraction(v) for k, v in d.items() if v}


# -- defining expansions ------------------------------------------------------------


@lru_cache(maxsize=None)
def ht_in_st_table(mu: Partition) -> dict[Partition, Fraction]:
    """``h-tilde_mu = sum_{nu |- |mu|} K_{nu,mu} sum_{nu/la horizontal strip} s-tilde_la``."""
    out: Counter = Counter()
    for nu in partitions(sum(mu)):
        k = kostka(nu, mu)
        if not k:
            continue
        for la in horizontal_strips_removed(nu):
            out[la] += k
    return _clean(out)


@lru_cache(maxsize=None)
def h_in_ht_table(mu: Partition) -> dict[Partition, Fraction]:
    """``h_mu = sum over multiset partitions pi of {{1^mu_1, 2^mu_2, ...}} of h-tilde_{m(pi)}``."""
    out: Counter = Counter()
    for pi in enumerate_multiset_partitions(content_of(mu)):
        out[m_tilde(pi)] += 1
    return _clean(out)


@lru_cache(maxsize=None)
def h_in_st_table(mu: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for nu, c in h_in_ht_table(mu).items():
        for la, d in ht_in_st_table(nu).items():
            out[la] += c * d
    return {la: c for la, c in out.items() if c}


@lru_cache(maxsize=None)
def st_in_h_table(la: Partition) -> dict[Partition, Fraction]:
    """Triangular inversion: ``s-tilde_la = h_la - sum_{ga != la} [s-tilde_ga] h_la * s-tilde_ga``.

    Every ``ga`` on the right is smaller in size, or of equal size and strictly
    dominates ``la``, so the recursion terminates.
    """
    row = h_in_st_table(la)
    if row.get(la) != 1:
        raise ArithmeticError(f"h_{la} -> s-tilde is not unitriangular at {la}")
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    out[la] += 1
    for ga, c in row.items():
        if ga == la:
            continue
        for mu, d in st_in_h_table(ga).items():
            out[mu] -= c * d
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def ht_in_h_table(mu: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for la, c in ht_in_st_table(mu).items():
        for nu, d in st_in_h_table(la).items():
            out[nu] += c * d
    return {nu: c for nu, c in out.items() if c}


def ht_in_st(mu: Sequence[int]) -> SymExpr:
    return SymExpr(Basis.ST, ht_in_st_table(as_partition(mu)))


def h_in_ht(mu: Sequence[int]) -> SymExpr:
    return SymExpr(Basis.HT, h_in_ht_table(as_partition(mu)))


def st_in_h(la: Sequence[int], method: str = "triangular") -> SymExpr:
    """``s-tilde_la`` in the h basis, by triangular inversion or by the Pieri recursion."""
    la = as_partition(la)
    if method == "triangular":
        return SymExpr(Basis.H, st_in_h_table(la))
    if method == "pieri":
        return SymExpr(Basis.H, _st_in_h_pieri(la))
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _st_in_h_pieri(la: Partition) -> dict[Partition, Fraction]:
    """``s-tilde_la = h_{la_1} s-tilde_{tail} - sum s-tilde_{gamma(T)}`` over lattice
    tableaux ``T`` in ``MCT(tail, (la_1))`` with ``gamma(T) != la``."""
    if not la:
        return {(): Fraction(1)}
    k, rest = la[0], la[1:]
    counts = count_by_shape(enumerate_mct(None, rest, (k,), FillProfile.MULTISET, True))
    if counts.get(la) != 1:
        raise ArithmeticError(f"Pieri rule lost its leading term at {la}")
    out = multiply(SymExpr.atom(Basis.H, (k,)), SymExpr(Basis.H, _st_in_h_pieri(rest)))
    terms: dict[Partition, Fraction] = defaultdict(Fraction, out.terms)
    for ga, c in counts.items():
        if ga == la:
            continue
        for mu, d in _st_in_h_pieri(ga).items():
            terms[mu] -= c * d
    return {mu: c for mu, c in terms.items() if c}


def expand_in_st(f: SymExpr) -> SymExpr:
    """Coordinates of ``f`` in the s-tilde basis."""
    return change_basis(f, Basis.ST)


# -- product rules --------------------------------------------------------------------


def _st_from_counts(counts: Counter) -> SymExpr:
    return SymExpr(Basis.ST, dict(counts))


def product_h_st(alpha: Composition, la: Partition) -> SymExpr:
    """``h_alpha_1 h_alpha_2 ... s-tilde_la`` by counting lattice multiset tableaux."""
    return _st_from_counts(count_by_shape(enumerate_mct(None, la, alpha, FillProfile.MULTISET, True)))


def product_ht_st(mu: Sequence[int], la: Partition) -> SymExpr:
    """``h-tilde_mu s-tilde_la``: at most one barred and one unbarred letter per cell."""
    mu = sort_partition(mu)
    return _st_from_counts(count_by_shape(enumerate_mct(None, la, mu, FillProfile.PAIR, True)))


def product_ht_multi_st(alpha: Composition, la: Partition) -> SymExpr:
    """``h-tilde_alpha_1 ... h-tilde_alpha_k s-tilde_la``: set-valued cells."""
    return _st_from_counts(count_by_shape(enumerate_mct(None, la, alpha, FillProfile.SET, True)))


def product_st_multi_st(alpha: Composition, la: Partition) -> SymExpr:
    """``s-tilde_alpha_1 ... s-tilde_alpha_k s-tilde_la``: sets, none of size 1 in row one."""
    return _st_from_counts(
        count_by_shape(enumerate_mct(None, la, alpha, FillProfile.SET_NO_SINGLETON_ROW1, True))
    )


def product_ht_mpi_st(pi: MultisetPartition, la: Partition) -> SymExpr:
    """``h-tilde_{m(pi)} s-tilde_la`` from tableaux whose unbarred parts are the blocks of ``pi``."""
    return _st_from_counts(count_by_shape(enumerate_mct_prime(None, la, pi, True)))


# -- algebraic routes ---------------------------------------------------------------------


def st_product(*las: Sequence[int]) -> SymExpr:
    """``s-tilde_{la_1} s-tilde_{la_2} ...`` computed through the h basis."""
    out = SymExpr.one(Basis.H)
    for la in las:
        out = multiply(out, st_in_h(la))
    return expand_in_st(out)


def ht_product_by_set_partitions(alpha: Composition) -> SymExpr:
    """``h-tilde_alpha_1 ... h-tilde_alpha_k`` as a sum over set partitions of
    ``{{1^alpha_1, ..., k^alpha_k}}``."""
    out: Counter = Counter()
    for pi in enumerate_multiset_partitions(content_of(alpha), set_blocks_only=True):
        out[m_tilde(pi)] += 1
    return SymExpr(Basis.HT, dict(out))


def alternating_sum_st(alpha: Composition, la: Partition) -> SymExpr:
    """``sum_{S in [k]} (-1)^|S| h-tilde_{alpha - chi_S} s-tilde_la`` via the set-tableau rule."""
    k = len(alpha)
    total = SymExpr(Basis.ST)
    for r in range(k + 1):
        for subset in combinations(range(k), r):
            beta = [a - (i in subset) for i, a in enumerate(alpha)]
            if any(b < 0 for b in beta):
                continue
            term = product_ht_multi_st(tuple(b for b in beta if b), la)
            total = total + (-1) ** r * term
    return total


def gbar(la: Sequence[int], mu: Sequence[int]) -> SymExpr:
    """``s-tilde_la s-tilde_mu`` in s-tilde; the coefficients are stable Kronecker coefficients."""
    return st_product(la, mu)


def gbar_coeff(la: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    c = gbar(la, mu).coeff(tuple(nu))
    assert c.denominator == 1
    return int(c)


def restriction_mult(nu: Sequence[int], la: Sequence[int]) -> int:
    """Multiplicity of s-tilde_la in s_nu."""
    nu, la = as_partition(nu), as_partition(la)
    if sum(la) > sum(nu):
        raise ValueError("restriction_mult needs |la| <= |nu|")
    c = expand_in_st(SymExpr.atom(Basis.S, nu)).coeff(la)
    return int(c)


def s_in_st(nu: Sequence[int]) -> SymExpr:
    return expand_in_st(SymExpr(Basis.S, {as_partition(nu): 1}))


def h_in_s_expr(mu: Sequence[int]) -> SymExpr:
    return SymExpr(Basis.S, h_in_s(as_partition(mu)))


def gram_schmidt(max_size: int) -> dict[Partition, SymExpr]:
    """Orthogonalise ``s_la`` (by size, then lex decreasing) under the @-product.

    Each vector is ``s_la`` minus its projections onto the earlier ones; the
    results are returned in h, unnormalised, so they can be compared with
    s-tilde directly (whose @-norm is 1).
    """
    n = 2 * max_size
    done: list[tuple[Partition, SymExpr, Fraction]] = []
    out: dict[Partition, SymExpr] = {}
    for k in range(max_size + 1):
        for la in partitions(k):
            v = change_basis(SymExpr.atom(Basis.S, la), Basis.H)
            for _, e, norm in done:
                c = at_inner(v, e, n) / norm
                if c:
                    v = v - c * e
            done.append((la, v, at_inner(v, v, n)))
            out[la] = v
    return out
