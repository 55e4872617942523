"""Independent checks and applications.

The oracles here use only characters and Littlewood-Richardson counts, never
the multiset-tableau enumerators, so agreement with the tableau rules is real
evidence. The applications (partition algebra dimensions, entanglement
counts) are thin wrappers over the product rules.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .multiset_tableaux import single_row_set_tableaux
from .partitions import Partition, as_partition, pad, partitions, size, z_of
from .stable import product_ht_multi_st, product_st_multi_st, st_in_h
from .symfunc import Basis, SymExpr, at_inner, change_basis, kronecker_product, mn_character
from .tableaux import bset_tally, enumerate_bset, multi_lr, skew_expansion


def finite_n_kronecker(la: Sequence[int], mu: Sequence[int], nu: Sequence[int], n: int) -> int:
    """``g`` for the padded triple ``(n-|la|, la), (n-|mu|, mu), (n-|nu|, nu)``,
    from ``sum_rho chi chi chi / z_rho`` over ``rho |- n``."""
    big = [pad(n, as_partition(x)) for x in (la, mu, nu)]
    total = Fraction(0)
    for rho in partitions(n):
        total += Fraction(
            mn_character(big[0], rho) * mn_character(big[1], rho) * mn_character(big[2], rho),
            z_of(rho),
        )
    if total.denominator != 1:
        raise ArithmeticError("character sum is not an integer")
    return int(total)


def _remove_cells(rho: Partition, k: int) -> Iterator[Partition]:
    """Partitions ``sigma`` inside ``rho`` with ``|sigma| = |rho| - k``."""
    target = size(rho) - k
    if target < 0:
        return

    def rec(i: int, prev: int, left: int, acc: tuple) -> Iterator[Partition]:
        if i == len(rho):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        room = sum(min(prev, r) for r in rho[i + 1 :])
        for v in range(min(rho[i], prev, left), -1, -1):
            if left - v > room:
                break
            yield from rec(i + 1, v, left - v, acc + (v,))

    yield from rec(0, target, target, ())


def stable_coeff_lr_sum(mu: Sequence[int], la: Sequence[int], gamma: Sequence[int], n: int) -> int:
    """``sum over (tau_0, ..., tau_l) of c^{(n-|gamma|,gamma)}_{tau...} c^{(n-|la|,la)}_{tau...}``
    with ``|tau_0| = n - |mu|`` and ``|tau_i| = mu_i``. Any ``n`` for which the
    padding is valid is accepted; the value equals the s-tilde_gamma coefficient
    of h-tilde_mu s-tilde_la once ``n >= 2(|mu| + |la|)``.

    The tau chain is peeled from the outside in: a state is a pair of
    partitions still to be filled, weighted by the product of the skew LR
    coefficients used so far. At the end both members of the pair must equal
    ``tau_0``.
    """
    mu, la, gamma = as_partition(mu), as_partition(la), as_partition(gamma)
    if n < size(mu):
        raise ValueError(f"stable_coeff_lr_sum needs n >= |mu| = {size(mu)}")
    states: Counter = Counter({(pad(n, gamma), pad(n, la)): 1})
    for k in reversed(mu):
        nxt: Counter = Counter()
        for (rho, sigma), w in states.items():
            for rho2 in _remove_cells(rho, k):
                left = skew_expansion(rho, rho2)
                for sigma2 in _remove_cells(sigma, k):
                    right = skew_expansion(sigma, sigma2)
                    c = sum(v * right.get(tau, 0) for tau, v in left.items())
                    if c:
                        nxt[(rho2, sigma2)] += w * c
        states = nxt
    return sum(w for (rho, sigma), w in states.items() if rho == sigma)


def verify_bset_identity(
    taus: Sequence[Sequence[int]], gamma: Sequence[int], la: Sequence[int], n: int | None = None
) -> bool:
    """``|B^{gamma,la}_{taus}| == c^gamma_{taus} * c^la_{taus}``.

    With ``n`` given, ``gamma`` and ``la`` are padded to ``(n-|gamma|, gamma)``
    and ``(n-|la|, la)`` first.
    """
    taus = [as_partition(t) for t in taus]
    g, l = as_partition(gamma), as_partition(la)
    if n is not None:
        g, l = pad(n, g), pad(n, l)
    count = sum(1 for _ in enumerate_bset(taus, g, l))
    return count == multi_lr(taus, g) * multi_lr(taus, l)


def verify_bset_identity_all(taus: Sequence[Sequence[int]]) -> bool:
    """The identity for every ``(gamma, la)`` of the right size, from one enumeration."""
    taus = [as_partition(t) for t in taus]
    tally = bset_tally(taus)
    total = sum(size(t) for t in taus)
    lr = {g: multi_lr(taus, g) for g in partitions(total)}
    if any(g not in lr or l not in lr for g, l in tally):
        return False
    return all(tally.get((g, l), 0) == lr[g] * lr[l] for g in lr for l in lr)


def tau_tuples(max_total: int, max_len: int) -> Iterator[tuple[Partition, ...]]:
    """Tuples of 1..max_len non-empty partitions with total size at most ``max_total``."""

    def rec(left: int, slots: int) -> Iterator[tuple[Partition, ...]]:
        yield ()
        if slots == 0:
            return
        for k in range(1, left + 1):
            for tau in partitions(k):
                for rest in rec(left - k, slots - 1):
                    yield (tau,) + rest

    for t in rec(max_total, max_len):
        if t:
            yield t


# -- applications ------------------------------------------------------------------------


def partition_algebra_dim(la: Sequence[int], r: int) -> int:
    """Coefficient of s-tilde_la in ``(h-tilde_1)^r``."""
    return int(product_ht_multi_st((1,) * r, ()).coeff(as_partition(la)))


def quasi_partition_dim(la: Sequence[int], r: int) -> int:
    """Coefficient of s-tilde_la in ``(s-tilde_1)^r``."""
    return int(product_st_multi_st((1,) * r, ()).coeff(as_partition(la)))


@lru_cache(maxsize=None)
def partition_algebra_dims(r: int) -> dict[Partition, int]:
    return {la: int(c) for la, c in product_ht_multi_st((1,) * r, ()).terms.items()}


def _entanglement_content(d: int, k: int, a: int) -> tuple[int, ...]:
    if not 0 <= a <= k:
        raise ValueError("need 0 <= a <= k")
    return tuple(i for i in range(1, k + 1) for _ in range(d if i <= a else d - 1))


def entanglement_coeff(d: int, k: int, a: int) -> int:
    """Single-row set-valued tableaux with at most ``2d`` cells and content
    ``{1^d, ..., a^d, (a+1)^(d-1), ..., k^(d-1)}``."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    content = _entanglement_content(d, k, a)
    return sum(1 for _ in single_row_set_tableaux(content, max_cells=2 * d))


def entanglement_coeff_kronecker(d: int, k: int, a: int) -> int:
    """Coefficient of ``s_(2d)`` in ``h_(d,d)^{*a} * h_(d+1,d-1)^{*(k-a)}`` (Kronecker powers)."""
    if not 0 <= a <= k:
        raise ValueError("need 0 <= a <= k")
    factors = [(d, d)] * a + [tuple(x for x in (d + 1, d - 1) if x)] * (k - a)
    out = SymExpr.atom(Basis.H, factors[0])
    for f in factors[1:]:
        out = kronecker_product(out, SymExpr.atom(Basis.H, f))
    return int(change_basis(out, Basis.S).coeff((2 * d,)))


def restriction_mult_by_characters(nu: Sequence[int], la: Sequence[int]) -> Fraction:
    """``<s_nu, s-tilde_la>_@``, the character route to the restriction multiplicity."""
    return at_inner(SymExpr.atom(Basis.S, as_partition(nu)), st_in_h(la))
