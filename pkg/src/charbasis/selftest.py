"""Property suites runnable from the command line.

Each suite takes a degree bound ``d`` and returns a list of failure
descriptions (empty means pass). Modules are accessed through their
attributes so a patched function is what gets tested.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import oracles, partitions, stable, symfunc, tableaux
from .partitions import compositions, partitions_upto
from .symfunc import Basis, SymExpr


def _conjugate(d: int) -> list[str]:
    return [
        f"conjugate not involutive at {la}"
        for la in partitions_upto(max(d, 4))
        if partitions.conjugate(partitions.conjugate(la)) != la
    ]


def _z_counts(d: int) -> list[str]:
    bad = []
    for n in range(1, min(d, 5) + 1):
        types: Counter = Counter()
        for perm in permutations(range(n)):
            seen, cycle = set(), []
            for i in range(n):
                if i in seen:
                    continue
                k, j = 0, i
                while j not in seen:
                    seen.add(j)
                    j = perm[j]
                    k += 1
                cycle.append(k)
            types[partitions.sort_partition(cycle)] += 1
        total = 1
        for k in range(2, n + 1):
            total *= k
        for la, c in types.items():
            if partitions.z_of(la) * c != total:
                bad.append(f"z_{la} * {c} != {n}!")
    return bad


def _multiset_partitions(d: int) -> list[str]:
    bad = []
    for r in range(d + 1):
        got = sum(1 for _ in partitions.enumerate_multiset_partitions((1,) * r))
        if got != len(partitions.partitions(r)):
            bad.append(f"{{1^{r}}}: {got} multiset partitions")
        got = sum(1 for _ in partitions.enumerate_multiset_partitions(tuple(range(1, r + 1))))
        if got != partitions.bell(r):
            bad.append(f"[{r}]: {got} set partitions")
    return bad


def _lr_methods(d: int) -> list[str]:
    bad = []
    for n in range(d + 1):
        for nu in partitions.partitions(n):
            for k in range(n + 1):
                for la in partitions.partitions(k):
                    for mu in partitions.partitions(n - k):
                        a = tableaux.lr_coefficient(la, mu, nu, tableaux.LRMethod.LATTICE_PAIR)
                        b = tableaux.lr_coefficient(la, mu, nu, tableaux.LRMethod.JDT)
                        if a != b:
                            bad.append(f"c^{nu}_{la},{mu}: {a} vs {b}")
    return bad


def _round_trip(d: int) -> list[str]:
    bad = []
    bases = (Basis.H, Basis.P, Basis.S, Basis.HT, Basis.ST)
    for la in partitions_upto(d):
        for b in bases:
            f = SymExpr.atom(b, la)
            for c in bases:
                if symfunc.change_basis(symfunc.change_basis(f, c), b) != f:
                    bad.append(f"{b.value}{list(la)} via {c.value}")
    return bad


def _hall(d: int) -> list[str]:
    bad = []
    small = list(partitions_upto(d))
    for la in small:
        for mu in small:
            v = symfunc.hall_inner(SymExpr.atom(Basis.S, la), SymExpr.atom(Basis.S, mu))
            if v != (la == mu):
                bad.append(f"<s{la}, s{mu}> = {v}")
            if sum(la) == sum(mu):
                if symfunc.mn_character(la, mu) != symfunc.hall_inner(
                    SymExpr.atom(Basis.S, la), SymExpr.atom(Basis.P, mu)
                ):
                    bad.append(f"chi^{la}({mu})")
    return bad


def _pieri_table(d: int) -> list[str]:
    return [
        f"s-tilde{la}: triangular and Pieri differ"
        for la in partitions_upto(d)
        if stable.st_in_h(la, "triangular") != stable.st_in_h(la, "pieri")
    ]


def _orthonormal(d: int) -> list[str]:
    bad = []
    small = list(partitions_upto(d))
    for la in small:
        for mu in small:
            for n in (2 * d, 2 * d + 1):
                v = symfunc.at_inner(stable.st_in_h(la), stable.st_in_h(mu), n)
                if v != (la == mu):
                    bad.append(f"<st{la}, st{mu}>_@ = {v} at n={n}")
    return bad


def _gram_schmidt(d: int) -> list[str]:
    gs = stable.gram_schmidt(d)
    return [f"Gram-Schmidt differs at {la}" for la, v in gs.items() if v != stable.st_in_h(la)]


def _h_rule(d: int) -> list[str]:
    bad = []
    for a in range(d + 1):
        for alpha in compositions(a):
            h_alpha = SymExpr.atom(Basis.H, partitions.sort_partition(alpha))
            for la in partitions_upto(d - a):
                lhs = stable.product_h_st(alpha, la)
                rhs = stable.expand_in_st(symfunc.multiply(h_alpha, stable.st_in_h(la)))
                if lhs != rhs:
                    bad.append(f"h{alpha} * st{la}")
    return bad


def _st_rule(d: int) -> list[str]:
    bad = []
    for a in range(d + 1):
        for alpha in compositions(a):
            for la in partitions_upto(d - a):
                if stable.product_st_multi_st(alpha, la) != stable.alternating_sum_st(alpha, la):
                    bad.append(f"st{alpha} * st{la} alternating sum")
                st_route = stable.st_product(*[(k,) for k in alpha], la)
                if stable.product_st_multi_st(alpha, la) != st_route:
                    bad.append(f"st{alpha} * st{la} algebraic route")
    return bad


def _ht_rule(d: int) -> list[str]:
    bad = []
    for m in range(d + 1):
        for mu in partitions.partitions(m):
            for la in partitions_upto(d - m):
                prod = stable.product_ht_st(mu, la)
                n = 2 * (m + sum(la))
                for g in partitions_upto(m + sum(la)):
                    if oracles.stable_coeff_lr_sum(mu, la, g, n) != prod.coeff(g):
                        bad.append(f"ht{mu} * st{la} at st{g}")
    return bad


def _set_partition_product(d: int) -> list[str]:
    bad = []
    for a in range(d + 1):
        for alpha in compositions(a):
            algebraic = SymExpr.one(Basis.HT)
            for k in alpha:
                algebraic = symfunc.multiply(algebraic, SymExpr.atom(Basis.HT, (k,)))
            if stable.ht_product_by_set_partitions(alpha) != algebraic:
                bad.append(f"ht{alpha}")
    return bad


def _stability(d: int) -> list[str]:
    bad = []
    small = list(partitions_upto(d))
    for la in small:
        for mu in small:
            if sum(la) + sum(mu) > d + 1:
                continue
            g = stable.gbar(la, mu)
            n = 2 * (sum(la) + sum(mu))
            for nu in partitions_upto(sum(la) + sum(mu)):
                for m in (n, n + 1):
                    if oracles.finite_n_kronecker(la, mu, nu, m) != g.coeff(nu):
                        bad.append(f"gbar {la},{mu},{nu} at n={m}")
    return bad


def _bsets(d: int) -> list[str]:
    return [
        f"B-set identity fails for {taus}"
        for taus in oracles.tau_tuples(min(d, 5), 4)
        if not oracles.verify_bset_identity_all(taus)
    ]


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[int], list[str]]


SUITES = (
    Suite("conjugate involution", _conjugate),
    Suite("z_la by permutation count", _z_counts),
    Suite("multiset partition counts", _multiset_partitions),
    Suite("LR lattice-pair vs jeu de taquin", _lr_methods),
    Suite("basis round trips", _round_trip),
    Suite("Hall orthonormality and characters", _hall),
    Suite("s-tilde: Pieri vs triangular", _pieri_table),
    Suite("@-orthonormality at n and n+1", _orthonormal),
    Suite("Gram-Schmidt reproduces s-tilde", _gram_schmidt),
    Suite("h_alpha s-tilde rule vs algebra", _h_rule),
    Suite("s-tilde product rule vs alternating sum", _st_rule),
    Suite("h-tilde_mu s-tilde rule vs LR sum", _ht_rule),
    Suite("h-tilde products by set partitions", _set_partition_product),
    Suite("stable vs finite-n Kronecker", _stability),
    Suite("B-set counts vs LR products", _bsets),
)


@dataclass
class SuiteResult:
    name: str
    failures: list[str]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(max_degree: int) -> list[SuiteResult]:
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    results = []
    for suite in SUITES:
        start = time.perf_counter()
        try:
            failures = suite.run(max_degree)
        except Exception as exc:  # a crash is a failure, not an abort
            failures = [f"{type(exc).__name__}: {exc}"]
        results.append(SuiteResult(suite.name, failures, time.perf_counter() - start))
    return results

