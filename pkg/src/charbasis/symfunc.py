"""Exact sparse symmetric functions in the h, p, s, h-tilde and s-tilde bases.

Coefficients are :class:`fractions.Fraction`. The h basis is the working
basis: products and conversions route through it, the p basis is only used
for scalar products, Kronecker products and evaluation at permutation-matrix
eigenvalues.
"""
from __future__ import annotations

import enum
import json
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .partitions import (
    Partition,
    as_partition,
    dominates,
    format_partition,
    partitions,
    sort_partition,
    z_of,
)
from .tableaux import kostka, lr_product

Number = Union[int, Fraction]


class Basis(enum.Enum):
    H = "h"
    P = "p"
    S = "s"
    HT = "ht"
    ST = "st"


def term_order(la: Partition) -> tuple:
    """Sort key: by size, then lexicographically decreasing."""
    return (sum(la), tuple(-p for p in la))


class SymExpr:
    """An immutable finite linear combination of basis elements."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Basis, terms: Mapping[Partition, Number] | None = None):
        clean: dict[Partition, Fraction] = {}
        for la, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[as_partition(la)] = c
        self.basis = basis
        self._terms = clean

    @classmethod
    def atom(cls, basis: Basis, la: Iterable[int] = (), coeff: Number = 1) -> "SymExpr":
        return cls(basis, {tuple(la): coeff})

    @classmethod
    def one(cls, basis: Basis = Basis.H) -> "SymExpr":
        return cls(basis, {(): 1})

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: term_order(kv[0]))

    def coeff(self, la: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(la), Fraction(0))

    def degree(self) -> int:
        return max((sum(la) for la in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({sum(la) for la in self._terms}) <= 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "SymExpr") -> "SymExpr":
        return add(self, other)

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return add(self, scale(-1, other))

    def __neg__(self) -> "SymExpr":
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __repr__(self) -> str:
        if not self._terms:
            return f"0 [{self.basis.value}]"
        out = []
        for la, c in self.items():
            atom = f"{self.basis.value}{format_partition(la)}"
            out.append(atom if c == 1 else f"{c}*{atom}")
        return " + ".join(out)

    def to_json(self) -> str:
        return json.dumps(to_json_obj(self), separators=(",", ":"))


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_json_obj(f: SymExpr) -> dict:
    return {
        "basis": f.basis.value,
        "terms": [{"partition": list(la), "coeff": _fmt_coeff(c)} for la, c in f.items()],
    }


def from_json(data: str | dict) -> SymExpr:
    if isinstance(data, str):
        data = json.loads(data)
    basis = Basis(data["basis"])
    terms: dict[Partition, Fraction] = {}
    for term in data["terms"]:
        terms[tuple(term["partition"])] = Fraction(term["coeff"])
    return SymExpr(basis, terms)


# -- linear structure ---------------------------------------------------------


def add(f: SymExpr, g: SymExpr) -> SymExpr:
    if f.basis != g.basis:
        raise ValueError(f"cannot add {f.basis.value} and {g.basis.value} expressions")
    terms = defaultdict(Fraction, f._terms)
    for la, c in g._terms.items():
        terms[la] += c
    return SymExpr(f.basis, terms)


def scale(c: Number, f: SymExpr) -> SymExpr:
    c = Fraction(c)
    return SymExpr(f.basis, {la: c * v for la, v in f._terms.items()})


def linear_combination(basis: Basis, pieces: Iterable[tuple[Number, SymExpr]]) -> SymExpr:
    """``sum c * f`` where each ``f`` is already in ``basis``."""
    terms: dict[Partition, Fraction] = defaultdict(Fraction)
    for c, f in pieces:
        if f.basis != basis:
            raise ValueError("mixed bases in linear combination")
        for la, v in f._terms.items():
            terms[la] += c * v
    return SymExpr(basis, terms)


def _expand(f: SymExpr, table, basis: Basis) -> SymExpr:
    """Apply a per-partition expansion ``table(la) -> dict`` linearly."""
    terms: dict[Partition, Fraction] = defaultdict(Fraction)
    for la, c in f._terms.items():
        for mu, d in table(la).items():
            terms[mu] += c * d
    return SymExpr(basis, terms)


# -- products in multiplicative bases -------------------------------------------------


def _concat_product(a: dict, b: dict) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for la, c in a.items():
        for mu, d in b.items():
            out[sort_partition(la + mu)] += c * d
    return out


def _schur_product(a: dict, b: dict) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for la, c in a.items():
        for mu, d in b.items():
            for nu, e in lr_product(la, mu).items():
                out[nu] += c * d * e
    return out


def multiply(f: SymExpr, g: SymExpr) -> SymExpr:
    """Ordinary product.

    h and p multiply by merging indices, s by Littlewood-Richardson. Products
    of two h-tilde or two s-tilde expressions go through h and come back; any
    other mix of bases is returned in h.
    """
    if f.basis == g.basis and f.basis in (Basis.H, Basis.P):
        return SymExpr(f.basis, _concat_product(f._terms, g._terms))
    if f.basis == g.basis == Basis.S:
        return SymExpr(Basis.S, _schur_product(f._terms, g._terms))
    fh, gh = change_basis(f, Basis.H), change_basis(g, Basis.H)
    prod = SymExpr(Basis.H, _concat_product(fh._terms, gh._terms))
    if f.basis == g.basis:
        return change_basis(prod, f.basis)
    return prod


def power(f: SymExpr, k: int) -> SymExpr:
    out = change_basis(SymExpr.one(), f.basis)
    for _ in range(k):
        out = multiply(out, f)
    return out


# -- classical conversions ------------------------------------------------------------


@lru_cache(maxsize=None)
def _hk_in_p(k: int) -> dict[Partition, Fraction]:
    return {la: Fraction(1, z_of(la)) for la in partitions(k)}


@lru_cache(maxsize=None)
def h_in_p(la: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for k in la:
        out = _concat_product(out, _hk_in_p(k))
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _pk_in_h(k: int) -> dict[Partition, Fraction]:
    # Newton: k h_k = sum_{i=1}^{k} p_i h_{k-i}
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    out[(k,)] += k
    for i in range(1, k):
        for la, c in _concat_product(_pk_in_h(i), {(k - i,): Fraction(1)}).items():
            out[la] -= c
    return {la: c for la, c in out.items() if c}


@lru_cache(maxsize=None)
def p_in_h(la: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for k in la:
        out = _concat_product(out, _pk_in_h(k))
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def h_in_s(mu: Partition) -> dict[Partition, Fraction]:
    """``h_mu = sum_la K_{la,mu} s_la``."""
    out = {}
    for la in partitions(sum(mu)):
        if dominates(la, mu):
            k = kostka(la, mu)
            if k:
                out[la] = Fraction(k)
    return out


@lru_cache(maxsize=None)
def s_in_h(mu: Partition) -> dict[Partition, Fraction]:
    """Invert the unitriangular Kostka matrix: ``s_mu = h_mu - sum_{la > mu} K_{la,mu} s_la``."""
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    out[mu] += 1
    for la, k in h_in_s(mu).items():
        if la == mu:
            continue
        for nu, c in s_in_h(la).items():
            out[nu] -= k * c
    return {la: c for la, c in out.items() if c}


def _to_h(f: SymExpr) -> SymExpr:
    if f.basis == Basis.H:
        return f
    if f.basis == Basis.P:
        return _expand(f, p_in_h, Basis.H)
    if f.basis == Basis.S:
        return _expand(f, s_in_h, Basis.H)
    from . import stable

    if f.basis == Basis.ST:
        return _expand(f, stable.st_in_h_table, Basis.H)
    return _expand(f, stable.ht_in_h_table, Basis.H)


def _from_h(f: SymExpr, to: Basis) -> SymExpr:
    if to == Basis.H:
        return f
    if to == Basis.P:
        return _expand(f, h_in_p, Basis.P)
    if to == Basis.S:
        return _expand(f, h_in_s, Basis.S)
    from . import stable

    if to == Basis.ST:
        return _expand(f, stable.h_in_st_table, Basis.ST)
    return _expand(f, stable.h_in_ht_table, Basis.HT)


def change_basis(f: SymExpr, to: Basis) -> SymExpr:
    if f.basis == to:
        return f
    if f.basis == Basis.HT and to == Basis.ST:
        from . import stable

        return _expand(f, stable.ht_in_st_table, Basis.ST)
    return _from_h(_to_h(f), to)


# -- characters -------------------------------------------------------------------------


def _rim_hooks(la: Partition, k: int):
    """Yield ``(la minus a rim hook of length k, leg length)``."""
    n = len(la)
    beta = [la[i] + (n - 1 - i) for i in range(n)]
    occupied = set(beta)
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((x if x != b else target for x in beta), reverse=True)
        nu = tuple(new_beta[i] - (n - 1 - i) for i in range(n))
        yield tuple(p for p in nu if p), height


@lru_cache(maxsize=None)
def mn_character(la: Partition, mu: Partition) -> int:
    """``chi^la(mu)`` by the Murnaghan-Nakayama rule, longest part of ``mu`` first."""
    la, mu = tuple(la), sort_partition(mu)
    if sum(la) != sum(mu):
        raise ValueError(f"mn_character: |{list(la)}| != |{list(mu)}|")
    if not mu:
        return 1
    return sum((-1) ** ht * mn_character(nu, mu[1:]) for nu, ht in _rim_hooks(la, mu[0]))


def p_at_xi(k: int, mu: Partition) -> int:
    """``p_k`` evaluated at the eigenvalues of a permutation of cycle type ``mu``."""
    mult: dict[int, int] = defaultdict(int)
    for part in mu:
        mult[part] += 1
    return sum(d * m for d, m in mult.items() if k % d == 0)


def _p_terms_at_xi(terms: dict[Partition, Fraction], mu: Partition) -> Fraction:
    cache: dict[int, int] = {}
    total = Fraction(0)
    for la, c in terms.items():
        v = 1
        for k in la:
            if k not in cache:
                cache[k] = p_at_xi(k, mu)
            v *= cache[k]
            if not v:
                break
        total += c * v
    return total


def eval_at_xi(f: SymExpr, mu: Partition) -> Fraction:
    return _p_terms_at_xi(change_basis(f, Basis.P)._terms, tuple(mu))


def hall_inner(f: SymExpr, g: SymExpr) -> Fraction:
    fp, gp = change_basis(f, Basis.P), change_basis(g, Basis.P)
    return sum(
        (c * gp._terms[la] * z_of(la) for la, c in fp._terms.items() if la in gp._terms),
        Fraction(0),
    )


def at_inner(f: SymExpr, g: SymExpr, n: int | None = None) -> Fraction:
    """Character scalar product ``sum_{nu |- n} f[Xi_nu] g[Xi_nu] / z_nu``.

    ``n`` defaults to ``2 * max(deg f, deg g)``, the smallest admissible value.
    """
    need = 2 * max(f.degree(), g.degree())
    if n is None:
        n = need
    elif n < need:
        raise ValueError(f"at_inner needs n >= {need}, got {n}")
    fp, gp = change_basis(f, Basis.P)._terms, change_basis(g, Basis.P)._terms
    return sum(
        (_p_terms_at_xi(fp, nu) * _p_terms_at_xi(gp, nu) / z_of(nu) for nu in partitions(n)),
        Fraction(0),
    )


def kronecker_product(f: SymExpr, g: SymExpr) -> SymExpr:
    """``p_la * p_mu = delta z_la p_la`` extended bilinearly; returned in s."""
    fp, gp = change_basis(f, Basis.P), change_basis(g, Basis.P)
    terms = {la: c * gp._terms[la] * z_of(la) for la, c in fp._terms.items() if la in gp._terms}
    return change_basis(SymExpr(Basis.P, terms), Basis.S)


def frobenius(f: SymExpr, n: int) -> SymExpr:
    """``phi_n(f) = sum_{nu |- n} f[Xi_nu] p_nu / z_nu`` (in p)."""
    fp = change_basis(f, Basis.P)._terms
    return SymExpr(Basis.P, {nu: _p_terms_at_xi(fp, nu) / z_of(nu) for nu in partitions(n)})


# -- constructors -------------------------------------------------------------------------


def h(*parts: int) -> SymExpr:
    return SymExpr.atom(Basis.H, as_partition(parts))


def p(*parts: int) -> SymExpr:
    return SymExpr.atom(Basis.P, as_partition(parts))


def s(*parts: int) -> SymExpr:
    return SymExpr.atom(Basis.S, as_partition(parts))


def ht(*parts: int) -> SymExpr:
    return SymExpr.atom(Basis.HT, as_partition(parts))


def st(*parts: int) -> SymExpr:
    return SymExpr.atom(Basis.ST, as_partition(parts))
