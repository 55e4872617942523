"""Exact arithmetic in the irreducible character basis s-tilde and the induced
basis h-tilde of symmetric functions, with multiset-tableau product rules."""
from .multiset_tableaux import CellLabel, FillProfile, MultisetTableau, enumerate_mct, enumerate_mct_prime
from .partitions import conjugate, enumerate_multiset_partitions, z_of
from .stable import (
    expand_in_st,
    gbar,
    gbar_coeff,
    h_in_ht,
    ht_in_st,
    product_h_st,
    product_ht_multi_st,
    product_ht_mpi_st,
    product_ht_st,
    product_st_multi_st,
    restriction_mult,
    st_in_h,
)
from .symfunc import Basis, SymExpr, at_inner, change_basis, h, hall_inner, ht, kronecker_product, p, s, st
from .tableaux import LRMethod, enumerate_bset, lr_coefficient, multi_lr

__all__ = [
    "Basis", "CellLabel", "FillProfile", "LRMethod", "MultisetTableau", "SymExpr",
    "at_inner", "change_basis", "conjugate", "enumerate_bset", "enumerate_mct",
    "enumerate_mct_prime", "enumerate_multiset_partitions", "expand_in_st", "gbar",
    "gbar_coeff", "h", "h_in_ht", "hall_inner", "ht", "ht_in_st", "kronecker_product",
    "lr_coefficient", "multi_lr", "p", "product_h_st", "product_ht_mpi_st",
    "product_ht_multi_st", "product_ht_st", "product_st_multi_st", "restriction_mult", "s",
    "st", "st_in_h", "z_of",
]
