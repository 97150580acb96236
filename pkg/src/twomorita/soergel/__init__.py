"""Coxeter groups, Kazhdan-Lusztig data and the decategorified Soergel 2-category."""

from .category import (
    IdempotentScan,
    build_soergel_2cat,
    scan_soergel_idempotents,
    self_multiplicities,
    verify_soergel_idempotents,
)
from .coxeter import DEFAULT_CAP, CoxeterSystem, build_coxeter, coxeter_from_json, load_coxeter, named_type
from .hecke import KLTable, StructureConstants, check_kl_invariants, kl_structure_constants, kl_table
from .laurent import LaurentPoly

__all__ = [
    "CoxeterSystem",
    "DEFAULT_CAP",
    "IdempotentScan",
    "KLTable",
    "LaurentPoly",
    "StructureConstants",
    "build_coxeter",
    "build_soergel_2cat",
    "check_kl_invariants",
    "coxeter_from_json",
    "kl_structure_constants",
    "kl_table",
    "load_coxeter",
    "named_type",
    "scan_soergel_idempotents",
    "self_multiplicities",
    "verify_soergel_idempotents",
]
