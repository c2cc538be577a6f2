"""Exact combinatorics of symbols, fake degrees, truncated induction and
Springer representations for the imprimitive reflection groups G(de,e,n)."""

from .cyclotomic import CycNum
from .invariants import (
    IrrepLabel,
    a_value,
    b_value,
    check_spetsial,
    fake_degree,
    families,
    irreps,
    is_special,
    poincare,
)
from .laurent import LaurentPoly
from .partitions import (
    GroupSpec,
    Multipartition,
    MultipartitionOrbit,
    dual,
    enumerate_multipartitions,
    enumerate_orbits,
)
from .symbols import Presymbol, Symbol, Weight, similar, symbol_of
from .truncated import (
    j_geen_to_ge1n,
    j_sum,
    j_to_ef,
    split_symbol,
    springer_set_ge1n,
    springer_set_geen,
)

__version__ = "0.1.0"

__all__ = [
    "CycNum",
    "GroupSpec",
    "IrrepLabel",
    "LaurentPoly",
    "Multipartition",
    "MultipartitionOrbit",
    "Presymbol",
    "Symbol",
    "Weight",
    "a_value",
    "b_value",
    "check_spetsial",
    "dual",
    "enumerate_multipartitions",
    "enumerate_orbits",
    "fake_degree",
    "families",
    "irreps",
    "is_special",
    "j_geen_to_ge1n",
    "j_sum",
    "j_to_ef",
    "poincare",
    "similar",
    "split_symbol",
    "springer_set_ge1n",
    "springer_set_geen",
    "symbol_of",
]
