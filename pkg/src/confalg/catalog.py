"""Builtin catalog: the worked rank-1 and rank-2 structures and the objects
derived from them (operator families, induced products, canonical tensors).

Each entry records a note describing what the object is; derived entries are
constructed by the package's own operations so that loading the catalog
exercises the constructions it documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LIE, ConformalAlgebra, sub_adjacent
from .gd import GDBialgebra, gd_from_algebra
from .linmap import ModuleMap
from .operators import induced_lsc
from .poly import Poly, VarTable, parse
from .reps import (
    REGULAR_LEFT,
    Representation,
    dual_rep,
    semidirect,
    standard_rep,
    with_zero_right,
)
from .tensor import Tensor2, canonical_skew_tensor, canonical_sym_tensor


class UnknownEntry(Exception):
    pass


@dataclass
class CatalogEntry:
    name: str
    note: str
    algebra: ConformalAlgebra | None = None
    representation: Representation | None = None
    linmap: ModuleMap | None = None
    tensor: Tensor2 | None = None
    gd: GDBialgebra | None = None


def virasoro(table: VarTable) -> ConformalAlgebra:
    return ConformalAlgebra(LIE, ("L",), table,
                            {(0, 0): {0: parse(table, "d+2*x")}})


def heisenberg_virasoro(table: VarTable) -> ConformalAlgebra:
    return ConformalAlgebra(LIE, ("L", "W"), table, {
        (0, 0): {0: parse(table, "d+2*x")},
        (0, 1): {1: parse(table, "d+x")},
        (1, 0): {1: parse(table, "x")},
    })


def rb_family1(table: VarTable) -> ModuleMap:
    b = Poly.var(table, "b")
    return ModuleMap(table, [[-b, -b], [b, b]])


def rb_family2(table: VarTable) -> ModuleMap:
    g = parse(table, "g0 + g1*d + g2*d^2 + g3*d^3")
    z = Poly.zero(table)
    return ModuleMap(table, [[z, g], [z, z]])


def _lsc(table: VarTable, family: int) -> ConformalAlgebra:
    hv = heisenberg_virasoro(table)
    T = rb_family1(table) if family == 1 else rb_family2(table)
    return induced_lsc(T, mode="rb", algebra=hv)


def _skew_entry(table: VarTable, family: int) -> tuple[ConformalAlgebra, Tensor2]:
    A = _lsc(table, family)
    g = sub_adjacent(A)
    dual = dual_rep(standard_rep(A, REGULAR_LEFT))
    S = semidirect(g, dual, checked=False)
    return S, canonical_skew_tensor(S, A.rank)


def _sym_entry(table: VarTable, family: int) -> tuple[ConformalAlgebra, Tensor2]:
    A = _lsc(table, family)
    dual = dual_rep(standard_rep(A, REGULAR_LEFT))
    S = semidirect(A, with_zero_right(A, dual), checked=False)
    return S, canonical_sym_tensor(S, A.rank)


PARAMS_BY_NAME: dict[str, tuple[str, ...]] = {
    "vir": (),
    "hv": (),
    "vir_gd": (),
    "hv_gd": (),
    "hv_rb_family1": ("b",),
    "hv_rb_family2": ("g0", "g1", "g2", "g3"),
    "hv_lsc1": ("b",),
    "hv_lsc2": ("g0", "g1", "g2", "g3"),
    "hv_lsc1_skew_r": ("b",),
    "hv_lsc2_skew_r": ("g0", "g1", "g2", "g3"),
    "hv_lsc1_sym_r": ("b",),
    "hv_lsc2_sym_r": ("g0", "g1", "g2", "g3"),
}


def names() -> list[str]:
    return sorted(PARAMS_BY_NAME)


def required_params(name: str) -> tuple[str, ...]:
    if name not in PARAMS_BY_NAME:
        raise UnknownEntry(f"unknown catalog entry {name!r}; available: {', '.join(names())}")
    return PARAMS_BY_NAME[name]


def catalog(name: str, table: VarTable | None = None,
            values: dict | None = None) -> CatalogEntry:
    """Build a catalog entry, optionally over a caller-supplied table.

    ``values`` substitutes rational values for free parameters after
    construction.
    """
    needed = required_params(name)
    if table is None:
        table = VarTable(params=needed)
    for p in needed:
        if p not in table:
            raise UnknownEntry(f"entry {name} needs parameter {p} in the variable table")

    if name == "vir":
        entry = CatalogEntry(name, "rank-1 algebra with bracket (d+2x) on its generator",
                             algebra=virasoro(table))
    elif name == "hv":
        entry = CatalogEntry(
            name, "rank-2 algebra: (d+2x) on L, (d+x) on L with W, x on W with L",
            algebra=heisenberg_virasoro(table))
    elif name == "vir_gd":
        entry = CatalogEntry(name, "dimension-1 Novikov product L.L = L, zero bracket",
                             gd=gd_from_algebra(virasoro(table)))
    elif name == "hv_gd":
        entry = CatalogEntry(name, "dimension-2 Novikov product L.L = L, W.L = W, zero bracket",
                             gd=gd_from_algebra(heisenberg_virasoro(table)))
    elif name == "hv_rb_family1":
        entry = CatalogEntry(
            name, "weight-0 family T(L) = -b(L+W), T(W) = b(L+W) on the rank-2 algebra",
            algebra=heisenberg_virasoro(table), linmap=rb_family1(table))
    elif name == "hv_rb_family2":
        entry = CatalogEntry(
            name, "weight-0 family T(L) = g(d) W, T(W) = 0 with cubic symbolic g",
            algebra=heisenberg_virasoro(table), linmap=rb_family2(table))
    elif name in ("hv_lsc1", "hv_lsc2"):
        fam = 1 if name.endswith("1") else 2
        entry = CatalogEntry(
            name, f"left-symmetric product induced by operator family {fam}",
            algebra=_lsc(table, fam))
    elif name.endswith("_skew_r"):
        fam = 1 if "lsc1" in name else 2
        S, r = _skew_entry(table, fam)
        entry = CatalogEntry(
            name, "skew canonical tensor over the rank-4 sum with the dual module "
                  f"(family {fam})",
            algebra=S, tensor=r)
    elif name.endswith("_sym_r"):
        fam = 1 if "lsc1" in name else 2
        S, r = _sym_entry(table, fam)
        entry = CatalogEntry(
            name, "symmetric canonical tensor over the rank-4 left-symmetric sum "
                  f"(family {fam})",
            algebra=S, tensor=r)
    else:  # pragma: no cover - guarded by required_params
        raise UnknownEntry(name)

    if values:
        subs = {k: Fraction(v) if not isinstance(v, (Poly,)) else v for k, v in values.items()}

        def fn(p: Poly) -> Poly:
            return p.subs(subs)

        if entry.algebra is not None:
            entry.algebra = entry.algebra.map_polys(fn)
        if entry.representation is not None:
            entry.representation = entry.representation.map_polys(fn)
        if entry.linmap is not None:
            entry.linmap = entry.linmap.map_polys(fn)
        if entry.tensor is not None:
            entry.tensor = entry.tensor.map_polys(fn, entry.algebra)
    return entry


def builtin_representations(table: VarTable | None = None) -> dict[str, Representation]:
    """Every named representation the test-suite treats as builtin."""
    if table is None:
        table = VarTable(params=("b", "g0", "g1", "g2", "g3"))
    out: dict[str, Representation] = {}
    out["vir_adjoint"] = standard_rep(virasoro(table), "adjoint")
    out["hv_adjoint"] = standard_rep(heisenberg_virasoro(table), "adjoint")
    for fam in (1, 2):
        A = _lsc(table, fam)
        out[f"hv_lsc{fam}_regular_left"] = standard_rep(A, "regular_left")
        out[f"hv_lsc{fam}_left_minus_right"] = standard_rep(A, "left_minus_right")
    return out
