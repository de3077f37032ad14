"""Tensor squares and cubes of a conformal algebra, and the two master equations.

A tensor-square element is a table of coefficients f_ij(d1, d2) per basis
pair, with d1 the derivation acting on the first slot and d2 on the second;
a cube element likewise in d1, d2, d3.  Identities on the cube hold modulo
the diagonal derivation d1 + d2 + d3, which the normal form eliminates by
substituting d3 := -d1 - d2.

The quadratic expressions evaluated here place each product or bracket of
two tensor factors in a fixed slot and substitute the auxiliary argument by
that slot's derivation variable afterwards; within a bracket the first
factor's derivation powers contribute (-mu)^k and the second factor's
(mu + d_slot)^k, while passive slots keep their own variable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ConformalAlgebra, LIE, LEFT_SYMMETRIC, PreconditionError, Vector, sub_adjacent
from .linmap import ConformalLinearMap
from .poly import Poly
from .report import Report
from .reps import Representation, check_rep, dual_rep, semidirect


@dataclass
class Tensor2:
    algebra: ConformalAlgebra
    coeffs: dict[tuple[int, int], Poly]

    def __post_init__(self) -> None:
        self.coeffs = {k: p for k, p in self.coeffs.items() if not p.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def entry(self, i: int, j: int) -> Poly:
        return self.coeffs.get((i, j), Poly.zero(self.algebra.table))

    def __add__(self, other: "Tensor2") -> "Tensor2":
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            out[k] = out.get(k, Poly.zero(self.algebra.table)) + p
        return Tensor2(self.algebra, out)

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.algebra, {k: -p for k, p in self.coeffs.items()})

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Tensor2) and self.algebra.basis == other.algebra.basis
                and self.coeffs == other.coeffs)

    def map_polys(self, fn, algebra: ConformalAlgebra | None = None) -> "Tensor2":
        return Tensor2(algebra or self.algebra, {k: fn(p) for k, p in self.coeffs.items()})

    def labels(self) -> dict[str, str]:
        b = self.algebra.basis
        return {f"({b[i]},{b[j]})": str(p) for (i, j), p in sorted(self.coeffs.items())}


@dataclass
class Tensor3:
    algebra: ConformalAlgebra
    coeffs: dict[tuple[int, int, int], Poly]
    reduced: bool = False

    def __post_init__(self) -> None:
        self.coeffs = {k: p for k, p in self.coeffs.items() if not p.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def entry(self, i: int, j: int, k: int) -> Poly:
        return self.coeffs.get((i, j, k), Poly.zero(self.algebra.table))

    def labels(self) -> dict[str, str]:
        b = self.algebra.basis
        return {f"({b[i]},{b[j]},{b[k]})": str(p)
                for (i, j, k), p in sorted(self.coeffs.items())}


def normal_form3(t: Tensor3) -> Tensor3:
    """Reduce modulo the diagonal derivation: substitute d3 := -d1-d2."""
    if t.reduced:
        return t
    table = t.algebra.table
    repl = -Poly.var(table, "d1") - Poly.var(table, "d2")
    return Tensor3(t.algebra, {k: p.subs({"d3": repl}) for k, p in t.coeffs.items()},
                   reduced=True)


@dataclass
class Parts:
    r21: Tensor2
    skew: Tensor2
    sym: Tensor2
    is_skew: bool
    is_sym: bool


def flip(r: Tensor2) -> Tensor2:
    """r^21: swap the tensor factors (basis indices and d1 <-> d2)."""
    table = r.algebra.table
    d1, d2 = Poly.var(table, "d1"), Poly.var(table, "d2")
    out: dict[tuple[int, int], Poly] = {}
    for (i, j), p in r.coeffs.items():
        key = (j, i)
        q = p.subs({"d1": d2, "d2": d1})
        out[key] = out.get(key, Poly.zero(table)) + q
    return Tensor2(r.algebra, out)


def parts(r: Tensor2) -> Parts:
    r21 = flip(r)
    skew = r - r21
    sym = r + r21
    return Parts(r21, skew, sym, is_skew=sym.is_zero, is_sym=skew.is_zero)


def _check_indices(A: ConformalAlgebra, r: Tensor2) -> None:
    for (i, j) in r.coeffs:
        if not (0 <= i < A.rank and 0 <= j < A.rank):
            raise PreconditionError("tensor indices exceed the algebra rank")


def cybe_residual(A: ConformalAlgebra, r: Tensor2) -> Tensor3:
    """Left side of the conformal classical Yang-Baxter equation, reduced.

    Three terms, each a bracket of two tensor factors placed in one slot:
    bracket of the two first factors in slot 1 (argument := d2), bracket of
    the second first factor against the first second factor in slot 2
    (argument := d3), bracket of the two second factors in slot 3
    (argument := d2); r solves the equation iff the result is zero.
    """
    if A.kind != LIE:
        raise PreconditionError("conformal CYBE lives in a Lie-kind algebra")
    _check_indices(A, r)
    table = A.table
    z1 = Poly.var(table, "z1")
    d1 = Poly.var(table, "d1")
    d2 = Poly.var(table, "d2")
    d3 = Poly.var(table, "d3")
    out: dict[tuple[int, int, int], Poly] = {}

    def put(key, poly):
        out[key] = out.get(key, Poly.zero(table)) + poly

    entries = list(r.coeffs.items())
    for (p_, q_), f in entries:
        for (u_, v_), g in entries:
            # [a_i mu a_j] ox b_i ox b_j, mu := d2
            fa = f.subs({"d1": -z1})
            ga = g.subs({"d1": z1 + d1, "d2": d3})
            for k, P in A.product(p_, u_).items():
                put((k, q_, v_), (fa * ga * P.subs({"d": d1, "x": z1})).subs({"z1": d2}))
            # - a_i ox [a_j mu b_i] ox b_j, mu := d3
            fb = f.subs({"d2": z1 + d2})
            gb = g.subs({"d1": -z1, "d2": d3})
            for k, P in A.product(u_, q_).items():
                put((p_, k, v_), -(fb * gb * P.subs({"d": d2, "x": z1})).subs({"z1": d3}))
            # - a_i ox a_j ox [b_j mu b_i], mu := d2
            fc = f.subs({"d2": z1 + d3})
            gc = g.subs({"d1": d2, "d2": -z1})
            for k, P in A.product(v_, q_).items():
                put((p_, u_, k), -(fc * gc * P.subs({"d": d3, "x": z1})).subs({"z1": d2}))
    return normal_form3(Tensor3(A, out))


def s_residual(A: ConformalAlgebra, r: Tensor2) -> Tensor3:
    """Left side of the conformal S-equation, reduced.

    Writing r = sum r_i ox l_i: product l_j.r_i in slot 1 (argument := d2),
    minus the same product in slot 2 (argument := d1), minus the commutator
    bracket of l_i and l_j in slot 3 (argument := d1); the bracket is taken
    in the sub-adjacent Lie algebra.
    """
    if A.kind != LEFT_SYMMETRIC:
        raise PreconditionError("the conformal S-equation lives in a left-symmetric algebra")
    _check_indices(A, r)
    table = A.table
    g_alg = sub_adjacent(A, checked=False)
    z1 = Poly.var(table, "z1")
    d1 = Poly.var(table, "d1")
    d2 = Poly.var(table, "d2")
    d3 = Poly.var(table, "d3")
    out: dict[tuple[int, int, int], Poly] = {}

    def put(key, poly):
        out[key] = out.get(key, Poly.zero(table)) + poly

    entries = list(r.coeffs.items())
    for (p_, q_), f in entries:
        for (u_, v_), g in entries:
            # (l_j mu r_i) ox r_j ox l_i, mu := d2
            fa = f.subs({"d1": z1 + d1, "d2": d3})
            ga = g.subs({"d1": d2, "d2": -z1})
            for k, P in A.product(v_, p_).items():
                put((k, u_, q_), (fa * ga * P.subs({"d": d1, "x": z1})).subs({"z1": d2}))
            # - r_j ox (l_j mu r_i) ox l_i, mu := d1
            fb = f.subs({"d1": z1 + d2, "d2": d3})
            gb = g.subs({"d2": -z1})
            for k, P in A.product(v_, p_).items():
                put((u_, k, q_), -(fb * gb * P.subs({"d": d2, "x": z1})).subs({"z1": d1}))
            # - r_i ox r_j ox [l_i mu l_j], mu := d1
            fc = f.subs({"d2": -z1})
            gc = g.subs({"d1": d2, "d2": z1 + d3})
            for k, Q in g_alg.product(q_, v_).items():
                put((p_, u_, k), -(fc * gc * Q.subs({"d": d3, "x": z1})).subs({"z1": d1}))
    return normal_form3(Tensor3(A, out))


def t_from_r(A: ConformalAlgebra, r: Tensor2) -> ConformalLinearMap:
    """The conformal linear map from the dual determined by a tensor.

    T_x(e_i*) = sum_k f_ik(-x-d, d) e_k; the source is the dual basis of A
    and the target is A itself.
    """
    table = A.table
    X = Poly.var(table, "x")
    D = Poly.var(table, "d")
    n = A.rank
    matrix = [[Poly.zero(table) for _ in range(n)] for _ in range(n)]
    for (i, k), f in r.coeffs.items():
        matrix[i][k] = matrix[i][k] + f.subs({"d1": -X - D, "d2": D})
    return ConformalLinearMap(table, matrix)


def r_from_t(T: ConformalLinearMap, rep: Representation, mode: str = "skew",
             checked: bool = True) -> Tensor2:
    """Tensor over the semidirect sum with the dual module, read off a map.

    Entry on (e_j, v_i*) is a_ij with x := -d1-d2 and d := d1.  Mode skew
    subtracts the flip, sym adds it, raw returns the bare tensor.
    """
    if checked:
        rr = check_rep(rep)
        if not rr.ok:
            raise PreconditionError("module axioms fail", rr)
    if mode not in ("skew", "sym", "raw"):
        raise ValueError(f"unknown mode {mode!r}")
    A = rep.algebra
    table = A.table
    n = A.rank
    if T.src_rank != rep.mrank or T.dst_rank != n:
        raise PreconditionError("map shape does not match the representation")
    S = semidirect(A, dual_rep(rep), checked=False)
    d1 = Poly.var(table, "d1")
    d2 = Poly.var(table, "d2")
    coeffs: dict[tuple[int, int], Poly] = {}
    for i in range(rep.mrank):
        for j in range(n):
            a = T.matrix[i][j]
            if a.is_zero:
                continue
            coeffs[(j, n + i)] = a.subs({"x": -d1 - d2, "d": d1})
    rT = Tensor2(S, coeffs)
    if mode == "raw":
        return rT
    return rT - flip(rT) if mode == "skew" else rT + flip(rT)


def cobracket_from_r(A: ConformalAlgebra, r: Tensor2, a: Vector) -> Tensor2:
    """Action of an element on both tensor slots, then argument := -d1-d2."""
    table = A.table
    z1 = Poly.var(table, "z1")
    d1 = Poly.var(table, "d1")
    d2 = Poly.var(table, "d2")
    lam = -d1 - d2
    out: dict[tuple[int, int], Poly] = {}

    def put(key, poly):
        out[key] = out.get(key, Poly.zero(table)) + poly

    for (p_, q_), f in r.coeffs.items():
        for i, h in enumerate(a):
            if h.is_zero:
                continue
            hs = h.subs({"d": -z1})
            f1 = f.subs({"d1": z1 + d1})
            for k, P in A.product(i, p_).items():
                put((k, q_), (hs * f1 * P.subs({"d": d1, "x": z1})).subs({"z1": lam}))
            f2 = f.subs({"d2": z1 + d2})
            for k, P in A.product(i, q_).items():
                put((p_, k), (hs * f2 * P.subs({"d": d2, "x": z1})).subs({"z1": lam}))
    return Tensor2(A, out)


def tensor3_report(name: str, t: Tensor3) -> Report:
    report = Report()
    chk = report.new_check(name)
    for label, poly in t.labels().items():
        chk.residuals.append((label, poly))
    return report


def canonical_skew_tensor(S: ConformalAlgebra, n: int) -> Tensor2:
    """sum_i (e_i ox e_i* - e_i* ox e_i) over a rank-2n semidirect sum."""
    one = Poly.const(S.table, 1)
    coeffs: dict[tuple[int, int], Poly] = {}
    for i in range(n):
        coeffs[(i, n + i)] = one
        coeffs[(n + i, i)] = -one
    return Tensor2(S, coeffs)


def canonical_sym_tensor(S: ConformalAlgebra, n: int) -> Tensor2:
    """sum_i (e_i ox e_i* + e_i* ox e_i) over a rank-2n semidirect sum."""
    one = Poly.const(S.table, 1)
    coeffs: dict[tuple[int, int], Poly] = {}
    for i in range(n):
        coeffs[(i, n + i)] = one
        coeffs[(n + i, i)] = one
    return Tensor2(S, coeffs)
