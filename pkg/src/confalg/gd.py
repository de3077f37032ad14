"""Novikov algebras, Lie algebras and their compatible pairs, and the
dictionary with conformal algebras whose basis brackets are affine in the
derivation and the bracket argument.

The dictionary reads, for basis elements a, b:

    [a_x b] = d (b o a) + x (a * b) + [b, a],      a * b = a o b + b o a,

so the derivative part stores the Novikov product with reversed arguments,
the constant part the reversed Lie bracket, and skew-symmetry of the
conformal bracket forces the argument part to equal the star product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LIE, ConformalAlgebra, PreconditionError, ProductTable
from .linmap import ModuleMap
from .operators import check_rota_baxter
from .poly import Poly, VarTable
from .report import Report

ConstTable = dict[tuple[int, int], dict[int, Fraction]]


class NotQuadratic(Exception):
    pass


def _clean_const(table: ConstTable) -> ConstTable:
    out: ConstTable = {}
    for pair, targets in table.items():
        kept = {k: Fraction(c) for k, c in targets.items() if c != 0}
        if kept:
            out[pair] = kept
    return out


@dataclass
class GDBialgebra:
    """A Novikov product and a Lie bracket on one space, with compatibility."""

    basis: tuple[str, ...]
    table: VarTable
    circ: ConstTable
    lie: ConstTable

    def __post_init__(self) -> None:
        self.circ = _clean_const(self.circ)
        self.lie = _clean_const(self.lie)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _prod(self, tbl: ConstTable, a, b) -> tuple[Poly, ...]:
        out = [Poly.zero(self.table) for _ in range(self.dim)]
        for i, p in enumerate(a):
            if isinstance(p, (int, Fraction)):
                p = Poly.const(self.table, p)
            if p.is_zero:
                continue
            for j, q in enumerate(b):
                if isinstance(q, (int, Fraction)):
                    q = Poly.const(self.table, q)
                targets = tbl.get((i, j))
                if q.is_zero or not targets:
                    continue
                pq = p * q
                for k, c in targets.items():
                    out[k] = out[k] + pq * c
        return tuple(out)

    def circ_prod(self, a, b) -> tuple[Poly, ...]:
        return self._prod(self.circ, a, b)

    def lie_prod(self, a, b) -> tuple[Poly, ...]:
        return self._prod(self.lie, a, b)

    def star_prod(self, a, b) -> tuple[Poly, ...]:
        left = self.circ_prod(a, b)
        right = self.circ_prod(b, a)
        return tuple(p + q for p, q in zip(left, right))

    def basis_vector(self, i: int) -> tuple[Poly, ...]:
        one = Poly.const(self.table, 1)
        z = Poly.zero(self.table)
        return tuple(one if k == i else z for k in range(self.dim))


def check_gd(V: GDBialgebra) -> Report:
    """Novikov axioms, Lie axioms, and the mixed compatibility identity."""
    report = Report()
    basis = [V.basis_vector(i) for i in range(V.dim)]
    names = V.basis

    def sub(a, b):
        return tuple(p - q for p, q in zip(a, b))

    def add(a, b):
        return tuple(p + q for p, q in zip(a, b))

    rc = report.new_check("novikov_right_commutativity")
    ls = report.new_check("novikov_left_symmetry")
    anti = report.new_check("lie_antisymmetry")
    jac = report.new_check("lie_jacobi")
    comp = report.new_check("compatibility")
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            anti.add_vector(f"({names[i]},{names[j]})", names,
                            add(V.lie_prod(a, b), V.lie_prod(b, a)))
            for k, c in enumerate(basis):
                label = f"({names[i]},{names[j]},{names[k]})"
                rc.add_vector(label, names,
                              sub(V.circ_prod(V.circ_prod(a, b), c),
                                  V.circ_prod(V.circ_prod(a, c), b)))
                ls.add_vector(label, names, sub(
                    sub(V.circ_prod(V.circ_prod(a, b), c), V.circ_prod(a, V.circ_prod(b, c))),
                    sub(V.circ_prod(V.circ_prod(b, a), c), V.circ_prod(b, V.circ_prod(a, c)))))
                jac.add_vector(label, names, sub(
                    V.lie_prod(a, V.lie_prod(b, c)),
                    add(V.lie_prod(V.lie_prod(a, b), c), V.lie_prod(b, V.lie_prod(a, c)))))
                comp.add_vector(label, names, sub(
                    add(V.lie_prod(V.circ_prod(a, b), c), V.circ_prod(V.lie_prod(a, b), c)),
                    add(add(V.circ_prod(a, V.lie_prod(b, c)), V.lie_prod(V.circ_prod(a, c), b)),
                        V.circ_prod(V.lie_prod(a, c), b))))
    return report


def gd_from_algebra(A: ConformalAlgebra) -> GDBialgebra:
    """Extract the bialgebra from an algebra with affine basis brackets.

    Raises NotQuadratic when any structure constant has a nonlinear or mixed
    monomial, or a non-rational coefficient.
    """
    if A.kind != LIE:
        raise NotQuadratic("the correspondence applies to Lie-kind algebras")
    circ: ConstTable = {}
    lie: ConstTable = {}
    for (i, j), targets in A.products.items():
        for k, P in targets.items():
            pieces = P.split(("d", "x"))
            for key, cof in pieces.items():
                value = cof.constant_value()
                if value is None:
                    raise NotQuadratic(
                        f"structure constant on ({A.basis[i]},{A.basis[j]}) has"
                        f" non-constant coefficient {cof}")
                if key == (1, 0):
                    circ.setdefault((j, i), {})[k] = value
                elif key == (0, 0):
                    lie.setdefault((j, i), {})[k] = value
                elif key != (0, 1):
                    raise NotQuadratic(
                        f"monomial d^{key[0]}*x^{key[1]} on ({A.basis[i]},{A.basis[j]})")
    return GDBialgebra(A.basis, A.table, circ, lie)


def algebra_from_gd(V: GDBialgebra, checked: bool = True) -> ConformalAlgebra:
    """The conformal algebra with affine brackets determined by a bialgebra."""
    if checked:
        rep = check_gd(V)
        if not rep.ok:
            raise PreconditionError("bialgebra axioms fail", rep)
    t = V.table
    D = Poly.var(t, "d")
    X = Poly.var(t, "x")
    products: ProductTable = {}

    def put(pair, k, poly):
        entry = products.setdefault(pair, {})
        entry[k] = entry.get(k, Poly.zero(t)) + poly

    for (j, i), targets in V.circ.items():
        # circ[(j, i)] holds b o a for the bracket on (e_i, e_j)
        for k, c in targets.items():
            put((i, j), k, (D + X) * c)
            put((j, i), k, X * c)
    for (j, i), targets in V.lie.items():
        for k, c in targets.items():
            put((i, j), k, Poly.const(t, c))
    return ConformalAlgebra(LIE, V.basis, t, products)


def convert(x: GDBialgebra | ConformalAlgebra):
    """Dictionary between bialgebras and affine-bracket conformal algebras.

    Round trips are the identity on tables produced by the dictionary.
    """
    if isinstance(x, GDBialgebra):
        return algebra_from_gd(x)
    if isinstance(x, ConformalAlgebra):
        return gd_from_algebra(x)
    raise TypeError(f"cannot convert {type(x).__name__}")


@dataclass
class ProbeResult:
    status: str  # "no_zero_divisors" | "witness" | "unknown"
    witness: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None = None

    def witness_names(self, V: GDBialgebra) -> tuple[str, str] | None:
        """Basis names when both witness vectors are basis elements."""
        if self.witness is None:
            return None
        names = []
        for vec in self.witness:
            hits = [i for i, c in enumerate(vec) if c != 0]
            if len(hits) != 1 or vec[hits[0]] != 1:
                return None
            names.append(V.basis[hits[0]])
        return tuple(names)


def _star_const(V: GDBialgebra, a: tuple[Fraction, ...], b: tuple[Fraction, ...]):
    out = [Fraction(0)] * V.dim
    for tbl, (u, v) in ((V.circ, (a, b)), (V.circ, (b, a))):
        for (i, j), targets in tbl.items():
            c = u[i] * v[j]
            if c == 0:
                continue
            for k, s in targets.items():
                out[k] += c * s
    return tuple(out)


def zero_divisor_probe(V: GDBialgebra, bound: int = 3) -> ProbeResult:
    """Search for a nonzero pair with zero star product.

    Dimension 1 is decided exactly.  In higher dimension the probe tries
    integer coefficient vectors with entries in [-bound, bound], simplest
    first, and reports a witness or Unknown; absence is never claimed.
    """
    if V.dim == 1:
        e = (Fraction(1),)
        if all(c == 0 for c in _star_const(V, e, e)):
            return ProbeResult("witness", (e, e))
        return ProbeResult("no_zero_divisors")
    candidates = [tuple(Fraction(c) for c in tup)
                  for tup in itertools.product(range(-bound, bound + 1), repeat=V.dim)]
    candidates = [c for c in candidates if any(c)]
    candidates.sort(key=lambda tup: (sum(abs(c) for c in tup),
                                     tuple(abs(c) for c in tup),
                                     tuple(0 if c >= 0 else 1 for c in tup)))
    for a in candidates:
        for b in candidates:
            if all(c == 0 for c in _star_const(V, a, b)):
                return ProbeResult("witness", (a, b))
    return ProbeResult("unknown")


def rb_gd_check(V: GDBialgebra, T: ModuleMap, weight: Poly | Fraction | int = 0) -> Report:
    """Weight-alpha Rota-Baxter identity for both operations, plus the lift.

    The lift reuses the same constant matrix as an operator on the
    corresponding conformal algebra; the two verdicts agree for valid input.
    """
    gdrep = check_gd(V)
    if not gdrep.ok:
        raise PreconditionError("bialgebra axioms fail", gdrep)
    t = V.table
    for row in T.matrix:
        for p in row:
            if "d" in p.variables():
                raise PreconditionError("the operator on a bialgebra must be constant")
    alpha = weight if isinstance(weight, Poly) else Poly.const(t, weight)
    report = Report()
    basis = [V.basis_vector(i) for i in range(V.dim)]
    rows = [T.row(i) for i in range(V.dim)]
    for name, prod in (("rota_baxter_novikov", V.circ_prod), ("rota_baxter_lie", V.lie_prod)):
        chk = report.new_check(name)
        for i in range(V.dim):
            for j in range(V.dim):
                lhs = prod(rows[i], rows[j])
                inner = tuple(p + q for p, q in zip(prod(rows[i], basis[j]),
                                                    prod(basis[i], rows[j])))
                rhs = T.apply(inner)
                extra = tuple(p * alpha for p in T.apply(prod(basis[i], basis[j])))
                res = tuple(a - b - c for a, b, c in zip(lhs, rhs, extra))
                chk.add_vector(f"({V.basis[i]},{V.basis[j]})", V.basis, res)
    lifted = check_rota_baxter(algebra_from_gd(V, checked=False), T, alpha)
    chk = report.new_check("lifted_rota_baxter")
    for item in lifted.checks:
        chk.residuals.extend(item.residuals)
    return report
