"""Finite conformal algebras presented by structure constants.

An algebra of rank n is a free module over the polynomial ring of the
derivation ``d`` with basis e_1..e_n and a bilinear lambda-product given on
basis pairs by polynomials P_ijk(d, x), meaning

    (e_i)_x (e_j) = sum_k P_ijk(d, x) e_k,

where d acts on the output basis element and x is the bracket argument.
Products of general elements follow from two extension rules: a power of d
on the first argument becomes (-x)^m, on the second argument (x + d)^m.
The same engine evaluates products at shifted arguments such as -x-d by
first expanding against a reserved fresh variable and substituting it last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, VarTable
from .report import Report

LIE = "lie"
LEFT_SYMMETRIC = "left_symmetric"

Vector = tuple[Poly, ...]
ProductTable = dict[tuple[int, int], dict[int, Poly]]


class AlgebraError(Exception):
    pass


class PreconditionError(AlgebraError):
    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


def clean_table(products: ProductTable) -> ProductTable:
    out: ProductTable = {}
    for pair, targets in products.items():
        kept = {k: p for k, p in targets.items() if not p.is_zero}
        if kept:
            out[pair] = kept
    return out


@dataclass
class ConformalAlgebra:
    kind: str
    basis: tuple[str, ...]
    table: VarTable
    products: ProductTable

    def __post_init__(self) -> None:
        if self.kind not in (LIE, LEFT_SYMMETRIC):
            raise AlgebraError(f"unknown algebra kind {self.kind!r}")
        self.products = clean_table(self.products)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def product(self, i: int, j: int) -> dict[int, Poly]:
        return self.products.get((i, j), {})

    def zero_vector(self) -> Vector:
        z = Poly.zero(self.table)
        return (z,) * self.rank

    def basis_vector(self, i: int) -> Vector:
        one = Poly.const(self.table, 1)
        z = Poly.zero(self.table)
        return tuple(one if k == i else z for k in range(self.rank))

    def map_polys(self, fn, table: VarTable | None = None) -> "ConformalAlgebra":
        t = table or self.table
        prods = {
            pair: {k: fn(p) for k, p in targets.items()}
            for pair, targets in self.products.items()
        }
        return ConformalAlgebra(self.kind, self.basis, t, prods)

    def embed(self, table: VarTable) -> "ConformalAlgebra":
        return self.map_polys(lambda p: p.embed(table), table)


def apply_bilinear(
    table: VarTable,
    products: ProductTable,
    a: Vector,
    b: Vector,
    lam: Poly,
    out_rank: int,
    fresh: str = "z1",
) -> Vector:
    """Sesquilinear extension of a structure-constant table.

    ``a`` indexes the first factor's basis, ``b`` the second's; coefficients
    may involve d plus passive variables.  The product is expanded at the
    fresh variable and that variable is substituted by ``lam`` at the end,
    so arguments like -x-d behave correctly.
    """
    z = Poly.var(table, fresh)
    dvar = Poly.var(table, "d")
    out = [Poly.zero(table) for _ in range(out_rank)]
    shifted_b = [None] * len(b)
    for i, fi in enumerate(a):
        if fi.is_zero:
            continue
        fi_s = fi.subs({"d": -z})
        for j, gj in enumerate(b):
            targets = products.get((i, j))
            if gj.is_zero or not targets:
                continue
            if shifted_b[j] is None:
                shifted_b[j] = gj.subs({"d": z + dvar})
            left = fi_s * shifted_b[j]
            for k, P in targets.items():
                out[k] = out[k] + left * P.subs({"x": z})
    return tuple(p.subs({fresh: lam}) for p in out)


def mul_at(A: ConformalAlgebra, a: Vector, b: Vector, lam: Poly) -> Vector:
    """The lambda-product a_lam b of two elements of A."""
    return apply_bilinear(A.table, A.products, a, b, lam, A.rank)


def bracket(A: ConformalAlgebra, a: Vector, b: Vector) -> Vector:
    """a_x b as an element-valued polynomial in the bracket argument x."""
    return mul_at(A, a, b, Poly.var(A.table, "x"))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(p - q for p, q in zip(a, b))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(p + q for p, q in zip(a, b))


def vec_scale(c, a: Vector) -> Vector:
    return tuple(p * c for p in a)


def vec_is_zero(a: Vector) -> bool:
    return all(p.is_zero for p in a)


def check_axioms(A: ConformalAlgebra) -> Report:
    """Defining identities on all basis pairs/triples, as residuals.

    Lie kind: skew-symmetry and the Jacobi identity.  Left-symmetric kind:
    symmetry of the associator in the first two arguments.
    """
    t = A.table
    X = Poly.var(t, "x")
    Y = Poly.var(t, "y")
    D = Poly.var(t, "d")
    report = Report()
    basis = [A.basis_vector(i) for i in range(A.rank)]
    if A.kind == LIE:
        skew = report.new_check("skew_symmetry")
        for i in range(A.rank):
            for j in range(A.rank):
                res = vec_add(mul_at(A, basis[i], basis[j], X),
                              mul_at(A, basis[j], basis[i], -X - D))
                skew.add_vector(f"({A.basis[i]},{A.basis[j]})", A.basis, res)
        jac = report.new_check("jacobi")
        for i in range(A.rank):
            for j in range(A.rank):
                for k in range(A.rank):
                    lhs = mul_at(A, basis[i], mul_at(A, basis[j], basis[k], Y), X)
                    t1 = mul_at(A, mul_at(A, basis[i], basis[j], X), basis[k], X + Y)
                    t2 = mul_at(A, basis[j], mul_at(A, basis[i], basis[k], X), Y)
                    res = vec_sub(vec_sub(lhs, t1), t2)
                    jac.add_vector(
                        f"({A.basis[i]},{A.basis[j]},{A.basis[k]})", A.basis, res)
    else:
        ls = report.new_check("left_symmetry")
        for i in range(A.rank):
            for j in range(A.rank):
                for k in range(A.rank):
                    left = vec_sub(
                        mul_at(A, mul_at(A, basis[i], basis[j], X), basis[k], X + Y),
                        mul_at(A, basis[i], mul_at(A, basis[j], basis[k], Y), X))
                    right = vec_sub(
                        mul_at(A, mul_at(A, basis[j], basis[i], Y), basis[k], X + Y),
                        mul_at(A, basis[j], mul_at(A, basis[i], basis[k], X), Y))
                    ls.add_vector(
                        f"({A.basis[i]},{A.basis[j]},{A.basis[k]})",
                        A.basis, vec_sub(left, right))
    return report


def sub_adjacent(A: ConformalAlgebra, checked: bool = True) -> ConformalAlgebra:
    """Commutator Lie algebra of a left-symmetric algebra.

    [a_x b] = a_x b - b_{-x-d} a, given on basis pairs by
    Q_ijk(d, x) = P_ijk(d, x) - P_jik(d, -x-d).
    """
    if A.kind != LEFT_SYMMETRIC:
        raise PreconditionError("sub_adjacent expects a left-symmetric algebra")
    if checked:
        rep = check_axioms(A)
        if not rep.ok:
            raise PreconditionError("input fails left-symmetry", rep)
    t = A.table
    X = Poly.var(t, "x")
    D = Poly.var(t, "d")
    products: ProductTable = {}
    for i in range(A.rank):
        for j in range(A.rank):
            acc: dict[int, Poly] = {}
            for k, P in A.product(i, j).items():
                acc[k] = acc.get(k, Poly.zero(t)) + P
            for k, P in A.product(j, i).items():
                acc[k] = acc.get(k, Poly.zero(t)) - P.subs({"x": -X - D})
            if acc:
                products[(i, j)] = acc
    return ConformalAlgebra(LIE, A.basis, t, products)
