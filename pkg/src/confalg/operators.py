"""Operator identities: Rota-Baxter and related maps, cocycles, bilinear forms.

Everything here is an exact residual computation: an operator satisfies an
identity iff the listed residual polynomials are all zero, and identities
checked with free parameters left symbolic hold for every value at once.
The constraint generator turns the Rota-Baxter identity for an undetermined
polynomial operator into a plain polynomial system in its coefficients,
solved (when possible) by a deliberately small elimination loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    LEFT_SYMMETRIC,
    LIE,
    ConformalAlgebra,
    PreconditionError,
    ProductTable,
    Vector,
    mul_at,
    vec_sub,
)
from .linmap import ConformalLinearMap, ModuleMap, NotInvertible, invert_module_map
from .poly import Poly, VarTable
from .report import Report
from .reps import Representation, act
from .tensor import Tensor2, parts, t_from_r


# -- O-operators and Rota-Baxter operators ----------------------------------

def o_operator_residuals(T: ModuleMap, rep: Representation) -> dict[tuple[int, int], Vector]:
    """Residuals of the defining identity of an O-operator on module pairs.

    [T(u)_x T(v)] - T( rho(T(u))_x v - rho(T(v))_{-x-d} u ).
    """
    A = rep.algebra
    if A.kind != LIE:
        raise PreconditionError("O-operators are defined against a Lie-kind representation")
    if T.src_rank != rep.mrank or T.dst_rank != A.rank:
        raise PreconditionError("map shape does not match the representation")
    t = A.table
    X = Poly.var(t, "x")
    D = Poly.var(t, "d")
    out: dict[tuple[int, int], Vector] = {}
    rows = [T.row(i) for i in range(rep.mrank)]
    for i in range(rep.mrank):
        for j in range(rep.mrank):
            lhs = mul_at(A, rows[i], rows[j], X)
            inner = vec_sub(act(rep, rows[i], rep.mbasis_vector(j), X),
                            act(rep, rows[j], rep.mbasis_vector(i), -X - D))
            out[(i, j)] = vec_sub(lhs, T.apply(inner))
    return out


def check_o_operator(T: ModuleMap, rep: Representation, ker_mode: bool = False) -> Report:
    """O-operator identity on all module pairs; with ker_mode, only up to ker(rho).

    In ker_mode the residual element is itself pushed through the
    representation (at a fresh argument) and must act as zero.
    """
    A = rep.algebra
    report = Report()
    name = "o_operator_mod_kernel" if ker_mode else "o_operator"
    chk = report.new_check(name)
    Z2 = Poly.var(A.table, "z2")
    for (i, j), res in sorted(o_operator_residuals(T, rep).items()):
        label = f"({rep.mbasis[i]},{rep.mbasis[j]})"
        if ker_mode:
            for k in range(rep.mrank):
                acted = act(rep, res, rep.mbasis_vector(k), Z2, fresh="z2")
                chk.add_vector(f"{label};{rep.mbasis[k]}", rep.mbasis, acted)
        else:
            chk.add_vector(label, A.basis, res)
    return report


def rota_baxter_residuals(A: ConformalAlgebra, T: ModuleMap,
                          weight: Poly | Fraction | int) -> dict[tuple[int, int], Vector]:
    """Residuals of the weight-alpha Rota-Baxter identity on basis pairs.

    [T(a)_x T(b)] - T([a_x T(b)]) - T([T(a)_x b]) - alpha T([a_x b]).
    """
    if T.src_rank != A.rank or T.dst_rank != A.rank:
        raise PreconditionError("map shape does not match the algebra")
    t = A.table
    X = Poly.var(t, "x")
    alpha = weight if isinstance(weight, Poly) else Poly.const(t, weight)
    out: dict[tuple[int, int], Vector] = {}
    rows = [T.row(i) for i in range(A.rank)]
    basis = [A.basis_vector(i) for i in range(A.rank)]
    for i in range(A.rank):
        for j in range(A.rank):
            lhs = mul_at(A, rows[i], rows[j], X)
            r1 = T.apply(mul_at(A, basis[i], rows[j], X))
            r2 = T.apply(mul_at(A, rows[i], basis[j], X))
            r3 = tuple(p * alpha for p in T.apply(mul_at(A, basis[i], basis[j], X)))
            out[(i, j)] = vec_sub(vec_sub(vec_sub(lhs, r1), r2), r3)
    return out


def check_rota_baxter(A: ConformalAlgebra, T: ModuleMap,
                      weight: Poly | Fraction | int = 0) -> Report:
    report = Report()
    chk = report.new_check("rota_baxter")
    for (i, j), res in sorted(rota_baxter_residuals(A, T, weight).items()):
        chk.add_vector(f"({A.basis[i]},{A.basis[j]})", A.basis, res)
    return report


# -- induced left-symmetric structures ---------------------------------------

def induced_lsc(T: ModuleMap, rep: Representation | None = None,
                mode: str = "rb", algebra: ConformalAlgebra | None = None) -> ConformalAlgebra:
    """Left-symmetric algebra induced by an operator.

    o_product:  u *_x v = rho(T(u))_x v on the module (T an O-operator).
    bijective:  a  *_x b = T(rho(a)_x T^-1(b)) on the algebra (T invertible
                O-operator).
    rb:         a *_x b = [T(a)_x b] on the algebra (T Rota-Baxter, weight 0,
                pass ``algebra``).
    """
    if mode == "rb":
        if algebra is None:
            raise PreconditionError("rb mode needs the ambient Lie algebra")
        rbrep = check_rota_baxter(algebra, T, 0)
        if not rbrep.ok:
            raise PreconditionError("map is not Rota-Baxter of weight 0", rbrep)
        t = algebra.table
        X = Poly.var(t, "x")
        products: ProductTable = {}
        for i in range(algebra.rank):
            for j in range(algebra.rank):
                vec = mul_at(algebra, T.row(i), algebra.basis_vector(j), X)
                entry = {k: p for k, p in enumerate(vec) if not p.is_zero}
                if entry:
                    products[(i, j)] = entry
        return ConformalAlgebra(LEFT_SYMMETRIC, algebra.basis, t, products)

    if rep is None:
        raise PreconditionError(f"mode {mode!r} needs a representation")
    A = rep.algebra
    t = A.table
    X = Poly.var(t, "x")
    if mode == "o_product":
        orep = check_o_operator(T, rep)
        if not orep.ok:
            raise PreconditionError("map is not an O-operator", orep)
        products = {}
        for i in range(rep.mrank):
            for j in range(rep.mrank):
                vec = act(rep, T.row(i), rep.mbasis_vector(j), X)
                entry = {k: p for k, p in enumerate(vec) if not p.is_zero}
                if entry:
                    products[(i, j)] = entry
        return ConformalAlgebra(LEFT_SYMMETRIC, rep.mbasis, t, products)
    if mode == "bijective":
        orep = check_o_operator(T, rep)
        if not orep.ok:
            raise PreconditionError("map is not an O-operator", orep)
        Tinv = invert_module_map(T)
        products = {}
        for i in range(A.rank):
            for j in range(A.rank):
                inner = act(rep, A.basis_vector(i), Tinv.row(j), X)
                vec = T.apply(inner)
                entry = {k: p for k, p in enumerate(vec) if not p.is_zero}
                if entry:
                    products[(i, j)] = entry
        return ConformalAlgebra(LEFT_SYMMETRIC, A.basis, t, products)
    raise ValueError(f"unknown mode {mode!r}")


# -- 2-cocycles ---------------------------------------------------------------

@dataclass
class CocycleForm:
    """Bilinear form with values c_ij(x) on basis pairs.

    Conformal bilinearity is definitional through the extension rule
    form(d^s e_i, d^t e_j) at x = (-x)^s x^t c_ij(x), so only the basis
    matrix is stored.
    """

    kind: str  # "lie" | "lsc"
    table: VarTable
    basis: tuple[str, ...]
    matrix: list[list[Poly]]

    def entry(self, i: int, j: int) -> Poly:
        return self.matrix[i][j]

    def eval_at(self, a: Vector, b: Vector, lam: Poly) -> Poly:
        """form(a, b) at argument lam for elements with d-dependent coefficients."""
        t = self.table
        z1 = Poly.var(t, "z1")
        out = Poly.zero(t)
        for i, p in enumerate(a):
            if p.is_zero:
                continue
            ps = p.subs({"d": -z1})
            for j, q in enumerate(b):
                c = self.matrix[i][j]
                if q.is_zero or c.is_zero:
                    continue
                out = out + ps * q.subs({"d": z1}) * c.subs({"x": z1})
        return out.subs({"z1": lam})

    def map_polys(self, fn, table: VarTable | None = None) -> "CocycleForm":
        return CocycleForm(self.kind, table or self.table, self.basis,
                           [[fn(p) for p in row] for row in self.matrix])


def cocycle_from_r(A: ConformalAlgebra, r: Tensor2, kind: str) -> CocycleForm:
    """The form a, b -> pairing of T0^-1(a) with b, for non-degenerate r.

    Requires r skew (lie) or symmetric (lsc); raises NotInvertible when the
    associated module map is degenerate.
    """
    pp = parts(r)
    if kind == "lie" and not pp.is_skew:
        raise PreconditionError("a lie-kind cocycle needs a skew-symmetric tensor")
    if kind == "lsc" and not pp.is_sym:
        raise PreconditionError("an lsc-kind cocycle needs a symmetric tensor")
    if kind not in ("lie", "lsc"):
        raise ValueError(f"unknown cocycle kind {kind!r}")
    T0 = t_from_r(A, r).at_zero()
    inv = invert_module_map(T0)
    X = Poly.var(A.table, "x")
    matrix = [[inv.matrix[i][j].subs({"d": -X}) for j in range(A.rank)]
              for i in range(A.rank)]
    return CocycleForm(kind, A.table, A.basis, matrix)


def cocycle_check(A: ConformalAlgebra, form: CocycleForm) -> Report:
    """Cocycle identity and the symmetry law, on all basis pairs/triples."""
    expected = "lie" if A.kind == LIE else "lsc"
    if form.kind != expected:
        raise PreconditionError(f"form kind {form.kind!r} does not match algebra kind")
    t = A.table
    X = Poly.var(t, "x")
    Y = Poly.var(t, "y")
    basis = [A.basis_vector(i) for i in range(A.rank)]
    report = Report()
    sym = report.new_check("symmetry")
    for i in range(A.rank):
        for j in range(A.rank):
            lhs = form.eval_at(basis[i], basis[j], X)
            rhs = form.eval_at(basis[j], basis[i], -X)
            res = lhs + rhs if form.kind == "lie" else lhs - rhs
            sym.add(f"({A.basis[i]},{A.basis[j]})", res)
    coc = report.new_check("cocycle_identity")
    for i in range(A.rank):
        for j in range(A.rank):
            for k in range(A.rank):
                label = f"({A.basis[i]},{A.basis[j]},{A.basis[k]})"
                if form.kind == "lie":
                    res = (form.eval_at(basis[i], mul_at(A, basis[j], basis[k], Y), X)
                           - form.eval_at(basis[j], mul_at(A, basis[i], basis[k], X), Y)
                           - form.eval_at(mul_at(A, basis[i], basis[j], X), basis[k], X + Y))
                else:
                    res = (form.eval_at(mul_at(A, basis[i], basis[j], X), basis[k], X + Y)
                           - form.eval_at(basis[i], mul_at(A, basis[j], basis[k], Y), X)
                           - form.eval_at(mul_at(A, basis[j], basis[i], Y), basis[k], X + Y)
                           + form.eval_at(basis[j], mul_at(A, basis[i], basis[k], X), Y))
                coc.add(label, res)
    return report


# -- Rota-Baxter constraint systems -------------------------------------------

@dataclass
class PolySystem:
    """Fully expanded polynomial equations in the unknown parameters."""

    table: VarTable
    unknowns: tuple[str, ...]
    equations: list[Poly] = field(default_factory=list)

    def evaluate(self, assignment: dict[str, Poly | Fraction | int]) -> list[Poly]:
        return [eq.subs(assignment) for eq in self.equations]


def rb_constraints(A: ConformalAlgebra, degree_bound: int,
                   weight: Poly | Fraction | int = 0,
                   prefix: str = "t") -> tuple[PolySystem, ModuleMap]:
    """Equations on the coefficients of an undetermined Rota-Baxter operator.

    The candidate is T(e_i) = sum_{j, k <= degree_bound} t_i_j_k d^k e_j with
    one unknown per coefficient; each (d, x)-monomial of each residual
    contributes one equation.  Returns the system and the generic map.
    """
    n = A.rank
    unknowns = tuple(f"{prefix}{i}_{j}_{k}"
                     for i in range(n) for j in range(n) for k in range(degree_bound + 1))
    for u in unknowns:
        if u in A.table:
            raise PreconditionError(f"unknown name {u} collides with an existing variable")
    ext = A.table.extended(unknowns)
    A2 = A.embed(ext)
    D = Poly.var(ext, "d")
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = Poly.zero(ext)
            for k in range(degree_bound + 1):
                entry = entry + Poly.var(ext, f"{prefix}{i}_{j}_{k}") * D ** k
            row.append(entry)
        matrix.append(row)
    T = ModuleMap(ext, matrix)
    w = weight.embed(ext) if isinstance(weight, Poly) else Poly.const(ext, weight)
    equations: list[Poly] = []
    seen: set[frozenset] = set()
    for _, res in sorted(rota_baxter_residuals(A2, T, w).items()):
        for poly in res:
            for _, eq in sorted(poly.split(("d", "x")).items()):
                if eq.is_zero:
                    continue
                key = frozenset(eq.terms.items())
                negkey = frozenset((-eq).terms.items())
                if key in seen or negkey in seen:
                    continue
                seen.add(key)
                equations.append(eq)
    return PolySystem(ext, unknowns, equations), T


# -- the limited square/linear elimination solver -----------------------------

class InconsistentSystem(Exception):
    pass


@dataclass
class SolveResult:
    status: str  # "solved" | "partial"
    assignment: dict[str, Poly]
    remaining: list[Poly]

    @property
    def solved(self) -> bool:
        return self.status == "solved"


def _match_square(eq: Poly, unknowns: set[str]) -> str | None:
    """q * v^2 with rational q and a single unknown v."""
    if len(eq.terms) != 1:
        return None
    exps = next(iter(eq.terms))
    names = [(eq.table.names[i], e) for i, e in enumerate(exps) if e]
    if len(names) == 1 and names[0][1] == 2 and names[0][0] in unknowns:
        return names[0][0]
    return None


def _match_linear(eq: Poly, unknowns: set[str]) -> tuple[str, Fraction, Poly] | None:
    """c * v + rest with rational c and rest free of v; first match by name."""
    for v in sorted(eq.variables() & unknowns):
        if eq.degree_in(v) != 1:
            continue
        coeff = eq.coefficient(v, 1)
        c = coeff.constant_value()
        if c is None or c == 0:
            continue
        rest = eq.coefficient(v, 0)
        # all terms must have v-degree 0 or 1; degree_in == 1 ensures max,
        # and the two cofactors must rebuild the equation exactly.
        if coeff * Poly.var(eq.table, v) + rest == eq:
            return v, c, rest
    return None


def solve_squares(system: PolySystem) -> SolveResult:
    """Iterated square and linear elimination; sound, deliberately incomplete.

    Raises InconsistentSystem when an equation reduces to a nonzero constant.
    """
    unknowns = set(system.unknowns)
    assignment: dict[str, Poly] = {}
    equations = list(system.equations)
    while True:
        substituted = []
        for eq in equations:
            eq = eq.subs(assignment) if assignment else eq
            value = eq.constant_value()
            if value is not None:
                if value != 0:
                    raise InconsistentSystem(f"equation reduces to {value}")
                continue
            substituted.append(eq)
        equations = substituted
        progress = False
        for eq in equations:
            v = _match_square(eq, unknowns)
            if v is not None:
                assignment[v] = Poly.zero(system.table)
                progress = True
                break
            m = _match_linear(eq, unknowns)
            if m is not None:
                v, c, rest = m
                assignment[v] = rest * (Fraction(-1) / c)
                progress = True
                break
        if not progress:
            break
    # close the assignment under itself so solved values are unknown-free
    for _ in range(len(assignment)):
        closed = {v: p.subs(assignment) for v, p in assignment.items()}
        if closed == assignment:
            break
        assignment = closed
    fixed = {v for v, p in assignment.items() if not (p.variables() & unknowns)}
    if not equations and fixed == unknowns:
        return SolveResult("solved", assignment, [])
    return SolveResult("partial", assignment, equations)


# -- invariant bilinear forms --------------------------------------------------

@dataclass
class BilinearForm:
    """Conformal bilinear form: values B_ij(x) on basis pairs.

    Same extension rule as a cocycle form: derivation powers on the left
    contribute (-x)^s, on the right x^t.
    """

    table: VarTable
    basis: tuple[str, ...]
    matrix: list[list[Poly]]

    def entry(self, i: int, j: int) -> Poly:
        return self.matrix[i][j]

    def induced_map(self) -> ModuleMap:
        """The map into the dual, a matrix over d: row i is B_ij(-d)."""
        D = Poly.var(self.table, "d")
        return ModuleMap(self.table, [[p.subs({"x": -D}) for p in row] for row in self.matrix])

    def map_polys(self, fn, table: VarTable | None = None) -> "BilinearForm":
        return BilinearForm(table or self.table, self.basis,
                            [[fn(p) for p in row] for row in self.matrix])


class DegenerateForm(Exception):
    pass


def form_pr_map(A: ConformalAlgebra, B: BilinearForm, r: Tensor2) -> ConformalLinearMap:
    """The endomorphism determined by r through a non-degenerate form.

    Defined by pairing(r, u ox v) = pairing(P_{x-d}(u), v); computed by
    inverting the form's matrix over the polynomial ring.
    """
    inv = invert_module_map(B.induced_map())  # raises NotInvertible when degenerate
    t = A.table
    X = Poly.var(t, "x")
    Y = Poly.var(t, "y")
    D = Poly.var(t, "d")
    n = A.rank
    rhs = [[Poly.zero(t) for _ in range(n)] for _ in range(n)]
    for (p_, q_), f in r.coeffs.items():
        fc = f.subs({"d1": Y - X, "d2": -Y})
        for i in range(n):
            Bpi = B.matrix[p_][i].subs({"x": X - Y})
            if Bpi.is_zero:
                continue
            for j in range(n):
                Bqj = B.matrix[q_][j].subs({"x": Y})
                if not Bqj.is_zero:
                    rhs[i][j] = rhs[i][j] + fc * Bpi * Bqj
    matrix = [[Poly.zero(t) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            acc = Poly.zero(t)
            for j in range(n):
                invjk = inv.matrix[j][k].subs({"d": -Y})
                if not invjk.is_zero:
                    acc = acc + rhs[i][j] * invjk
            matrix[i][k] = acc.subs({"y": -D})
    return ConformalLinearMap(t, matrix)


def invariant_form_suite(A: ConformalAlgebra, B: BilinearForm,
                         r: Tensor2 | None = None) -> Report:
    """Symmetry, invariance and non-degeneracy of a form; optionally the
    Rota-Baxter identity for the endomorphism induced by a tensor.

    Symmetry: B_ij(x) = B_ji(-x).  Invariance on basis triples:
    pairing([a_y b], c) at x  =  pairing(a, [b_{x-d} c]) at y.
    """
    if A.kind != LIE:
        raise PreconditionError("the invariant form suite expects a Lie-kind algebra")
    t = A.table
    X = Poly.var(t, "x")
    Y = Poly.var(t, "y")
    D = Poly.var(t, "d")
    report = Report()
    sym = report.new_check("symmetry")
    for i in range(A.rank):
        for j in range(A.rank):
            sym.add(f"({A.basis[i]},{A.basis[j]})",
                    B.matrix[i][j] - B.matrix[j][i].subs({"x": -X}))
    inv = report.new_check("invariance")
    for i in range(A.rank):
        for j in range(A.rank):
            for k in range(A.rank):
                lhs = Poly.zero(t)
                for l, P in A.product(i, j).items():
                    lhs = lhs + P.subs({"d": -X, "x": Y}) * B.matrix[l][k]
                rhs = Poly.zero(t)
                for l, P in A.product(j, k).items():
                    rhs = rhs + P.subs({"d": Y, "x": X - Y}) * B.matrix[i][l].subs({"x": Y})
                inv.add(f"({A.basis[i]},{A.basis[j]},{A.basis[k]})", lhs - rhs)
    nondeg = report.new_check("non_degenerate")
    degenerate = False
    try:
        invert_module_map(B.induced_map())
    except NotInvertible as exc:
        degenerate = True
        nondeg.residuals.append(("det", str(exc)))
    if r is not None:
        if degenerate:
            raise DegenerateForm("tensor checks need a non-degenerate form")
        P0 = form_pr_map(A, B, r).at_zero()
        chk = report.new_check("induced_rota_baxter")
        for (i, j), res in sorted(rota_baxter_residuals(A, P0, 0).items()):
            chk.add_vector(f"({A.basis[i]},{A.basis[j]})", A.basis, res)
    return report
