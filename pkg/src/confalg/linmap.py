"""Module maps and conformal linear maps between free modules.

A ModuleMap commutes with the derivation by construction: it is a matrix
t_ij(d) acting on coefficient vectors, T(v_i) = sum_j t_ij(d) e_j.  A
ConformalLinearMap additionally depends on the bracket argument,
T_x(v_i) = sum_j a_ij(x, d) e_j; its specialization at x = 0 is a plain
ModuleMap.  Invertibility over the polynomial ring in d means the
determinant is a nonzero rational constant; the inverse is adjugate over
determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, VarTable

Vector = tuple[Poly, ...]


class NotInvertible(Exception):
    pass


def _apply_matrix(matrix: list[list[Poly]], w: Vector, table: VarTable) -> Vector:
    cols = len(matrix[0]) if matrix else 0
    out = [Poly.zero(table) for _ in range(cols)]
    for i, h in enumerate(w):
        if h.is_zero:
            continue
        for j in range(cols):
            entry = matrix[i][j]
            if not entry.is_zero:
                out[j] = out[j] + h * entry
    return tuple(out)


@dataclass
class ModuleMap:
    """Matrix over the polynomial ring in d; rows index the source basis."""

    table: VarTable
    matrix: list[list[Poly]]

    def __post_init__(self) -> None:
        for row in self.matrix:
            for p in row:
                extra = p.variables() - set(self.table.params) - {"d"}
                if extra:
                    raise ValueError(f"module map entries may use only d and parameters, got {sorted(extra)}")

    @property
    def src_rank(self) -> int:
        return len(self.matrix)

    @property
    def dst_rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @classmethod
    def zero(cls, table: VarTable, src: int, dst: int) -> "ModuleMap":
        z = Poly.zero(table)
        return cls(table, [[z for _ in range(dst)] for _ in range(src)])

    @classmethod
    def identity(cls, table: VarTable, rank: int) -> "ModuleMap":
        one = Poly.const(table, 1)
        z = Poly.zero(table)
        return cls(table, [[one if i == j else z for j in range(rank)] for i in range(rank)])

    def apply(self, w: Vector) -> Vector:
        return _apply_matrix(self.matrix, w, self.table)

    def row(self, i: int) -> Vector:
        return tuple(self.matrix[i])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ModuleMap) and self.table == other.table
                and self.matrix == other.matrix)

    def map_polys(self, fn, table: VarTable | None = None) -> "ModuleMap":
        return ModuleMap(table or self.table, [[fn(p) for p in row] for row in self.matrix])

    def embed(self, table: VarTable) -> "ModuleMap":
        return self.map_polys(lambda p: p.embed(table), table)

    def perturbed(self, i: int, j: int, delta: Poly | int) -> "ModuleMap":
        out = [list(row) for row in self.matrix]
        out[i][j] = out[i][j] + delta
        return ModuleMap(self.table, out)


@dataclass
class ConformalLinearMap:
    """Matrix a_ij(x, d): the map at bracket argument x; rows index the source."""

    table: VarTable
    matrix: list[list[Poly]]

    @property
    def src_rank(self) -> int:
        return len(self.matrix)

    @property
    def dst_rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def at_zero(self) -> ModuleMap:
        return ModuleMap(self.table, [[p.subs({"x": 0}) for p in row] for row in self.matrix])

    def apply_to_basis(self, i: int) -> Vector:
        return tuple(self.matrix[i])

    def map_polys(self, fn, table: VarTable | None = None) -> "ConformalLinearMap":
        return ConformalLinearMap(table or self.table, [[fn(p) for p in row] for row in self.matrix])

    def embed(self, table: VarTable) -> "ConformalLinearMap":
        return self.map_polys(lambda p: p.embed(table), table)


def lift_constant(m: ModuleMap) -> ConformalLinearMap:
    return ConformalLinearMap(m.table, [list(row) for row in m.matrix])


def determinant(matrix: list[list[Poly]], table: VarTable) -> Poly:
    n = len(matrix)
    if n == 0:
        return Poly.const(table, 1)
    if any(len(row) != n for row in matrix):
        raise NotInvertible("matrix is not square")
    if n == 1:
        return matrix[0][0]
    det = Poly.zero(table)
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in matrix[1:]]
        cofactor = determinant(minor, table)
        signed = entry * cofactor
        det = det + (signed if j % 2 == 0 else -signed)
    return det


def invert_module_map(m: ModuleMap) -> ModuleMap:
    """Inverse of an invertible module map (unit determinant over d-polynomials).

    Raises NotInvertible when the determinant is zero or non-constant; this
    is the non-degeneracy test used throughout.
    """
    n = m.src_rank
    if n != m.dst_rank:
        raise NotInvertible("matrix is not square")
    det = determinant(m.matrix, m.table)
    value = det.constant_value()
    if value is None:
        raise NotInvertible(f"determinant {det} is not a unit")
    if value == 0:
        raise NotInvertible("determinant is zero")
    inv_det = Fraction(1) / value
    adj = [[Poly.zero(m.table) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m.matrix[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            cof = determinant(minor, m.table)
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof * inv_det
    return ModuleMap(m.table, adj)
