"""Truncated coefficient algebras of a conformal algebra.

The bracket argument expands into a family of bilinear n-th products,
bracket = sum_n x^n / n! (a_(n) b), and the coefficient algebra lives on
symbols v_m with

    a_m . b_n = sum_j binom(m, j) (a_(j) b)_{m+n-j},
    (d u)_k = -k u_{k-1}.

Only a finite symmetric index window [-N, N] is materialized; products that
need an index outside the window return the OutOfWindow sentinel, which
property checks treat as "skip".  An optional per-generator shift relabels
v_m as v_{m+s} to reproduce textbook index conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LIE, ConformalAlgebra, PreconditionError, Vector
from .linmap import ModuleMap
from .poly import Poly
from .report import Report


class OutOfWindow:
    """Sentinel value for products leaving the index window."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "OutOfWindow"


OUT_OF_WINDOW = OutOfWindow()

# window element: (basis index, user index) -> coefficient (parameter poly)
WinElem = dict[tuple[int, int], Poly]


def nth_products(A: ConformalAlgebra) -> dict[tuple[int, int], list[Vector]]:
    """Per basis pair, the finite list of n-th products as d-coefficient vectors."""
    out: dict[tuple[int, int], list[Vector]] = {}
    zero = Poly.zero(A.table)
    for (i, j), targets in A.products.items():
        per_n: dict[int, list[Poly]] = {}
        for k, P in targets.items():
            for (xdeg,), cof in P.split(("x",)).items():
                vec = per_n.setdefault(xdeg, [zero] * A.rank)
                vec[k] = vec[k] + cof * math.factorial(xdeg)
        if per_n:
            top = max(per_n)
            out[(i, j)] = [tuple(per_n.get(n, [zero] * A.rank)) for n in range(top + 1)]
    return out


def _binom(m: int, j: int) -> Fraction:
    num = Fraction(1)
    for s in range(j):
        num *= m - s
    return num / math.factorial(j)


def _falling(t: int, s: int) -> int:
    out = 1
    for k in range(s):
        out *= t - k
    return out


@dataclass
class CoeffWindow:
    """Symbols v_m for each generator v and |m + shift_v| <= N."""

    algebra: ConformalAlgebra
    N: int
    shifts: dict[int, int] = field(default_factory=dict)
    _nth: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._nth = nth_products(self.algebra)
        self._cache = {}

    def shift(self, i: int) -> int:
        return self.shifts.get(i, 0)

    def contains(self, i: int, m: int) -> bool:
        return abs(m + self.shift(i)) <= self.N

    def symbols(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.algebra.rank):
            s = self.shift(i)
            out.extend((i, raw - s) for raw in range(-self.N, self.N + 1))
        return out

    def unit(self, i: int, m: int) -> WinElem:
        if not self.contains(i, m):
            raise PreconditionError(f"symbol index {m} outside the window")
        return {(i, m): Poly.const(self.algebra.table, 1)}

    def label(self, i: int, m: int) -> str:
        return f"{self.algebra.basis[i]}_{m}"

    def render(self, elem: WinElem) -> str:
        if not elem:
            return "0"
        parts = [f"({c})*{self.label(i, m)}" for (i, m), c in sorted(elem.items())]
        return " + ".join(parts)

    def _pair_bracket(self, i: int, m: int, j: int, n: int):
        key = (i, m, j, n)
        if key in self._cache:
            return self._cache[key]
        result = self._pair_bracket_uncached(i, m, j, n)
        self._cache[key] = result
        return result

    def _pair_bracket_uncached(self, i: int, m: int, j: int, n: int):
        mu = m + self.shift(i)
        nu = n + self.shift(j)
        if abs(mu) > self.N or abs(nu) > self.N:
            return OUT_OF_WINDOW
        out: WinElem = {}
        for deg, vec in enumerate(self._nth.get((i, j), [])):
            cb = _binom(mu, deg)
            if cb == 0:
                continue
            t = mu + nu - deg
            for k, poly in enumerate(vec):
                if poly.is_zero:
                    continue
                for (s,), cof in poly.split(("d",)).items():
                    fall = _falling(t, s)
                    coeff = cof * (cb * fall * (-1) ** s)
                    if coeff.is_zero:
                        continue
                    raw = t - s
                    if abs(raw) > self.N:
                        return OUT_OF_WINDOW
                    key = (k, raw - self.shift(k))
                    acc = out.get(key, Poly.zero(self.algebra.table)) + coeff
                    if acc.is_zero:
                        out.pop(key, None)
                    else:
                        out[key] = acc
        return out

    def bracket(self, a, b):
        """Bilinear product of window elements; OutOfWindow propagates."""
        if a is OUT_OF_WINDOW or b is OUT_OF_WINDOW:
            return OUT_OF_WINDOW
        out: WinElem = {}
        for (i, m), ca in a.items():
            for (j, n), cb in b.items():
                piece = self._pair_bracket(i, m, j, n)
                if piece is OUT_OF_WINDOW:
                    return OUT_OF_WINDOW
                scale = ca * cb
                for key, c in piece.items():
                    acc = out.get(key, Poly.zero(self.algebra.table)) + scale * c
                    if acc.is_zero:
                        out.pop(key, None)
                    else:
                        out[key] = acc
        return out

    def lift_map(self, T: ModuleMap):
        """The operator a_n -> T(a)_n, with d-powers reduced into index shifts."""
        if T.src_rank != self.algebra.rank or T.dst_rank != self.algebra.rank:
            raise PreconditionError("map shape does not match the algebra")

        def lifted(elem):
            if elem is OUT_OF_WINDOW:
                return OUT_OF_WINDOW
            out: WinElem = {}
            for (i, m), c in elem.items():
                raw_m = m + self.shift(i)
                for j, entry in enumerate(T.matrix[i]):
                    if entry.is_zero:
                        continue
                    for (s,), cof in entry.split(("d",)).items():
                        fall = _falling(raw_m, s)
                        coeff = c * cof * (fall * (-1) ** s)
                        if coeff.is_zero:
                            continue
                        raw = raw_m - s
                        if abs(raw) > self.N:
                            return OUT_OF_WINDOW
                        key = (j, raw - self.shift(j))
                        acc = out.get(key, Poly.zero(self.algebra.table)) + coeff
                        if acc.is_zero:
                            out.pop(key, None)
                        else:
                            out[key] = acc
            return out

        return lifted


def coeff_bracket(w: CoeffWindow, a, b):
    """Product of window elements; OutOfWindow when an index escapes."""
    return w.bracket(a, b)


def _sub(a: WinElem, b: WinElem) -> WinElem:
    out = dict(a)
    for key, c in b.items():
        acc = out.get(key, c * 0) - c
        if acc.is_zero:
            out.pop(key, None)
        else:
            out[key] = acc
    return out


def _add(a: WinElem, b: WinElem) -> WinElem:
    out = dict(a)
    for key, c in b.items():
        acc = out.get(key, c * 0) + c
        if acc.is_zero:
            out.pop(key, None)
        else:
            out[key] = acc
    return out


def window_checks(w: CoeffWindow, T: ModuleMap | None = None,
                  weight: Poly | Fraction | int = 0) -> Report:
    """Lie axioms on window symbols, and the lifted Rota-Baxter identity.

    Triples (or pairs) with any product outside the window are skipped; the
    report covers every admissible combination.
    """
    if w.algebra.kind != LIE:
        raise PreconditionError("window checks expect a Lie-kind algebra")
    report = Report()
    syms = w.symbols()
    units = {sym: w.unit(*sym) for sym in syms}
    anti = report.new_check("antisymmetry")
    for a in syms:
        for b in syms:
            ab = w.bracket(units[a], units[b])
            ba = w.bracket(units[b], units[a])
            if ab is OUT_OF_WINDOW or ba is OUT_OF_WINDOW:
                continue
            res = _add(ab, ba)
            for (k, m), c in sorted(res.items()):
                anti.add(f"[{w.label(*a)},{w.label(*b)}]->{w.label(k, m)}", c)
    jac = report.new_check("jacobi")
    for a in syms:
        for b in syms:
            ab = w.bracket(units[a], units[b])
            if ab is OUT_OF_WINDOW:
                continue
            for c in syms:
                bc = w.bracket(units[b], units[c])
                ac = w.bracket(units[a], units[c])
                if bc is OUT_OF_WINDOW or ac is OUT_OF_WINDOW:
                    continue
                lhs = w.bracket(units[a], bc)
                t1 = w.bracket(ab, units[c])
                t2 = w.bracket(units[b], ac)
                if OUT_OF_WINDOW in (lhs, t1, t2):
                    continue
                res = _sub(_sub(lhs, t1), t2)
                for (k, m), cc in sorted(res.items()):
                    jac.add(
                        f"[{w.label(*a)},[{w.label(*b)},{w.label(*c)}]]->{w.label(k, m)}",
                        cc)
    if T is not None:
        alpha = weight if isinstance(weight, Poly) else Poly.const(w.algebra.table, weight)
        lift = w.lift_map(T)
        lifted_units = {sym: lift(units[sym]) for sym in syms}
        chk = report.new_check("lifted_rota_baxter")
        for a in syms:
            ta = lifted_units[a]
            if ta is OUT_OF_WINDOW:
                continue
            for b in syms:
                tb = lifted_units[b]
                if tb is OUT_OF_WINDOW:
                    continue
                lhs = w.bracket(ta, tb)
                r1 = lift(w.bracket(ta, units[b]))
                r2 = lift(w.bracket(units[a], tb))
                r3 = lift(w.bracket(units[a], units[b]))
                if OUT_OF_WINDOW in (lhs, r1, r2, r3):
                    continue
                rhs = _add(_add(r1, r2), {k: c * alpha for k, c in r3.items()})
                res = _sub(lhs, rhs)
                for (k, m), cc in sorted(res.items()):
                    chk.add(f"({w.label(*a)},{w.label(*b)})->{w.label(k, m)}", cc)
    return report
