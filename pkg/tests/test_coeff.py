from fractions import Fraction

from confalg import (
    OUT_OF_WINDOW,
    CoeffWindow,
    ConformalAlgebra,
    ModuleMap,
    Poly,
    bracket,
    check_rota_baxter,
    nth_products,
    window_checks,
)

F = Fraction


class TestNthProducts:
    def test_virasoro(self, vir, P):
        table = nth_products(vir)
        prods = table[(0, 0)]
        assert prods[0] == (P("d"),)
        assert prods[1] == (P("2"),)
        assert len(prods) == 2

    def test_heisenberg_virasoro(self, hv, P):
        table = nth_products(hv)
        assert table[(0, 1)][0] == (P("0"), P("d"))
        assert table[(0, 1)][1] == (P("0"), P("1"))
        assert table[(1, 0)][0] == (P("0"), P("0"))
        assert table[(1, 0)][1] == (P("0"), P("1"))
        assert (1, 1) not in table

    def test_abelian(self, table):
        ab = ConformalAlgebra("lie", ("A",), table, {})
        assert nth_products(ab) == {}

    def test_reconstruction(self, vir, hv, comm1, P):
        # sum of x^n / n! times the n-th product rebuilds the bracket
        import math
        X = P("x")
        for A in (vir, hv, comm1):
            table = nth_products(A)
            for i in range(A.rank):
                for j in range(A.rank):
                    acc = list(A.zero_vector())
                    for n, vec in enumerate(table.get((i, j), [])):
                        scale = X ** n * F(1, math.factorial(n))
                        acc = [a + scale * p for a, p in zip(acc, vec)]
                    assert tuple(acc) == bracket(A, A.basis_vector(i), A.basis_vector(j))


class TestWindowBracket:
    def test_raw_virasoro_product(self, vir, P):
        w = CoeffWindow(vir, 5)
        # oracle: (d L)_3 + 2 binom(2,1) L_2 = -3 L_2 + 4 L_2 = L_2
        out = w.bracket(w.unit(0, 2), w.unit(0, 1))
        assert out == {(0, 2): P("1")}

    def test_raw_relation(self, vir):
        w = CoeffWindow(vir, 6)
        one = Poly.const(vir.table, 1)
        for m in range(-3, 4):
            for n in range(-3, 4):
                out = w.bracket(w.unit(0, m), w.unit(0, n))
                if out is OUT_OF_WINDOW:
                    continue
                expected = {} if m == n else {(0, m + n - 1): one * (m - n)}
                assert out == expected

    def test_w_part_abelian(self, hv):
        w = CoeffWindow(hv, 5)
        for m in range(-5, 6):
            for n in range(-5, 6):
                out = w.bracket(w.unit(1, m), w.unit(1, n))
                assert out == {}

    def test_shifted_textbook_relations(self, hv):
        w = CoeffWindow(hv, 6, shifts={0: 1, 1: 0})
        one = Poly.const(hv.table, 1)
        for m in range(-4, 5):
            for n in range(-4, 5):
                ll = w.bracket(w.unit(0, m), w.unit(0, n))
                if ll is not OUT_OF_WINDOW:
                    assert ll == ({} if m == n else {(0, m + n): one * (m - n)})
                lw = w.bracket(w.unit(0, m), w.unit(1, n))
                if lw is not OUT_OF_WINDOW:
                    assert lw == ({} if n == 0 else {(1, m + n): one * (-n)})

    def test_out_of_window(self, vir):
        w = CoeffWindow(vir, 2)
        assert w.bracket(w.unit(0, 2), w.unit(0, 2)) is OUT_OF_WINDOW

    def test_empty_window_vacuous(self, vir):
        w = CoeffWindow(vir, 0)
        report = window_checks(w)
        assert report.ok

    def test_bilinearity(self, hv, P):
        w = CoeffWindow(hv, 6)
        a = {(0, 1): P("2"), (1, -1): P("-3/2")}
        b = {(0, 0): P("1/3")}
        lhs = w.bracket(a, b)
        expect = {}
        for (i, m), ca in a.items():
            for (j, n), cb in b.items():
                piece = w.bracket(w.unit(i, m), w.unit(j, n))
                for key, c in piece.items():
                    expect[key] = expect.get(key, c * 0) + ca * cb * c
        expect = {k: v for k, v in expect.items() if not v.is_zero}
        assert lhs == expect


class TestWindowChecks:
    def test_virasoro_jacobi(self, vir):
        report = window_checks(CoeffWindow(vir, 6))
        assert report.ok

    def test_hv_jacobi_and_lift(self, hv, table, P):
        T = ModuleMap(table, [[P("-b"), P("-b")], [P("b"), P("b")]])
        report = window_checks(CoeffWindow(hv, 6, shifts={0: 1, 1: 0}), T, 0)
        assert report.ok
        names = [c.name for c in report.checks]
        assert "lifted_rota_baxter" in names

    def test_lift_compatibility_family2(self, hv, table, P):
        T = ModuleMap(table, [[P("0"), P("g0+g1*d+g2*d^2+g3*d^3")], [P("0"), P("0")]])
        assert check_rota_baxter(hv, T, 0).ok
        assert window_checks(CoeffWindow(hv, 4), T, 0).ok

    def test_broken_operator_fails_lift(self, hv, table, P):
        T = ModuleMap(table, [[P("1"), P("0")], [P("0"), P("0")]])
        assert not check_rota_baxter(hv, T, 0).ok
        report = window_checks(CoeffWindow(hv, 4), T, 0)
        assert not report.ok
