import pytest

from confalg import (
    ConformalAlgebra,
    LIE,
    PreconditionError,
    Representation,
    check_axioms,
    check_rep,
    dual_rep,
    regular_module,
    semidirect,
    standard_rep,
    sub_adjacent,
    with_zero_right,
)


@pytest.fixture(scope="module")
def hv_lsc1(table, P):
    # left-symmetric table induced by the first weight-0 operator family
    return ConformalAlgebra("left_symmetric", ("L", "W"), table, {
        (0, 0): {0: P("-b*(d+2*x)"), 1: P("-b*x")},
        (0, 1): {1: P("-b*(d+x)")},
        (1, 0): {0: P("b*(d+2*x)"), 1: P("b*x")},
        (1, 1): {1: P("b*(d+x)")},
    })


class TestCheckRep:
    def test_adjoint_virasoro(self, vir):
        assert check_rep(standard_rep(vir, "adjoint")).ok

    def test_adjoint_heisenberg_virasoro(self, hv):
        assert check_rep(standard_rep(hv, "adjoint")).ok

    def test_constant_action_fails(self, vir, table, P):
        rep = Representation(vir, ("v",), rho={(0, 0): {0: P("1")}})
        report = check_rep(rep)
        assert not report.ok
        # oracle: [L_x L]_{x+y} v = ((-x-y)+2x) v = (x-y) v, while the
        # composition side cancels, so the residual is x - y
        assert report.checks[0].residuals == [("(L,L;v)->v", "x - y")]

    def test_regular_left_of_lsc(self, comm1, hv_lsc1):
        assert check_rep(standard_rep(comm1, "regular_left")).ok
        assert check_rep(standard_rep(hv_lsc1, "regular_left")).ok

    def test_left_minus_right(self, hv_lsc1):
        rep = check_rep(standard_rep(hv_lsc1, "left_minus_right"))
        assert rep.ok

    def test_regular_module_axioms(self, comm1, hv_lsc1):
        assert check_rep(regular_module(comm1)).ok
        assert check_rep(regular_module(hv_lsc1)).ok

    def test_kind_preconditions(self, vir, comm1):
        with pytest.raises(PreconditionError):
            standard_rep(vir, "regular_left")
        with pytest.raises(PreconditionError):
            standard_rep(comm1, "adjoint")


class TestStandardTables:
    def test_adjoint_table_is_structure_table(self, vir, P):
        rep = standard_rep(vir, "adjoint")
        assert rep.rho[(0, 0)][0] == P("d+2*x")

    def test_regular_right_substitution(self, table, P):
        g_of = P("g0 - g1*x + g2*x^2 - g3*x^3")
        A = ConformalAlgebra("left_symmetric", ("L", "W"), table,
                             {(0, 0): {1: g_of * P("x")}})
        rep = standard_rep(A, "regular_right")
        # oracle: substitute x -> -x-d in the product polynomial
        expected = (g_of * P("x")).subs({"x": P("-x-d")})
        assert rep.rho[(0, 0)][1] == expected

    def test_left_minus_right_of_commutative_is_zero(self, comm1):
        rep = standard_rep(comm1, "left_minus_right")
        assert rep.rho == {}


class TestDual:
    def test_dual_of_adjoint_virasoro(self, vir, P):
        rep = dual_rep(standard_rep(vir, "adjoint"))
        # oracle: -rho(-x-d, x) = -((-x-d) + 2x) = d - x
        assert rep.rho[(0, 0)][0] == P("d-x")
        assert rep.mbasis == ("L*",)
        assert check_rep(rep).ok

    def test_dual_of_zero_rep(self, vir):
        rep = Representation(vir, ("v",), rho={})
        dd = dual_rep(rep)
        assert dd.rho == {}
        assert check_rep(dd).ok

    def test_dual_of_regular_left(self, hv_lsc1):
        rep = dual_rep(standard_rep(hv_lsc1, "regular_left"))
        assert check_rep(rep).ok

    def test_dual_requires_lie_rep(self, comm1):
        with pytest.raises(PreconditionError):
            dual_rep(regular_module(comm1))


class TestSemidirect:
    def test_virasoro_with_dual_adjoint(self, vir, P):
        rep = dual_rep(standard_rep(vir, "adjoint"))
        S = semidirect(vir, rep)
        assert S.basis == ("L", "L*")
        assert S.product(0, 1)[1] == P("d-x")
        assert S.product(1, 1) == {}
        # oracle: [L*_x L] = -rho*(L)_{-x-d} L* = -(2d+x) L*
        assert S.product(1, 0)[1] == P("-2*d-x")
        assert check_axioms(S).ok

    def test_zero_rep_gives_abelian_factor(self, hv):
        rep = Representation(hv, ("u", "v"), rho={})
        S = semidirect(hv, rep)
        assert check_axioms(S).ok
        for i in range(2, 4):
            for j in range(2, 4):
                assert S.product(i, j) == {}
                assert S.product(i, j - 2) == {}

    def test_lie_semidirect_rank4(self, hv_lsc1):
        g = sub_adjacent(hv_lsc1)
        dual = dual_rep(standard_rep(hv_lsc1, "regular_left"))
        S = semidirect(g, dual)
        assert S.rank == 4
        assert check_axioms(S).ok

    def test_lsc_semidirect_rank4(self, hv_lsc1):
        dual = dual_rep(standard_rep(hv_lsc1, "regular_left"))
        S = semidirect(hv_lsc1, with_zero_right(hv_lsc1, dual))
        assert S.kind == "left_symmetric"
        assert check_axioms(S).ok

    def test_lsc_semidirect_regular_module(self, comm1):
        S = semidirect(comm1, regular_module(comm1))
        assert check_axioms(S).ok

    def test_failed_precondition(self, vir, P):
        bad = Representation(vir, ("v",), rho={(0, 0): {0: P("1")}})
        with pytest.raises(PreconditionError):
            semidirect(vir, bad)


class TestAdjointJacobiAgreement:
    def test_mutant_adjoint_fails_like_jacobi(self, table, P):
        mutant = ConformalAlgebra(LIE, ("L",), table, {(0, 0): {0: P("d+3*x")}})
        rep = Representation(mutant, ("L",), rho=dict(mutant.products))
        assert not check_rep(rep).ok
        assert not check_axioms(mutant).ok
