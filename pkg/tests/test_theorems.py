"""Equivalences between the tensor equations and their operator forms,
checked on builtin structures and on randomized tensors."""

from hypothesis import given, settings
from hypothesis import strategies as st

from confalg import (
    Tensor2,
    VarTable,
    canonical_skew_tensor,
    canonical_sym_tensor,
    check_o_operator,
    cybe_residual,
    dual_rep,
    flip,
    parts,
    s_residual,
    semidirect,
    standard_rep,
    sub_adjacent,
    t_from_r,
    with_zero_right,
)
from conftest import poly_strategy

T = VarTable(params=("b", "g0", "g1", "g2", "g3"))


def random_tensor(algebra, seed_entries):
    coeffs = {}
    for (i, j), p in seed_entries:
        key = (i % algebra.rank, j % algebra.rank)
        coeffs[key] = coeffs.get(key, p * 0) + p
    return Tensor2(algebra, coeffs)


entry_strategy = st.lists(
    st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
              poly_strategy(T, names=("d1", "d2"), max_terms=2, max_degree=1)),
    min_size=1, max_size=3)


class TestSkewEquivalence:
    """A skew tensor solves the Yang-Baxter equation exactly when its
    associated map at zero argument is an O-operator for the dual adjoint."""

    def test_positive_instance(self, comm1):
        # the canonical solution over the rank-2 sum built from the rank-1
        # left-symmetric structure
        g = sub_adjacent(comm1)
        rep = dual_rep(standard_rep(comm1, "regular_left"))
        S = semidirect(g, rep)
        r = canonical_skew_tensor(S, comm1.rank)
        assert cybe_residual(S, r).is_zero
        T0 = t_from_r(S, r).at_zero()
        assert check_o_operator(T0, dual_rep(standard_rep(S, "adjoint"))).ok

    @given(entries=entry_strategy)
    @settings(max_examples=25, deadline=None)
    def test_random_agreement(self, entries, hv):
        raw = random_tensor(hv, entries)
        r = raw - flip(raw)
        assert parts(r).is_skew
        lhs = cybe_residual(hv, r).is_zero
        T0 = t_from_r(hv, r).at_zero()
        rhs = check_o_operator(T0, dual_rep(standard_rep(hv, "adjoint"))).ok
        assert lhs == rhs


class TestSymmetricEquivalence:
    """A symmetric tensor solves the S-equation exactly when its associated
    map at zero argument is an O-operator for the dual of left multiplication
    (over the commutator algebra)."""

    def test_positive_instance(self, comm1):
        dual = dual_rep(standard_rep(comm1, "regular_left"))
        S = semidirect(comm1, with_zero_right(comm1, dual))
        r = canonical_sym_tensor(S, comm1.rank)
        assert s_residual(S, r).is_zero
        T0 = t_from_r(S, r).at_zero()
        rep = dual_rep(standard_rep(S, "regular_left"))
        assert check_o_operator(T0, rep).ok

    @given(entries=entry_strategy)
    @settings(max_examples=25, deadline=None)
    def test_random_agreement(self, entries, comm1):
        raw = random_tensor(comm1, entries)
        r = raw + flip(raw)
        assert parts(r).is_sym
        lhs = s_residual(comm1, r).is_zero
        T0 = t_from_r(comm1, r).at_zero()
        rep = dual_rep(standard_rep(comm1, "regular_left"))
        rhs = check_o_operator(T0, rep).ok
        assert lhs == rhs

    @given(entries=entry_strategy)
    @settings(max_examples=15, deadline=None)
    def test_random_agreement_rank2(self, entries, table, P):
        from confalg import ConformalAlgebra
        A = ConformalAlgebra("left_symmetric", ("L", "W"), table,
                             {(0, 0): {1: P("g0*x")}})
        raw = random_tensor(A, entries)
        r = raw + flip(raw)
        lhs = s_residual(A, r).is_zero
        T0 = t_from_r(A, r).at_zero()
        rep = dual_rep(standard_rep(A, "regular_left"))
        rhs = check_o_operator(T0, rep).ok
        assert lhs == rhs
