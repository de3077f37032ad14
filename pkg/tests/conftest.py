from fractions import Fraction

import pytest
from hypothesis import strategies as st

from confalg import ConformalAlgebra, LIE, LEFT_SYMMETRIC, Poly, VarTable, parse


@pytest.fixture(scope="session")
def table():
    return VarTable(params=("b", "g0", "g1", "g2", "g3"))


@pytest.fixture(scope="session")
def P(table):
    def _parse(text):
        return parse(table, text)

    return _parse


@pytest.fixture(scope="session")
def vir(table, P):
    return ConformalAlgebra(LIE, ("L",), table, {(0, 0): {0: P("d+2*x")}})


@pytest.fixture(scope="session")
def hv(table, P):
    return ConformalAlgebra(LIE, ("L", "W"), table, {
        (0, 0): {0: P("d+2*x")},
        (0, 1): {1: P("d+x")},
        (1, 0): {1: P("x")},
    })


@pytest.fixture(scope="session")
def comm1(table):
    # rank-1 commutative product: e_x e = e
    return ConformalAlgebra(LEFT_SYMMETRIC, ("e",), table,
                            {(0, 0): {0: Poly.const(table, 1)}})


def poly_strategy(table, names=("d", "x", "y"), max_terms=4, max_degree=3):
    idx = [table.index[n] for n in names]
    width = len(table.names)

    def build(pairs):
        terms = {}
        for exps, num in pairs:
            full = [0] * width
            for i, e in zip(idx, exps):
                full[i] = e
            key = tuple(full)
            terms[key] = terms.get(key, 0) + Fraction(num)
        return Poly(table, terms)

    exp_tuple = st.tuples(*[st.integers(0, max_degree) for _ in names])
    coeff = st.integers(-6, 6).filter(lambda n: n != 0)
    return st.lists(st.tuples(exp_tuple, coeff), max_size=max_terms).map(build)
