from fractions import Fraction

import pytest

from qtrin.liealg import UnknownAlgebra, algebra, algebra_names


def test_known_names_and_ranks():
    ranks = {"A5": 5, "D6": 6, "E6": 6, "E7": 7, "E8": 8}
    assert set(algebra_names()) == set(ranks)
    for name, r in ranks.items():
        g = algebra(name)
        assert g.rank == r
        assert len(g.cartan) == r


def test_unknown_algebra_raises():
    with pytest.raises(UnknownAlgebra):
        algebra("B3")


def test_cartan_from_incidence():
    for name in algebra_names():
        g = algebra(name)
        for i in range(g.rank):
            for j in range(g.rank):
                expect = (2 if i == j else 0) - g.incidence[i][j]
                assert g.cartan[i][j] == expect
            assert g.incidence[i][i] == 0
            # undirected diagram
            assert g.incidence[i] == tuple(row[i] for row in g.incidence)


def test_inverse_cartan_is_exact_inverse():
    for name in algebra_names():
        g = algebra(name)
        r = g.rank
        for i in range(r):
            for j in range(r):
                s = sum(g.cartan[i][k] * g.inverse_cartan[k][j]
                        for k in range(r))
                assert s == (1 if i == j else 0)


def test_inverse_cartan_positive():
    # finite type: every entry of the inverse is strictly positive
    for name in algebra_names():
        g = algebra(name)
        assert all(x > 0 for row in g.inverse_cartan for x in row)


def test_edge_counts_match_tree_shape():
    # all five diagrams are trees: rank-1 edges, and the number of
    # degree-3 vertices distinguishes the A series from the others
    for name, branches in (("A5", 0), ("D6", 1), ("E6", 1),
                           ("E7", 1), ("E8", 1)):
        g = algebra(name)
        degrees = [sum(row) for row in g.incidence]
        assert sum(degrees) == 2 * (g.rank - 1)
        assert sum(1 for d in degrees if d == 3) == branches


def test_marked_vertices():
    assert algebra("A5").marked_vertices == frozenset({3})
    assert algebra("D6").marked_vertices == frozenset({5})
    assert algebra("E7").marked_vertices == frozenset({1, 6})
    assert algebra("E8").marked_vertices == frozenset({1})
    assert algebra("E6").marked_vertices == frozenset({6})


def test_quadratic_forms():
    g = algebra("A5")
    m = (1, 0, 2, 0, 1)
    qc = g.quad_form_cartan(m)
    # m.C.m computed directly
    direct = sum(m[i] * g.cartan[i][j] * m[j]
                 for i in range(5) for j in range(5))
    assert qc == direct
    n = (0, 1, 0, 1, 0)
    qi = g.quad_form_invcartan(n)
    direct = sum(Fraction(n[i]) * g.inverse_cartan[i][j] * n[j]
                 for i in range(5) for j in range(5))
    assert qi == direct


def test_incidence_apply():
    g = algebra("D6")
    v = tuple(range(1, 7))
    out = g.incidence_apply(v)
    expect = [sum(g.incidence[i][j] * v[j] for j in range(6))
              for i in range(6)]
    assert list(out) == expect
