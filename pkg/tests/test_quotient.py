import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealdb.errors import BasisSizeError, DependentBasis, NonRadical, NotZeroDimensional, RingMismatch
from idealdb.groebner import Ideal
from idealdb.linalg import QMatrix
from idealdb.polyring import Ring
from idealdb.quotient import (
    commuting,
    coordinates,
    custom_basis,
    eigensystem,
    matrix_from_structure,
    multiplication_matrices,
    multiplication_matrix,
    standard_basis,
    standard_monomials,
    structure_constants,
)
from idealdb.relalg import StoredRelation
from idealdb.solve import solve_points

RX = Ring(("x",))


@pytest.fixture(scope="module")
def xyzb(four_tuple):
    return custom_basis(four_tuple, ["1", "x", "y", "z"])


def test_standard_monomials(four_tuple_lex):
    ring = four_tuple_lex.ring
    std = [str(ring.monomial(m)) for m in standard_monomials(four_tuple_lex)]
    assert std == ["1", "x", "x^2", "z"]
    assert standard_monomials(Ideal(RX, [RX.parse("x^2 - 4*x + 4")])) == [(0,), (1,)]
    xy = Ring(("x", "y"))
    assert standard_monomials(Ideal(xy, [xy.parse("x-1"), xy.parse("y-1")])) == [(0, 0)]
    with pytest.raises(NotZeroDimensional):
        standard_monomials(Ideal(xy, [xy.parse("x - y")]))


def test_coordinates(xyzb, four_tuple):
    ring = four_tuple.ring
    assert coordinates(ring.parse("x^2"), xyzb) == (-4, 3, 2, 0)
    assert coordinates(ring.parse("y"), xyzb) == (0, 0, 1, 0)
    for k, e in enumerate(xyzb.elements):
        assert coordinates(e, xyzb) == tuple(int(k == m) for m in range(4))
    member = ring.parse("(x-1)*(x-2)*(x-3)")
    assert coordinates(member, xyzb) == (0, 0, 0, 0)


def test_custom_basis(four_tuple):
    with pytest.raises(DependentBasis):
        custom_basis(four_tuple, ["1", "x", "x^2", "x^3"])
    with pytest.raises(BasisSizeError):
        custom_basis(four_tuple, ["1", "x"])
    with pytest.raises(RingMismatch):
        custom_basis(four_tuple, [RX.one()] * 4)
    std = standard_basis(four_tuple)
    assert std.change == QMatrix.identity(4)
    assert custom_basis(four_tuple, list(std.standard)).change == QMatrix.identity(4)


def test_multiplication_matrices(xyzb):
    A = multiplication_matrices(xyzb)
    assert A["x"] == [[0, 1, 0, 0], [-4, 3, 2, 0], [-3, 1, 3, 0], [-3, 1, 0, 3]]
    assert A["y"] == [[0, 0, 1, 0], [-3, 1, 3, 0], [-2, 0, 3, 0], [-2, 0, 1, 2]]
    assert A["z"] == [[0, 0, 0, 1], [-3, 1, 0, 3], [-2, 0, 1, 2], [-2, 0, 0, 3]]
    assert commuting(list(A.values()))


def test_structure_constants(xyzb, four_tuple):
    eps = structure_constants(xyzb)
    assert eps[1][2] == [-3, 1, 3, 0]
    for l in range(4):
        assert eps[0][l] == [int(l == m) for m in range(4)]
        for k in range(4):
            assert eps[k][l] == eps[l][k]
    pi = coordinates(four_tuple.ring.var("x"), xyzb)
    assert matrix_from_structure(pi, eps) == multiplication_matrix(xyzb, "x")


def test_eigensystem_golden(xyzb, four_tuple):
    es = eigensystem(four_tuple, xyzb)
    assert es.E == [[1, 1, 1, 1], [3, 3, 2, 1], [2, 2, 1, 1], [2, 1, 1, 1]]
    assert es.joint_tuples() == [(3, 2, 2), (3, 2, 1), (2, 1, 1), (1, 1, 1)]
    assert es.Lambda("x") == QMatrix.diag([3, 3, 2, 1])
    assert es.Lambda("y") == QMatrix.diag([2, 2, 1, 1])
    assert es.Lambda("z") == QMatrix.diag([2, 1, 1, 1])
    # eigenvalue 3 of A_x has a two-dimensional eigenspace
    assert list(es.lambdas["x"]).count(3) == 2
    for v in "xyz":
        assert es.reconstruct(v) == es.matrices[v]


def test_eigensystem_single_point():
    A = StoredRelation.from_points([(5, -2)], ("x", "y"))
    es = eigensystem(A)
    assert es.E == [[1]]
    assert es.Lambda("x") == [[5]] and es.Lambda("y") == [[-2]]


def test_non_radical():
    with pytest.raises(NonRadical):
        eigensystem(Ideal(RX, [RX.parse("x^2 - 4*x + 4")]))


# -- properties ------------------------------------------------------------

value = st.integers(-2, 3)


@st.composite
def point_relations(draw):
    header = draw(st.sampled_from([("x",), ("x", "y"), ("x", "y", "z")]))
    rows = draw(st.lists(st.tuples(*[value] * len(header)), min_size=1, max_size=5))
    return StoredRelation.from_points(rows, header)


@settings(max_examples=30, deadline=None)
@given(point_relations())
def test_quotient_laws(A):
    basis = standard_basis(A)
    mats = multiplication_matrices(basis)
    assert commuting(list(mats.values()))
    es = eigensystem(A, basis)
    points = solve_points(A)
    assert basis.dimension == len(points)
    for i, v in enumerate(A.header):
        assert sorted(es.lambdas[v]) == sorted(p[i] for p in points)
        assert es.reconstruct(v) == mats[v]
        M = mats[v]
        for p in points:
            vals = [e.evaluate(p) for e in basis.elements]
            for row in range(basis.dimension):
                assert sum(M[row, j] * vals[j] for j in range(basis.dimension)) == p[i] * vals[row]


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_dimension_bounds_point_count(roots):
    p = RX.one()
    for r in roots:
        p = p * (RX.var("x") - r)
    I = Ideal(RX, [p])
    assert len(standard_monomials(I)) == len(roots) >= len(solve_points(I))
    mats = multiplication_matrices(standard_basis(I))
    assert commuting(list(mats.values()))
