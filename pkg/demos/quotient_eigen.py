"""
Multiplication matrices and joint eigenvectors
==============================================

Modulo a zero-dimensional ideal, polynomials form a finite-dimensional
vector space.  Multiplying by a variable is a linear map on it.  The maps
for different variables commute, and their joint eigenvalues are exactly
the tuples of the relation.
"""

from idealdb.errors import DependentBasis
from idealdb.quotient import (
    coordinates,
    custom_basis,
    eigensystem,
    multiplication_matrices,
    standard_monomials,
    structure_constants,
)
from idealdb.relalg import StoredRelation
from idealdb.solve import format_point

A = StoredRelation.from_points([(1, 1, 1), (2, 1, 1), (3, 2, 1), (3, 2, 2)], ("x", "y", "z"))
ring = A.ring

print("standard monomials:", [str(ring.monomial(m)) for m in standard_monomials(A)])

# {1, x, x^2, x^3} is four monomials but only three independent residues:
# x takes just three values on the relation.
try:
    custom_basis(A, ["1", "x", "x^2", "x^3"])
except DependentBasis as exc:
    print("rejected:", exc)

basis = custom_basis(A, ["1", "x", "y", "z"])
print("[x^2] in basis", basis.labels(), "=", format_point(coordinates(ring.parse("x^2"), basis)))
print("[x][y] =", format_point(structure_constants(basis)[1][2]))

# %%
for v, M in multiplication_matrices(basis).items():
    print(f"A[{v}] =")
    print(M)

# %%
# Evaluating the basis at each tuple gives the eigenvector matrix E.
es = eigensystem(A, basis)
print("E =")
print(es.E)
for v in es.vars:
    print(f"Lambda[{v}] = diag{format_point(es.lambdas[v])}")
print("joint eigenvalues:", ", ".join(format_point(t) for t in es.joint_tuples()))
print("A[x] == E Lambda[x] E^-1:", es.reconstruct("x") == es.matrices["x"])
