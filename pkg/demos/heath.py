"""
Functional dependencies as polynomials
======================================

On a finite relation, ``x -> y`` holds exactly when y is a polynomial in
x on the tuples.  When it holds, the relation is the join of its
projections onto (x, y) and (x, z).
"""

from idealdb.fd import fd_check, heath_decompose
from idealdb.relalg import StoredRelation, join
from idealdb.solve import format_point, format_points, solve_points

A = StoredRelation.from_points([(1, 1, 1), (2, 1, 1), (3, 2, 1), (3, 2, 2)], ("x", "y", "z"))

w = fd_check(A, ["x"], "y")
print("x -> y:", w.equation())
print("witness at x = 1, 2, 3:", format_point([w(x) for x in (1, 2, 3)]))
print("z -> x:", fd_check(A, ["z"], "x"))

res = heath_decompose(A, ["x"], ["y"], ["z"])
print("left :", format_points(solve_points(res.left)))
print("right:", format_points(solve_points(res.right)))
print("lossless:", res.verified)

# %%
# Without the dependency the join of projections invents tuples.
bad = StoredRelation.from_points([(1, 1, 1), (1, 2, 2)], ("x", "y", "z"))
res = heath_decompose(bad, ["x"], ["y"], ["z"])
print("lossless:", res.verified)
print("rejoined:", format_points(solve_points(join(res.left, res.right))))
