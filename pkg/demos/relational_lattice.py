"""
Join, union, projection and difference on ideals
================================================

Natural join adds ideals, union intersects them, projection eliminates
variables and difference is a colon ideal.  Every answer is checked
against a brute-force evaluation on the tuples themselves.
"""

from idealdb.groebner import display_basis, ideal_equal
from idealdb.relalg import StoredRelation, diff, join, project, rel_union, rename
from idealdb.solve import format_points, oracle_ra, solve_points, to_tuples

I = StoredRelation.from_points([(1, 1), (2, 1), (3, 2)], ("x", "y"))
J = StoredRelation.from_points([(1, 1), (2, 1), (3, 1), (3, 2)], ("x", "z"))

IJ = join(I, J)
print("join header:", IJ.header)
print("join tuples:", format_points(solve_points(IJ)))
print("oracle     :", format_points(oracle_ra("join", to_tuples(I), to_tuples(J)).tuples))

# %%
# Projection back onto (x, y) returns I exactly.
back = project(IJ, ["x", "y"])
print("project(IJ, [x, y]) equals I:", ideal_equal(back.ideal, I.ideal))

# %%
# Union and difference need a shared header.
A = StoredRelation.from_points([(1, 1), (2, 1)], ("x", "y"))
B = StoredRelation.from_points([(3, 2), (2, 1)], ("x", "y"))
print("A | B:", format_points(solve_points(rel_union(A, B))))
print("A - B:", format_points(solve_points(diff(A, B))))
print("basis of A - B:", display_basis(diff(A, B).ideal.gb()))

# Union across different headers keeps only the shared attributes.
K = StoredRelation.from_points([(1, 5), (2, 7)], ("y", "w"))
U = rel_union(I, K)
print("union over", U.header, "->", format_points(solve_points(U)))

# %%
# Self-join is idempotent: the ideal does not double the tuples.
print("I join I == I:", ideal_equal(join(I, I).ideal, I.ideal))

# Renaming is a change of variable names.
print("renamed header:", rename(I, {"x": "a", "y": "b"}).header)
