"""
Relations as finite varieties
=============================

A tuple is a point, and a point is the common zero set of linear
polynomials.  A set of tuples becomes the ideal of all polynomials that
vanish on it, and its reduced Gröbner basis is a compact description of
the whole table.
"""

from idealdb.groebner import display_basis
from idealdb.polyring import DEGREVLEX, LEX, Ring
from idealdb.relalg import ideal_of_points, point_ideal, variety_union
from idealdb.solve import format_points, solve_points

ring = Ring(("x", "y", "z"), LEX)

# One tuple, one system of linear equations.
p1 = point_ideal((1, 1, 1), ring)
p2 = point_ideal((2, 1, 1), ring)
print("tuple (1,1,1):", display_basis(p1.gb()))
print("tuple (2,1,1):", display_basis(p2.gb()))

# Two tuples: multiply every equation of one system by every equation of
# the other.  Nine products collapse to three polynomials.
both = variety_union(p1, p2)
print("both tuples:  ", display_basis(both.gb()))
print("points:       ", format_points(solve_points(both)))

# %%
# Four tuples.  Declaring the variables as (z, y, x) under lex makes x the
# cheapest variable, so the basis has a univariate polynomial in x and an
# equation that is linear in y.
rows = [(1, 1, 1), (2, 1, 1), (3, 2, 1), (3, 2, 2)]
zyx = Ring(("z", "y", "x"), LEX)
table = ideal_of_points([r[::-1] for r in rows], zyx)
for g in display_basis(table.gb()):
    print("  ", g)

# The same table under degrevlex over (x, y, z) has a different basis but
# the same points.
drl = ideal_of_points(rows, Ring(("x", "y", "z"), DEGREVLEX))
print("degrevlex basis:", display_basis(drl.gb()))
print("recovered tuples:", format_points(solve_points(drl)))
