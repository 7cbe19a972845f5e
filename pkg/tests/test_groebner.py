import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from idealdb.errors import DegreeGuardExceeded, RingMismatch
from idealdb.groebner import (
    Ideal,
    buchberger,
    configure,
    divide,
    display_basis,
    groebner_basis,
    ideal_equal,
    ideal_member,
    normal_form,
    reduce_basis,
    s_polynomial,
)
from idealdb.polyring import DEGREVLEX, LEX, Polynomial, Ring, parse_polynomial

RX = Ring(("x",))
RXYZ = Ring(("x", "y", "z"))


def P(text, ring=RXYZ):
    return parse_polynomial(text, ring)


def union_products():
    a = [P("x-1"), P("y-1"), P("z-1")]
    b = [P("x-2"), P("y-1"), P("z-1")]
    return [f * g for f in a for g in b]


def test_normal_form_examples(four_tuple_lex):
    x = RX.var("x")
    assert normal_form(x * x, [x - 1]) == 1
    ideal = four_tuple_lex.ideal
    ring = ideal.ring
    gb = ideal.gb()
    xy = P("x*y", ring)
    assert normal_form(xy, gb) == normal_form(P("-3 + x + 3*y", ring), gb)
    for g in gb:
        assert normal_form(g, gb).is_zero()


def test_buchberger_examples():
    gb = reduce_basis(buchberger(union_products()))
    assert sorted(display_basis(gb)) == sorted(["x^2 -3*x +2", "y -1", "z -1"])
    x = RX.var("x")
    assert buchberger([x - 1]) == [x - 1]
    unit = buchberger([x - 1, x - 2])
    assert any(g.is_constant() and g for g in unit)
    assert reduce_basis(unit) == [RX.one()]


def test_reduce_basis_examples(four_tuple_lex):
    for order in (LEX, DEGREVLEX):
        assert sorted(display_basis(groebner_basis(union_products(), order))) == sorted(
            ["x^2 -3*x +2", "y -1", "z -1"]
        )
    texts = display_basis(four_tuple_lex.ideal.gb())
    assert texts == ["x^3 -6*x^2 +11*x -6", "2*y -x^2 +3*x -4", "z*x -3*z -x +3", "z^2 -3*z +2"]
    # y is stored monic: y - (x^2 - 3x + 4)/2.
    ring = four_tuple_lex.ring
    assert P("y - (x^2 - 3*x + 4)/2", ring) in four_tuple_lex.ideal.gb()
    assert reduce_basis([P("2*x - 2", RX)]) == [P("x - 1", RX)]
    assert reduce_basis([]) == []


def test_reduced_basis_sorted_descending(four_tuple):
    gb = four_tuple.ideal.gb()
    key = four_tuple.ring.order.key
    assert [key(g.lm) for g in gb] == sorted((key(g.lm) for g in gb), reverse=True)
    assert all(g.lc == 1 for g in gb)


def test_membership_examples(four_tuple_lex):
    ring = four_tuple_lex.ring
    assert ideal_member(P("(x-1)*(x-2)*(x-3)", ring), four_tuple_lex.ideal)
    assert not ideal_member(RX.one(), Ideal(RX, [P("x-1", RX)]))
    assert not ideal_member(P("x-1", RX), Ideal(RX, [P("x^2-4*x+4", RX)]))
    with pytest.raises(RingMismatch):
        ideal_member(RX.var("x"), four_tuple_lex.ideal)


def test_equality_examples():
    sq = Ideal(RX, [P("x^2-4*x+4", RX)])
    assert ideal_equal(sq, Ideal(RX, [P("x^2-4*x+4", RX), P("x^2-4*x+4", RX)]))
    assert not ideal_equal(Ideal(RX, [P("x-1", RX)]), Ideal(RX, [P("x-2", RX)]))
    R2 = Ring(("x", "y"))
    assert ideal_equal(Ideal(R2, [P("x-1", R2), P("y-1", R2)]), Ideal(R2, [P("y-1", R2), P("x-1", R2)]))
    with pytest.raises(RingMismatch):
        ideal_equal(sq, Ideal(R2, []))


def test_unit_and_zero_ideals():
    assert Ideal(RX, [P("x-1", RX), P("x-2", RX)]).is_unit()
    assert Ideal(RX, []).is_zero()
    assert Ideal(RX, [RX.zero()]).gb() == ()


def test_degree_guard():
    with pytest.raises(DegreeGuardExceeded):
        buchberger([P("x^5 - y"), P("y^5 - z")], degree_guard=4)
    with configure(degree_guard=3):
        with pytest.raises(DegreeGuardExceeded):
            groebner_basis([P("x^4 - 1")])
    assert groebner_basis([P("x^4 - 1")])


def test_trace_reports_pairs():
    lines = []
    buchberger(union_products(), trace=lines.append)
    assert lines and all(line.startswith("S(") for line in lines)


def test_divide():
    f = P("x^2*y + x*y^2 + y^2")
    (q1, q2), r = divide(f, [P("x*y - 1"), P("y^2 - 1")])
    assert q1 * P("x*y - 1") + q2 * P("y^2 - 1") + r == f


# -- properties ----------------------------------------------------------

R2 = Ring(("x", "y"))
small_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.integers(-3, 3).map(Fraction),
    min_size=1,
    max_size=3,
).map(lambda d: Polynomial(R2, d)).filter(bool)
systems = st.lists(small_polys, min_size=1, max_size=3)


@settings(max_examples=60, deadline=None)
@given(systems, st.sampled_from([LEX, DEGREVLEX]))
def test_buchberger_properties(F, order):
    G = buchberger(F, order)
    for i in range(len(G)):
        for j in range(i):
            assert normal_form(s_polynomial(G[i], G[j]), G).is_zero()
    for f in F:
        assert normal_form(f, G, order).is_zero()
    R = reduce_basis(G)
    assert ideal_equal(Ideal(R[0].ring, R), Ideal(R[0].ring, F))


@settings(max_examples=40, deadline=None)
@given(systems, st.randoms(use_true_random=False))
def test_reduced_basis_is_canonical(F, rnd):
    ref = groebner_basis(F)
    shuffled = list(F)
    rnd.shuffle(shuffled)
    assert groebner_basis(shuffled + [shuffled[0] * 2]) == ref


@settings(max_examples=40, deadline=None)
@given(systems, small_polys)
def test_normal_form_idempotent_and_membership(F, p):
    G = groebner_basis(F)
    r = normal_form(p, G)
    assert normal_form(r, G) == r
    ideal = Ideal(R2, F)
    assert all(ideal.contains(f) for f in F)


def _to_sympy(p, syms):
    expr = 0
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, m):
            term *= s**e
        expr += term
    return expr


@pytest.mark.parametrize("order, sym_order", [(LEX, "lex"), (DEGREVLEX, "grevlex")])
def test_against_independent_implementation(order, sym_order):
    rng = random.Random(7)
    syms = sympy.symbols("x y z")
    for _ in range(25):
        F = []
        for _ in range(rng.randint(2, 3)):
            terms = {
                tuple(rng.randint(0, 2) for _ in range(3)): Fraction(rng.randint(-3, 3))
                for _ in range(rng.randint(1, 3))
            }
            p = Polynomial(RXYZ, terms)
            if p:
                F.append(p)
        if not F:
            continue
        ours = groebner_basis(F, order)
        ref = sympy.groebner([_to_sympy(f, syms) for f in F], *syms, order=sym_order)
        expected = {
            sympy.srepr(sympy.expand(g / sympy.Poly(g, *syms).LC(order=sym_order))) for g in ref.exprs
        }
        got = {sympy.srepr(sympy.expand(_to_sympy(g, syms))) for g in ours}
        assert got == expected
