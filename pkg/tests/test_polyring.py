from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealdb.errors import ParseError, ReservedName, RingMismatch, UnknownSymbol
from idealdb.polyring import (
    DEGREVLEX,
    LEX,
    Polynomial,
    Ring,
    block_order,
    check_user_var,
    monomial_compare,
    parse_polynomial,
    poly_canonical_string,
    ring_map,
)

R3 = Ring(("x", "y", "z"))

exps = st.tuples(*[st.integers(0, 4)] * 3)
orders = st.sampled_from([LEX, DEGREVLEX, block_order(1), block_order(2)])
coeffs = st.fractions(max_denominator=5).filter(lambda c: abs(c) <= 20)
polys = st.dictionaries(exps, coeffs, max_size=4).map(lambda d: Polynomial(R3, d))


def test_compare_examples():
    assert monomial_compare(LEX, (1, 0), (0, 1)) == "GT"
    assert monomial_compare(DEGREVLEX, (1, 0, 1), (0, 2, 0)) == "LT"
    for order in (LEX, DEGREVLEX, block_order(1)):
        assert monomial_compare(order, (2, 1, 0), (2, 1, 0)) == "EQ"


def test_degrevlex_degree_two_table():
    # Hand-ranked degree-2 monomials in x > y > z: x^2 > xy > y^2 > xz > yz > z^2.
    table = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            expected = "GT" if i < j else "LT" if i > j else "EQ"
            assert monomial_compare(DEGREVLEX, a, b) == expected


def test_block_order_eliminates_first_block():
    order = block_order(1)
    # Any monomial containing the first variable beats every monomial free of it.
    assert order.compare((1, 0, 0), (0, 5, 5)) == 1
    assert order.compare((0, 2, 0), (0, 1, 1)) == 1


def test_compare_arity_mismatch():
    with pytest.raises(RingMismatch):
        LEX.compare((1, 0), (1, 0, 0))


@given(orders, exps, exps, exps)
def test_orders_are_multiplicative(order, a, b, c):
    ab = order.compare(a, b)
    ac = tuple(p + q for p, q in zip(a, c))
    bc = tuple(p + q for p, q in zip(b, c))
    assert order.compare(ac, bc) == ab
    assert order.compare(a, (0, 0, 0)) >= 0


def test_arith_examples():
    x = Ring(("x",)).var("x")
    assert (x - 1) * (x - 2) == parse_polynomial("x^2 - 3*x + 2", x.ring)
    y = Ring(("y",)).var("y")
    assert (y - 1) * (y - 1) == parse_polynomial("y^2-2*y+1", y.ring)
    p = parse_polynomial("x^2 - 3*x + 2", x.ring)
    assert (p + p.scale(-1)).is_zero()


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Ring(("x",)).var("x") + Ring(("y",)).var("y")


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()
    assert all(c != 0 for c in (p * q).terms.values())


def test_ring_map_examples():
    src = Ring(("x",))
    p = parse_polynomial("x^2 - 3*x + 2", src)
    big = Ring(("x", "y", "z"))
    q = ring_map(p, big)
    assert q.terms == {(2, 0, 0): 1, (1, 0, 0): -3, (0, 0, 0): 2}
    u = ring_map(src.var("x") - 1, Ring(("u",)), {"x": "u"})
    assert str(u) == "u -1"
    with pytest.raises(UnknownSymbol):
        ring_map(Ring(("y",)).var("y") - 1, Ring(("x", "z")))


@given(polys, polys)
def test_ring_map_is_homomorphism(p, q):
    target = Ring(("a", "w", "c", "b"))
    ren = {"x": "a", "y": "b", "z": "c"}
    f = lambda s: ring_map(s, target, ren)  # noqa: E731
    assert f(p + q) == f(p) + f(q)
    assert f(p * q) == f(p) * f(q)


def test_canonical_string():
    rx = Ring(("x",))
    assert poly_canonical_string(parse_polynomial("x^2-3*x+2", rx)) == "x^2 -3*x +2"
    rxy = Ring(("x", "y"))
    p = parse_polynomial("y - (x^2 - 3*x + 4)/2", rxy)
    assert poly_canonical_string(p) == "x^2 -3*x -2*y +4"
    assert poly_canonical_string(rxy.zero()) == "0"
    assert poly_canonical_string(rxy.const(Fraction(-3, 4))) == "1"
    assert str(parse_polynomial("1/2*x*y^3 - 1", rxy)) == "1/2*x*y^3 -1"


def test_parser_errors_have_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + * y", R3)
    assert (err.value.line, err.value.column) == (1, 5)
    with pytest.raises(UnknownSymbol):
        parse_polynomial("w + 1", R3)
    with pytest.raises(ParseError):
        parse_polynomial("x / 0", R3)


@given(polys)
def test_print_parse_round_trip(p):
    assert parse_polynomial(str(p), R3) == p


def test_reserved_names():
    with pytest.raises(ReservedName):
        check_user_var("t_aux0")
    with pytest.raises(ValueError):
        Ring(("x", "x"))
    assert check_user_var("price_2") == "price_2"


def test_evaluate_and_subs():
    p = parse_polynomial("x*y - 2*z + 1/2", R3)
    assert p.evaluate((1, 2, 3)) == Fraction(-7, 2)
    assert p.evaluate({"x": 0, "y": 5, "z": 0}) == Fraction(1, 2)
    assert p.subs({"x": 2}) == parse_polynomial("2*y - 2*z + 1/2", R3)
    for a, b, c in product(range(-1, 2), repeat=3):
        assert (p * p).evaluate((a, b, c)) == p.evaluate((a, b, c)) ** 2
