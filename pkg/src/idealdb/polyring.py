"""Polynomial rings over Q: monomial orders, sparse polynomials, ring maps.

Monomials are tuples of exponents aligned with ``Ring.vars``; the first
variable has the highest precedence.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ReservedName, RingMismatch, UnknownSymbol
from .exactnum import as_rational, format_rational
from .lexer import TokenStream

Monomial = tuple

RESERVED_PREFIX = "t_aux"
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _degrevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``degrevlex`` or ``block``.

    A block order compares the first ``split`` exponents (the eliminated
    block) by degrevlex and breaks ties with degrevlex on the rest.
    """

    kind: str = "degrevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind != "block" and self.split:
            raise ValueError("split only applies to block orders")

    @functools.lru_cache(maxsize=1 << 16)
    def key(self, m: Monomial):
        """Sort key; larger key means larger monomial."""
        if self.kind == "lex":
            return m
        if self.kind == "degrevlex":
            return _degrevlex_key(m)
        s = self.split
        return (_degrevlex_key(m[:s]), _degrevlex_key(m[s:]))

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise RingMismatch("monomials of different arity")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return f"block({self.split})" if self.kind == "block" else self.kind


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def block_order(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)


def as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


def monomial_compare(order, a: Monomial, b: Monomial) -> str:
    c = as_order(order).compare(a, b)
    return {-1: "LT", 0: "EQ", 1: "GT"}[c]


def check_user_var(name: str) -> str:
    if not _NAME_RE.match(name):
        raise ValueError(f"invalid variable name {name!r}")
    if name.startswith(RESERVED_PREFIX):
        raise ReservedName(f"variable names starting with {RESERVED_PREFIX!r} are reserved")
    return name


@dataclass(frozen=True)
class Ring:
    vars: tuple
    order: MonomialOrder = DEGREVLEX

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "order", as_order(self.order))
        for v in self.vars:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        if self.order.kind == "block" and not 0 <= self.order.split <= len(self.vars):
            raise ValueError("block split out of range")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownSymbol(f"unknown variable {name!r} in ring {self}") from None

    def with_order(self, order) -> Ring:
        return Ring(self.vars, as_order(order))

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = as_rational(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> Polynomial:
        i = self.index(name)
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {m: Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.vars]

    def monomial(self, exps: Sequence[int]) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise RingMismatch(f"monomial {exps} does not fit ring {self}")
        return Polynomial(self, {exps: Fraction(1)})

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def __str__(self):
        return f"QQ[{','.join(self.vars)}] ({self.order})"


class Polynomial:
    """Sparse polynomial: a dict mapping exponent tuples to nonzero Fractions.

    Treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._lm = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._lm = None
        return p

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    @property
    def lm(self) -> Monomial:
        """Leading monomial under the ring order."""
        if self._lm is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    @property
    def lc(self) -> Fraction:
        return self.terms[self.lm]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def variables(self) -> tuple:
        """Names of the variables that actually occur, in ring order."""
        used = [any(m[i] for m in self.terms) for i in range(self.ring.nvars)]
        return tuple(v for v, u in zip(self.ring.vars, used) if u)

    def sorted_terms(self, ascending: bool = False) -> list:
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=not ascending)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.vars == other.ring.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_terms(self.sorted_terms(), self.ring.vars)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.ring.vars != other.ring.vars:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Polynomial:
        c = as_rational(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, coeff: Fraction) -> Polynomial:
        """Multiply by the single term ``coeff * mono``."""
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.lc)

    def primitive(self) -> Polynomial:
        """Integer-primitive associate with a positive leading coefficient."""
        if not self.terms:
            return self
        coeffs = list(self.terms.values())
        den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
        num = reduce(math.gcd, (c.numerator for c in coeffs), 0)
        scaled = self.scale(Fraction(den, num))
        return -scaled if scaled.lc < 0 else scaled

    def evaluate(self, point) -> Fraction:
        """Exact value at ``point`` (a sequence aligned with the ring, or a name mapping)."""
        if isinstance(point, Mapping):
            point = [point[v] for v in self.ring.vars]
        if len(point) != self.ring.nvars:
            raise RingMismatch("point arity does not match the ring")
        vals = [as_rational(a) for a in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for a, e in zip(vals, m):
                if e:
                    t *= a**e
            total += t
        return total

    def subs(self, values: Mapping[str, Fraction]) -> Polynomial:
        """Substitute constants for some variables; the ring is unchanged."""
        idx = {self.ring.index(v): as_rational(a) for v, a in values.items()}
        terms: dict = {}
        for m, c in self.terms.items():
            for i, a in idx.items():
                c *= a ** m[i]
            m = tuple(0 if i in idx else e for i, e in enumerate(m))
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.ring, terms)


# -- ring maps -----------------------------------------------------------


def ring_map(p: Polynomial, target: Ring, renaming: Mapping[str, str] | None = None) -> Polynomial:
    """Re-express ``p`` in ``target``, optionally renaming variables.

    Only variables that occur in ``p`` need an image; the term set is unchanged.
    """
    renaming = renaming or {}
    if len(set(renaming.values())) != len(renaming):
        raise ValueError("renaming must be injective")
    src = p.ring.vars
    occurring = set(p.variables())
    slots = []
    for i, v in enumerate(src):
        image = renaming.get(v, v)
        if image in target.vars:
            slots.append((i, target.vars.index(image)))
        elif v in occurring:
            raise UnknownSymbol(f"variable {v!r} has no image in ring {target}")
    n = target.nvars
    terms = {}
    for m, c in p.terms.items():
        out = [0] * n
        for i, j in slots:
            out[j] += m[i]
        terms[tuple(out)] = c
    return Polynomial._raw(target, terms)


# -- text forms ----------------------------------------------------------


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for v, e in zip(names, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_terms(terms: Sequence, names: Sequence[str]) -> str:
    """Render ``[(monomial, coeff), ...]`` as ``x^2 -3*x +2``."""
    if not terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(terms):
        mono = format_monomial(m, names)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        else:
            body = format_rational(mag)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return " ".join(out)


def poly_canonical_string(p: Polynomial) -> str:
    """Integer-primitive form, terms in descending ring order."""
    return str(p.primitive())


# -- reading -------------------------------------------------------------


def parse_poly_tree(ts: TokenStream):
    """Parse a polynomial expression into an unresolved tree.

    The tree is resolved against a ring by :func:`build_polynomial`; the two
    steps are split so the query language can read generators before it
    knows their ring.
    """
    node = None
    if ts.at("+") or ts.at("-"):
        neg = ts.next().text == "-"
        node = _parse_term(ts)
        if neg:
            node = ("neg", node)
    else:
        node = _parse_term(ts)
    while ts.at("+") or ts.at("-"):
        op = ts.next().text
        rhs = _parse_term(ts)
        node = ("add", node, rhs if op == "+" else ("neg", rhs))
    return node


def _parse_term(ts):
    node = _parse_factor(ts)
    while ts.at("*") or ts.at("/"):
        if ts.next().text == "*":
            node = ("mul", node, _parse_factor(ts))
        else:
            tok = ts.expect_kind("NUM", "an integer divisor")
            if int(tok.text) == 0:
                raise ParseError(tok.line, tok.column, "a nonzero divisor", tok.text)
            node = ("mul", node, ("num", Fraction(1, int(tok.text))))
    return node


def _parse_factor(ts):
    node = _parse_atom(ts)
    if ts.accept("^"):
        tok = ts.expect_kind("NUM", "an integer exponent")
        node = ("pow", node, int(tok.text))
    return node


def _parse_atom(ts):
    tok = ts.peek()
    if tok.kind == "NUM":
        ts.next()
        return ("num", Fraction(int(tok.text)))
    if tok.kind == "NAME":
        ts.next()
        return ("var", tok.text, tok.line, tok.column)
    if ts.accept("("):
        node = parse_poly_tree(ts)
        ts.expect(")")
        return node
    if ts.at("-"):
        ts.next()
        return ("neg", _parse_atom(ts))
    ts.fail("a number, variable or '('")


def build_polynomial(tree, ring: Ring) -> Polynomial:
    kind = tree[0]
    if kind == "num":
        return ring.const(tree[1])
    if kind == "var":
        if tree[1] not in ring.vars:
            raise UnknownSymbol(
                f"line {tree[2]}, column {tree[3]}: variable {tree[1]!r} is not in ring {ring}"
            )
        return ring.var(tree[1])
    if kind == "neg":
        return -build_polynomial(tree[1], ring)
    if kind == "add":
        return build_polynomial(tree[1], ring) + build_polynomial(tree[2], ring)
    if kind == "mul":
        return build_polynomial(tree[1], ring) * build_polynomial(tree[2], ring)
    if kind == "pow":
        return build_polynomial(tree[1], ring) ** tree[2]
    raise ValueError(f"bad polynomial tree node {kind!r}")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    ts = TokenStream.from_text(text)
    tree = parse_poly_tree(ts)
    if ts.peek().kind != "EOF":
        ts.fail("end of polynomial")
    return build_polynomial(tree, ring)


def polynomials(ring: Ring, texts: Iterable[str]) -> list[Polynomial]:
    return [parse_polynomial(t, ring) for t in texts]
