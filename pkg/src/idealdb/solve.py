"""Rational points of zero-dimensional ideals, and a tuple-level oracle.

Points are found variable by variable: the univariate eliminant of each
variable gives candidate coordinates (rational root theorem), and the
Cartesian product of candidates is filtered by evaluating the reduced basis.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    CandidateExplosion,
    HeaderMismatch,
    IrrationalPoint,
    NotZeroDimensional,
    UnknownSymbol,
)
from .exactnum import as_rational, format_rational
from .groebner import Ideal
from .polyring import Polynomial, ring_map
from .relalg import StoredRelation, project

CANDIDATE_CAP = 10**6

Point = tuple


def _ideal(obj) -> Ideal:
    return obj.ideal if isinstance(obj, StoredRelation) else obj


def is_zero_dimensional(obj) -> bool:
    """Every variable has a pure power among the leading monomials (unit ideal counts)."""
    ideal = _ideal(obj)
    if ideal.is_unit():
        return True
    n = ideal.ring.nvars
    pure = set()
    for g in ideal.gb():
        support = [i for i, e in enumerate(g.lm) if e]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == n


# -- univariate helpers (dense coefficient lists, lowest degree first) ----


def _dense(p: Polynomial) -> list[Fraction]:
    occurring = p.variables()
    if len(occurring) > 1:
        raise ValueError(f"{p} is not univariate")
    if not occurring:
        return [p.terms.get((0,) * p.ring.nvars, Fraction(0))]
    i = p.ring.index(occurring[0])
    coeffs = [Fraction(0)] * (p.degree_in(occurring[0]) + 1)
    for m, c in p.terms.items():
        coeffs[m[i]] = c
    return coeffs


def _trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        k = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = k
        for i, c in enumerate(b):
            a[i + shift] -= k * c
        a.pop()
        _trim(a)
    return q, _trim(a) if a else [Fraction(0)]


def _gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while any(b):
        _, r = _divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')`` for a univariate ``p``, returned monic in ``p.ring``."""
    a = _dense(p)
    deriv = [i * c for i, c in enumerate(a)][1:] or [Fraction(0)]
    q, _ = _divmod(a, _gcd(a, deriv))
    i = p.ring.index(p.variables()[0]) if p.variables() else 0
    n = p.ring.nvars
    terms = {}
    for e, c in enumerate(q):
        if c:
            terms[tuple(e if j == i else 0 for j in range(n))] = c
    return Polynomial(p.ring, terms).monic()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _horner(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs, r):
    """Divide by ``(x - r)``; ``r`` must be a root."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * r + coeffs[i]
        out[i - 1] = acc
    return out


@dataclass
class RootReport:
    roots: dict = field(default_factory=dict)  # Fraction -> multiplicity
    cofactor_degree: int = 0

    @property
    def degree(self) -> int:
        return sum(self.roots.values()) + self.cofactor_degree


def rational_roots(p: Polynomial) -> RootReport:
    """All rational roots of a nonzero univariate polynomial, with multiplicities."""
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    coeffs = _dense(p.primitive())
    roots: dict = {}
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
    if len(coeffs) > 1:
        lead, trail = int(coeffs[-1]), int(coeffs[0])
        candidates = sorted(
            {s * Fraction(a, b) for a in _divisors(trail) for b in _divisors(lead) for s in (1, -1)}
        )
        for r in candidates:
            while len(coeffs) > 1 and _horner(coeffs, r) == 0:
                coeffs = _deflate(coeffs, r)
                roots[r] = roots.get(r, 0) + 1
    return RootReport(dict(sorted(roots.items())), len(coeffs) - 1)


def eliminant(obj, var: str) -> Polynomial:
    """Generator of the elimination ideal ``I ∩ Q[var]`` (zero if there is none)."""
    ideal = _ideal(obj)
    rel = project(StoredRelation(ideal), [var])
    gb = rel.ideal.gb()
    return gb[0] if gb else rel.ring.zero()


def radical_dimension(obj) -> int:
    """Number of distinct complex points of a zero-dimensional ideal."""
    from .quotient import standard_monomials

    ideal = _ideal(obj)
    if ideal.is_unit():
        return 0
    ring = ideal.ring
    extra = [ring_map(squarefree_part(eliminant(ideal, v)), ring) for v in ring.vars]
    return len(standard_monomials(Ideal(ring, list(ideal.gb()) + extra)))


def solve_points(obj, cap: int = CANDIDATE_CAP) -> list[Point]:
    """The rational points of a zero-dimensional ideal, sorted ascending."""
    ideal = _ideal(obj)
    ring = ideal.ring
    if ideal.is_unit():
        return []
    if ring.nvars == 0:
        return [()]
    if not is_zero_dimensional(ideal):
        raise NotZeroDimensional(f"{ideal} has infinitely many points")
    per_var = []
    irrational = False
    total = 1
    for v in ring.vars:
        report = rational_roots(eliminant(ideal, v))
        irrational |= report.cofactor_degree > 1
        per_var.append(list(report.roots))
        total *= len(report.roots)
    if total > cap:
        raise CandidateExplosion(f"{total} candidate points exceed the cap of {cap}")
    gb = ideal.gb()
    points = [pt for pt in itertools.product(*per_var) if all(g.evaluate(pt) == 0 for g in gb)]
    if irrational and len(points) < radical_dimension(ideal):
        raise IrrationalPoint(f"{ideal} has points outside Q")
    return sorted(points)


def format_point(pt: Sequence) -> str:
    return "(" + ", ".join(format_rational(as_rational(a)) for a in pt) + ")"


def format_points(points: Iterable[Sequence]) -> str:
    return "[" + ", ".join(format_point(p) for p in sorted(points)) + "]"


# -- tuple oracle ---------------------------------------------------------


@dataclass(frozen=True)
class TupleRelation:
    header: tuple
    tuples: frozenset

    @classmethod
    def of(cls, header: Sequence[str], rows: Iterable[Sequence]) -> TupleRelation:
        header = tuple(header)
        rows = frozenset(tuple(as_rational(a) for a in r) for r in rows)
        for r in rows:
            if len(r) != len(header):
                raise HeaderMismatch(f"row {r} does not match header {header}")
        return cls(header, rows)

    def reorder(self, header: Sequence[str]) -> TupleRelation:
        if set(header) != set(self.header) or len(header) != len(self.header):
            raise HeaderMismatch(f"headers differ: {self.header} vs {tuple(header)}")
        idx = [self.header.index(v) for v in header]
        return TupleRelation(tuple(header), frozenset(tuple(r[i] for i in idx) for r in self.tuples))


def oracle_ra(op: str, A: TupleRelation, B=None) -> TupleRelation:
    """Brute-force set-semantics relational algebra.

    ``B`` is the second relation for join/union/diff and the attribute list
    for project.
    """
    if op == "project":
        attrs = list(B)
        for a in attrs:
            if a not in A.header:
                raise UnknownSymbol(f"attribute {a!r} is not in header {A.header}")
        keep = [v for v in A.header if v in attrs]
        idx = [A.header.index(v) for v in keep]
        return TupleRelation(tuple(keep), frozenset(tuple(r[i] for i in idx) for r in A.tuples))
    if op == "join":
        common = [v for v in A.header if v in B.header]
        extra = [v for v in B.header if v not in A.header]
        ia = [A.header.index(v) for v in common]
        ib = [B.header.index(v) for v in common]
        ie = [B.header.index(v) for v in extra]
        rows = set()
        for a in A.tuples:
            for b in B.tuples:
                if all(a[i] == b[j] for i, j in zip(ia, ib)):
                    rows.add(a + tuple(b[k] for k in ie))
        return TupleRelation(A.header + tuple(extra), frozenset(rows))
    if op in ("union", "diff"):
        B = B.reorder(A.header)
        rows = A.tuples | B.tuples if op == "union" else A.tuples - B.tuples
        return TupleRelation(A.header, frozenset(rows))
    raise ValueError(f"unknown operator {op!r}")


def to_tuples(rel: StoredRelation) -> TupleRelation:
    return TupleRelation(rel.header, frozenset(solve_points(rel)))
