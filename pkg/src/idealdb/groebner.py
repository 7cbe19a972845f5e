"""Multivariate division, Buchberger's algorithm and reduced Gröbner bases."""

from __future__ import annotations

import contextlib
import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DegreeGuardExceeded, RingMismatch
from .polyring import Polynomial, Ring, as_order


@dataclass
class Options:
    degree_guard: int = 40
    trace: Callable[[str], None] | None = None


options = Options()


@contextlib.contextmanager
def configure(**kwargs):
    """Temporarily override :data:`options` (``degree_guard``, ``trace``)."""
    saved = {k: getattr(options, k) for k in kwargs}
    for k, v in kwargs.items():
        setattr(options, k, v)
    try:
        yield options
    finally:
        for k, v in saved.items():
            setattr(options, k, v)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _in_ring(p: Polynomial, ring: Ring) -> Polynomial:
    if p.ring == ring:
        return p
    if p.ring.vars != ring.vars:
        raise RingMismatch(f"{p.ring} vs {ring}")
    return Polynomial._raw(ring, dict(p.terms))


def _common_ring(polys: Sequence[Polynomial], order) -> Ring:
    ring = polys[0].ring
    if order is not None:
        ring = ring.with_order(order)
    return ring


def _nf(terms: dict, basis: Sequence[Polynomial], key) -> dict:
    """Fully reduce the term dict ``terms`` (consumed) modulo ``basis``."""
    rem = {}
    while terms:
        m = max(terms, key=key)
        c = terms[m]
        for g in basis:
            lm = g.lm
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                f = c / g.terms[lm]
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, shift))
                    v = terms.get(mm, 0) - f * gc
                    if v:
                        terms[mm] = v
                    else:
                        del terms[mm]
                break
        else:
            rem[m] = terms.pop(m)
    return rem


def normal_form(p: Polynomial, G: Sequence[Polynomial], order=None) -> Polynomial:
    """Remainder of ``p`` on multivariate division by ``G``."""
    ring = p.ring if order is None else p.ring.with_order(order)
    basis = [_in_ring(g, ring) for g in G if g]
    return Polynomial._raw(ring, _nf(dict(p.terms), basis, ring.order.key))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    m = _lcm(f.lm, g.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(m, f.lm)), 1 / f.lc)
    b = g.mul_term(tuple(x - y for x, y in zip(m, g.lm)), 1 / g.lc)
    return a - b


def _guard(p: Polynomial, what: str, guard: int):
    d = p.total_degree()
    if d > guard:
        raise DegreeGuardExceeded(f"{what} has total degree {d} > guard {guard}")


def buchberger(F: Iterable[Polynomial], order=None, *, degree_guard: int | None = None,
               trace: Callable[[str], None] | None = None) -> list[Polynomial]:
    """A Gröbner basis of the ideal generated by ``F`` (not yet reduced).

    Pairs are taken by the sugar strategy (smallest sugar degree, then
    smallest lcm); pairs with coprime leading monomials are never queued and
    pairs caught by the chain criterion are skipped.
    """
    F = list(F)
    if not F:
        return []
    guard = options.degree_guard if degree_guard is None else degree_guard
    trace = options.trace if trace is None else trace
    ring = _common_ring(F, order)
    key = ring.order.key
    G = []
    sugar = []
    for f in F:
        f = _in_ring(f, ring)
        if f:
            _guard(f, "input polynomial", guard)
            G.append(f.monic())
            sugar.append(f.total_degree())
    if not G:
        return []
    for g in G:
        if g.is_constant():
            return [ring.one()]

    pairs = set()
    heap = []

    def add_pairs(n):
        lm_n = G[n].lm
        for k in range(n):
            lm_k = G[k].lm
            if any(a and b for a, b in zip(lm_k, lm_n)):
                m = _lcm(lm_k, lm_n)
                deg = sum(m)
                s = max(sugar[k] - sum(lm_k), sugar[n] - sum(lm_n)) + deg
                pairs.add((k, n))
                heapq.heappush(heap, (s, key(m), k, n))

    for n in range(len(G)):
        add_pairs(n)
    while pairs:
        s_deg, _, i, j = heapq.heappop(heap)
        pairs.discard((i, j))
        m = _lcm(G[i].lm, G[j].lm)
        if any(
            k != i and k != j
            and _divides(G[k].lm, m)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        s = s_polynomial(G[i], G[j])
        _guard(s, "S-polynomial", guard)
        r = Polynomial._raw(ring, _nf(dict(s.terms), G, key))
        if trace is not None:
            trace(f"S({i},{j}) -> {r}")
        if not r:
            continue
        _guard(r, "remainder", guard)
        r = r.monic()
        if r.is_constant():
            return [ring.one()]
        G.append(r)
        sugar.append(s_deg)
        add_pairs(len(G) - 1)
    return G


def reduce_basis(G: Sequence[Polynomial]) -> list[Polynomial]:
    """The reduced monic Gröbner basis, sorted descending by leading monomial."""
    G = [g.monic() for g in G if g]
    if not G:
        return []
    ring = G[0].ring
    if any(g.is_constant() for g in G):
        return [ring.one()]
    key = ring.order.key
    G.sort(key=lambda g: key(g.lm))
    minimal = []
    for g in G:
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = dict(g.terms)
        lm = g.lm
        del tail[lm]
        rem = _nf(tail, others, key)
        rem[lm] = Fraction(1)
        reduced.append(Polynomial._raw(ring, rem))
    reduced.sort(key=lambda g: key(g.lm), reverse=True)
    return reduced


def groebner_basis(F: Iterable[Polynomial], order=None) -> list[Polynomial]:
    return reduce_basis(buchberger(F, order))


class Ideal:
    """A finitely generated ideal of ``ring`` with a memoized reduced basis."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        self.generators = tuple(_in_ring(g, ring) for g in generators)
        self._gb = None

    @classmethod
    def from_basis(cls, ring: Ring, basis: Sequence[Polynomial]) -> Ideal:
        """Wrap an already reduced basis for ``ring.order``."""
        ideal = cls(ring, basis)
        ideal._gb = ideal.generators
        return ideal

    @classmethod
    def unit(cls, ring: Ring) -> Ideal:
        return cls.from_basis(ring, [ring.one()])

    @classmethod
    def zero(cls, ring: Ring) -> Ideal:
        return cls.from_basis(ring, [])

    def gb(self) -> tuple:
        if self._gb is None:
            self._gb = tuple(groebner_basis(self.generators))
        return self._gb

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gb()

    def reduce(self, p: Polynomial) -> Polynomial:
        p = _in_ring(p, self.ring)
        return Polynomial._raw(self.ring, _nf(dict(p.terms), self.gb(), self.ring.order.key))

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def with_order(self, order) -> Ideal:
        order = as_order(order)
        if order == self.ring.order:
            return self
        return Ideal(self.ring.with_order(order), self.generators)

    def __repr__(self):
        return f"Ideal({self})"

    def __str__(self):
        return "ideal(" + ", ".join(str(g.primitive()) for g in self.generators) + ")"


def ideal_member(p: Polynomial, ideal: Ideal) -> bool:
    if p.ring.vars != ideal.ring.vars:
        raise RingMismatch(f"{p.ring} vs {ideal.ring}")
    return ideal.contains(p)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """True iff the reduced Gröbner bases coincide term for term."""
    if I.ring.vars != J.ring.vars:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    if J.ring.order != I.ring.order:
        J = Ideal(I.ring, J.generators)
    a, b = I.gb(), J.gb()
    return len(a) == len(b) and all(f.terms == g.terms for f, g in zip(a, b))


def display_basis(basis: Sequence[Polynomial]) -> list[str]:
    """Integer-primitive text of each element, ascending by leading monomial."""
    if not basis:
        return []
    key = basis[0].ring.order.key
    return [str(g.primitive()) for g in sorted(basis, key=lambda g: key(g.lm))]


def divide(p: Polynomial, divisors: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: ``p = sum(q_i * f_i) + r``; returns ``(quotients, r)``."""
    ring = p.ring
    divisors = [_in_ring(f, ring) for f in divisors]
    key = ring.order.key
    quotients = [{} for _ in divisors]
    terms = dict(p.terms)
    rem = {}
    while terms:
        m = max(terms, key=key)
        c = terms[m]
        for q, f in zip(quotients, divisors):
            if f and _divides(f.lm, m):
                shift = tuple(a - b for a, b in zip(m, f.lm))
                k = c / f.lc
                q[shift] = q.get(shift, 0) + k
                for fm, fc in f.terms.items():
                    mm = tuple(a + b for a, b in zip(fm, shift))
                    v = terms.get(mm, 0) - k * fc
                    if v:
                        terms[mm] = v
                    else:
                        del terms[mm]
                break
        else:
            rem[m] = terms.pop(m)
    return [Polynomial(ring, q) for q in quotients], Polynomial._raw(ring, rem)
