"""Relational algebra on ideals.

A relation over attributes ``(v1, ..., vn)`` is stored as an ideal of
``Q[v1, ..., vn]`` whose variety is the set of tuples.  Natural join is the
ideal sum, union is intersection, projection is elimination, difference is
the colon ideal and renaming is a ring map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatch,
    HeaderMismatch,
    NameCollision,
    RingMismatch,
    UnknownSymbol,
)
from .exactnum import as_rational
from .groebner import Ideal, divide, groebner_basis
from .polyring import (
    DEGREVLEX,
    RESERVED_PREFIX,
    Polynomial,
    Ring,
    block_order,
    check_user_var,
    ring_map,
)


def _base_order(ring: Ring):
    return DEGREVLEX if ring.order.kind == "block" else ring.order


def user_ring(header: Sequence[str], order=DEGREVLEX) -> Ring:
    """A ring over attribute names, rejecting the reserved ``t_aux`` prefix."""
    return Ring(tuple(check_user_var(v) for v in header), order)


@dataclass(frozen=True)
class StoredRelation:
    """A relation stored as an ideal; the header is the ring's variable list."""

    ideal: Ideal

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def header(self) -> tuple:
        return self.ideal.ring.vars

    @classmethod
    def from_points(cls, points: Iterable[Sequence], header: Sequence[str], order=DEGREVLEX):
        return cls(ideal_of_points(points, user_ring(header, order)))

    @classmethod
    def from_generators(cls, generators: Iterable, header: Sequence[str], order=DEGREVLEX):
        ring = user_ring(header, order)
        gens = [ring.parse(g) if isinstance(g, str) else g for g in generators]
        return cls(Ideal(ring, gens))

    @classmethod
    def empty(cls, header: Sequence[str], order=DEGREVLEX):
        return cls(Ideal.unit(user_ring(header, order)))

    def __str__(self):
        return f"relation over ({', '.join(self.header)}): {self.ideal}"


# -- building relations ---------------------------------------------------


def point_ideal(point: Sequence, ring: Ring) -> Ideal:
    if len(point) != ring.nvars:
        raise ArityMismatch(f"point {tuple(point)} has arity {len(point)}, ring has {ring.nvars}")
    gens = [ring.var(v) - as_rational(a) for v, a in zip(ring.vars, point)]
    return Ideal.from_basis(ring, sorted(gens, key=lambda g: ring.order.key(g.lm), reverse=True))


def variety_union(I: Ideal, J: Ideal) -> Ideal:
    """Ideal of all pairwise generator products, Gröbner-reduced.

    Its variety is ``V(I) | V(J)``; the result need not be radical.
    """
    if I.ring.vars != J.ring.vars:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    ring = I.ring
    J = Ideal(ring, J.generators)
    products = [f * g for f in I.generators for g in J.generators]
    return Ideal.from_basis(ring, groebner_basis(products) if products else [])


def ideal_of_points(points: Iterable[Sequence], ring: Ring) -> Ideal:
    """The radical ideal vanishing exactly on ``points`` (duplicates collapsed)."""
    distinct = {}
    for p in points:
        if len(p) != ring.nvars:
            raise ArityMismatch(f"point {tuple(p)} has arity {len(p)}, ring has {ring.nvars}")
        distinct.setdefault(tuple(as_rational(a) for a in p), None)
    if not distinct:
        return Ideal.unit(ring)
    pts = sorted(distinct)
    ideal = point_ideal(pts[0], ring)
    for p in pts[1:]:
        # The new point is not on V(ideal), so the product ideal equals the
        # intersection and stays radical.
        ideal = variety_union(Ideal(ring, ideal.gb()), point_ideal(p, ring))
    return ideal


# -- operators ------------------------------------------------------------


def _fresh_aux(names: Iterable[str]) -> str:
    taken = set(names)
    k = 0
    while f"{RESERVED_PREFIX}{k}" in taken:
        k += 1
    return f"{RESERVED_PREFIX}{k}"


def _eliminate(gens: Sequence[Polynomial], drop: Sequence[str], keep: Sequence[str],
               order) -> Ideal:
    """Intersect ``<gens>`` with ``Q[keep]`` using a block order on ``drop``."""
    big = Ring(tuple(drop) + tuple(keep), block_order(len(drop)))
    G = groebner_basis([ring_map(g, big) for g in gens])
    split = len(drop)
    small = Ring(tuple(keep), order)
    kept = [ring_map(g, small) for g in G if not any(any(m[:split]) for m in g.terms)]
    if order == DEGREVLEX:
        # A reduced block-order basis restricted to the kept block is the
        # reduced degrevlex basis of the elimination ideal.
        return Ideal.from_basis(small, kept)
    return Ideal(small, kept)


def intersect(I: Ideal, J: Ideal, order=None) -> Ideal:
    """``I ∩ J ∩ Q[common variables]`` via an auxiliary variable ``t``.

    ``I`` and ``J`` may live in different rings; variables outside the common
    ones are eliminated together with ``t``.
    """
    order = _base_order(I.ring) if order is None else order
    common = [v for v in I.ring.vars if v in J.ring.vars]
    others = [v for v in I.ring.vars if v not in common]
    others += [v for v in J.ring.vars if v not in common and v not in others]
    t = _fresh_aux(common + others)
    big = Ring((t, *others, *common))
    tt = big.var(t)
    # Reduced bases are memoized and usually far smaller than raw generators.
    gens = [tt * ring_map(f, big) for f in I.gb()]
    gens += [(1 - tt) * ring_map(g, big) for g in J.gb()]
    return _eliminate(gens, [t, *others], common, order)


def join(A: StoredRelation, B: StoredRelation) -> StoredRelation:
    """Natural join: the sum of the ideals in the union ring (generators concatenated)."""
    header = A.header + tuple(v for v in B.header if v not in A.header)
    ring = Ring(header, _base_order(A.ring))
    gens = [ring_map(f, ring) for f in A.ideal.generators]
    gens += [ring_map(g, ring) for g in B.ideal.generators]
    return StoredRelation(Ideal(ring, gens))


def rel_union(A: StoredRelation, B: StoredRelation) -> StoredRelation:
    """Union on the common attributes: intersection of the ideals."""
    return StoredRelation(intersect(A.ideal, B.ideal))


def project(A: StoredRelation, attrs: Iterable[str]) -> StoredRelation:
    attrs = list(attrs)
    for a in attrs:
        if a not in A.header:
            raise UnknownSymbol(f"attribute {a!r} is not in header {A.header}")
    keep = [v for v in A.header if v in attrs]
    drop = [v for v in A.header if v not in attrs]
    if not drop:
        return A
    return StoredRelation(_eliminate(A.ideal.generators, drop, keep, _base_order(A.ring)))


def _same_header(A: StoredRelation, B: StoredRelation) -> Ideal:
    if set(A.header) != set(B.header):
        raise HeaderMismatch(f"headers differ: {A.header} vs {B.header}")
    return Ideal(A.ring, [ring_map(g, A.ring) for g in B.ideal.generators])


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``I : J`` as the intersection of ``I : <g>`` over the basis of ``J``."""
    ring = I.ring
    result = None
    for g in J.gb():
        if g.is_constant():
            return I
        quotients = []
        for h in intersect(I, Ideal(ring, [g])).generators:
            (q,), r = divide(h, [g])
            assert not r, "exact division failed inside colon ideal"
            quotients.append(q)
        part = Ideal(ring, quotients)
        result = part if result is None else intersect(result, part)
    if result is None:
        return Ideal.unit(ring)
    return result


def diff(A: StoredRelation, B: StoredRelation) -> StoredRelation:
    """Set difference as the colon ideal (headers must agree as sets)."""
    J = _same_header(A, B)
    return StoredRelation(colon(A.ideal, J))


def rename(A: StoredRelation, mapping: Mapping[str, str]) -> StoredRelation:
    for old in mapping:
        if old not in A.header:
            raise UnknownSymbol(f"attribute {old!r} is not in header {A.header}")
    for new in mapping.values():
        check_user_var(new)
    header = tuple(mapping.get(v, v) for v in A.header)
    if len(set(header)) != len(header):
        raise NameCollision(f"renaming {dict(mapping)} collides in header {A.header}")
    ring = Ring(header, A.ring.order)
    ren = dict(mapping)
    ideal = Ideal(ring, [ring_map(g, ring, ren) for g in A.ideal.generators])
    if A.ideal._gb is not None:
        ideal._gb = tuple(ring_map(g, ring, ren) for g in A.ideal._gb)
    return StoredRelation(ideal)
