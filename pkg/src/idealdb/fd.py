"""Functional dependencies as polynomial functions, and Heath decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PartitionInvalid, UnknownSymbol
from .groebner import Ideal, groebner_basis, ideal_equal
from .polyring import LEX, Polynomial, Ring, format_terms, ring_map
from .relalg import StoredRelation, join, project


@dataclass(frozen=True)
class FDWitness:
    """``rhs = witness(lhs)`` on every tuple of the relation."""

    lhs: tuple
    rhs: str
    witness: Polynomial

    def __call__(self, *values):
        return self.witness.evaluate(values)

    def equation(self) -> str:
        """Integer form ``d*rhs = ...`` with a positive integer ``d``."""
        ring = Ring((self.rhs, *self.lhs), LEX)
        d = (ring.var(self.rhs) - ring_map(self.witness, ring)).primitive().lc
        left = self.rhs if d == 1 else f"{d}*{self.rhs}"
        right = self.witness.scale(d)
        return f"{left} = {format_terms(right.sorted_terms(), right.ring.vars)}"


def _check_attrs(A: StoredRelation, names: Iterable[str]):
    for v in names:
        if v not in A.header:
            raise UnknownSymbol(f"attribute {v!r} is not in header {A.header}")


def fd_check(A: StoredRelation, lhs: Sequence[str], rhs: str) -> FDWitness | None:
    """Return the analytic witness of ``lhs -> rhs``, or None if the FD fails.

    Under lex with ``rhs`` first, the FD holds exactly when the reduced basis
    of the projection has an element with leading monomial ``rhs``; that
    element is ``rhs - witness(lhs)``.
    """
    lhs = (lhs,) if isinstance(lhs, str) else tuple(lhs)
    _check_attrs(A, (*lhs, rhs))
    lhs = tuple(v for v in A.header if v in lhs)
    if rhs in lhs:
        raise ValueError(f"{rhs!r} appears on both sides of the dependency")
    lhs_ring = Ring(lhs, LEX)
    proj = project(A, (*lhs, rhs))
    if proj.ideal.is_unit():
        return FDWitness(lhs, rhs, lhs_ring.zero())
    ring = Ring((rhs, *lhs), LEX)
    gb = groebner_basis([ring_map(g, ring) for g in proj.ideal.generators])
    target = (1,) + (0,) * len(lhs)
    for g in gb:
        if g.lm == target:
            tail = -(g - ring.var(rhs))
            return FDWitness(lhs, rhs, ring_map(tail, lhs_ring))
    return None


@dataclass(frozen=True)
class HeathResult:
    left: StoredRelation  # projection onto X | Y
    right: StoredRelation  # projection onto X | Z
    verified: bool


def heath_decompose(A: StoredRelation, X: Sequence[str], Y: Sequence[str], Z: Sequence[str]) -> HeathResult:
    """Split ``A`` into its projections on ``X+Y`` and ``X+Z`` and test losslessness."""
    parts = [*X, *Y, *Z]
    if len(set(parts)) != len(parts) or set(parts) != set(A.header):
        raise PartitionInvalid(f"{list(X)} | {list(Y)} | {list(Z)} is not a partition of {A.header}")
    left = project(A, [*X, *Y])
    right = project(A, [*X, *Z])
    joined = join(left, right)
    rejoined = Ideal(A.ring, [ring_map(g, A.ring) for g in joined.ideal.generators])
    return HeathResult(left, right, ideal_equal(rejoined, A.ideal))
