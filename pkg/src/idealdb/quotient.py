"""The residue-class view of a zero-dimensional ideal.

``Q[vars]/I`` is a finite-dimensional vector space.  Multiplication by a
variable is a linear operator on it; its matrix in a chosen basis has row
``i`` equal to the coordinates of ``v * e_i``.  For a radical ideal the
basis elements evaluated at the points of the variety are joint
eigenvectors of all these matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BasisSizeError, DependentBasis, NonRadical, NotZeroDimensional, RingMismatch
from .groebner import Ideal
from .linalg import QMatrix
from .polyring import Polynomial
from .relalg import StoredRelation
from .solve import is_zero_dimensional, solve_points


def _ideal(obj) -> Ideal:
    return obj.ideal if isinstance(obj, StoredRelation) else obj


def standard_monomials(obj) -> list[tuple]:
    """Monomials outside the leading-term ideal, ascending in the ring order."""
    ideal = _ideal(obj)
    if ideal.is_unit():
        return []
    if not is_zero_dimensional(ideal):
        raise NotZeroDimensional(f"{ideal} is not zero-dimensional")
    ring = ideal.ring
    lms = [g.lm for g in ideal.gb()]
    bounds = [0] * ring.nvars
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            bounds[i] = m[i] if not bounds[i] else min(bounds[i], m[i])
    std = [
        m for m in itertools.product(*(range(b) for b in bounds))
        if not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)
    ]
    return sorted(std, key=ring.order.key)


def quotient_dimension(obj) -> int:
    return len(standard_monomials(obj))


@dataclass
class QuotientBasis:
    ideal: Ideal
    elements: tuple  # residues [e_k] as polynomials
    standard: tuple  # standard monomials
    change: QMatrix  # row k: standard coordinates of NF(e_k)
    _inverse: QMatrix | None = field(default=None, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def inverse_change(self) -> QMatrix:
        if self._inverse is None:
            self._inverse = self.change.inverse()
        return self._inverse

    def labels(self) -> list[str]:
        return [str(e) for e in self.elements]


def _standard_coordinates(p: Polynomial, ideal: Ideal, standard: Sequence[tuple]) -> tuple:
    nf = ideal.reduce(p)
    return tuple(nf.terms.get(m, Fraction(0)) for m in standard)


def _as_element(e, ring) -> Polynomial:
    if isinstance(e, Polynomial):
        if e.ring.vars != ring.vars:
            raise RingMismatch(f"basis element {e} is not in {ring}")
        return Polynomial._raw(ring, dict(e.terms))
    if isinstance(e, str):
        return ring.parse(e)
    return ring.monomial(e)


def standard_basis(obj) -> QuotientBasis:
    ideal = _ideal(obj)
    std = tuple(standard_monomials(ideal))
    elements = tuple(ideal.ring.monomial(m) for m in std)
    return QuotientBasis(ideal, elements, std, QMatrix.identity(len(std)))


def custom_basis(obj, elements: Sequence) -> QuotientBasis:
    """Basis of residues of ``elements`` (monomial exponent tuples, polynomials or text)."""
    ideal = _ideal(obj)
    std = tuple(standard_monomials(ideal))
    elems = tuple(_as_element(e, ideal.ring) for e in elements)
    change = QMatrix([_standard_coordinates(e, ideal, std) for e in elems])
    if len(elems) > len(std) or change.rank() < len(elems):
        raise DependentBasis(f"residues of {[str(e) for e in elems]} are linearly dependent")
    if len(elems) < len(std):
        raise BasisSizeError(f"{len(elems)} elements cannot span a space of dimension {len(std)}")
    return QuotientBasis(ideal, elems, std, change)


def coordinates(p: Polynomial, basis: QuotientBasis) -> tuple:
    """Coefficients ``pi_k`` with ``[p] = sum(pi_k [e_k])``."""
    c = _standard_coordinates(p, basis.ideal, basis.standard)
    return basis.inverse_change.vecmul(c)


def multiplication_matrix(basis: QuotientBasis, multiplier) -> QMatrix:
    """Matrix of ``[e] -> [multiplier * e]``; row ``i`` holds coordinates of ``multiplier * e_i``."""
    ring = basis.ideal.ring
    p = ring.var(multiplier) if isinstance(multiplier, str) else _as_element(multiplier, ring)
    return QMatrix([coordinates(p * e, basis) for e in basis.elements])


def multiplication_matrices(basis: QuotientBasis) -> dict:
    return {v: multiplication_matrix(basis, v) for v in basis.ideal.ring.vars}


def structure_constants(basis: QuotientBasis) -> list:
    """``eps[k][l][m]``: coordinate ``m`` of the product ``e_k * e_l``."""
    els = basis.elements
    return [[list(coordinates(a * b, basis)) for b in els] for a in els]


def matrix_from_structure(pi: Sequence, eps: Sequence) -> QMatrix:
    """Multiplication matrix of ``sum(pi_k e_k)``: entry ``(i, j)`` is ``sum_k pi_k eps[k][i][j]``."""
    n = len(pi)
    return QMatrix(
        [[sum((pi[k] * eps[k][i][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
    )


def commuting(matrices: Sequence[QMatrix]) -> bool:
    return all(a @ b == b @ a for a, b in itertools.combinations(matrices, 2))


@dataclass
class Eigensystem:
    vars: tuple
    points: list  # ordered; column j of E belongs to points[j]
    E: QMatrix
    lambdas: dict  # var -> eigenvalue sequence aligned with points
    matrices: dict  # var -> multiplication matrix

    def Lambda(self, var: str) -> QMatrix:
        return QMatrix.diag(self.lambdas[var])

    def joint_tuples(self, order: Sequence[str] | None = None) -> list[tuple]:
        order = self.vars if order is None else order
        return [tuple(self.lambdas[v][j] for v in order) for j in range(len(self.points))]

    def reconstruct(self, var: str) -> QMatrix:
        return self.E @ self.Lambda(var) @ self.E.inverse()


def eigensystem(obj, basis: QuotientBasis | None = None) -> Eigensystem:
    """Joint eigenvectors from evaluating the basis at each point of the variety.

    Points are ordered descending by coordinates.  ``A_v E = E diag(lambda_v)``
    is verified exactly before returning.
    """
    ideal = _ideal(obj)
    basis = standard_basis(ideal) if basis is None else basis
    points = sorted(solve_points(ideal), reverse=True)
    if len(points) != basis.dimension:
        raise NonRadical(
            f"{len(points)} points but quotient dimension {basis.dimension}; the ideal is not radical"
        )
    ring = ideal.ring
    E = QMatrix([[e.evaluate(pt) for pt in points] for e in basis.elements])
    lambdas = {v: tuple(pt[i] for pt in points) for i, v in enumerate(ring.vars)}
    matrices = multiplication_matrices(basis)
    for v, A in matrices.items():
        if A @ E != E @ QMatrix.diag(lambdas[v]):
            raise AssertionError(f"eigenvector law fails for {v}")
    return Eigensystem(ring.vars, points, E, lambdas, matrices)
