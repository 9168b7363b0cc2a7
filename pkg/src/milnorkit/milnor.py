"""Milnor numbers of isolated singularity germs.

For a hypersurface germ f the Milnor number is the colength of the Jacobian
ideal. Two closed forms serve as independent cross-checks: the product
formula for Brieskorn-Pham germs and the Milnor-Orlik formula for weighted
homogeneous germs. Complete intersections of codimension k >= 2 are only
accepted with a declared Milnor number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import List, Optional, Sequence

from .local import Budget, colength
from .parser import GermDefinition
from .poly import Polynomial, partial_derivative, weighted_degree

__all__ = [
    "MilnorResult",
    "NonIsolatedError",
    "UnsupportedGermError",
    "WeightInconsistencyError",
    "jacobian_ideal",
    "milnor_number_hypersurface",
    "brieskorn_milnor",
    "brieskorn_polynomial",
    "is_weighted_homogeneous",
    "weighted_homogeneous_milnor",
    "milnor_number",
]

JACOBIAN = "jacobian-colength"
BRIESKORN = "brieskorn"
WEIGHTED = "weighted-homogeneous"
DECLARED = "declared"


class NonIsolatedError(ValueError):
    """The singularity is not isolated, or the engine budget ran out first."""

    def __init__(self, message: str, budget_exceeded: bool = False):
        self.budget_exceeded = budget_exceeded
        super().__init__(message)


class UnsupportedGermError(ValueError):
    pass


class WeightInconsistencyError(ValueError):
    pass


@dataclass(frozen=True)
class MilnorResult:
    mu: int
    method: str
    isolated: bool = True
    smooth: bool = False
    notice: Optional[str] = None
    reductions: int = 0
    staircase_size: int = 0


def jacobian_ideal(f: Polynomial) -> List[Polynomial]:
    return [partial_derivative(f, i) for i in range(f.ring.dimension)]


def milnor_number_hypersurface(f: Polynomial, budget: Optional[Budget] = None) -> MilnorResult:
    """mu(f) = dim O / (df/dz_1, ..., df/dz_m).

    Smooth points give mu = 0 with a notice. Raises :class:`NonIsolatedError`
    when the Jacobian colength is infinite or the budget is exhausted.
    """
    if f.constant_term() != 0:
        raise ValueError("f must vanish at the origin")
    budget = budget or Budget()
    jac = jacobian_ideal(f)
    if all(g.is_zero() for g in jac):
        raise NonIsolatedError("f is constant in every variable; the singular locus is everything")
    if any(g.constant_term() != 0 for g in jac):
        return MilnorResult(mu=0, method=JACOBIAN, smooth=True, notice="smooth point: nonzero linear part")
    c = colength(jac, budget)
    if c.infinite:
        raise NonIsolatedError("Jacobian ideal has infinite colength: singularity is not isolated")
    if c.exceeded:
        raise NonIsolatedError(
            f"{c.budget_kind} budget exceeded (possibly a non-isolated singularity)",
            budget_exceeded=True,
        )
    return MilnorResult(
        mu=c.value,
        method=JACOBIAN,
        reductions=c.reductions,
        staircase_size=c.staircase_visited,
    )


def brieskorn_milnor(exponents: Sequence[int]) -> int:
    """prod(a_i - 1) for z_1^a_1 + ... + z_m^a_m."""
    for a in exponents:
        if a < 2:
            raise ValueError(f"Brieskorn exponents must be >= 2, got {a}")
    return prod(a - 1 for a in exponents)


def brieskorn_polynomial(ring, exponents: Sequence[int]) -> Polynomial:
    if len(exponents) != ring.dimension:
        raise ValueError("one exponent per variable")
    f = ring.zero()
    for i, a in enumerate(exponents):
        f = f + ring.gen(i) ** a
    return f


def is_weighted_homogeneous(f: Polynomial, weights: Sequence[int]) -> Optional[int]:
    """The common weighted degree of the terms of f, or None."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if len(weights) != f.ring.dimension:
        raise ValueError(f"{len(weights)} weights for {f.ring.dimension} variables")
    degrees = {weighted_degree(m, weights) for m in f.terms}
    return degrees.pop() if len(degrees) == 1 else None


def weighted_homogeneous_milnor(weights: Sequence[int], d: int) -> int:
    """prod((d - w_i) / w_i), which must come out a nonnegative integer."""
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if any(d <= w for w in weights):
        raise WeightInconsistencyError(f"degree {d} must exceed every weight {tuple(weights)}")
    value = prod((Fraction(d - w, w) for w in weights), start=Fraction(1))
    if value.denominator != 1:
        raise WeightInconsistencyError(
            f"weights {tuple(weights)} with degree {d} give non-integral Milnor number {value}"
        )
    return int(value)


def milnor_number(germ: GermDefinition, budget: Optional[Budget] = None) -> MilnorResult:
    if germ.is_hypersurface:
        return milnor_number_hypersurface(germ.equations[0], budget)
    if germ.declared_milnor is not None:
        return MilnorResult(mu=germ.declared_milnor, method=DECLARED)
    raise UnsupportedGermError(
        f"complete intersection with k={germ.k} equations: supply declared_milnor"
    )
