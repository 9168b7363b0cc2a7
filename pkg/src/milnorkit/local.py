"""Standard bases in the local ring at the origin.

Everything here works with the negative degree reverse lexicographic
ordering (``ds`` in Singular's notation): lower total degree wins, so the
leading monomial of a polynomial is one of its lowest-order terms and 1 is
the largest monomial of all. Division uses Mora's weak normal form with the
ecart bound; standard bases come from Mora's tangent-cone algorithm.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .poly import Monomial, Polynomial, divides, lcm

__all__ = [
    "LocalOrdering",
    "NEG_DEGREVLEX",
    "Budget",
    "BudgetExceeded",
    "StandardBasis",
    "Colength",
    "leading_term",
    "ecart",
    "mora_normal_form",
    "standard_basis",
    "colength",
    "ideal_membership",
    "staircase",
    "corner_bound",
]

DEFAULT_MAX_REDUCTIONS = 10**7
DEFAULT_MAX_STAIRCASE = 10**6


class BudgetExceeded(RuntimeError):
    def __init__(self, kind: str, limit: int):
        self.kind = kind
        self.limit = limit
        super().__init__(f"{kind} budget of {limit} exceeded")


@dataclass
class Budget:
    """Caps on the engine's work; ``used_*`` fields are filled in as it runs."""

    max_reductions: int = DEFAULT_MAX_REDUCTIONS
    max_staircase: int = DEFAULT_MAX_STAIRCASE
    used_reductions: int = 0
    used_staircase: int = 0

    @classmethod
    def from_env(cls, max_reductions: Optional[int] = None, max_staircase: Optional[int] = None) -> "Budget":
        """Explicit arguments win over MILNORKIT_BUDGET_* environment variables."""
        if max_reductions is None:
            max_reductions = int(os.environ.get("MILNORKIT_BUDGET_REDUCTIONS", DEFAULT_MAX_REDUCTIONS))
        if max_staircase is None:
            max_staircase = int(os.environ.get("MILNORKIT_BUDGET_STAIRCASE", DEFAULT_MAX_STAIRCASE))
        return cls(max_reductions=max_reductions, max_staircase=max_staircase)

    def spend_reduction(self) -> None:
        self.used_reductions += 1
        if self.used_reductions > self.max_reductions:
            raise BudgetExceeded("reduction", self.max_reductions)


class LocalOrdering:
    """Negative degree reverse lexicographic order on exponent tuples."""

    name = "neg-degrevlex"

    @staticmethod
    def key(m: Monomial):
        # larger key = larger monomial
        return (-sum(m), tuple(-e for e in reversed(m)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def leading_monomial(self, p: Polynomial) -> Monomial:
        if p.is_zero():
            raise ValueError("the zero polynomial has no leading monomial")
        return max(p.terms, key=self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, LocalOrdering)

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return "LocalOrdering(neg-degrevlex)"


NEG_DEGREVLEX = LocalOrdering()


def leading_term(p: Polynomial, ordering: LocalOrdering = NEG_DEGREVLEX) -> Tuple[Monomial, Fraction]:
    m = ordering.leading_monomial(p)
    return m, p.coefficient(m)


def ecart(p: Polynomial, ordering: LocalOrdering = NEG_DEGREVLEX) -> int:
    """Maximal total degree minus the degree of the leading monomial."""
    return p.degree() - sum(ordering.leading_monomial(p))


@dataclass
class _Elem:
    poly: Polynomial
    lm: Monomial
    lc: Fraction
    ecart: int


def _elem(p: Polynomial, ordering: LocalOrdering) -> _Elem:
    lm, lc = leading_term(p, ordering)
    return _Elem(p, lm, lc, p.degree() - sum(lm))


def _reduce_step(h: _Elem, g: _Elem, ordering: LocalOrdering) -> Polynomial:
    shift = tuple(a - b for a, b in zip(h.lm, g.lm))
    return h.poly - g.poly.mul_term(shift, h.lc / g.lc)


def _truncate(p: Polynomial, bound: Optional[int]) -> Polynomial:
    if bound is None or p.degree() < bound:
        return p
    return Polynomial._raw(p.ring, {m: c for m, c in p.terms.items() if sum(m) < bound})


def corner_bound(leading: Sequence[Monomial], dim: int) -> Optional[int]:
    """A degree D with m^D inside the monomial ideal of ``leading``, if one exists.

    For a local degree ordering m^D in the leading ideal of I forces m^D into
    I itself, so terms of degree >= D may be discarded during reduction.
    """
    total = 0
    for i in range(dim):
        pure = [m[i] for m in leading if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            return None
        total += min(pure) - 1
    return total + 1


def _weak_normal_form(
    p: Polynomial,
    basis: List[_Elem],
    ordering: LocalOrdering,
    budget: Budget,
    bound: Optional[int] = None,
) -> Polynomial:
    h = _truncate(p, bound)
    table = list(basis)
    while not h.is_zero():
        he = _elem(h, ordering)
        best = None
        for g in table:
            # strict < keeps the oldest among equal ecarts
            if divides(g.lm, he.lm) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            return h
        budget.spend_reduction()
        if best.ecart > he.ecart:
            table.append(he)
        h = _truncate(_reduce_step(he, best, ordering), bound)
    return h


def mora_normal_form(
    p: Polynomial,
    basis: Sequence[Polynomial],
    ordering: LocalOrdering = NEG_DEGREVLEX,
    budget: Optional[Budget] = None,
) -> Polynomial:
    """Mora's weak normal form of ``p`` with respect to ``basis``.

    The result ``r`` satisfies ``u*p - r`` in the ideal of ``basis`` for some
    local unit ``u``, and either ``r == 0`` or its leading monomial is not
    divisible by any leading monomial of ``basis``. With respect to a
    standard basis, ``r == 0`` exactly when ``p`` lies in the local ideal.
    """
    budget = budget or Budget()
    for g in basis:
        if g.ring != p.ring:
            raise ValueError("all polynomials must live in one ring")
    elems = [_elem(g, ordering) for g in basis if not g.is_zero()]
    bound = corner_bound([e.lm for e in elems], p.ring.dimension)
    return _weak_normal_form(p, elems, ordering, budget, bound)


@dataclass(frozen=True)
class StandardBasis:
    ordering: LocalOrdering
    generators: Tuple[Polynomial, ...]
    leading_monomials: Tuple[Monomial, ...]
    source_ideal: Tuple[Polynomial, ...]

    @property
    def ring(self):
        return self.generators[0].ring

    def minimal_leading_monomials(self) -> Tuple[Monomial, ...]:
        """Minimal generators of the leading ideal, sorted."""
        lms = sorted(set(self.leading_monomials), key=lambda m: (sum(m), m))
        keep: List[Monomial] = []
        for m in lms:
            if not any(divides(k, m) for k in keep):
                keep.append(m)
        return tuple(sorted(keep))

    def contains_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def normal_form(self, p: Polynomial, budget: Optional[Budget] = None) -> Polynomial:
        return mora_normal_form(p, self.generators, self.ordering, budget)


def _s_poly(f: _Elem, g: _Elem) -> Polynomial:
    m = lcm(f.lm, g.lm)
    sf = tuple(a - b for a, b in zip(m, f.lm))
    sg = tuple(a - b for a, b in zip(m, g.lm))
    return f.poly.mul_term(sf, 1 / f.lc) - g.poly.mul_term(sg, 1 / g.lc)


def standard_basis(
    gens: Sequence[Polynomial],
    ordering: LocalOrdering = NEG_DEGREVLEX,
    budget: Optional[Budget] = None,
) -> StandardBasis:
    """Standard basis of the ideal generated by ``gens`` in the local ring at 0.

    Pairs are processed by the normal strategy: smallest lcm degree first,
    ties broken by creation order. Zero generators are dropped.
    """
    budget = budget or Budget()
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("all generators must live in one ring")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise ValueError("all generators are zero")

    basis: List[_Elem] = []
    pairs: List[Tuple[int, int, int, int]] = []  # (lcm degree, serial, i, j)
    serial = 0
    bound: Optional[int] = None
    dim = ring.dimension

    def add(e: _Elem) -> None:
        nonlocal serial, bound
        j = len(basis)
        basis.append(e)
        bound = corner_bound([b.lm for b in basis], dim)
        for i in range(j):
            # s-polynomials of two terms with coprime monomials vanish identically
            if len(basis[i].poly) == 1 and len(e.poly) == 1:
                continue
            pairs.append((sum(lcm(basis[i].lm, e.lm)), serial, i, j))
            serial += 1

    for g in nonzero:
        add(_elem(g, ordering))

    while pairs:
        pairs.sort()
        _, _, i, j = pairs.pop(0)
        if bound is not None and sum(lcm(basis[i].lm, basis[j].lm)) >= bound:
            # both shifted leading terms lie in m^bound, hence so does the s-polynomial
            continue
        s = _s_poly(basis[i], basis[j])
        if s.is_zero():
            continue
        h = _weak_normal_form(s, basis, ordering, budget, bound)
        if not h.is_zero():
            add(_elem(h, ordering))

    return StandardBasis(
        ordering=ordering,
        generators=tuple(e.poly for e in basis),
        leading_monomials=tuple(e.lm for e in basis),
        source_ideal=tuple(gens),
    )


@dataclass(frozen=True)
class Colength:
    """Dimension of the local ring modulo an ideal.

    Exactly one of the states holds: a finite ``value``, ``infinite`` (the
    origin is not an isolated zero), or ``exceeded`` (a budget ran out).
    """

    value: Optional[int] = None
    infinite: bool = False
    exceeded: bool = False
    budget_kind: Optional[str] = None
    reductions: int = 0
    staircase_visited: int = 0

    @property
    def finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        if self.infinite:
            return "infinite"
        if self.exceeded:
            return f"exceeded {self.budget_kind} budget"
        return str(self.value)


def staircase(leading: Sequence[Monomial], dim: int, max_size: int = DEFAULT_MAX_STAIRCASE) -> List[Monomial]:
    """Monomials outside the monomial ideal generated by ``leading``.

    Breadth-first from 1, never stepping into the ideal. Raises
    :class:`BudgetExceeded` once more than ``max_size`` monomials are found,
    which is guaranteed when the staircase is infinite.
    """
    one = (0,) * dim
    if any(divides(m, one) for m in leading):
        return []
    seen = {one}
    queue = deque([one])
    out = []
    while queue:
        m = queue.popleft()
        out.append(m)
        if len(out) > max_size:
            raise BudgetExceeded("staircase", max_size)
        for i in range(dim):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt in seen:
                continue
            seen.add(nxt)
            if not any(divides(g, nxt) for g in leading):
                queue.append(nxt)
    return out


def _has_pure_powers(leading: Sequence[Monomial], dim: int) -> bool:
    for i in range(dim):
        if not any(all(e == 0 for j, e in enumerate(m) if j != i) for m in leading):
            return False
    return True


def colength(gens: Sequence[Polynomial], budget: Optional[Budget] = None) -> Colength:
    """dim_C O_0 / <gens>, computed from the leading ideal of a standard basis."""
    budget = budget or Budget()
    try:
        sb = standard_basis(gens, NEG_DEGREVLEX, budget)
    except BudgetExceeded as exc:
        return Colength(exceeded=True, budget_kind=exc.kind, reductions=budget.used_reductions)
    dim = sb.ring.dimension
    leading = sb.minimal_leading_monomials()
    if not _has_pure_powers(leading, dim):
        return Colength(infinite=True, reductions=budget.used_reductions)
    try:
        stairs = staircase(leading, dim, budget.max_staircase)
    except BudgetExceeded as exc:
        budget.used_staircase = exc.limit
        return Colength(
            exceeded=True,
            budget_kind=exc.kind,
            reductions=budget.used_reductions,
            staircase_visited=exc.limit,
        )
    budget.used_staircase = max(budget.used_staircase, len(stairs))
    return Colength(value=len(stairs), reductions=budget.used_reductions, staircase_visited=len(stairs))


def ideal_membership(p: Polynomial, gens: Sequence[Polynomial], budget: Optional[Budget] = None) -> bool:
    """Whether ``p`` lies in the ideal generated by ``gens`` in the local ring."""
    if p.is_zero():
        return True
    if all(g.is_zero() for g in gens):
        return False
    budget = budget or Budget()
    sb = standard_basis(gens, NEG_DEGREVLEX, budget)
    return sb.normal_form(p, budget).is_zero()
