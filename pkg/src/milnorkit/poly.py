"""Exact sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, tied to a :class:`Ring` that fixes
the variable order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]

MAX_EXPONENT = 2**31 - 1

__all__ = [
    "MAX_EXPONENT",
    "Monomial",
    "Ring",
    "Polynomial",
    "RingMismatchError",
    "ExponentOverflowError",
    "poly_add",
    "poly_mul",
    "partial_derivative",
    "weighted_degree",
    "total_degree",
    "divides",
    "lcm",
]


class RingMismatchError(ValueError):
    pass


class ExponentOverflowError(OverflowError):
    pass


@dataclass(frozen=True)
class Ring:
    """Ordered list of variable names; the ambient space is C^dimension."""

    variables: Tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", names)

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Coefficient) -> "Polynomial":
        return Polynomial(self, {(0,) * self.dimension: c})

    def gen(self, i: int) -> "Polynomial":
        if not 0 <= i < self.dimension:
            raise IndexError(f"variable index {i} out of range for {self}")
        exps = [0] * self.dimension
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.dimension))

    def monomial(self, exponents: Sequence[int], coeff: Coefficient = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exponents): coeff})

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.variables)})"


def _check_exponents(m: Monomial, dim: int) -> None:
    if len(m) != dim:
        raise ValueError(f"monomial {m} has length {len(m)}, ring dimension is {dim}")
    for e in m:
        if e < 0:
            raise ValueError(f"negative exponent in {m}")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    Arithmetic operators are overloaded; integers and fractions are coerced
    to constants of the same ring.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coefficient]):
        clean = {}
        dim = ring.dimension
        for m, c in terms.items():
            m = tuple(int(e) for e in m)
            _check_exponents(m, dim)
            c = Fraction(c)
            if c:
                clean[m] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    def monomials(self) -> list:
        return sorted(self._terms)

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.dimension, Fraction(0))

    def degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def order(self) -> int:
        """Minimal total degree (order of vanishing at 0); -1 for zero."""
        if not self._terms:
            return -1
        return min(sum(m) for m in self._terms)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        for m in out:
            if max(m, default=0) > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent overflow in product: {m}")
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coefficient) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, m: Monomial, c: Fraction) -> "Polynomial":
        """Multiply by the single term ``c * z^m``."""
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self._terms.items()},
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def diff(self, i: int) -> "Polynomial":
        return partial_derivative(self, i)

    def __repr__(self) -> str:
        from .parser import format_polynomial

        return f"Polynomial({format_polynomial(self)!r}, {self.ring!r})"

    def __str__(self) -> str:
        from .parser import format_polynomial

        return format_polynomial(self)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.ring != q.ring:
        raise RingMismatchError(f"{p.ring} vs {q.ring}")
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.ring != q.ring:
        raise RingMismatchError(f"{p.ring} vs {q.ring}")
    return p * q


def partial_derivative(p: Polynomial, var_index: int) -> Polynomial:
    if not 0 <= var_index < p.ring.dimension:
        raise IndexError(f"variable index {var_index} out of range for {p.ring}")
    out = {}
    for m, c in p._terms.items():
        e = m[var_index]
        if e:
            dm = m[:var_index] + (e - 1,) + m[var_index + 1:]
            out[dm] = c * e
    return Polynomial._raw(p.ring, out)


def total_degree(m: Monomial) -> int:
    return sum(m)


def weighted_degree(m: Sequence[int], weights: Sequence[int]) -> int:
    if len(m) != len(weights):
        raise ValueError(f"{len(weights)} weights for a monomial of length {len(m)}")
    return sum(w * e for w, e in zip(weights, m))


def divides(a: Monomial, b: Monomial) -> bool:
    """True if z^a divides z^b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))
