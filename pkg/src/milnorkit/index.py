"""Indices of vector fields at the origin.

The Poincare-Hopf index of a holomorphic field with an algebraically isolated
zero is the colength of its component ideal. GSV indices are only produced
where they are pinned down: the radial field (Euler characteristic of the
Milnor fibre), Hamiltonian fields (always 0), and user-declared values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .local import Budget, colength, ideal_membership
from .milnor import NonIsolatedError, milnor_number
from .parser import GermDefinition
from .poly import Polynomial, Ring, partial_derivative

__all__ = [
    "VectorField",
    "IndexValue",
    "TangencyError",
    "UnsupportedIndexError",
    "ph_index",
    "hamiltonian_field",
    "directional_derivative",
    "check_tangency",
    "tangency",
    "Tangency",
    "radial_field",
    "radial_gsv_index",
    "is_hamiltonian",
    "gsv_index",
]

POINCARE_HOPF = "poincare-hopf"
GSV_RADIAL = "gsv-radial"
GSV_HAMILTONIAN = "gsv-hamiltonian"
GSV_DECLARED = "gsv-declared"


class TangencyError(ValueError):
    pass


class UnsupportedIndexError(ValueError):
    pass


@dataclass(frozen=True)
class VectorField:
    ring: Ring
    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.ring.dimension:
            raise ValueError(f"{len(comps)} components for a ring of dimension {self.ring.dimension}")
        if any(c.ring != self.ring for c in comps):
            raise ValueError("components must live in the field's ring")
        if all(c.is_zero() for c in comps):
            raise ValueError("vector field is identically zero")

    @classmethod
    def of(cls, components: Sequence[Polynomial]) -> "VectorField":
        return cls(components[0].ring, tuple(components))


@dataclass(frozen=True)
class IndexValue:
    kind: str
    value: int


def ph_index(v: VectorField, budget: Optional[Budget] = None) -> IndexValue:
    c = colength(v.components, budget)
    if c.infinite:
        raise NonIsolatedError("the field's zero at the origin is not algebraically isolated")
    if c.exceeded:
        raise NonIsolatedError(f"{c.budget_kind} budget exceeded", budget_exceeded=True)
    return IndexValue(POINCARE_HOPF, c.value)


def radial_field(ring: Ring) -> VectorField:
    return VectorField(ring, ring.gens)


def hamiltonian_field(f: Polynomial) -> VectorField:
    """(df/dz2, -df/dz1, df/dz4, -df/dz3, ...) on an even-dimensional ring."""
    dim = f.ring.dimension
    if dim % 2:
        raise ValueError(f"Hamiltonian fields need an even number of variables, got {dim}")
    comps = []
    for i in range(0, dim, 2):
        comps.append(partial_derivative(f, i + 1))
        comps.append(-partial_derivative(f, i))
    if all(c.is_zero() for c in comps):
        raise ValueError("f is constant: its Hamiltonian field vanishes identically")
    return VectorField(f.ring, tuple(comps))


def directional_derivative(v: VectorField, f: Polynomial) -> Polynomial:
    """df(v) = sum_i v_i * df/dz_i."""
    if f.ring != v.ring:
        raise ValueError("field and function live in different rings")
    out = f.ring.zero()
    for i, c in enumerate(v.components):
        out = out + c * partial_derivative(f, i)
    return out


@dataclass(frozen=True)
class Tangency:
    tangent: bool
    tangent_to_fibres: bool


def tangency(
    v: VectorField,
    equations: Union[Polynomial, Sequence[Polynomial]],
    budget: Optional[Budget] = None,
) -> Tangency:
    """Tangency to X = {f_1 = ... = f_k = 0}: each df_i(v) lies in <f_1, ..., f_k>.

    ``tangent_to_fibres`` records the stronger condition df_i(v) == 0.
    """
    eqs = [equations] if isinstance(equations, Polynomial) else list(equations)
    derivs = [directional_derivative(v, f) for f in eqs]
    if all(d.is_zero() for d in derivs):
        return Tangency(True, True)
    tangent = all(ideal_membership(d, eqs, budget) for d in derivs)
    return Tangency(tangent, False)


def check_tangency(
    v: VectorField,
    f: Union[Polynomial, Sequence[Polynomial]],
    budget: Optional[Budget] = None,
) -> bool:
    return tangency(v, f, budget).tangent


def radial_gsv_index(n: int, mu: int) -> IndexValue:
    """Euler characteristic of the Milnor fibre, a bouquet of mu n-spheres."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    return IndexValue(GSV_RADIAL, 1 + (-1) ** n * mu)


def is_hamiltonian(germ: GermDefinition) -> bool:
    if germ.vector_field is None or not germ.is_hypersurface or germ.ring.dimension % 2:
        return False
    try:
        ham = hamiltonian_field(germ.equations[0])
    except ValueError:
        return False
    return ham.components == tuple(germ.vector_field)


def gsv_index(
    germ: GermDefinition,
    radial: bool = False,
    declared: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> IndexValue:
    """GSV index of the germ's vector field, or of the radial field on request."""
    if radial:
        mu = milnor_number(germ, budget).mu
        return radial_gsv_index(germ.n, mu)
    if germ.vector_field is None:
        raise UnsupportedIndexError("germ has no vector field; request the radial field instead")
    if is_hamiltonian(germ):
        return IndexValue(GSV_HAMILTONIAN, 0)
    field = VectorField(germ.ring, germ.vector_field)
    if not check_tangency(field, germ.equations, budget):
        raise TangencyError("the vector field is not tangent to the germ")
    if declared is None:
        raise UnsupportedIndexError(
            "no algebraic GSV formula for this field; supply a declared value"
        )
    return IndexValue(GSV_DECLARED, int(declared))
