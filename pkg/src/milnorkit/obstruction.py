"""Bott's homotopy groups of U(n) and the triviality criteria built on them.

From the fibration U(n-1) -> U(n) -> S^{2n-1} the image of
pi_{2n-1}(S^{2n-1}) = Z in pi_{2n-2}(U(n-1)) = Z/(n-1)! is reduction mod
(n-1)!, so a degree-d obstruction vanishes iff (n-1)! divides d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Tuple

__all__ = [
    "GroupDescriptor",
    "TrivialityVerdict",
    "OutOfRangeError",
    "factorial",
    "homotopy_group_u",
    "obstruction_class",
    "decide_orthogonal_triviality",
    "decide_contact_triviality",
    "decide_foliation_normal_triviality",
]

THEOREM_1 = "theorem-1"
THEOREM_2 = "theorem-2"
COROLLARY_1 = "corollary-1"

LOCALLY_FREE = "foliation locally free (unchecked; automatic when X is smooth)"


class OutOfRangeError(ValueError):
    pass


@dataclass(frozen=True)
class GroupDescriptor:
    """Z^rank + Z/torsion_order; torsion_order 0 means no torsion."""

    rank: int
    torsion_order: int = 0

    def __post_init__(self):
        if self.rank < 0 or self.torsion_order < 0:
            raise ValueError("rank and torsion order are nonnegative")
        if self.torsion_order == 1:
            raise ValueError("Z/1 is trivial; use torsion_order=0")

    @property
    def torsion_subgroup_order(self) -> int:
        """Order of the torsion subgroup, 1 when there is none."""
        return self.torsion_order or 1

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and self.torsion_order == 0

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        if self.torsion_order:
            parts.append(f"Z/{self.torsion_order}")
        return " + ".join(parts) if parts else "0"


def _group_mod(m: int) -> GroupDescriptor:
    return GroupDescriptor(0, m if m > 1 else 0)


@dataclass(frozen=True)
class TrivialityVerdict:
    trivial: bool
    modulus: int
    residue: int
    criterion: str
    inputs: Tuple[Tuple[str, int], ...]
    assumptions: Tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "trivial": self.trivial,
            "modulus": self.modulus,
            "residue": self.residue,
            "criterion": self.criterion,
            "inputs": dict(self.inputs),
            "assumptions": list(self.assumptions),
        }


def factorial(m: int) -> int:
    return math.factorial(m)


def homotopy_group_u(k: int, n: int) -> GroupDescriptor:
    """pi_k(U(n)) for 1 <= k <= 2n.

    Stable range k <= 2n-1: Z for odd k, 0 for even k. At k = 2n the group
    is Z/n!. Larger k is refused.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    if k <= 2 * n - 1:
        return GroupDescriptor(1 if k % 2 else 0)
    if k == 2 * n:
        return _group_mod(factorial(n))
    raise OutOfRangeError(f"pi_{k}(U({n})) is outside the implemented range k <= 2n")


def obstruction_class(degree: int, n: int) -> int:
    """Image of ``degree`` in Z/(n-1)!, normalized to [0, (n-1)!)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return degree % factorial(n - 1)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("n must be at least 2")


def decide_orthogonal_triviality(n: int, gsv: int) -> TrivialityVerdict:
    """Orthogonal complement of v is trivial iff (n-1)! divides its GSV index."""
    _check_n(n)
    residue = obstruction_class(gsv, n)
    return TrivialityVerdict(
        trivial=residue == 0,
        modulus=factorial(n - 1),
        residue=residue,
        criterion=THEOREM_2,
        inputs=(("n", n), ("gsv", gsv)),
    )


def decide_contact_triviality(n: int, mu: int) -> TrivialityVerdict:
    """Contact bundle on the link is trivial iff mu = (-1)^(n-1) mod (n-1)!."""
    _check_n(n)
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    modulus = factorial(n - 1)
    residue = (mu - (-1) ** (n - 1)) % modulus
    return TrivialityVerdict(
        trivial=residue == 0,
        modulus=modulus,
        residue=residue,
        criterion=THEOREM_1,
        inputs=(("n", n), ("mu", mu)),
    )


def decide_foliation_normal_triviality(gsv: int) -> TrivialityVerdict:
    """Three-dimensional X only: the normal bundle is trivial iff the GSV index is even."""
    residue = gsv % 2
    return TrivialityVerdict(
        trivial=residue == 0,
        modulus=2,
        residue=residue,
        criterion=COROLLARY_1,
        inputs=(("n", 3), ("gsv", gsv)),
        assumptions=(LOCALLY_FREE,),
    )
