"""Milnor numbers, vector-field indices and triviality criteria for isolated singularities."""

from .index import (
    IndexValue,
    VectorField,
    check_tangency,
    gsv_index,
    hamiltonian_field,
    ph_index,
    radial_gsv_index,
)
from .local import Budget, Colength, colength, ideal_membership, mora_normal_form, standard_basis
from .milnor import (
    MilnorResult,
    brieskorn_milnor,
    is_weighted_homogeneous,
    jacobian_ideal,
    milnor_number,
    milnor_number_hypersurface,
    weighted_homogeneous_milnor,
)
from .obstruction import (
    GroupDescriptor,
    TrivialityVerdict,
    decide_contact_triviality,
    decide_foliation_normal_triviality,
    decide_orthogonal_triviality,
    factorial,
    homotopy_group_u,
    obstruction_class,
)
from .parser import GermDefinition, format_polynomial, parse_expression, parse_germ_file
from .poly import Polynomial, Ring, partial_derivative, poly_add, poly_mul, weighted_degree

__version__ = "0.1.0"
