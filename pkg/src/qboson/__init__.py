"""Exact computation in layered q-deformed generator algebras.

Subpackages cover the finite-type Cartan/Weyl combinatorics, the Garside
normal form of the associated braid group, exact Q(v) scalars, the
layered generator algebra with its bilinear form, the braid-group action
on it, and executable verification suites.
"""
from .cartan import (
    CartanDatum,
    WeylElement,
    build_cartan,
    coroot_pair,
    longest_element,
    star_involution,
    sym_form,
    weak_meet,
    weyl_from_word,
)
from .garside import (
    Braid,
    braid_from_word,
    braid_to_word,
    complete_to_delta_power,
    delta_power,
    identity_braid,
    inverse,
    is_prefix,
    join,
    meet,
    multiply,
    project_to_weyl,
    psi,
)
from .qscalar import ONE, ZERO, QScalar, qbinom, qfact, qint
from .boson import AlgElement, BosonAlgebra, LayerNormalSet, format_element
from .braid_action import (
    apply_Ti,
    apply_Ti_star,
    apply_braid,
    in_image_of_Alt0,
    pbw_generators,
    star_conjugation_check,
    subalgebra_monomials,
)

__all__ = [
    "AlgElement", "BosonAlgebra", "Braid", "CartanDatum", "LayerNormalSet",
    "ONE", "QScalar", "WeylElement", "ZERO",
    "apply_Ti", "apply_Ti_star", "apply_braid", "braid_from_word",
    "braid_to_word", "build_cartan", "complete_to_delta_power",
    "coroot_pair", "delta_power", "format_element", "identity_braid",
    "in_image_of_Alt0", "inverse", "is_prefix", "join", "longest_element",
    "meet", "multiply", "pbw_generators", "project_to_weyl", "psi",
    "qbinom", "qfact", "qint", "star_conjugation_check",
    "star_involution", "subalgebra_monomials", "sym_form", "weak_meet",
    "weyl_from_word",
]
