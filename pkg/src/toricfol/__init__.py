"""Exact-arithmetic toolkit for one-dimensional foliations on compact toric orbifolds.

Builds toric orbifold models in homogeneous coordinates (divisor class
group, graded variables, radial fields), checks invariance of
hypersurfaces under quasi-homogeneous vector fields, computes Koszul
normal forms, and audits the degree bounds those normal forms imply.
"""

from .audit import AuditOptions, AuditReport, audit_case, poincare_bound
from .degrees import DegreeClass, degree_of_monomial
from .foliation import (
    DegreeInconsistencyError,
    VectorField,
    foliation_degree,
    invariance_cofactor,
    lie_g_membership,
    singular_scheme_minors,
)
from .families import (
    FIXTURE_BUILDERS,
    Fixture,
    check_fixture,
    multiprojective,
    octahedron_rays,
    rational_scroll,
    torsion_surface,
    weighted_projective,
)
from .grading import (
    count_lattice_points,
    homogeneous_degree,
    is_quasi_homogeneous,
    monomials_of_degree,
)
from .groebner import (
    EMPTY_VARIETY,
    INCONCLUSIVE,
    GroebnerBasis,
    buchberger,
    ideal_dimension,
    normal_form,
    only_origin_check,
    regular_subsequence_check,
    sing_inside_irrelevant,
)
from .intlinalg import (
    AbelianGroupPresentation,
    IntMatrix,
    SmithDecomposition,
    cokernel,
    kernel_basis,
    smith_normal_form,
    solve_integer_system,
)
from .model import (
    BasisChange,
    IrrelevantIdeal,
    RadialField,
    ToricModel,
    align_display_basis,
    build_from_presentation,
    build_from_rays,
)
from .normalform import (
    DecompositionError,
    KoszulDecomposition,
    euler_check,
    koszul_decompose,
    verify_decomposition,
)
from .poly import Polynomial

__all__ = [
    "AbelianGroupPresentation",
    "AuditOptions",
    "AuditReport",
    "BasisChange",
    "DegreeClass",
    "DegreeInconsistencyError",
    "DecompositionError",
    "EMPTY_VARIETY",
    "FIXTURE_BUILDERS",
    "Fixture",
    "GroebnerBasis",
    "INCONCLUSIVE",
    "IntMatrix",
    "IrrelevantIdeal",
    "KoszulDecomposition",
    "Polynomial",
    "RadialField",
    "SmithDecomposition",
    "ToricModel",
    "VectorField",
    "align_display_basis",
    "audit_case",
    "buchberger",
    "build_from_presentation",
    "build_from_rays",
    "check_fixture",
    "cokernel",
    "count_lattice_points",
    "degree_of_monomial",
    "euler_check",
    "foliation_degree",
    "homogeneous_degree",
    "ideal_dimension",
    "invariance_cofactor",
    "is_quasi_homogeneous",
    "kernel_basis",
    "koszul_decompose",
    "lie_g_membership",
    "monomials_of_degree",
    "multiprojective",
    "normal_form",
    "octahedron_rays",
    "only_origin_check",
    "poincare_bound",
    "rational_scroll",
    "regular_subsequence_check",
    "sing_inside_irrelevant",
    "singular_scheme_minors",
    "smith_normal_form",
    "solve_integer_system",
    "torsion_surface",
    "verify_decomposition",
    "weighted_projective",
]
