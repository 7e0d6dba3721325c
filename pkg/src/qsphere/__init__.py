"""Exact symbolic models of q-deformed matrix, unitary and sphere algebras.

The package builds finitely presented star-algebras over the rational
function field in the deformation parameter, normalizes elements through
terminating rewriting with confluence certificates, and mechanically checks
the structural identities these algebras are supposed to satisfy: Hopf
axioms, coactions, braiding/Hecke identities, the universal r-form calculus,
invariant sesquilinear forms, and Dirac spectrum multiplicities.
"""

from .errors import QsphereError
from .freealg import DINV, EMPTY, NcPoly, TensorPoly, u, z, zs
from .hopf import (
    Coaction,
    Morphism,
    StructureMaps,
    antipode,
    build_coaction,
    build_u_morphism,
    check_form_preservation,
    check_grouplike,
    check_intertwine,
    coproduct,
    counit,
    solve_invariant_form,
    verify_hopf,
)
from .parser import parse_expr, render, render_scalar
from .presentations import (
    Presentation,
    antipode_matrix,
    build,
    build_free_matrix,
    build_torus,
    check_central,
    check_matrix_identities,
    check_star_closure,
    check_star_involution,
    embed_sphere,
    invariant_form_matrix,
    quantum_determinant,
)
from .rewrite import MonomialOrder, RewriteSystem, Rule
from .rmatrix import (
    RFormEvaluator,
    check_cqt,
    check_hecke,
    eigenprojections,
    mult_kernel,
    rhat,
    rhat_inverse,
    sigma,
)
from .scalars import ONE, ZERO, DeformationContext, Scalar
from .spectrum import (
    bigraded_dim_check,
    d_eigenvalue,
    dim_irrep,
    enumerate_gt,
    spectrum_with_multiplicities,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
