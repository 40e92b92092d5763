"""Numerical toolkit for the symmetrized polydisc, the tetrablock and the pentablock.

Classifies points, applies the automorphism groups, decomposes distinguished
boundary points into orbits of canonical points, and brackets the structured
singular value used as a membership oracle.
"""

__version__ = "0.1.0"

from .automorphisms import (
    PentaAutParams,
    TetraAutParams,
    penta_apply,
    penta_compose,
    penta_inverse,
    tau_apply,
    tau_blaschke_apply,
    tetra_apply,
    tetra_compose,
    tetra_cyclic_shift,
    tetra_flip,
    tetra_inverse,
)
from .blaschke import BlaschkeProduct, InterpConfig, interpolate_roots_of_unity, roots_of_unity
from .complex_core import DiscAutomorphism, aut_compose, aut_eval, aut_inverse, blaschke_factor, two_point_boundary_aut
from .domains import (
    Tolerance,
    classify_b_penta,
    classify_b_tetra,
    classify_gamma_n,
    royal_gamma2,
    sample_points,
    sample_stratum,
    symmetrize,
    unsymmetrize,
)
from .errors import (
    CoincidentPoints,
    DegenerateDenominator,
    DomainError,
    InternalInconsistency,
    InterpolationFailure,
    MalformedInput,
    MuDomainsError,
    NotOnBoundary,
    OutsideDomain,
    SolverError,
    SolverFailure,
    UnknownStratum,
)
from .matrix2 import Mat2, op_norm, project_gamma2, project_penta, project_tetra, spectral_radius
from .mu_ssv import Membership, MuBracket, MuConfig, Structure, in_penta, in_tetra, mu
from .orbits import Decomposition, decompose, decompose_b_gamma2, decompose_b_gamma_n, decompose_b_penta, decompose_b_tetra
from .points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint
