"""Cohomology of small Nichols algebras over F_p and their smash products with Z/p."""
__version__ = "0.1.0"

from .algebras import (  # noqa: E402
    build_A, build_B, build_S, build_smash, build_smash_p, is_central, unipotent_action,
    validate_action,
)
from .anick import AnickResolution, chains, ext_dims  # noqa: E402
from .barcoh import cup, ext_dim_oracle, g_action, is_coboundary, is_cocycle, xi_cochain  # noqa: E402
from .lhs import GModule, convergence_check, cyclic_cohomology, e2_page  # noqa: E402

__all__ = [
    "AnickResolution", "GModule", "build_A", "build_B", "build_S", "build_smash",
    "build_smash_p", "chains", "convergence_check", "cup", "cyclic_cohomology", "e2_page",
    "ext_dim_oracle", "ext_dims", "g_action", "is_central", "is_coboundary", "is_cocycle",
    "unipotent_action", "validate_action", "xi_cochain",
]
