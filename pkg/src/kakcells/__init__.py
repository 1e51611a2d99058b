"""KAK decomposition of two-qubit gates and their fundamental cells."""
from .catalog import GateName, gate_matrix, reference_coords
from .cells import (
    CellKind,
    CellPoint,
    canonicalize,
    canonicalize_P,
    canonicalize_T,
    cell_geometry,
    in_cell,
    locally_equivalent,
    orbit,
    phase_partner_T,
    projective_locally_equivalent,
)
from .config import DEFAULT_TOL, get_tol
from .estimator import KAKTransformer
from .exceptions import (
    DegenerateRecovery,
    KakError,
    MalformedInput,
    NotInAlgebra,
    NotLocal,
    NotUnitary,
    OutOfCell,
)
from .kak import KakDecomposition, kak_decompose, reconstruct
from .lattice import LatticeKind, in_lattice, minimal_positive_period, on_diagram
from .su4 import exp_canonical, factor_local, killing_form, project_su4, su4_basis
from .weyl import WEYL_GROUP, WeylElement, apply, verify_root_system

__version__ = "0.1.0"

__all__ = [
    "CellKind",
    "CellPoint",
    "DEFAULT_TOL",
    "DegenerateRecovery",
    "GateName",
    "KAKTransformer",
    "KakDecomposition",
    "KakError",
    "LatticeKind",
    "MalformedInput",
    "NotInAlgebra",
    "NotLocal",
    "NotUnitary",
    "OutOfCell",
    "WEYL_GROUP",
    "WeylElement",
    "apply",
    "canonicalize",
    "canonicalize_P",
    "canonicalize_T",
    "cell_geometry",
    "exp_canonical",
    "factor_local",
    "gate_matrix",
    "get_tol",
    "in_cell",
    "in_lattice",
    "kak_decompose",
    "killing_form",
    "locally_equivalent",
    "minimal_positive_period",
    "on_diagram",
    "orbit",
    "phase_partner_T",
    "project_su4",
    "projective_locally_equivalent",
    "reconstruct",
    "reference_coords",
    "su4_basis",
    "verify_root_system",
]
