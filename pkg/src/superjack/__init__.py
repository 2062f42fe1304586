"""Exact computer algebra for Jack superpolynomials and N=1 super-Virasoro singular vectors."""

from .exactfield import FieldElement, PoleError, ReconstructionError
from .superpartition import Partition, Superpartition, superpartitions
from .superpoly import FinitePoly, SymFunc
from .sjack import JackRecord, c_norm, jack
from .fockspace import CftParams, FockVector, ModeMonomial, cft_params
from .singvec import SingularVectorReport, build_chi, verify_chi
from .clustering import B_apply, conjecture_b1_verify, pfaffian_identity_check

__version__ = "0.1.0"

__all__ = [
    "FieldElement", "PoleError", "ReconstructionError", "Partition", "Superpartition",
    "superpartitions", "FinitePoly", "SymFunc", "JackRecord", "jack", "c_norm", "CftParams",
    "FockVector", "ModeMonomial", "cft_params", "SingularVectorReport", "build_chi", "verify_chi",
    "B_apply", "conjecture_b1_verify", "pfaffian_identity_check",
]
