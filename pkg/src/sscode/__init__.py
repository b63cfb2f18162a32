"""Constant dimension and projective-space subspace codes over small finite
fields: Ferrers-diagram rank-metric codes, matching-based identifying
vectors, pending-dot constructions, code extension and puncturing."""

from .cdc import CdcCode, Cell, construction_D, lifted_mrd, multicomponent, multilevel
from .constructions import (
    construction_A,
    construction_A_mod,
    construction_B,
    construction_C4,
    construction_C5,
    pending_dots,
)
from .gf import Field, field_new
from .registry import Registry, registry_default
from .subspace import Subspace, from_generator, injection_distance, subspace_distance
from .verify import VerifyReport, verify_distance

__version__ = "0.1.0"

__all__ = [
    "CdcCode",
    "Cell",
    "Field",
    "Registry",
    "Subspace",
    "VerifyReport",
    "construction_A",
    "construction_A_mod",
    "construction_B",
    "construction_C4",
    "construction_C5",
    "construction_D",
    "field_new",
    "from_generator",
    "injection_distance",
    "lifted_mrd",
    "multicomponent",
    "multilevel",
    "pending_dots",
    "registry_default",
    "subspace_distance",
    "verify_distance",
]
