"""Iso-dual algebraic geometry codes over finite fields."""

from .codes import (
    IsoDualCertificate,
    LinearCode,
    build_eab_lift,
    build_hermitian_cover,
    build_hermitian_isodual,
    build_rational_isodual,
    build_tower_step1,
    certify_isodual,
    min_distance,
    param_report,
)
from .field import GF, FieldSpec, make_field
from .linalg import MatGF

__all__ = [
    "GF",
    "FieldSpec",
    "IsoDualCertificate",
    "LinearCode",
    "MatGF",
    "build_eab_lift",
    "build_hermitian_cover",
    "build_hermitian_isodual",
    "build_rational_isodual",
    "build_tower_step1",
    "certify_isodual",
    "make_field",
    "min_distance",
    "param_report",
]
