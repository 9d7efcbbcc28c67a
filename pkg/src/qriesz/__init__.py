"""Riesz-Hilbert transforms, Hardy projections and monogenic signals on grids."""

from .errors import DomainError, FormatError, QRieszError, SingularParameterError
from .field import Field, GridShape, inner, norm2, random_field, shift
from .io import load_field, read_pgm, read_planes, write_pgm, write_planes
from .monogenic import (
    LocalFeatures,
    MonogenicSignal,
    frac_monogenic,
    local_features,
    monogenic,
    qfrac_monogenic,
    reconstruct_from_frac,
)
from .quaternion import Biquaternion, PureUnitQuaternion, Quaternion, rotate3
from .spectral import (
    FrequencyGrid,
    SpectralField,
    Symbol,
    apply_symbol,
    chi_symbols,
    dft,
    idft,
    paired_part,
    riesz_symbol,
)
from .transforms import (
    Kind,
    TransformSpec,
    apply_spec,
    frac_hilbert,
    hardy_project,
    hilbert,
    qfrac_hilbert,
    semigroup_check,
)

__version__ = "0.1.0"

__all__ = [
    "LocalFeatures",
    "MonogenicSignal",
    "frac_monogenic",
    "local_features",
    "monogenic",
    "qfrac_monogenic",
    "reconstruct_from_frac",
    "FrequencyGrid",
    "SpectralField",
    "Symbol",
    "apply_symbol",
    "chi_symbols",
    "dft",
    "idft",
    "paired_part",
    "riesz_symbol",
    "Kind",
    "TransformSpec",
    "apply_spec",
    "frac_hilbert",
    "hardy_project",
    "hilbert",
    "qfrac_hilbert",
    "semigroup_check",
    "DomainError",
    "FormatError",
    "QRieszError",
    "SingularParameterError",
    "Field",
    "GridShape",
    "inner",
    "norm2",
    "random_field",
    "shift",
    "load_field",
    "read_pgm",
    "read_planes",
    "write_pgm",
    "write_planes",
    "Biquaternion",
    "PureUnitQuaternion",
    "Quaternion",
    "rotate3",
]
