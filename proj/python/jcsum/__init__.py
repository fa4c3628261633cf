"""Atomic inversion of the Jaynes-Cummings model.

Times are lambda*t throughout.
"""

from ._jcsum import (
    DomainError,
    Error,
    InvalidParameter,
    NumericalFailure,
    __version__,
    collapse,
    critical_detuning,
    crossing_times,
    generalized_lambert,
    inversion_contour,
    inversion_exact,
    inversion_saddle,
    lambert_w,
    revival,
    revival_times,
    static_part,
)

__all__ = [
    "DomainError",
    "Error",
    "InvalidParameter",
    "NumericalFailure",
    "__version__",
    "collapse",
    "critical_detuning",
    "crossing_times",
    "generalized_lambert",
    "inversion_contour",
    "inversion_exact",
    "inversion_saddle",
    "lambert_w",
    "revival",
    "revival_times",
    "static_part",
]
