"""Monogenic signals of real scalar fields and their local features.

With ``t = pi alpha / 2``, ``Mf = f + Hf`` and

* ``frac_monogenic(f, alpha)      = f - exp(i t) frac_hilbert(f, alpha, "script")``
  which equals ``-i sin(t) exp(i t) Mf``;
* ``qfrac_monogenic(f, alpha, u)  = f - qfrac_hilbert(f, alpha, u, "script") exp(u t)``
  which equals ``Mf sin(t) (sin(t) - cos(t) u)``.

Both are 2-periodic in ``alpha`` and have pointwise modulus ``|sin t| |Mf|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularParameterError
from .field import Field, is_real_scalar, scale
from .quaternion import qexp_pure
from .transforms import Kind, TransformSpec, _as_axis, frac_hilbert, hilbert, qfrac_hilbert

__all__ = [
    "MonogenicSignal",
    "LocalFeatures",
    "monogenic",
    "frac_monogenic",
    "qfrac_monogenic",
    "frac_monogenic_factor",
    "qfrac_monogenic_factor",
    "reconstruct_from_frac",
    "local_features",
]

# inputs are accepted as real-scalar when the stray parts are below this
# fraction of the largest sample
_REAL_RTOL = 1e-12


@dataclass(frozen=True)
class MonogenicSignal:
    """A (fractional) monogenic signal together with the spec that produced it."""

    field: Field
    spec: TransformSpec

    @property
    def samples(self) -> np.ndarray:
        return self.field.samples


def _require_real(f: Field) -> None:
    if not is_real_scalar(f, rtol=_REAL_RTOL):
        raise DomainError("monogenic signals are defined for real scalar fields only")


def monogenic(f: Field, *, hf: Field | None = None) -> MonogenicSignal:
    """``Mf = f + Hf`` for a real scalar field ``f``."""
    _require_real(f)
    hf = hilbert(f) if hf is None else hf
    return MonogenicSignal(f + hf, TransformSpec(Kind.M))


def frac_monogenic(f: Field, alpha: float, *, hf: Field | None = None) -> MonogenicSignal:
    """``f - exp(i pi alpha/2) frac_hilbert(f, alpha, "script")``."""
    _require_real(f)
    t = 0.5 * math.pi * alpha
    sf = frac_hilbert(f, alpha, "script", hf=hf)
    out = f.samples - np.exp(1j * t) * sf.samples
    return MonogenicSignal(f.with_samples(out), TransformSpec(Kind.FRAC_M, alpha))


def qfrac_monogenic(f: Field, alpha: float, u, *, hf: Field | None = None) -> MonogenicSignal:
    """``f - qfrac_hilbert(f, alpha, u, "script") exp(u pi alpha/2)``."""
    _require_real(f)
    u = _as_axis(u)
    t = 0.5 * math.pi * alpha
    sf = qfrac_hilbert(f, alpha, u, "script", hf=hf)
    out = f - scale(sf, qexp_pure(u, t), side="right")
    return MonogenicSignal(out, TransformSpec(Kind.QFRAC_M, alpha, u))


def frac_monogenic_factor(alpha: float) -> complex:
    """Complex constant ``c`` with ``frac_monogenic(f, alpha) = c Mf``."""
    t = 0.5 * math.pi * alpha
    return -1j * math.sin(t) * complex(math.cos(t), math.sin(t))


def qfrac_monogenic_factor(alpha: float, u):
    """Quaternion ``q`` with ``qfrac_monogenic(f, alpha, u) = (Mf) q``."""
    u = _as_axis(u)
    c, s = math.cos(0.5 * math.pi * alpha), math.sin(0.5 * math.pi * alpha)
    return s * (s - c * u)


def _sin_checked(alpha: float) -> float:
    half = 0.5 * alpha
    if abs(half - round(half)) <= 1e-12:
        raise SingularParameterError(
            f"alpha = {alpha!r} is an even integer: sin(pi alpha/2) = 0, cot/csc undefined"
        )
    return math.sin(0.5 * math.pi * alpha)


def reconstruct_from_frac(
    f: Field,
    g: Field | None,
    alpha: float,
    variant: str = "frac",
    u=None,
) -> Field:
    """Recover ``Mf`` from ``f`` and its plain fractional transform ``g``.

    ``frac``:  ``Mf = (1 + i cot t) f - i csc t exp(i t) g``  with ``g = H^alpha f``
    ``qfrac``: ``Mf = f + cot t f u - csc t g exp(u t) u``    with ``g = H^(u alpha) f``

    ``g`` is computed from ``f`` when None.  Raises
    :class:`SingularParameterError` when ``alpha`` is an even integer.
    """
    s = _sin_checked(alpha)
    t = 0.5 * math.pi * alpha
    c = math.cos(t)
    if variant == "frac":
        g = frac_hilbert(f, alpha, "plain") if g is None else g
        out = (1 + 1j * c / s) * f.samples - (1j / s) * np.exp(1j * t) * g.samples
        return f.with_samples(out)
    if variant == "qfrac":
        if u is None:
            raise DomainError("qfrac reconstruction needs an axis")
        u = _as_axis(u)
        g = qfrac_hilbert(f, alpha, u, "plain") if g is None else g
        fu = scale(f, u, side="right")
        gq = scale(g, qexp_pure(u, t) * u, side="right")
        return f.with_samples(f.samples + (c / s) * fu.samples - (1.0 / s) * gq.samples)
    raise DomainError(f"variant must be 'frac' or 'qfrac', got {variant!r}")


@dataclass(frozen=True)
class LocalFeatures:
    """Pointwise amplitude, phase in ``[0, pi]`` and orientation.

    ``orientation`` has shape ``(3, *dims)`` and is NaN where ``defined`` is False.
    """

    amplitude: np.ndarray
    phase: np.ndarray
    orientation: np.ndarray
    defined: np.ndarray

    @property
    def orientation_angle(self) -> np.ndarray:
        """In-plane angle ``atan2(o_j, o_i)`` of the orientation (NaN if undefined)."""
        return np.arctan2(self.orientation[1], self.orientation[0])


def local_features(m) -> LocalFeatures:
    """Split a quaternion-valued signal into amplitude, phase and orientation.

    Phase is ``atan2(|Vec m|, Sc m)`` with the sign carried by the orientation
    ``Vec m / |Vec m|``.  Orientation is undefined where ``|Vec m|`` is below
    ``1e-12`` times the largest amplitude.  For complex-valued signals the
    amplitude uses all eight real coordinates and phase/orientation use the
    real part.
    """
    field = m.field if isinstance(m, MonogenicSignal) else m
    s = field.samples
    amplitude = np.sqrt(np.sum(np.abs(s) ** 2, axis=0))
    q = s.real
    vnorm = np.sqrt(np.sum(q[1:] ** 2, axis=0))
    phase = np.arctan2(vnorm, q[0])
    eps = 1e-12 * float(amplitude.max()) if amplitude.size else 0.0
    defined = vnorm > eps
    with np.errstate(invalid="ignore", divide="ignore"):
        orientation = np.where(defined, q[1:] / np.where(defined, vnorm, 1.0), np.nan)
    return LocalFeatures(amplitude, phase, orientation, defined)
