"""Riesz-Hilbert transform, Hardy projections and the fractional families.

Notation used below, with ``t = pi * alpha / 2``:

* ``frac_hilbert(f, alpha, "script")  = cos(t) f + i sin(t) Hf``  (``i`` central)
* ``frac_hilbert(f, alpha, "plain")   = exp(-i t) * script``
* ``qfrac_hilbert(f, alpha, u, "script") = cos(t) f + sin(t) (Hf) u``
* ``qfrac_hilbert(f, alpha, u, "plain")  = (script) exp(-u t)``

The script families are 4-periodic in ``alpha``, the plain ones 2-periodic.
Identities involving ``H**2 = I`` hold on fields without DC or unpaired Nyquist
content (see :func:`qriesz.spectral.paired_part`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .field import Field, norm2, scale
from .quaternion import PureUnitQuaternion, Quaternion, qexp_pure
from .spectral import apply_symbol, dft, idft, riesz_symbol

__all__ = [
    "Kind",
    "TransformSpec",
    "hilbert",
    "hardy_project",
    "frac_hilbert",
    "qfrac_hilbert",
    "semigroup_check",
    "apply_spec",
]


class Kind(str, enum.Enum):
    H = "H"
    PPLUS = "Pplus"
    PMINUS = "Pminus"
    FRAC_H = "FracH"
    FRAC_SCRIPT_H = "FracScriptH"
    QFRAC_H = "QFracH"
    QFRAC_SCRIPT_H = "QFracScriptH"
    M = "M"
    FRAC_M = "FracM"
    QFRAC_M = "QFracM"


@dataclass(frozen=True)
class TransformSpec:
    """Which operator to apply, with its order ``alpha`` and axis ``u``."""

    kind: Kind
    alpha: float = 0.0
    axis: PureUnitQuaternion | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not math.isfinite(self.alpha):
            raise DomainError(f"alpha must be finite, got {self.alpha!r}")
        if self.kind in (Kind.QFRAC_H, Kind.QFRAC_SCRIPT_H, Kind.QFRAC_M):
            if self.axis is None:
                raise DomainError(f"{self.kind.value} needs an axis")
            object.__setattr__(self, "axis", _as_axis(self.axis))


def _as_axis(u) -> PureUnitQuaternion:
    if isinstance(u, PureUnitQuaternion):
        return u
    if isinstance(u, Quaternion):
        if u.q0 != 0.0:
            raise DomainError("axis must be a pure quaternion")
        return PureUnitQuaternion(u.q1, u.q2, u.q3)
    return PureUnitQuaternion(*u)


def hilbert(f: Field) -> Field:
    """Riesz-Hilbert transform: left multiplier ``i xi / |xi|`` in Fourier space."""
    out = idft(apply_symbol(dft(f), riesz_symbol(f.shape), side="left"))
    if np.all(f.samples.imag == 0):
        # the symbol is real-preserving; drop the round-off imaginary part
        out = out.with_samples(out.samples.real)
    return out


def hardy_project(f: Field, sign: int | str = +1) -> Field:
    """``P+ f = (f + Hf)/2`` or ``P- f = (f - Hf)/2``."""
    s = _sign(sign)
    hf = hilbert(f)
    return f.with_samples(0.5 * (f.samples + s * hf.samples))


def _sign(sign) -> int:
    if sign in (+1, "+", "plus"):
        return +1
    if sign in (-1, "-", "minus"):
        return -1
    raise DomainError(f"sign must be +1 or -1, got {sign!r}")


def _check_variant(variant: str) -> None:
    if variant not in ("plain", "script"):
        raise DomainError(f"variant must be 'plain' or 'script', got {variant!r}")


def _cs(alpha: float) -> tuple[float, float]:
    t = 0.5 * math.pi * alpha
    return math.cos(t), math.sin(t)


def frac_hilbert(f: Field, alpha: float, variant: str = "script", *, hf: Field | None = None) -> Field:
    """Fractional Riesz-Hilbert transform of order ``alpha``.

    ``hf`` may carry a precomputed ``hilbert(f)``.
    """
    _check_variant(variant)
    c, s = _cs(alpha)
    hf = hilbert(f) if hf is None else hf
    out = c * f.samples + (1j * s) * hf.samples
    if variant == "plain":
        out = np.exp(-0.5j * math.pi * alpha) * out
    return f.with_samples(out)


def qfrac_hilbert(
    f: Field, alpha: float, u, variant: str = "script", *, hf: Field | None = None
) -> Field:
    """Quaternionic fractional Riesz-Hilbert transform about the axis ``u``.

    The plain variant right-multiplies every sample by ``exp(-u pi alpha / 2)``,
    a right-isoclinic rotation of each sample's four real coordinates.
    """
    _check_variant(variant)
    u = _as_axis(u)
    c, s = _cs(alpha)
    hf = hilbert(f) if hf is None else hf
    out = f.with_samples(c * f.samples + s * scale(hf, u, side="right").samples)
    if variant == "plain":
        out = scale(out, qexp_pure(u, -0.5 * math.pi * alpha), side="right")
    return out


def semigroup_check(
    alpha: float,
    beta: float,
    f: Field,
    kind: str = "frac",
    u=None,
    variant: str = "script",
) -> float:
    """Relative residual ``||T^a T^b f - T^(a+b) f|| / ||f||``."""
    if kind == "frac":
        op = lambda g, a: frac_hilbert(g, a, variant)  # noqa: E731
    elif kind == "qfrac":
        if u is None:
            raise DomainError("qfrac semigroup check needs an axis")
        op = lambda g, a: qfrac_hilbert(g, a, u, variant)  # noqa: E731
    else:
        raise DomainError(f"kind must be 'frac' or 'qfrac', got {kind!r}")
    nf = norm2(f)
    if nf == 0.0:
        return 0.0
    lhs = op(op(f, beta), alpha)
    rhs = op(f, alpha + beta)
    return norm2(lhs - rhs) / nf


def apply_spec(f: Field, spec: TransformSpec) -> Field:
    """Apply the operator described by ``spec`` to ``f``."""
    k = spec.kind
    if k is Kind.H:
        return hilbert(f)
    if k is Kind.PPLUS:
        return hardy_project(f, +1)
    if k is Kind.PMINUS:
        return hardy_project(f, -1)
    if k is Kind.FRAC_H:
        return frac_hilbert(f, spec.alpha, "plain")
    if k is Kind.FRAC_SCRIPT_H:
        return frac_hilbert(f, spec.alpha, "script")
    if k is Kind.QFRAC_H:
        return qfrac_hilbert(f, spec.alpha, spec.axis, "plain")
    if k is Kind.QFRAC_SCRIPT_H:
        return qfrac_hilbert(f, spec.alpha, spec.axis, "script")
    if k in (Kind.M, Kind.FRAC_M, Kind.QFRAC_M):
        from .monogenic import frac_monogenic, monogenic, qfrac_monogenic

        if k is Kind.M:
            return monogenic(f).field
        if k is Kind.FRAC_M:
            return frac_monogenic(f, spec.alpha).field
        return qfrac_monogenic(f, spec.alpha, spec.axis).field
    raise DomainError(f"unsupported transform kind {k!r}")
