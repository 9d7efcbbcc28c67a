"""Quaternion-valued fields on periodic grids and their L2 geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .errors import DomainError
from .quaternion import as_coeffs, bq_mul

__all__ = [
    "GridShape",
    "Field",
    "inner",
    "norm2",
    "scale",
    "add",
    "shift",
    "zero_mean",
    "is_real_scalar",
    "random_field",
]


@dataclass(frozen=True)
class GridShape:
    """Extents of a regular periodic grid in one to three dimensions.

    The dimension also fixes which quaternion units carry frequency directions:
    ``i`` for 1D, ``i, j`` for 2D and ``i, j, k`` for 3D.
    """

    dims: tuple[int, ...]
    spacing: tuple[float, ...] = dc_field(default=())

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if not 1 <= len(dims) <= 3:
            raise DomainError(f"grid dimension must be 1, 2 or 3, got {len(dims)}")
        if any(n < 2 for n in dims):
            raise DomainError(f"every grid extent must be >= 2, got {dims}")
        spacing = tuple(float(h) for h in self.spacing) or (1.0,) * len(dims)
        if len(spacing) != len(dims):
            raise DomainError("spacing must give one value per axis")
        if any(not (h > 0 and math.isfinite(h)) for h in spacing):
            raise DomainError(f"grid spacing must be positive, got {spacing}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "spacing", spacing)

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    @property
    def cell_volume(self) -> float:
        """Riemann-sum weight of one sample."""
        return math.prod(self.spacing)


def _as_shape(shape) -> GridShape:
    if isinstance(shape, GridShape):
        return shape
    if isinstance(shape, int):
        return GridShape((shape,))
    return GridShape(tuple(shape))


class Field:
    """Biquaternion samples on a periodic grid.

    ``samples`` has shape ``(4, *dims)`` and complex dtype; entry ``[c]`` holds the
    coefficient of ``1, i, j, k`` for ``c = 0..3``.  The array is read-only, so a
    Field can be shared freely.
    """

    __slots__ = ("shape", "samples")

    def __init__(self, samples, shape: GridShape | Sequence[int] | None = None):
        arr = np.array(samples, dtype=complex)
        if arr.ndim < 2 or arr.shape[0] != 4:
            raise DomainError(f"samples must have shape (4, *dims), got {arr.shape}")
        shape = GridShape(arr.shape[1:]) if shape is None else _as_shape(shape)
        if arr.shape[1:] != shape.dims:
            raise DomainError(
                f"sample array {arr.shape[1:]} does not match grid {shape.dims}"
            )
        arr.flags.writeable = False
        self.shape = shape
        self.samples = arr

    # construction helpers
    @classmethod
    def from_scalar(cls, values, shape=None) -> "Field":
        """Embed a real or complex scalar array as the ``1`` component."""
        values = np.asarray(values)
        samples = np.zeros((4,) + values.shape, dtype=complex)
        samples[0] = values
        return cls(samples, shape)

    @classmethod
    def from_components(cls, q0, q1=None, q2=None, q3=None, shape=None) -> "Field":
        q0 = np.asarray(q0)
        parts = [q0] + [np.zeros_like(q0) if q is None else np.asarray(q) for q in (q1, q2, q3)]
        return cls(np.stack(parts).astype(complex), shape)

    @classmethod
    def zeros(cls, shape) -> "Field":
        shape = _as_shape(shape)
        return cls(np.zeros((4,) + shape.dims, dtype=complex), shape)

    @classmethod
    def constant(cls, value, shape) -> "Field":
        shape = _as_shape(shape)
        c = as_coeffs(value).reshape((4,) + (1,) * shape.ndim)
        return cls(np.broadcast_to(c, (4,) + shape.dims), shape)

    @classmethod
    def delta(cls, shape, at=None) -> "Field":
        shape = _as_shape(shape)
        s = np.zeros((4,) + shape.dims, dtype=complex)
        s[(0,) + tuple(at or (0,) * shape.ndim)] = 1.0
        return cls(s, shape)

    # views
    @property
    def scalar(self) -> np.ndarray:
        return self.samples[0]

    @property
    def vector(self) -> np.ndarray:
        return self.samples[1:]

    @property
    def real(self) -> "Field":
        return Field(self.samples.real, self.shape)

    @property
    def imag(self) -> "Field":
        return Field(self.samples.imag, self.shape)

    def with_samples(self, samples) -> "Field":
        return type(self)(samples, self.shape)

    # arithmetic sugar; the module functions are the reference API
    def __add__(self, other: "Field") -> "Field":
        return add(self, other)

    def __sub__(self, other: "Field") -> "Field":
        return add(self, scale(other, -1.0))

    def __neg__(self) -> "Field":
        return scale(self, -1.0)

    def __mul__(self, q) -> "Field":
        return scale(self, q, side="right")

    def __rmul__(self, q) -> "Field":
        return scale(self, q, side="left")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.shape == other.shape
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Field(dims={self.shape.dims}, spacing={self.shape.spacing})"


def _check_same(f, g) -> None:
    if f.shape != g.shape:
        raise DomainError(f"shape mismatch: {f.shape.dims} vs {g.shape.dims}")


def inner(f, g) -> complex:
    """``Sc sum conj_CH(f(x)) g(x) dx``.

    Conjugate-linear in ``f``; the scalar part of the product collapses to the
    componentwise sum ``sum_j conj(f_j) g_j``.  Also accepts spectral fields.
    """
    _check_same(f, g)
    return complex(np.vdot(f.samples, g.samples)) * f.shape.cell_volume


def norm2(f) -> float:
    return math.sqrt(max(inner(f, f).real, 0.0))


def scale(f: Field, c, side: str = "left") -> Field:
    """Multiply every sample by a constant ``c`` (complex or (bi)quaternion)."""
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    cq = as_coeffs(c).reshape((4,) + (1,) * f.shape.ndim)
    if side == "left":
        return f.with_samples(bq_mul(cq, f.samples))
    return f.with_samples(bq_mul(f.samples, cq))


def add(f: Field, g: Field) -> Field:
    _check_same(f, g)
    return f.with_samples(f.samples + g.samples)


def shift(f: Field, tau: Sequence[int]) -> Field:
    """Cyclic translation ``x -> f(x - tau)``; offsets are taken modulo the extents."""
    tau = tuple(int(t) for t in np.atleast_1d(tau))
    if len(tau) != f.shape.ndim:
        raise DomainError(f"shift needs {f.shape.ndim} offsets, got {len(tau)}")
    axes = tuple(range(1, f.shape.ndim + 1))
    return f.with_samples(np.roll(f.samples, tau, axis=axes))


def zero_mean(f: Field) -> Field:
    """Subtract the per-component mean (removes the DC bin)."""
    axes = tuple(range(1, f.shape.ndim + 1))
    return f.with_samples(f.samples - f.samples.mean(axis=axes, keepdims=True))


def is_real_scalar(f: Field, rtol: float = 0.0) -> bool:
    """True when every sample is a real number (no ``i, j, k`` and no imaginary part)."""
    s = f.samples
    scale_ = max(float(np.max(np.abs(s))), 1.0) if s.size else 1.0
    tol = rtol * scale_
    return bool(np.all(np.abs(s[1:]) <= tol) and np.all(np.abs(s[0].imag) <= tol))


def random_field(shape, rng: np.random.Generator, kind: str = "real-scalar") -> Field:
    """Gaussian random field.

    ``kind`` is ``"real-scalar"``, ``"quaternion"`` (four real components) or
    ``"biquaternion"`` (complex components).
    """
    shape = _as_shape(shape)
    if kind == "real-scalar":
        return Field.from_scalar(rng.standard_normal(shape.dims), shape)
    if kind == "quaternion":
        return Field(rng.standard_normal((4,) + shape.dims), shape)
    if kind == "biquaternion":
        z = rng.standard_normal((4,) + shape.dims) + 1j * rng.standard_normal((4,) + shape.dims)
        return Field(z, shape)
    raise DomainError(f"unknown random field kind {kind!r}")
