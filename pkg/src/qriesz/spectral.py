"""DFT of biquaternion fields and left/right Fourier multipliers.

Convention: the forward transform is unnormalised with kernel
``exp(-2 pi i k.x / N)`` and the inverse carries ``1/N``.  Both act on the four
complex coefficients independently, which is legitimate because the complex
unit is central.

Self-conjugate bins (every index component in ``{0, N_j/2}``) have no partner
``-xi``.  The Riesz symbol is set to zero there: at DC it is undefined, and at an
unpaired Nyquist bin any nonzero value compatible with real-to-real mapping
would have to be a real quaternion, which breaks orthogonality.  On the other
bins the direction ``xi / |xi|`` is taken with Nyquist coordinates dropped, so
the symbol stays odd across every conjugate pair.  As a result ``H`` annihilates
DC and unpaired Nyquist content, and ``H**2 = I`` holds exactly on
:func:`paired_part` of a field.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .field import Field, GridShape
from .quaternion import bq_mul

__all__ = [
    "FrequencyGrid",
    "SpectralField",
    "Symbol",
    "dft",
    "idft",
    "riesz_value",
    "riesz_symbol",
    "chi_symbols",
    "constant_symbol",
    "apply_symbol",
    "self_conjugate_mask",
    "paired_part",
]


class SpectralField(Field):
    """Frequency-domain samples on the same grid as the spatial field."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"SpectralField(dims={self.shape.dims})"


def _axes(shape: GridShape) -> tuple[int, ...]:
    return tuple(range(1, shape.ndim + 1))


def dft(f: Field) -> SpectralField:
    return SpectralField(np.fft.fftn(f.samples, axes=_axes(f.shape)), f.shape)


def idft(F: SpectralField) -> Field:
    return Field(np.fft.ifftn(F.samples, axes=_axes(F.shape)), F.shape)


@dataclass(frozen=True)
class FrequencyGrid:
    """Signed frequencies ``k_j / (N_j h_j)`` for every bin of a grid.

    ``xi`` has shape ``(d, *dims)``; bin 0 is DC and the Nyquist index of an even
    extent maps to ``-N_j / 2``.
    """

    shape: GridShape

    @property
    def indices(self) -> tuple[np.ndarray, ...]:
        """Signed integer bin indices per axis (1D arrays)."""
        return tuple(
            np.fft.fftfreq(n, d=1.0 / n).round().astype(int) for n in self.shape.dims
        )

    @property
    def xi(self) -> np.ndarray:
        per_axis = [np.fft.fftfreq(n, d=h) for n, h in zip(self.shape.dims, self.shape.spacing)]
        return np.stack(np.meshgrid(*per_axis, indexing="ij"))

    @property
    def self_conjugate(self) -> np.ndarray:
        return self_conjugate_mask(self.shape)

    def negate_index(self, idx: tuple[int, ...]) -> tuple[int, ...]:
        """Bin holding ``-xi`` for the bin at array position ``idx``."""
        return tuple((-i) % n for i, n in zip(idx, self.shape.dims))


def self_conjugate_mask(shape: GridShape) -> np.ndarray:
    """Boolean array, True at bins with ``-xi == xi`` modulo the grid."""
    per_axis = []
    for n in shape.dims:
        k = np.arange(n)
        per_axis.append(((-k) % n) == k)
    grids = np.meshgrid(*per_axis, indexing="ij")
    return np.logical_and.reduce(grids)


@dataclass(frozen=True, eq=False)
class Symbol:
    """A Fourier multiplier sampled on a grid.

    ``values`` has shape ``(4, *dims)``.  ``parity`` records how the symbol
    behaves under ``xi -> -xi`` (``"odd"``, ``"even"`` or ``"mixed"``);
    ``real_preserving`` marks symbols with ``s(-xi) = conj_C(s(xi))`` that map
    real-coefficient fields to real-coefficient fields.
    """

    name: str
    shape: GridShape
    values: np.ndarray
    parity: str
    real_preserving: bool

    def __call__(self, idx: tuple[int, ...]) -> np.ndarray:
        return self.values[(slice(None),) + tuple(idx)]


def riesz_value(xi) -> np.ndarray:
    """``i * (xi_1 i + xi_2 j + xi_3 k) / |xi|`` as four complex coefficients.

    Returns zeros for ``xi = 0``.  Depends only on ``xi / |xi|``.
    """
    xi = np.asarray(xi, dtype=float)
    out = np.zeros(4, dtype=complex)
    r = np.sqrt(np.sum(xi * xi))
    if r > 0:
        out[1 : 1 + xi.size] = 1j * xi / r
    return out


def _nyquist_free_xi(shape: GridShape) -> np.ndarray:
    """Frequencies with every Nyquist coordinate set to zero.

    The sign of a Nyquist coordinate is ambiguous (``N/2 == -N/2`` modulo N), so
    an odd symbol can only be consistent across a conjugate pair if that
    coordinate does not enter its direction.
    """
    xi = FrequencyGrid(shape).xi.copy()
    for axis, n in enumerate(shape.dims):
        if n % 2 == 0:
            idx = [slice(None)] * shape.ndim
            idx[axis] = n // 2
            xi[axis][tuple(idx)] = 0.0
    return xi


@lru_cache(maxsize=32)
def _riesz_values(shape: GridShape) -> np.ndarray:
    xi = _nyquist_free_xi(shape)
    r = np.sqrt(np.sum(xi * xi, axis=0))
    dead = self_conjugate_mask(shape)
    r_safe = np.where(dead, 1.0, r)
    vals = np.zeros((4,) + shape.dims, dtype=complex)
    vals[1 : 1 + shape.ndim] = np.where(dead, 0.0, 1j * xi / r_safe)
    vals.flags.writeable = False
    return vals


def _grid_of(obj) -> GridShape:
    if isinstance(obj, FrequencyGrid):
        return obj.shape
    if isinstance(obj, GridShape):
        return obj
    if isinstance(obj, Field):
        return obj.shape
    return GridShape(tuple(obj))


def riesz_symbol(grid) -> Symbol:
    """Symbol of the Riesz-Hilbert transform, zero at self-conjugate bins."""
    shape = _grid_of(grid)
    return Symbol("riesz", shape, _riesz_values(shape), parity="odd", real_preserving=True)


@lru_cache(maxsize=32)
def _chi_values(shape: GridShape) -> tuple[np.ndarray, np.ndarray]:
    s = _riesz_values(shape)
    plus = 0.5 * s
    minus = -0.5 * s
    plus[0] = minus[0] = 0.5
    plus.flags.writeable = minus.flags.writeable = False
    return plus, minus


def chi_symbols(grid) -> tuple[Symbol, Symbol]:
    """Hardy projection symbols ``(1 +- riesz) / 2``; both equal 1/2 at self-conjugate bins."""
    shape = _grid_of(grid)
    plus, minus = _chi_values(shape)
    return (
        Symbol("chi+", shape, plus, parity="mixed", real_preserving=True),
        Symbol("chi-", shape, minus, parity="mixed", real_preserving=True),
    )


def constant_symbol(grid, value) -> Symbol:
    from .quaternion import as_coeffs

    shape = _grid_of(grid)
    c = as_coeffs(value).reshape((4,) + (1,) * shape.ndim)
    vals = np.broadcast_to(c, (4,) + shape.dims).copy()
    vals.flags.writeable = False
    real = bool(np.all(np.asarray(c).imag == 0))
    return Symbol("constant", shape, vals, parity="even", real_preserving=real)


def apply_symbol(F: SpectralField, s: Symbol, side: str = "left") -> SpectralField:
    """Pointwise product ``s(xi) F(xi)`` (left) or ``F(xi) s(xi)`` (right)."""
    if s.shape.dims != F.shape.dims:
        raise DomainError(f"symbol grid {s.shape.dims} does not match spectrum {F.shape.dims}")
    if side == "left":
        return SpectralField(bq_mul(s.values, F.samples), F.shape)
    if side == "right":
        return SpectralField(bq_mul(F.samples, s.values), F.shape)
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def paired_part(f: Field) -> Field:
    """Remove the content of ``f`` at DC and unpaired Nyquist bins.

    This is the subspace on which ``H`` is an exact involution; for odd extents
    it reduces to removing the mean.
    """
    F = np.fft.fftn(f.samples, axes=_axes(f.shape))
    F[:, self_conjugate_mask(f.shape)] = 0.0
    out = np.fft.ifftn(F, axes=_axes(f.shape))
    if np.all(f.samples.imag == 0):
        # removing self-conjugate bins keeps real data real
        out = out.real
    return Field(out, f.shape)
