"""Real quaternions, complexified quaternions (biquaternions) and rotations.

Two layers live here:

* small immutable scalar types (:class:`Quaternion`, :class:`PureUnitQuaternion`,
  :class:`Biquaternion`) used for constants such as rotation axes, and
* array kernels (:func:`bq_mul`, :func:`bq_conj`, ...) that operate on arrays whose
  leading axis holds the four coefficients of ``1, i, j, k``.  Fields and spectra
  are stored that way.

The complex unit of a biquaternion is central: it commutes with ``i, j, k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Complex, Real
from typing import Union

import numpy as np

from .errors import DomainError

__all__ = [
    "Quaternion",
    "PureUnitQuaternion",
    "Biquaternion",
    "qmul",
    "qconj",
    "qnorm",
    "qinv",
    "qexp_pure",
    "rotate3",
    "right_mul",
    "left_mul",
    "bq_mul",
    "bq_conj",
    "bq_conj_ch",
    "as_coeffs",
    "UNIT_TOL",
]

#: Relative tolerance on |q| = 1 for rotation inputs and axes.
UNIT_TOL = 1e-9


def _hamilton(a, b):
    """Hamilton product of two coefficient 4-sequences (scalars or arrays)."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@dataclass(frozen=True)
class Quaternion:
    """Real quaternion ``q0 + q1 i + q2 j + q3 k``."""

    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def sc(self) -> "Quaternion":
        return Quaternion(self.q0)

    @property
    def vec(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> float:
        return math.sqrt(self.q0**2 + self.q1**2 + self.q2**2 + self.q3**2)

    def inv(self) -> "Quaternion":
        n2 = self.q0**2 + self.q1**2 + self.q2**2 + self.q3**2
        if n2 == 0.0:
            raise DomainError("cannot invert the zero quaternion")
        return Quaternion(*(c / n2 for c in self.conj().coeffs))

    def is_pure(self, tol: float = 0.0) -> bool:
        return abs(self.q0) <= tol

    def __add__(self, other):
        other = _coerce(other)
        if isinstance(other, Biquaternion):
            return Biquaternion(*self.coeffs) + other
        return Quaternion(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(*(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Quaternion(*(c * other for c in self.coeffs))
        if isinstance(other, Complex):
            return Biquaternion(*(c * other for c in self.coeffs))
        if isinstance(other, Biquaternion):
            return Biquaternion(*_hamilton(self.coeffs, other.coeffs))
        if isinstance(other, Quaternion):
            return Quaternion(*_hamilton(self.coeffs, other.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        # only scalars reach here; they are central
        if isinstance(other, Complex):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Complex):
            return self * (1.0 / other)
        return NotImplemented

    def isclose(self, other, tol: float = 1e-12) -> bool:
        other = _coerce(other)
        return all(abs(a - b) <= tol for a, b in zip(self.coeffs, other.coeffs))

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Quaternion({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"


class PureUnitQuaternion(Quaternion):
    """Pure quaternion ``u1 i + u2 j + u3 k`` of unit length.

    The norm is checked to :data:`UNIT_TOL` (relative); it is not silently
    renormalised.  Use :meth:`from_vector` to normalise an arbitrary direction.
    """

    def __init__(self, u1: float, u2: float, u3: float):
        super().__init__(0.0, u1, u2, u3)

    def __post_init__(self):
        super().__post_init__()
        n = math.sqrt(self.q1**2 + self.q2**2 + self.q3**2)
        if not math.isfinite(n) or abs(n - 1.0) > UNIT_TOL:
            raise DomainError(f"axis is not a unit vector (|u| = {n!r})")

    @classmethod
    def from_vector(cls, v) -> "PureUnitQuaternion":
        x, y, z = (float(c) for c in v)
        n = math.sqrt(x * x + y * y + z * z)
        if not (math.isfinite(n) and n > 0.0):
            raise DomainError("axis must be a finite nonzero 3-vector")
        return cls(x / n, y / n, z / n)

    @property
    def u(self) -> tuple[float, float, float]:
        return (self.q1, self.q2, self.q3)

    def inv(self) -> Quaternion:
        return -Quaternion(*self.coeffs)

    def __repr__(self) -> str:
        return f"PureUnitQuaternion({self.q1!r}, {self.q2!r}, {self.q3!r})"


@dataclass(frozen=True)
class Biquaternion:
    """Quaternion with complex coefficients; the complex unit is central."""

    c0: complex = 0j
    c1: complex = 0j
    c2: complex = 0j
    c3: complex = 0j

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def coeffs(self) -> tuple[complex, complex, complex, complex]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def sc(self) -> complex:
        return self.c0

    def conj_q(self) -> "Biquaternion":
        """Quaternionic conjugation only."""
        return Biquaternion(self.c0, -self.c1, -self.c2, -self.c3)

    def conj_c(self) -> "Biquaternion":
        """Complex conjugation of every coefficient only."""
        return Biquaternion(*(c.conjugate() for c in self.coeffs))

    def conj_ch(self) -> "Biquaternion":
        """Combined complex and quaternionic conjugation (an anti-automorphism)."""
        c = self.conj_c()
        return Biquaternion(c.c0, -c.c1, -c.c2, -c.c3)

    def norm(self) -> float:
        """Euclidean norm of the eight real coordinates."""
        return math.sqrt(sum(abs(c) ** 2 for c in self.coeffs))

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(c.imag) <= tol for c in self.coeffs)

    def real(self) -> Quaternion:
        return Quaternion(*(c.real for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        return Biquaternion(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Biquaternion(*(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, Complex):
            return Biquaternion(*(c * other for c in self.coeffs))
        if isinstance(other, (Quaternion, Biquaternion)):
            return Biquaternion(*_hamilton(self.coeffs, other.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Complex):
            return self * other
        if isinstance(other, Quaternion):
            return Biquaternion(*_hamilton(other.coeffs, self.coeffs))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Complex):
            return self * (1.0 / other)
        return NotImplemented

    def isclose(self, other, tol: float = 1e-12) -> bool:
        other = _coerce(other)
        return all(abs(a - b) <= tol for a, b in zip(self.coeffs, other.coeffs))

    def __iter__(self):
        return iter(self.coeffs)


QuatLike = Union[Quaternion, Biquaternion, complex, float]


def _coerce(x) -> Quaternion | Biquaternion:
    if isinstance(x, (Quaternion, Biquaternion)):
        return x
    if isinstance(x, Real):
        return Quaternion(float(x))
    if isinstance(x, Complex):
        return Biquaternion(complex(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as a quaternion")


def as_coeffs(x) -> np.ndarray:
    """Coefficient vector (shape ``(4,)``, complex) of a scalar or quaternion."""
    q = _coerce(x)
    return np.array(q.coeffs, dtype=complex)


# -- scalar operations -------------------------------------------------------


def qmul(a, b):
    """Hamilton product ``a b`` (not commutative)."""
    return _coerce(a) * _coerce(b)


def qconj(q):
    q = _coerce(q)
    return q.conj() if isinstance(q, Quaternion) else q.conj_q()


def qnorm(q) -> float:
    return _coerce(q).norm()


def qinv(q: Quaternion) -> Quaternion:
    """Inverse ``conj(q) / |q|**2``; raises :class:`DomainError` for ``q = 0``."""
    return _coerce(q).inv()


def qexp_pure(u: PureUnitQuaternion, phi: float) -> Quaternion:
    """``exp(u phi) = cos(phi) + u sin(phi)`` for a pure unit ``u``."""
    s = math.sin(phi)
    return Quaternion(math.cos(phi), u.q1 * s, u.q2 * s, u.q3 * s)


def rotate3(q: Quaternion, x: Quaternion) -> Quaternion:
    """Rotate the pure quaternion ``x`` by ``q x conj(q)``.

    With ``q = exp(u phi)`` this turns the plane orthogonal to ``u`` through
    ``2 phi`` and fixes ``u``.
    """
    q = _coerce(q)
    x = _coerce(x)
    n = q.norm()
    if abs(n - 1.0) > UNIT_TOL:
        raise DomainError(f"rotation quaternion is not unit (|q| = {n!r})")
    if not x.is_pure(tol=1e-12 * max(1.0, x.norm())):
        raise DomainError("rotate3 expects a pure quaternion argument")
    y = q * x * q.conj()
    # the scalar part is rounding noise by construction
    return Quaternion(0.0, y.q1, y.q2, y.q3)


def right_mul(q, value):
    """Right multiplication operator ``R(q)``: ``value -> value q``."""
    return _coerce(value) * _coerce(q)


def left_mul(q, value):
    """Left multiplication operator ``L(q)``: ``value -> q value``."""
    return _coerce(q) * _coerce(value)


# -- array kernels -----------------------------------------------------------


def bq_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pointwise biquaternion product of coefficient arrays (leading axis 4).

    Shapes broadcast after the leading axis, so a ``(4,)`` constant may
    multiply a ``(4, n1, n2)`` field from either side.
    """
    return np.stack(np.broadcast_arrays(*_hamilton(a, b)))


def bq_conj(a: np.ndarray) -> np.ndarray:
    """Quaternionic conjugation of a coefficient array."""
    out = np.array(a, copy=True)
    out[1:] *= -1
    return out


def bq_conj_ch(a: np.ndarray) -> np.ndarray:
    """Complex and quaternionic conjugation of a coefficient array."""
    return bq_conj(np.conj(a))
