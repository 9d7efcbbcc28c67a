"""Machine-checkable operator identities, run on one input field.

Each :class:`Property` computes a residual and compares it to a tolerance.  A
property may declare requirements on the input:

``paired``  the field has no DC or unpaired Nyquist content (``H**2 = I`` there)
``real``    the field is real scalar (orthogonality and monogenic identities)

:func:`run_properties` skips a property, with a reason, when its requirements
are not met.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Callable

import numpy as np

from .field import Field, GridShape, inner, is_real_scalar, norm2, random_field, shift
from .monogenic import (
    frac_monogenic,
    frac_monogenic_factor,
    monogenic,
    qfrac_monogenic,
    qfrac_monogenic_factor,
    reconstruct_from_frac,
)
from .quaternion import PureUnitQuaternion
from .spectral import dft, idft, paired_part, riesz_symbol, riesz_value, self_conjugate_mask
from .transforms import frac_hilbert, hardy_project, hilbert, qfrac_hilbert, semigroup_check

__all__ = ["Context", "Property", "Result", "PROPERTIES", "make_context", "run_properties", "format_report"]

TOL = 1e-11


@dataclass
class Context:
    f: Field
    alpha: float
    beta: float
    axis: PureUnitQuaternion
    rng: np.random.Generator
    _cache: dict = dc_field(default_factory=dict)

    @property
    def nf(self) -> float:
        return norm2(self.f)

    def hf(self) -> Field:
        if "hf" not in self._cache:
            self._cache["hf"] = hilbert(self.f)
        return self._cache["hf"]

    def partner(self) -> Field:
        """A real paired field orthogonal to ``f``, same grid."""
        if "g" not in self._cache:
            g = paired_part(random_field(self.f.shape, self.rng))
            c = inner(self.f, g) / inner(self.f, self.f)
            self._cache["g"] = g.with_samples((g.samples - c * self.f.samples).real)
        return self._cache["g"]

    def quaternion_partner(self) -> Field:
        if "q" not in self._cache:
            self._cache["q"] = random_field(self.f.shape, self.rng, "biquaternion")
        return self._cache["q"]


@dataclass(frozen=True)
class Property:
    name: str
    tag: str
    tolerance: float
    check: Callable[[Context], float]
    requires: frozenset = frozenset()
    lower_bound: bool = False  # pass when the value is >= tolerance instead


@dataclass(frozen=True)
class Result:
    name: str
    tag: str
    value: float
    tolerance: float
    status: str  # PASS, FAIL or SKIP
    reason: str = ""


def _rel(a: Field, b: Field, ref: float) -> float:
    return norm2(a - b) / ref if ref > 0 else norm2(a - b)


# -- individual checks -------------------------------------------------------


def _dft_roundtrip(c: Context) -> float:
    return _rel(idft(dft(c.f)), c.f, c.nf)


def _parseval(c: Context) -> float:
    q = c.quaternion_partner()
    lhs = inner(c.f, q)
    rhs = inner(dft(c.f), dft(q)) / c.f.shape.size
    return abs(lhs - rhs) / (c.nf * norm2(q))


def _realness(c: Context) -> float:
    out = idft(_left_riesz(c.f))
    return float(np.max(np.abs(out.samples.imag))) / c.nf


def _left_riesz(f: Field):
    from .spectral import apply_symbol

    return apply_symbol(dft(f), riesz_symbol(f.shape), side="left")


def _shift_invariance(c: Context) -> float:
    tau = tuple(range(1, c.f.shape.ndim + 1))
    return _rel(hilbert(shift(c.f, tau)), shift(c.hf(), tau), c.nf)


def _symbol_homogeneity(c: Context) -> float:
    worst = 0.0
    for xi in np.random.default_rng(7).standard_normal((16, c.f.shape.ndim)):
        for sigma in (1e-3, 0.5, 3.0, 1e4):
            worst = max(worst, float(np.max(np.abs(riesz_value(xi) - riesz_value(sigma * xi)))))
    grid2 = GridShape(c.f.shape.dims, tuple(2.5 * h for h in c.f.shape.spacing))
    worst = max(worst, float(np.max(np.abs(riesz_symbol(c.f.shape).values - riesz_symbol(grid2).values))))
    return worst


def _involution(c: Context) -> float:
    return _rel(hilbert(c.hf()), c.f, c.nf)


def _plemelj_sum(c: Context) -> float:
    return _rel(hardy_project(c.f, +1) + hardy_project(c.f, -1), c.f, c.nf)


def _plemelj_idempotent(c: Context) -> float:
    worst = 0.0
    for s in (+1, -1):
        p = hardy_project(c.f, s)
        worst = max(worst, _rel(hardy_project(p, s), p, c.nf))
    return worst


def _plemelj_difference(c: Context) -> float:
    return _rel(hardy_project(c.f, +1) - hardy_project(c.f, -1), c.hf(), c.nf)


def _self_adjoint(c: Context) -> float:
    q = c.quaternion_partner()
    return abs(inner(c.hf(), q) - inner(c.f, hilbert(q))) / (c.nf * norm2(q))


def _energy(c: Context) -> float:
    q = paired_part(c.quaternion_partner())
    return abs(inner(c.hf(), hilbert(q)) - inner(c.f, q)) / (c.nf * norm2(q))


def _orthogonality_1(c: Context) -> float:
    return abs(inner(c.f, c.hf())) / c.nf**2


def _orthogonality_2(c: Context) -> float:
    g = c.partner()
    return abs(inner(c.hf(), hilbert(g))) / (c.nf * norm2(g))


def _frac_table(c: Context) -> float:
    f, hf = c.f, c.hf()
    table = [
        (0, "script", f),
        (1, "script", hf * 1j),
        (2, "script", -f),
        (3, "script", hf * -1j),
        (4, "script", f),
        (2, "plain", f),
        (3, "plain", hf),
    ]
    return max(_rel(frac_hilbert(f, a, v, hf=hf), want, c.nf) for a, v, want in table)


def _frac_inverse(c: Context) -> float:
    a = c.alpha
    worst = 0.0
    for v in ("plain", "script"):
        worst = max(worst, _rel(frac_hilbert(frac_hilbert(c.f, -a, v), a, v), c.f, c.nf))
        worst = max(
            worst, _rel(qfrac_hilbert(qfrac_hilbert(c.f, -a, c.axis, v), a, c.axis, v), c.f, c.nf)
        )
    return worst


def _periodicity(c: Context) -> float:
    a, f, u = c.alpha, c.f, c.axis
    pairs = [
        (frac_hilbert(f, a + 2, "plain"), frac_hilbert(f, a, "plain")),
        (frac_hilbert(f, a + 4, "script"), frac_hilbert(f, a, "script")),
        (qfrac_hilbert(f, a + 2, u, "plain"), qfrac_hilbert(f, a, u, "plain")),
        (qfrac_hilbert(f, a + 4, u, "script"), qfrac_hilbert(f, a, u, "script")),
    ]
    return max(_rel(x, y, c.nf) for x, y in pairs)


def _semigroup_frac(c: Context) -> float:
    return max(semigroup_check(c.alpha, c.beta, c.f, "frac", None, v) for v in ("plain", "script"))


def _semigroup_qfrac(c: Context) -> float:
    return max(semigroup_check(c.alpha, c.beta, c.f, "qfrac", c.axis, v) for v in ("plain", "script"))


def _continuity(c: Context) -> float:
    """Ratio of ``||T^a f - f||`` to the bound ``(|cos - 1| + |sin|) ||f||`` at a = 1e-6."""
    a = 1e-6
    t = 0.5 * math.pi * a
    bound = (abs(math.cos(t) - 1) + abs(math.sin(t))) * c.nf
    return max(
        norm2(frac_hilbert(c.f, a, "script") - c.f) / bound,
        norm2(qfrac_hilbert(c.f, a, c.axis, "script") - c.f) / bound,
    )


def _frac_orthogonality(c: Context) -> float:
    g = c.partner()
    ng = norm2(g)
    worst = 0.0
    for v in ("plain", "script"):
        x, y = frac_hilbert(c.f, c.alpha, v), frac_hilbert(g, c.alpha, v)
        worst = max(worst, abs(inner(x, y)) / (c.nf * ng))
        x, y = qfrac_hilbert(c.f, c.alpha, c.axis, v), qfrac_hilbert(g, c.alpha, c.axis, v)
        worst = max(worst, abs(inner(x, y)) / (c.nf * ng))
    return worst


def _membership(c: Context) -> float:
    m = monogenic(c.f, hf=c.hf()).field
    return _rel(hilbert(m), m, norm2(m))


def _norm_law(c: Context) -> float:
    mf = norm2(monogenic(c.f, hf=c.hf()).field)
    worst = 0.0
    for a in (0.25, 0.5, 1.0, 1.5, c.alpha):
        want = abs(math.sin(0.5 * math.pi * a)) * mf
        worst = max(worst, abs(norm2(frac_monogenic(c.f, a, hf=c.hf()).field) - want) / mf)
        worst = max(worst, abs(norm2(qfrac_monogenic(c.f, a, c.axis, hf=c.hf()).field) - want) / mf)
    return worst


def _proportionality(c: Context) -> float:
    m = monogenic(c.f, hf=c.hf()).field
    nm = norm2(m)
    a, u = c.alpha, c.axis
    return max(
        _rel(frac_monogenic(c.f, a, hf=c.hf()).field, m * frac_monogenic_factor(a), nm),
        _rel(qfrac_monogenic(c.f, a, u, hf=c.hf()).field, m * qfrac_monogenic_factor(a, u), nm),
    )


def _reconstruction(c: Context) -> float:
    m = monogenic(c.f, hf=c.hf()).field
    nm = norm2(m)
    worst = 0.0
    for a in (0.3, 0.7, 1.0, c.alpha):
        worst = max(worst, _rel(reconstruct_from_frac(c.f, None, a, "frac"), m, nm))
        worst = max(worst, _rel(reconstruct_from_frac(c.f, None, a, "qfrac", c.axis), m, nm))
    return worst


def _non_orthogonality(c: Context) -> float:
    """``|<f, M^a f>| / ||f||**2``; must stay above the tolerance."""
    return abs(inner(c.f, frac_monogenic(c.f, c.alpha, hf=c.hf()).field)) / c.nf**2


P, R = "paired", "real"

PROPERTIES: tuple[Property, ...] = (
    Property("dft-roundtrip", "spectral", 1e-12, _dft_roundtrip),
    Property("parseval", "spectral", 1e-12, _parseval),
    Property("realness", "spectral", 1e-12, _realness, frozenset({R})),
    Property("shift-invariance", "riesz", 1e-12, _shift_invariance),
    Property("symbol-homogeneity", "riesz/scale-invariance", 1e-14, _symbol_homogeneity),
    Property("involution", "riesz/self-reversibility", TOL, _involution, frozenset({P})),
    Property("plemelj-sum", "hardy/plemelj", 1e-15, _plemelj_sum),
    Property("plemelj-idempotent", "hardy/plemelj", TOL, _plemelj_idempotent, frozenset({P})),
    Property("plemelj-difference", "hardy/plemelj", TOL, _plemelj_difference),
    Property("self-adjoint", "riesz/lemma", TOL, _self_adjoint),
    Property("energy", "riesz/energy-preservation", TOL, _energy, frozenset({P})),
    Property("orthogonality-1", "riesz/orthogonality", TOL, _orthogonality_1, frozenset({R})),
    Property("orthogonality-2", "riesz/orthogonality", TOL, _orthogonality_2, frozenset({R, P})),
    Property("frac-table", "fractional/examples", TOL, _frac_table, frozenset({P})),
    Property("frac-inverse", "fractional/inverse", TOL, _frac_inverse, frozenset({P})),
    Property("frac-periodicity", "fractional/periodicity", TOL, _periodicity),
    Property("semigroup-frac", "fractional/semigroup", TOL, _semigroup_frac, frozenset({P})),
    Property("semigroup-qfrac", "quaternionic/semigroup", TOL, _semigroup_qfrac, frozenset({P})),
    Property("norm-continuity", "fractional/semigroup", 1.01, _continuity, frozenset({P})),
    Property("frac-orthogonality", "fractional/orthogonality", TOL, _frac_orthogonality, frozenset({R, P})),
    Property("monogenic-membership", "monogenic/hardy", 1e-10, _membership, frozenset({R, P})),
    Property("monogenic-norm-law", "monogenic/norm", TOL, _norm_law, frozenset({R})),
    Property("monogenic-proportionality", "monogenic/rotation", TOL, _proportionality, frozenset({R})),
    Property("monogenic-reconstruction", "monogenic/reconstruction", 1e-10, _reconstruction, frozenset({R})),
    Property("monogenic-non-orthogonality", "monogenic/non-orthogonal", 1e-6, _non_orthogonality, frozenset({R}), lower_bound=True),
)


def make_context(
    f: Field | None = None,
    *,
    shape=(16, 16),
    seed: int = 0,
    alpha: float = 0.7,
    beta: float = 0.45,
    axis=(1.0, 1.0, 0.0),
    strict_dc: bool = False,
) -> tuple[Context, list[str]]:
    """Build the input context; returns it with notes for the report header.

    Without ``f`` a seeded random real field is drawn.  Unless ``strict_dc`` is
    set, the input is projected onto its paired part so that every property
    applies; with ``strict_dc`` it is used as given.
    """
    rng = np.random.default_rng(seed)
    notes = []
    if f is None:
        f = random_field(shape, rng)
        notes.append(f"input=random seed={seed} shape={'x'.join(map(str, f.shape.dims))}")
    else:
        notes.append(f"input=file shape={'x'.join(map(str, f.shape.dims))}")
    if not strict_dc:
        f = paired_part(f)
        notes.append("projection=paired (DC and unpaired Nyquist bins removed)")
    u = axis if isinstance(axis, PureUnitQuaternion) else PureUnitQuaternion.from_vector(axis)
    notes.append(f"alpha={alpha!r} beta={beta!r} axis={u.q1!r},{u.q2!r},{u.q3!r}")
    return Context(f, alpha, beta, u, rng), notes


def _unmet(ctx: Context, requires: frozenset) -> str:
    if "real" in requires and not is_real_scalar(ctx.f, rtol=1e-12):
        return "input is not real scalar"
    if "paired" in requires:
        F = dft(ctx.f).samples[:, self_conjugate_mask(ctx.f.shape)]
        level = float(np.sqrt(np.sum(np.abs(F) ** 2) / ctx.f.shape.size))
        if level > 1e-12 * max(ctx.nf, 1e-300):
            return "input has DC or unpaired Nyquist content (--strict-dc)"
    return ""


def run_properties(ctx: Context, names=None) -> list[Result]:
    out = []
    for p in PROPERTIES:
        if names is not None and p.name not in names:
            continue
        reason = _unmet(ctx, p.requires)
        if ctx.nf == 0.0:
            reason = "input field is zero"
        if reason:
            out.append(Result(p.name, p.tag, math.nan, p.tolerance, "SKIP", reason))
            continue
        value = float(p.check(ctx))
        ok = value >= p.tolerance if p.lower_bound else value <= p.tolerance
        out.append(Result(p.name, p.tag, value, p.tolerance, "PASS" if ok else "FAIL"))
    return out


def format_report(results: list[Result], notes: list[str] = ()) -> str:
    lines = [f"# {n}" for n in notes]
    lines.append("name\ttag\tvalue\ttolerance\tstatus\treason")
    for r in results:
        cmp = ">=" if _by_name(r.name).lower_bound else "<="
        lines.append(
            f"{r.name}\t{r.tag}\t{r.value:.3e}\t{cmp}{r.tolerance:.3g}\t{r.status}\t{r.reason}"
        )
    return "\n".join(lines) + "\n"


def _by_name(name: str) -> Property:
    for p in PROPERTIES:
        if p.name == name:
            return p
    raise KeyError(name)
