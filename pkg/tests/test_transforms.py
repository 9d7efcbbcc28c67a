import math

import numpy as np
import pytest

from conftest import paired_real, rel
from oracles import hilbert_by_hand
from qriesz.errors import DomainError
from qriesz.field import Field, inner, norm2, random_field, scale, shift, zero_mean
from qriesz.quaternion import PureUnitQuaternion, Quaternion, qexp_pure
from qriesz.transforms import (
    Kind,
    TransformSpec,
    apply_spec,
    frac_hilbert,
    hardy_project,
    hilbert,
    qfrac_hilbert,
    semigroup_check,
)

UK = PureUnitQuaternion(0, 0, 1)
UIJ = PureUnitQuaternion.from_vector((1, 1, 0))

# reference outputs computed once with tests/oracles.py (naive DFT and
# per-bin products) and frozen here
SEQ = [1.0, 2.0, 0.0, -1.0, 3.0, 0.0, 0.0, 1.0]
SEQ_H_I = [0.5, -0.292893218813452, -1.914213562373095, 1.707106781186547,
           0.5, -1.707106781186548, 0.914213562373095, 0.292893218813452]
GRID = [[1.0, 0.0, 2.0], [0.0, -1.0, 0.0], [3.0, 0.0, 0.0], [1.0, 1.0, -2.0]]
GRID_H_I = [[-0.366666666666667, -0.666666666666667, 0.533333333333333],
            [0.6, 0.0, -0.6],
            [0.366666666666667, 0.666666666666667, -0.533333333333333],
            [-0.6, 0.0, 0.6]]
GRID_H_J = [[-1.039230484541327, 0.346410161513776, 0.692820323027551],
            [-0.346410161513775, -0.173205080756888, 0.519615242270663],
            [-0.115470053837925, -1.501110699893027, 1.616580753730952],
            [1.501110699893027, -1.558845726811990, 0.057735026918963]]


def test_frozen_one_dimensional_values():
    h = hilbert(Field.from_scalar(np.array(SEQ))).samples
    assert np.all(h.imag == 0)
    assert np.allclose(h[1].real, SEQ_H_I, rtol=0, atol=1e-14)
    assert np.all(h[[0, 2, 3]] == 0)


def test_frozen_two_dimensional_values():
    h = hilbert(Field.from_scalar(np.array(GRID))).samples.real
    assert np.allclose(h[1], GRID_H_I, atol=1e-14)
    assert np.allclose(h[2], GRID_H_J, atol=1e-14)
    assert np.allclose(h[[0, 3]], 0, atol=0)


@pytest.mark.parametrize("shape", [(16,), (9,), (6, 6), (5, 4), (4, 4, 4), (3, 4, 5)])
@pytest.mark.parametrize("kind", ["real-scalar", "biquaternion"])
def test_hilbert_matches_hand_multiplication(shape, kind, rng):
    f = random_field(shape, rng, kind)
    assert rel(hilbert(f).samples, hilbert_by_hand(f.samples)) <= 1e-12


@pytest.mark.parametrize("k", [(3, 0), (0, 5), (2, 3), (-4, 7), (31, 1)])
def test_single_frequency_closed_form(k):
    N = 64
    x1, x2 = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    theta = 2 * np.pi * (k[0] * x1 + k[1] * x2) / N
    f = Field.from_scalar(np.cos(theta))
    r = math.hypot(*k)
    h = hilbert(f).samples
    assert np.max(np.abs(h[1] + k[0] / r * np.sin(theta))) <= 1e-12
    assert np.max(np.abs(h[2] + k[1] / r * np.sin(theta))) <= 1e-12
    p = hardy_project(f, +1).samples
    assert np.max(np.abs(p[0] - 0.5 * np.cos(theta))) <= 1e-12
    assert np.max(np.abs(p[1] + 0.5 * k[0] / r * np.sin(theta))) <= 1e-12


def test_constant_is_annihilated():
    assert np.all(hilbert(Field.constant(4.0, (6, 6))).samples == 0)


@pytest.mark.parametrize("shape", [(64,), (16, 16), (64, 64), (8, 8, 8)])
def test_involution_on_paired_fields(shape):
    f = paired_real(shape, 11)
    assert rel(hilbert(hilbert(f)).samples, f.samples) <= 1e-11


def test_involution_fails_with_unpaired_nyquist_content(rng):
    # zero mean alone is not enough: the unpaired Nyquist bins are annihilated
    f = zero_mean(random_field((16, 16), rng))
    assert rel(hilbert(hilbert(f)).samples, f.samples) > 1e-3
    g = zero_mean(random_field((15, 9), rng))
    assert rel(hilbert(hilbert(g)).samples, g.samples) <= 1e-12


def test_shift_invariance(rng):
    f = random_field((12, 10), rng, "quaternion")
    a = hilbert(shift(f, (5, -3))).samples
    b = shift(hilbert(f), (5, -3)).samples
    assert np.allclose(a, b, atol=1e-14)


def test_self_adjoint_on_general_fields(rng):
    f, g = (random_field((8, 10), rng, "biquaternion") for _ in range(2))
    lhs = inner(hilbert(f), g)
    rhs = inner(f, hilbert(g))
    assert abs(lhs - rhs) <= 1e-12 * norm2(f) * norm2(g)


def test_hardy_projections(rng):
    f = paired_real((16, 16), 2)
    pp, pm = hardy_project(f, "+"), hardy_project(f, "minus")
    assert rel((pp + pm).samples, f.samples) <= 1e-15
    assert rel(hardy_project(pp, +1).samples, pp.samples) <= 1e-12
    assert rel((pp - pm).samples, hilbert(f).samples) <= 1e-12
    with pytest.raises(DomainError):
        hardy_project(f, 0)


def test_frac_examples():
    f = paired_real((8, 8), 5)
    assert rel(frac_hilbert(f, 0.0).samples, f.samples) == 0.0
    assert rel(frac_hilbert(f, 0.0, "plain").samples, f.samples) == 0.0
    assert rel(frac_hilbert(f, 2.0, "script").samples, -f.samples) <= 1e-15
    assert rel(frac_hilbert(f, 2.0, "plain").samples, f.samples) <= 1e-15
    ihf = 1j * hilbert(f).samples
    assert rel(frac_hilbert(f, 1.0).samples, ihf) <= 1e-15
    half = frac_hilbert(frac_hilbert(f, 0.5), 0.5)
    assert rel(half.samples, ihf) <= 1e-12


def test_frac_plain_table():
    f = paired_real((16,), 8)
    hf = hilbert(f).samples
    for alpha, expect in [(1, hf), (2, f.samples), (3, hf), (-1, hf)]:
        assert rel(frac_hilbert(f, alpha, "plain").samples, expect) <= 1e-12


def test_qfrac_examples():
    f = paired_real((8, 8), 6)
    assert rel(qfrac_hilbert(f, 0.0, UK).samples, f.samples) == 0.0
    hk = scale(hilbert(f), UK, "right").samples
    assert rel(qfrac_hilbert(f, 1.0, UK).samples, hk) <= 1e-15
    assert rel(qfrac_hilbert(f, 4.0, UK).samples, f.samples) <= 1e-12
    # (R(u) H)^2 = -I
    rh = lambda g: scale(hilbert(g), UIJ, "right")  # noqa: E731
    assert rel(rh(rh(f)).samples, -f.samples) <= 1e-12


def test_qfrac_rejects_non_unit_axis():
    f = paired_real((8,), 1)
    with pytest.raises(DomainError):
        qfrac_hilbert(f, 0.5, (1.0, 1.0, 0.0))
    with pytest.raises(DomainError):
        qfrac_hilbert(f, 0.5, Quaternion(0.5, 0, 0, 1))


@pytest.mark.parametrize("alpha", [0.3, 0.5, 1.7])
def test_periodicity(alpha):
    f = paired_real((16, 16), 9)
    for op, period in [
        (lambda g, a: frac_hilbert(g, a, "plain"), 2),
        (lambda g, a: frac_hilbert(g, a, "script"), 4),
        (lambda g, a: qfrac_hilbert(g, a, UIJ, "plain"), 2),
        (lambda g, a: qfrac_hilbert(g, a, UIJ, "script"), 4),
    ]:
        assert rel(op(f, alpha + period).samples, op(f, alpha).samples) <= 1e-11


@pytest.mark.parametrize("variant", ["plain", "script"])
def test_inverses(variant):
    f = paired_real((8, 8, 8), 4)
    a = 0.37
    assert rel(frac_hilbert(frac_hilbert(f, -a, variant), a, variant).samples, f.samples) <= 1e-11
    back = qfrac_hilbert(qfrac_hilbert(f, -a, UK, variant), a, UK, variant)
    assert rel(back.samples, f.samples) <= 1e-11


def test_phase_factor_order_is_immaterial(rng):
    f = paired_real((10, 6), 7)
    a, t = 0.61, 0.5 * math.pi * 0.61
    before = frac_hilbert(f.with_samples(np.exp(-1j * t) * f.samples), a, "script")
    assert rel(frac_hilbert(f, a, "plain").samples, before.samples) <= 1e-14
    q = qexp_pure(UIJ, -t)
    before = qfrac_hilbert(scale(f, q, "right"), a, UIJ, "script")
    assert rel(qfrac_hilbert(f, a, UIJ, "plain").samples, before.samples) <= 1e-14


def test_plain_qfrac_is_right_isoclinic(rng):
    f = random_field((12,), rng, "quaternion")
    s = qfrac_hilbert(f, 0.8, UIJ, "script").samples
    p = qfrac_hilbert(f, 0.8, UIJ, "plain").samples
    assert np.allclose(np.linalg.norm(s, axis=0), np.linalg.norm(p, axis=0), atol=1e-14)


def test_semigroup_examples(rng):
    f = paired_real((8, 8), 12)
    assert semigroup_check(1.0, 1.0, f, "frac") <= 1e-11
    assert semigroup_check(0.0, 0.0, f, "frac") == 0.0
    assert semigroup_check(0.3, 0.9, f, "qfrac", UIJ) <= 1e-11
    assert semigroup_check(0.3, 0.9, Field.zeros((4,))) == 0.0
    with pytest.raises(DomainError):
        semigroup_check(0.3, 0.9, f, "qfrac")
    with pytest.raises(DomainError):
        semigroup_check(0.3, 0.9, f, "nope")


@pytest.mark.parametrize("variant", ["plain", "script"])
def test_semigroup_random_pairs(variant, rng):
    f = paired_real((16, 16), 13)
    for a, b in rng.uniform(-3, 3, size=(20, 2)):
        assert semigroup_check(a, b, f, "frac", variant=variant) <= 1e-11
        assert semigroup_check(a, b, f, "qfrac", UIJ, variant=variant) <= 1e-11


@pytest.mark.parametrize("alpha", [1e-3, 1e-6])
def test_norm_continuity(alpha):
    f = paired_real((16, 16), 14)
    t = 0.5 * math.pi * alpha
    bound = (abs(math.cos(t) - 1) + abs(math.sin(t))) * norm2(f)
    assert norm2(frac_hilbert(f, alpha) - f) <= bound * 1.01
    assert norm2(qfrac_hilbert(f, alpha, UK) - f) <= bound * 1.01


def test_fractional_orthogonality():
    f = paired_real((16, 16), 15)
    g = paired_real((16, 16), 16)
    g = g - scale(f, inner(f, g).real / inner(f, f).real)
    ref = norm2(f) * norm2(g)
    for variant in ("plain", "script"):
        for a in (0.3, 1.3):
            assert abs(inner(frac_hilbert(f, a, variant), frac_hilbert(g, a, variant))) <= 1e-11 * ref
            lhs = inner(qfrac_hilbert(f, a, UIJ, variant), qfrac_hilbert(g, a, UIJ, variant))
            assert abs(lhs) <= 1e-11 * ref


def test_variant_validation():
    f = paired_real((8,), 1)
    with pytest.raises(DomainError):
        frac_hilbert(f, 0.5, "fancy")


def test_transform_spec():
    with pytest.raises(DomainError):
        TransformSpec(Kind.FRAC_H, float("nan"))
    with pytest.raises(DomainError):
        TransformSpec(Kind.QFRAC_H, 0.5)
    spec = TransformSpec("QFracScriptH", 0.5, (0.0, 0.0, 1.0))
    assert spec.kind is Kind.QFRAC_SCRIPT_H
    assert spec.axis == UK


def test_apply_spec_dispatch():
    f = paired_real((8, 8), 2)
    assert apply_spec(f, TransformSpec(Kind.H)) == hilbert(f)
    assert apply_spec(f, TransformSpec(Kind.PMINUS)) == hardy_project(f, -1)
    assert apply_spec(f, TransformSpec(Kind.FRAC_H, 0.4)) == frac_hilbert(f, 0.4, "plain")
    spec = TransformSpec(Kind.QFRAC_SCRIPT_H, 0.4, UK)
    assert apply_spec(f, spec) == qfrac_hilbert(f, 0.4, UK, "script")
    m = apply_spec(f, TransformSpec(Kind.M))
    assert m == f + hilbert(f)
