import numpy as np
import pytest

from conftest import ACCEPTANCE_SHAPES
from qriesz.field import Field, random_field
from qriesz.plotting import plot_features, plot_props, plot_spectrum
from qriesz.monogenic import local_features, monogenic
from qriesz.properties import PROPERTIES, format_report, make_context, run_properties


@pytest.mark.parametrize("shape", ACCEPTANCE_SHAPES)
def test_every_property_passes(shape):
    ctx, _ = make_context(shape=shape, seed=1)
    results = run_properties(ctx)
    assert [r.name for r in results] == [p.name for p in PROPERTIES]
    bad = [(r.name, r.value) for r in results if r.status != "PASS"]
    assert not bad


def test_strict_dc_skips_paired_properties(rng):
    f = random_field((16, 16), rng)
    ctx, notes = make_context(f, strict_dc=True)
    results = {r.name: r for r in run_properties(ctx)}
    assert results["involution"].status == "SKIP"
    assert "DC" in results["involution"].reason
    assert results["self-adjoint"].status == "PASS"
    assert not any("projection" in n for n in notes)


def test_non_real_input_skips_real_properties(rng):
    f = random_field((8, 8), rng, "quaternion")
    ctx, _ = make_context(f)
    results = {r.name: r for r in run_properties(ctx)}
    assert results["orthogonality-1"].status == "SKIP"
    assert results["involution"].status == "PASS"


def test_zero_input_is_skipped():
    ctx, _ = make_context(Field.zeros((8,)))
    assert all(r.status == "SKIP" for r in run_properties(ctx))


def test_report_format():
    ctx, notes = make_context(shape=(16,), seed=3)
    results = run_properties(ctx, names={"involution", "monogenic-non-orthogonality"})
    lines = format_report(results, notes).splitlines()
    assert lines[0].startswith("# input=random seed=3 shape=16")
    body = [line.split("\t") for line in lines if not line.startswith("#")]
    assert body[1][0] == "involution" and body[1][3] == "<=1e-11"
    assert body[2][3] == ">=1e-06"


def test_figures_are_deterministic(tmp_path):
    ctx, _ = make_context(shape=(16, 16))
    results = run_properties(ctx)
    m = monogenic(ctx.f)
    for name in ("a", "b"):
        d = tmp_path / name
        d.mkdir()
        plot_props(results, d / "props.png")
        plot_spectrum(np.abs(np.fft.fftn(ctx.f.samples[0])), d / "spec.png")
        plot_features(local_features(m), d / "feat.png")
    for f in ("props.png", "spec.png", "feat.png"):
        assert (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes()
