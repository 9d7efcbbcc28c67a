"""Command line interface: ``qriesz transform|props|spectrum|reconstruct``.

Exit codes: 0 success, 2 usage error, 3 data error, 4 singular parameter.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

import numpy as np

from .errors import DomainError, FormatError, SingularParameterError
from .field import Field, is_real_scalar
from .io import encode_pgm, load_field, write_planes
from .monogenic import local_features, reconstruct_from_frac
from .quaternion import PureUnitQuaternion
from .spectral import FrequencyGrid, chi_symbols, dft, riesz_symbol
from .transforms import Kind, TransformSpec, apply_spec

log = logging.getLogger("qriesz")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_SINGULAR = 0, 2, 3, 4

OPS = {
    "identity": None,
    "hilbert": Kind.H,
    "pplus": Kind.PPLUS,
    "pminus": Kind.PMINUS,
    "frac": None,  # resolved with --variant
    "frac-plain": Kind.FRAC_H,
    "frac-script": Kind.FRAC_SCRIPT_H,
    "qfrac": None,
    "qfrac-plain": Kind.QFRAC_H,
    "qfrac-script": Kind.QFRAC_SCRIPT_H,
    "monogenic": Kind.M,
    "frac-monogenic": Kind.FRAC_M,
    "qfrac-monogenic": Kind.QFRAC_M,
}


class UsageError(Exception):
    pass


# -- argument types ----------------------------------------------------------


def _alpha(text: str) -> float:
    try:
        a = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(a):
        raise argparse.ArgumentTypeError("alpha must be finite")
    return a


def _axis(text: str) -> PureUnitQuaternion:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("axis must be three comma-separated numbers")
    try:
        return PureUnitQuaternion.from_vector(float(p) for p in parts)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shape(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(p) for p in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shape must look like 16x16, got {text!r}") from None
    if not 1 <= len(dims) <= 3 or any(n < 2 for n in dims):
        raise argparse.ArgumentTypeError("shape needs 1 to 3 extents, each >= 2")
    return dims


# -- helpers -----------------------------------------------------------------


def _to_gray(values: np.ndarray, lo: float, hi: float) -> np.ndarray:
    if not hi > lo:
        return np.zeros(values.shape, dtype=np.uint8)
    scaled = (values - lo) / (hi - lo) * 255.0
    return np.clip(np.rint(np.nan_to_num(scaled, nan=0.0)), 0, 255).astype(np.uint8)


def _slice2d(a: np.ndarray) -> np.ndarray:
    while a.ndim > 2:
        a = a[a.shape[0] // 2]
    return a


def write_viz(result: Field, outdir: Path) -> list[Path]:
    """Amplitude (min-max), phase ([0, pi] -> [0, 255]) and orientation-angle maps."""
    feats = local_features(result)
    amp = _slice2d(feats.amplitude)
    phase = _slice2d(feats.phase)
    angle = _slice2d(np.where(feats.defined, feats.orientation_angle, -math.pi))
    maps = {
        "amplitude.pgm": _to_gray(amp, float(amp.min()), float(amp.max())),
        "phase.pgm": _to_gray(phase, 0.0, math.pi),
        "orientation.pgm": _to_gray(angle, -math.pi, math.pi),
    }
    paths = []
    for name, img in maps.items():
        p = outdir / name
        p.write_bytes(encode_pgm(img, 255))
        paths.append(p)
    return paths


def _resolve_spec(args) -> TransformSpec | None:
    op = args.op
    if op == "frac":
        kind = Kind.FRAC_H if args.variant == "plain" else Kind.FRAC_SCRIPT_H
    elif op == "qfrac":
        kind = Kind.QFRAC_H if args.variant == "plain" else Kind.QFRAC_SCRIPT_H
    else:
        kind = OPS[op]
    if kind is None:
        return None
    needs_axis = kind in (Kind.QFRAC_H, Kind.QFRAC_SCRIPT_H, Kind.QFRAC_M)
    if needs_axis and args.axis is None:
        raise UsageError(f"--op {op} requires --axis x,y,z")
    return TransformSpec(kind, args.alpha, args.axis if needs_axis else None)


# -- commands ----------------------------------------------------------------


def cmd_transform(args) -> int:
    spec = _resolve_spec(args)
    f, maxval = load_field(args.input)
    result = f if spec is None else apply_spec(f, spec)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    write_planes(out / "result.qfld", result)
    written = [out / "result.qfld"]
    if maxval is not None and is_real_scalar(result):
        img = np.rint(result.samples[0].real * maxval)
        (out / "result.pgm").write_bytes(encode_pgm(img, maxval))
        written.append(out / "result.pgm")
    if args.viz:
        written += write_viz(result, out)
    if args.figures:
        from .plotting import plot_features

        plot_features(local_features(result), out / "features.png")
        written.append(out / "features.png")
    for p in written:
        print(p)
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    f, _ = load_field(args.input)
    g = None
    if args.frac is not None:
        g, _ = load_field(args.frac)
    if args.variant == "qfrac" and args.axis is None:
        raise UsageError("--variant qfrac requires --axis x,y,z")
    m = reconstruct_from_frac(f, g, args.alpha, args.variant, args.axis)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    write_planes(out / "result.qfld", m)
    print(out / "result.qfld")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    f, _ = load_field(args.input)
    F = dft(f)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    mag = Field(np.abs(F.samples), f.shape)
    write_planes(out / "spectrum.qfld", mag, planes=4)
    print(out / "spectrum.qfld")
    if args.symbol_dump:
        path = out / "symbol.csv"
        path.write_text(symbol_csv(f.shape, args.symbol))
        print(path)
    if args.figures:
        from .plotting import plot_spectrum

        plot_spectrum(mag.samples[0].real, out / "spectrum.png")
        print(out / "spectrum.png")
    return EXIT_OK


def symbol_csv(shape, which: str = "riesz") -> str:
    """One row per bin: indices, signed frequencies, 8 symbol coefficients."""
    if which == "riesz":
        sym = riesz_symbol(shape)
    else:
        plus, minus = chi_symbols(shape)
        sym = plus if which == "chi-plus" else minus
    grid = FrequencyGrid(shape)
    d = shape.ndim
    idx_axes = grid.indices
    xi = grid.xi
    head = [f"k{j + 1}" for j in range(d)] + [f"xi{j + 1}" for j in range(d)]
    for c in ("1", "i", "j", "k"):
        head += [f"re_{c}", f"im_{c}"]
    rows = [",".join(head)]
    for pos in np.ndindex(*shape.dims):
        v = sym.values[(slice(None),) + pos]
        cells = [str(int(idx_axes[j][pos[j]])) for j in range(d)]
        cells += [repr(float(xi[(j,) + pos])) for j in range(d)]
        for c in v:
            cells += [repr(float(c.real) + 0.0), repr(float(c.imag) + 0.0)]
        rows.append(",".join(cells))
    return "\n".join(rows) + "\n"


def cmd_props(args) -> int:
    from .properties import PROPERTIES, format_report, make_context, run_properties

    if args.list:
        for p in PROPERTIES:
            req = ",".join(sorted(p.requires)) or "-"
            print(f"{p.name}\t{p.tag}\ttol={p.tolerance:.3g}\trequires={req}")
        return EXIT_OK
    f = None
    if args.input is not None:
        f, _ = load_field(args.input)
    ctx, notes = make_context(
        f,
        shape=args.shape,
        seed=args.seed,
        alpha=args.alpha,
        beta=args.beta,
        axis=args.axis or (1.0, 1.0, 0.0),
        strict_dc=args.strict_dc,
    )
    results = run_properties(ctx)
    report = format_report(results, notes)
    sys.stdout.write(report)
    if args.out is not None:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "props.tsv").write_text(report)
        if args.figures:
            from .plotting import plot_props

            plot_props(results, out / "props.png")
    failed = [r.name for r in results if r.status == "FAIL"]
    if failed:
        log.error("failed properties: %s", ", ".join(failed))
    return EXIT_OK if not failed else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qriesz", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply an operator to a PGM or QFLD1 field")
    p.add_argument("input")
    p.add_argument("output", help="output directory")
    p.add_argument("--op", choices=sorted(OPS), required=True)
    p.add_argument("--alpha", type=_alpha, default=1.0)
    p.add_argument("--axis", type=_axis, default=None, help="x,y,z (normalised)")
    p.add_argument("--variant", choices=("plain", "script"), default="plain")
    p.add_argument("--viz", action="store_true", help="also write amplitude/phase/orientation PGMs")
    p.add_argument("--figures", action="store_true", help="also write a matplotlib PNG")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("reconstruct", help="recover Mf from f and its fractional transform")
    p.add_argument("input")
    p.add_argument("output", help="output directory")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--variant", choices=("frac", "qfrac"), default="frac")
    p.add_argument("--axis", type=_axis, default=None)
    p.add_argument("--frac", default=None, help="precomputed plain fractional transform (QFLD1)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("spectrum", help="dump spectral magnitudes and symbol values")
    p.add_argument("input")
    p.add_argument("output", help="output directory")
    p.add_argument("--symbol-dump", action="store_true")
    p.add_argument("--symbol", choices=("riesz", "chi-plus", "chi-minus"), default="riesz")
    p.add_argument("--figures", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("props", help="check operator identities on data or a seeded random field")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", type=_shape, default=(16, 16))
    p.add_argument("--alpha", type=_alpha, default=0.7)
    p.add_argument("--beta", type=_alpha, default=0.45)
    p.add_argument("--axis", type=_axis, default=None)
    p.add_argument("--strict-dc", action="store_true", help="do not project out DC/Nyquist content")
    p.add_argument("--list", action="store_true", help="list properties and exit")
    p.add_argument("--out", default=None, help="directory for props.tsv (and props.png)")
    p.add_argument("--figures", action="store_true")
    p.set_defaults(func=cmd_props)
    return parser


def _report(exc: Exception) -> None:
    print(f"qriesz: error: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="qriesz: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except SingularParameterError as exc:
        _report(exc)
        return EXIT_SINGULAR
    except (FormatError, DomainError, OSError) as exc:
        _report(exc)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
