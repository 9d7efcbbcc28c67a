"""Binary PGM (P5) images and QFLD1 plane files.

QFLD1 layout::

    QFLD1\\n
    <d> <n1> [<n2> [<n3>]] planes=<P> dtype=f64 layout=row-major\\n
    <P planes of little-endian float64, row-major, each prod(n) values>

Planes 0..3 are the real parts of the ``1, i, j, k`` coefficients; when
``P = 8`` planes 4..7 are the matching imaginary parts.
"""

from __future__ import annotations

import os
import re
from pathlib import Path

import numpy as np

from .errors import FormatError
from .field import Field

__all__ = [
    "PLANE_MAGIC",
    "read_planes",
    "write_planes",
    "encode_planes",
    "decode_planes",
    "read_pgm",
    "write_pgm",
    "encode_pgm",
    "decode_pgm",
    "load_field",
]

PLANE_MAGIC = b"QFLD1"


# -- QFLD1 -------------------------------------------------------------------


def encode_planes(f: Field, planes: int | None = None) -> bytes:
    """Serialise a field; 8 planes are written only when imaginary parts are nonzero."""
    s = f.samples
    if planes is None:
        planes = 8 if np.any(s.imag != 0) else 4
    if planes == 4:
        data = s.real
    elif planes == 8:
        data = np.concatenate([s.real, s.imag])
    else:
        raise FormatError(f"planes: must be 4 or 8, got {planes}")
    dims = " ".join(str(n) for n in f.shape.dims)
    header = f"{f.shape.ndim} {dims} planes={planes} dtype=f64 layout=row-major\n"
    payload = np.ascontiguousarray(data, dtype="<f8").tobytes()
    return PLANE_MAGIC + b"\n" + header.encode("ascii") + payload


_HEADER_RE = re.compile(r"^(\S+(?: \S+)*)$")


def decode_planes(buf: bytes) -> Field:
    if not buf.startswith(PLANE_MAGIC + b"\n"):
        raise FormatError("magic: expected 'QFLD1' followed by a newline")
    rest = buf[len(PLANE_MAGIC) + 1 :]
    nl = rest.find(b"\n")
    if nl < 0:
        raise FormatError("header: missing terminating newline")
    try:
        header = rest[:nl].decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("header: not ASCII") from None
    if not _HEADER_RE.match(header):
        raise FormatError(f"header: malformed line {header!r}")
    tokens = header.split(" ")
    try:
        d = int(tokens[0])
    except ValueError:
        raise FormatError(f"d: not an integer ({tokens[0]!r})") from None
    if d not in (1, 2, 3):
        raise FormatError(f"d: must be 1, 2 or 3, got {d}")
    if len(tokens) != 1 + d + 3:
        raise FormatError(f"header: expected {1 + d + 3} tokens, got {len(tokens)}")
    dims = []
    for j, tok in enumerate(tokens[1 : 1 + d], start=1):
        try:
            n = int(tok)
        except ValueError:
            raise FormatError(f"n{j}: not an integer ({tok!r})") from None
        if n < 2:
            raise FormatError(f"n{j}: extent must be >= 2, got {n}")
        dims.append(n)
    keyed = {}
    for tok in tokens[1 + d :]:
        key, sep, val = tok.partition("=")
        if not sep:
            raise FormatError(f"header: expected key=value, got {tok!r}")
        keyed[key] = val
    for key, expect in (("dtype", "f64"), ("layout", "row-major")):
        if keyed.get(key) != expect:
            raise FormatError(f"{key}: expected {expect!r}, got {keyed.get(key)!r}")
    if keyed.get("planes") not in ("4", "8"):
        raise FormatError(f"planes: must be 4 or 8, got {keyed.get('planes')!r}")
    planes = int(keyed["planes"])
    payload = rest[nl + 1 :]
    count = planes * int(np.prod(dims))
    if len(payload) != 8 * count:
        raise FormatError(
            f"payload: expected {8 * count} bytes for planes={planes} and dims {tuple(dims)}, "
            f"got {len(payload)}"
        )
    data = np.frombuffer(payload, dtype="<f8").reshape((planes,) + tuple(dims))
    samples = data[:4].astype(complex)
    if planes == 8:
        samples = samples + 1j * data[4:]
    return Field(samples)


def write_planes(path, f: Field, planes: int | None = None) -> None:
    Path(path).write_bytes(encode_planes(f, planes))


def read_planes(path) -> Field:
    return decode_planes(Path(path).read_bytes())


# -- PGM (P5) ----------------------------------------------------------------


def _pgm_tokens(buf: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace-separated header tokens, skipping comments."""
    tokens: list[bytes] = []
    i = 0
    n = len(buf)
    while len(tokens) < count:
        while i < n and buf[i : i + 1].isspace():
            i += 1
        if i < n and buf[i : i + 1] == b"#":
            while i < n and buf[i : i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        start = i
        while i < n and not buf[i : i + 1].isspace() and buf[i : i + 1] != b"#":
            i += 1
        if start == i:
            break
        tokens.append(buf[start:i])
    return tokens, i


def decode_pgm(buf: bytes) -> tuple[np.ndarray, int]:
    """Return the raw integer image (rows, cols) and its maxval."""
    tokens, pos = _pgm_tokens(buf, 4)
    names = ("magic", "width", "height", "maxval")
    if len(tokens) < 4:
        raise FormatError(f"{names[len(tokens)]}: missing from PGM header")
    if tokens[0] != b"P5":
        raise FormatError(f"magic: expected 'P5', got {tokens[0][:8]!r}")
    vals = []
    for name, tok in zip(names[1:], tokens[1:]):
        try:
            v = int(tok)
        except ValueError:
            raise FormatError(f"{name}: not an integer ({tok[:16]!r})") from None
        vals.append(v)
    width, height, maxval = vals
    if width < 1:
        raise FormatError(f"width: must be positive, got {width}")
    if height < 1:
        raise FormatError(f"height: must be positive, got {height}")
    if not 1 <= maxval <= 65535:
        raise FormatError(f"maxval: must be in 1..65535, got {maxval}")
    if pos >= len(buf) or not buf[pos : pos + 1].isspace():
        raise FormatError("maxval: must be followed by a single whitespace byte")
    raster = buf[pos + 1 :]
    dtype = np.dtype("u1") if maxval < 256 else np.dtype(">u2")
    need = width * height * dtype.itemsize
    if len(raster) < need:
        raise FormatError(f"raster: expected {need} bytes, got {len(raster)}")
    img = np.frombuffer(raster[:need], dtype=dtype).reshape(height, width)
    if img.max(initial=0) > maxval:
        raise FormatError(f"raster: sample exceeds maxval {maxval}")
    return img.astype(np.int64), maxval


def encode_pgm(img, maxval: int = 255) -> bytes:
    img = np.asarray(img)
    if img.ndim == 1:
        img = img[None, :]
    if img.ndim != 2:
        raise FormatError(f"raster: PGM holds 2D images, got {img.ndim}D")
    if not 1 <= maxval <= 65535:
        raise FormatError(f"maxval: must be in 1..65535, got {maxval}")
    dtype = "u1" if maxval < 256 else ">u2"
    data = np.clip(img, 0, maxval).astype(dtype)
    h, w = img.shape
    return f"P5\n{w} {h}\n{maxval}\n".encode("ascii") + data.tobytes()


def write_pgm(path, img, maxval: int = 255) -> None:
    Path(path).write_bytes(encode_pgm(img, maxval))


def read_pgm(path) -> tuple[np.ndarray, int]:
    return decode_pgm(Path(path).read_bytes())


def load_field(path) -> tuple[Field, int | None]:
    """Load a PlaneFile or PGM by content sniffing.

    PGM images become real scalar fields scaled to ``[0, 1]``; the maxval is
    returned as the second item (None for PlaneFiles).
    """
    buf = Path(path).read_bytes()
    if buf.startswith(PLANE_MAGIC):
        return decode_planes(buf), None
    if buf.startswith(b"P5"):
        img, maxval = decode_pgm(buf)
        if img.shape[0] == 1:
            # single-row images are 1D signals
            img = img[0]
        try:
            return Field.from_scalar(img / float(maxval)), maxval
        except ValueError as exc:
            raise FormatError(f"width/height: {exc}") from None
    raise FormatError(f"magic: {os.fspath(path)!r} is neither a QFLD1 plane file nor a P5 PGM")
