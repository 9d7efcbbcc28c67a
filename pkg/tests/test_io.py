import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qriesz.errors import FormatError
from qriesz.field import Field, random_field
from qriesz.io import (
    decode_pgm,
    decode_planes,
    encode_pgm,
    encode_planes,
    load_field,
    read_planes,
    write_pgm,
    write_planes,
)


def test_plane_layout_is_bit_exact():
    f = Field.from_components(np.array([1.0, 2.0]), np.array([0.5, -0.0]))
    buf = encode_planes(f)
    header = b"QFLD1\n1 2 planes=4 dtype=f64 layout=row-major\n"
    assert buf.startswith(header)
    payload = buf[len(header):]
    assert len(payload) == 4 * 2 * 8
    assert struct.unpack("<8d", payload) == (1.0, 2.0, 0.5, -0.0, 0.0, 0.0, 0.0, 0.0)


def test_complex_fields_use_eight_planes(rng):
    f = random_field((3, 4, 2), rng, "biquaternion")
    buf = encode_planes(f)
    assert b"planes=8" in buf.split(b"\n")[1]
    assert decode_planes(buf) == f
    with pytest.raises(FormatError, match="planes"):
        encode_planes(f, planes=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=1, max_size=3), st.integers(0, 2**32 - 1), st.booleans())
def test_plane_round_trip_is_byte_exact(dims, seed, cplx):
    f = random_field(tuple(dims), np.random.default_rng(seed), "biquaternion" if cplx else "quaternion")
    buf = encode_planes(f)
    assert encode_planes(decode_planes(buf)) == buf
    assert decode_planes(buf) == f


def test_plane_files_on_disk(tmp_path, rng):
    f = random_field((5, 5), rng)
    write_planes(tmp_path / "a.qfld", f)
    assert read_planes(tmp_path / "a.qfld") == f
    g, maxval = load_field(tmp_path / "a.qfld")
    assert g == f and maxval is None


GOOD = b"QFLD1\n1 2 planes=4 dtype=f64 layout=row-major\n" + bytes(64)


@pytest.mark.parametrize(
    "buf, field",
    [
        (b"QFLD2\n" + GOOD[6:], "magic"),
        (b"QFLD1\n1 2 planes=4 dtype=f64 layout=row-major", "header"),
        (GOOD.replace(b"\n1 2", b"\n4 2"), "d"),
        (GOOD.replace(b"\n1 2", b"\nx 2"), "d"),
        (GOOD.replace(b"1 2 planes", b"1 1 planes"), "n1"),
        (GOOD.replace(b"1 2 planes", b"1 z planes"), "n1"),
        (GOOD.replace(b"planes=4", b"planes=3"), "planes"),
        (GOOD.replace(b"f64", b"f32"), "dtype"),
        (GOOD.replace(b"row-major", b"col-major"), "layout"),
        (GOOD[:-1], "payload"),
        (GOOD + b"\0", "payload"),
        (GOOD.replace(b"layout=", b"layout "), "header"),
    ],
)
def test_malformed_plane_files_name_the_field(buf, field):
    with pytest.raises(FormatError, match=rf"^{field}\b"):
        decode_planes(buf)


def test_pgm_eight_bit_round_trip(tmp_path, rng):
    img = rng.integers(0, 256, (5, 7))
    buf = encode_pgm(img, 255)
    assert buf.startswith(b"P5\n7 5\n255\n")
    out, maxval = decode_pgm(buf)
    assert maxval == 255 and np.array_equal(out, img)
    write_pgm(tmp_path / "x.pgm", img)
    f, m = load_field(tmp_path / "x.pgm")
    assert m == 255 and f.shape.dims == (5, 7)
    assert np.allclose(f.samples[0].real, img / 255.0)


def test_pgm_sixteen_bit_is_big_endian(rng):
    img = np.array([[1, 256, 65535]])
    buf = encode_pgm(img, 65535)
    assert buf.endswith(b"\x00\x01\x01\x00\xff\xff")
    out, maxval = decode_pgm(buf)
    assert maxval == 65535 and np.array_equal(out, img)


def test_pgm_header_comments():
    buf = b"P5 # made by hand\n2 # width\n 1\n# max\n9\n\x03\x09"
    img, maxval = decode_pgm(buf)
    assert maxval == 9 and img.tolist() == [[3, 9]]


def test_single_row_pgm_loads_as_1d(tmp_path):
    write_pgm(tmp_path / "row.pgm", np.arange(8)[None, :], 255)
    f, _ = load_field(tmp_path / "row.pgm")
    assert f.shape.dims == (8,)


@pytest.mark.parametrize(
    "buf, field",
    [
        (b"P2\n2 2\n255\n" + bytes(4), "magic"),
        (b"P5\n2", "height"),
        (b"P5\nx 2\n255\n" + bytes(4), "width"),
        (b"P5\n0 2\n255\n", "width"),
        (b"P5\n2 -1\n255\n", "height"),
        (b"P5\n2 2\n70000\n" + bytes(8), "maxval"),
        (b"P5\n2 2\n255", "maxval"),
        (b"P5\n2 2\n255\n" + bytes(3), "raster"),
        (b"P5\n2 1\n7\n\x01\x08", "raster"),
    ],
)
def test_malformed_pgm_names_the_field(buf, field):
    with pytest.raises(FormatError, match=rf"^{field}\b"):
        decode_pgm(buf)


def test_load_field_rejects_unknown_and_tiny(tmp_path):
    (tmp_path / "x.bin").write_bytes(b"GIF89a")
    with pytest.raises(FormatError, match="^magic"):
        load_field(tmp_path / "x.bin")
    write_pgm(tmp_path / "one.pgm", np.array([[4]]), 255)
    with pytest.raises(FormatError, match="^width/height"):
        load_field(tmp_path / "one.pgm")
