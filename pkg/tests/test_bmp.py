import random

import pytest

from aeslab.bmp import (
    BmpImage,
    BmpMagicError,
    BmpTruncatedError,
    BmpUnsupportedError,
    make_test_image,
    parse_bmp,
    row_stride_for,
    serialize_bmp,
)


def distinct_blocks(data, size=16):
    return {data[i:i + size] for i in range(0, len(data) - size + 1, size)}


def test_stride_rule():
    assert row_stride_for(200) == 600
    assert row_stride_for(2) == 8      # 6 data bytes padded to 8
    assert row_stride_for(256) == 768
    assert row_stride_for(1) == 4


def test_tiny_image_file_size():
    img = make_test_image("constant-color", 2, 2)
    data = serialize_bmp(img)
    assert len(data) == 70  # 54-byte header + 2 rows of 8-byte stride


def test_200x200_pixel_array_length():
    img = make_test_image("constant-color", 200, 200)
    assert len(img.pixels) == 200 * 600 == 120_000


def test_parse_serialize_roundtrip_on_random_images():
    rng = random.Random(60)
    for _ in range(100):
        w, h = rng.randrange(1, 40), rng.randrange(1, 40)
        original = make_test_image("gradient", w, h)
        # randomize the pixel payload to cover arbitrary content
        original.pixels = rng.randbytes(h * original.row_stride)
        data = serialize_bmp(original)
        parsed = parse_bmp(data)
        assert parsed == original
        assert serialize_bmp(parsed) == data


def test_header_preserved_verbatim():
    img = make_test_image("two-zone", 16, 16)
    data = serialize_bmp(img)
    assert parse_bmp(data).header == data[:54]


def test_parse_rejects_bad_magic():
    data = bytearray(serialize_bmp(make_test_image("constant-color", 4, 4)))
    data[0:2] = b"PM"
    with pytest.raises(BmpMagicError):
        parse_bmp(bytes(data))


def test_parse_rejects_wrong_depth():
    data = bytearray(serialize_bmp(make_test_image("constant-color", 4, 4)))
    data[28:30] = (8).to_bytes(2, "little")
    with pytest.raises(BmpUnsupportedError):
        parse_bmp(bytes(data))


def test_parse_rejects_compression():
    data = bytearray(serialize_bmp(make_test_image("constant-color", 4, 4)))
    data[30:34] = (1).to_bytes(4, "little")
    with pytest.raises(BmpUnsupportedError):
        parse_bmp(bytes(data))


def test_parse_rejects_truncation():
    data = serialize_bmp(make_test_image("constant-color", 4, 4))
    with pytest.raises(BmpTruncatedError):
        parse_bmp(data[:-1])
    with pytest.raises(BmpTruncatedError):
        parse_bmp(data[:20])


def test_parse_rejects_trailing_bytes():
    data = serialize_bmp(make_test_image("constant-color", 4, 4))
    with pytest.raises(BmpUnsupportedError):
        parse_bmp(data + b"\x00")


def test_serialize_validates_structure():
    img = make_test_image("constant-color", 4, 4)
    img.pixels = img.pixels[:-1]
    with pytest.raises(ValueError):
        serialize_bmp(img)


# ---------------------------------------------------------------------------
# Synthetic patterns

def test_constant_image_is_uniform():
    img = make_test_image("constant-color", 200, 200)
    assert len(set(img.pixels)) == 1


def test_two_zone_has_exactly_two_block_values():
    img = make_test_image("two-zone", 200, 200)
    blocks = distinct_blocks(img.pixels)
    assert len(blocks) == 2


def test_gradient_rows_cover_all_blue_values():
    img = make_test_image("gradient", 256, 4)
    stride = img.row_stride
    for y in range(4):
        row = img.pixels[y * stride:y * stride + 256 * 3]
        blues = {row[3 * x] for x in range(256)}
        assert len(blues) == 256


def test_single_object_has_two_gray_levels():
    img = make_test_image("single-object-on-plain-background", 64, 64)
    row_bytes = 64 * 3
    seen = set()
    for y in range(64):
        seen |= set(img.pixels[y * img.row_stride:y * img.row_stride + row_bytes])
    assert len(seen) == 2
    # alias accepted
    alias = make_test_image("single-object", 64, 64)
    assert alias.pixels == img.pixels


def test_make_test_image_rejects_bad_input():
    with pytest.raises(ValueError):
        make_test_image("plaid", 8, 8)
    with pytest.raises(ValueError):
        make_test_image("gradient", 0, 8)


def test_bmp_image_equality_is_structural():
    a = make_test_image("constant-color", 8, 8)
    b = make_test_image("constant-color", 8, 8)
    assert a == b and a is not b
    assert isinstance(a, BmpImage)
