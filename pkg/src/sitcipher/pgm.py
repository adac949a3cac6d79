"""8-bit grayscale rasters and a dependency-free PGM (P2/P5) codec.

Readers accept both the binary (P5) and ASCII (P2) encodings with
arbitrary whitespace and ``#`` comments in the header; the writer always
emits the canonical binary form ``P5\\n<w> <h>\\n255\\n<pixels>``.
"""

from dataclasses import dataclass

_WHITESPACE = b" \t\n\r\x0b\x0c"
_COMMENT = 0x23  # '#'


class PGMError(ValueError):
    """Input is not a PGM this codec supports."""


@dataclass(frozen=True)
class GrayImage:
    """Row-major 8-bit grayscale raster."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image dimensions must be positive")
        if len(self.pixels) != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} pixels, got {len(self.pixels)}"
            )


class _Scanner:
    """Whitespace- and comment-tolerant tokenizer for PGM headers."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _skip_separators(self):
        data, n = self.data, len(self.data)
        while self.pos < n:
            b = data[self.pos]
            if b in _WHITESPACE:
                self.pos += 1
            elif b == _COMMENT:
                while self.pos < n and data[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                return

    def token(self, field: str) -> bytes:
        self._skip_separators()
        data, n = self.data, len(self.data)
        start = self.pos
        while self.pos < n and data[self.pos] not in _WHITESPACE \
                and data[self.pos] != _COMMENT:
            self.pos += 1
        if self.pos == start:
            raise PGMError(f"missing {field}")
        return data[start:self.pos]

    def integer(self, field: str) -> int:
        tok = self.token(field)
        if not tok.isdigit():
            raise PGMError(f"non-numeric {field}: {tok!r}")
        return int(tok)


def read_pgm(data: bytes) -> GrayImage:
    """Decode a P2 or P5 image with maxval <= 255."""
    scan = _Scanner(data)
    magic = scan.token("magic")
    if magic not in (b"P2", b"P5"):
        raise PGMError(f"unsupported magic {magic!r}, expected P2 or P5")
    width = scan.integer("width")
    height = scan.integer("height")
    if width <= 0 or height <= 0:
        raise PGMError(f"dimensions must be positive, got {width}x{height}")
    maxval = scan.integer("maxval")
    if not 0 < maxval <= 255:
        raise PGMError(f"maxval {maxval} outside supported range 1..255")
    count = width * height

    if magic == b"P5":
        # Exactly one whitespace byte separates the header from the payload.
        if scan.pos >= len(data) or data[scan.pos] not in _WHITESPACE:
            raise PGMError("missing separator before binary pixel data")
        payload = data[scan.pos + 1:scan.pos + 1 + count]
        if len(payload) < count:
            raise PGMError(
                f"truncated pixel data: expected {count} bytes, got {len(payload)}"
            )
        if max(payload) > maxval:
            raise PGMError(f"pixel value {max(payload)} exceeds maxval {maxval}")
        return GrayImage(width, height, payload)

    values = bytearray()
    for _ in range(count):
        v = scan.integer("pixel")
        if v > maxval:
            raise PGMError(f"pixel value {v} exceeds maxval {maxval}")
        values.append(v)
    return GrayImage(width, height, bytes(values))


def write_pgm(img: GrayImage) -> bytes:
    """Encode in canonical binary form; read_pgm(write_pgm(img)) == img."""
    return f"P5\n{img.width} {img.height}\n255\n".encode("ascii") + img.pixels


def image_to_bytes(img: GrayImage) -> bytes:
    """Row-major pixel bytes of the raster."""
    return img.pixels


def bytes_to_image(data: bytes, width: int, height: int) -> GrayImage:
    """Build a raster from the first width*height bytes of ``data``."""
    count = width * height
    if len(data) < count:
        raise ValueError(f"need {count} bytes for {width}x{height}, got {len(data)}")
    return GrayImage(width, height, bytes(data[:count]))
