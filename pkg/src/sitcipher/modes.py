"""Byte-stream encryption on top of the 64-bit block primitive.

Two modes are provided: ECB (each 8-byte group encrypted independently,
messages padded to a block multiple) and CTR (keystream XOR, length
preserving, the same call encrypts and decrypts).  Ciphertext files use
the SIT1 container: 4 magic bytes, 1 mode byte, 8 nonce bytes (big-endian,
zero for ECB), then the raw ciphertext.
"""

from . import cipher
from .cipher import RoundKeys

BLOCK_BYTES = 8
MAGIC = b"SIT1"

ECB = "ecb"
CTR = "ctr"

_MODE_BYTE = {ECB: 0x01, CTR: 0x02}
_BYTE_MODE = {code: name for name, code in _MODE_BYTE.items()}


class PaddingError(ValueError):
    """The trailing pad of a decrypted message is malformed."""


class ContainerError(ValueError):
    """A ciphertext container is truncated or framed incorrectly."""


def pad(data: bytes) -> bytes:
    """Append n copies of the byte n, n = 8 - len(data) % 8 (always 1..8)."""
    n = BLOCK_BYTES - len(data) % BLOCK_BYTES
    return data + bytes([n]) * n


def unpad(data: bytes) -> bytes:
    """Strip the pad added by :func:`pad`; raises PaddingError if malformed."""
    if not data or len(data) % BLOCK_BYTES:
        raise PaddingError("padded data must be a positive multiple of 8 bytes")
    n = data[-1]
    if not 1 <= n <= BLOCK_BYTES:
        raise PaddingError(f"pad length byte {n:#04x} outside 1..8")
    if data[-n:] != bytes([n]) * n:
        raise PaddingError("inconsistent trailing pad bytes")
    return data[:-n]


def encrypt_blocks(data: bytes, keys: RoundKeys) -> bytes:
    """Encrypt each 8-byte group independently; length must be a multiple of 8."""
    if len(data) % BLOCK_BYTES:
        raise ValueError("block data length must be a multiple of 8 bytes")
    out = bytearray()
    for off in range(0, len(data), BLOCK_BYTES):
        block = int.from_bytes(data[off:off + BLOCK_BYTES], "big")
        out += cipher.encrypt_block(block, keys).to_bytes(BLOCK_BYTES, "big")
    return bytes(out)


def decrypt_blocks(data: bytes, keys: RoundKeys) -> bytes:
    """Inverse of :func:`encrypt_blocks`; no padding is interpreted."""
    if len(data) % BLOCK_BYTES:
        raise ValueError("block data length must be a multiple of 8 bytes")
    out = bytearray()
    for off in range(0, len(data), BLOCK_BYTES):
        block = int.from_bytes(data[off:off + BLOCK_BYTES], "big")
        out += cipher.decrypt_block(block, keys).to_bytes(BLOCK_BYTES, "big")
    return bytes(out)


def ecb_encrypt(data: bytes, keys: RoundKeys) -> bytes:
    """Pad and encrypt an arbitrary byte string in ECB mode."""
    return encrypt_blocks(pad(data), keys)


def ecb_decrypt(data: bytes, keys: RoundKeys) -> bytes:
    """Decrypt ECB ciphertext and strip the pad."""
    if not data or len(data) % BLOCK_BYTES:
        raise PaddingError("ECB ciphertext must be a positive multiple of 8 bytes")
    return unpad(decrypt_blocks(data, keys))


def ctr_process(data: bytes, keys: RoundKeys, nonce: int) -> bytes:
    """XOR ``data`` with the keystream E(nonce ^ 0), E(nonce ^ 1), ...

    Counter blocks are 64-bit big-endian; the same call performs encryption
    and decryption and the output always has the input's length.
    """
    if not 0 <= nonce <= cipher.MASK64:
        raise ValueError("nonce must be a 64-bit unsigned integer")
    out = bytearray()
    for j, off in enumerate(range(0, len(data), BLOCK_BYTES)):
        chunk = data[off:off + BLOCK_BYTES]
        stream = cipher.encrypt_block(nonce ^ j, keys).to_bytes(BLOCK_BYTES, "big")
        word = int.from_bytes(chunk, "big") ^ int.from_bytes(stream[:len(chunk)], "big")
        out += word.to_bytes(len(chunk), "big")
    return bytes(out)


def pack_container(ciphertext: bytes, mode: str, nonce: int = 0) -> bytes:
    """Frame raw ciphertext as a SIT1 container."""
    if mode not in _MODE_BYTE:
        raise ValueError(f"unknown mode {mode!r}")
    return MAGIC + bytes([_MODE_BYTE[mode]]) + nonce.to_bytes(8, "big") + ciphertext


def unpack_container(blob: bytes) -> tuple[str, int, bytes]:
    """Split a SIT1 container into (mode, nonce, ciphertext)."""
    if len(blob) < 13:
        raise ContainerError("container shorter than the 13-byte header")
    if blob[:4] != MAGIC:
        raise ContainerError(f"bad magic {blob[:4]!r}, expected {MAGIC!r}")
    mode = _BYTE_MODE.get(blob[4])
    if mode is None:
        raise ContainerError(f"unknown mode byte {blob[4]:#04x}")
    nonce = int.from_bytes(blob[5:13], "big")
    return mode, nonce, blob[13:]


def encrypt_message(data: bytes, keys: RoundKeys, mode: str = ECB,
                    nonce: int = 0) -> bytes:
    """Encrypt a byte string and return the framed SIT1 container."""
    if mode == ECB:
        return pack_container(ecb_encrypt(data, keys), ECB, 0)
    if mode == CTR:
        return pack_container(ctr_process(data, keys, nonce), CTR, nonce)
    raise ValueError(f"unknown mode {mode!r}")


def decrypt_message(blob: bytes, keys: RoundKeys) -> bytes:
    """Decrypt a SIT1 container produced by :func:`encrypt_message`."""
    mode, nonce, ciphertext = unpack_container(blob)
    if mode == ECB:
        return ecb_decrypt(ciphertext, keys)
    return ctr_process(ciphertext, keys, nonce)
