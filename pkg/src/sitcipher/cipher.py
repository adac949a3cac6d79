"""SIT block cipher core: 64-bit blocks, 64-bit keys, five rounds.

A block is handled as four 16-bit segments.  Each round keys the two outer
segments by bitwise XNOR with the 16-bit round key and mixes the inner
segments by XOR with the f-function of the keyed outer segments; between
rounds the segment pairs are swapped.  Five round keys are expanded from
the 64-bit cipher key; the fifth is the XOR of the first four.

Conventions used throughout (all test vectors depend on them): words are
written big-endian, bit 1 / nibble 1 of a word is its most significant
bit / nibble, and segment 1 is the most significant quarter of a block.
"""

from typing import NamedTuple

MASK16 = 0xFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF
NUM_ROUNDS = 5

# 4-bit substitution tables.  Both are involutions; together with the
# mirrored layer order inside the f-function this makes f self-inverse.
P_TABLE = (0x3, 0xF, 0xE, 0x0, 0x5, 0x4, 0xB, 0xC,
           0xD, 0xA, 0x9, 0x6, 0x7, 0x8, 0x2, 0x1)
Q_TABLE = (0x9, 0xE, 0x5, 0x6, 0xA, 0x2, 0x3, 0xC,
           0xF, 0x0, 0x4, 0xD, 0x7, 0xB, 0x1, 0x8)


def p_sub(x: int) -> int:
    """P substitution of a single nibble."""
    return P_TABLE[x]


def q_sub(x: int) -> int:
    """Q substitution of a single nibble."""
    return Q_TABLE[x]


# P acts on the high nibble of a byte, Q on the low nibble; applying this
# table to both bytes of a segment substitutes its nibbles P, Q, P, Q.
_SUB_BYTE = tuple(P_TABLE[b >> 4] << 4 | Q_TABLE[b & 0xF] for b in range(256))


def _build_transpose_tables():
    # A segment is a 4x4 bit matrix in row-major order, MSB first: cell
    # (r, c) lives at bit 15 - (4r + c).  The transpose moves it to
    # 15 - (4c + r); each byte's contribution is independent of the other.
    hi = [0] * 256
    lo = [0] * 256
    for value in range(256):
        for k in range(8):
            if not value >> k & 1:
                continue
            r, c = divmod(7 - k, 4)       # high byte holds rows 0 and 1
            hi[value] |= 1 << 15 - (4 * c + r)
            r, c = divmod(15 - k, 4)      # low byte holds rows 2 and 3
            lo[value] |= 1 << 15 - (4 * c + r)
    return tuple(hi), tuple(lo)


_TRANSPOSE_HI, _TRANSPOSE_LO = _build_transpose_tables()


def _build_f_table():
    sub = _SUB_BYTE
    thi, tlo = _TRANSPOSE_HI, _TRANSPOSE_LO
    table = []
    for x in range(1 << 16):
        s = sub[x >> 8] << 8 | sub[x & 0xFF]
        t = thi[s >> 8] | tlo[s & 0xFF]
        table.append(sub[t >> 8] << 8 | sub[t & 0xFF])
    return tuple(table)


F_TABLE = _build_f_table()


def f_function(segment: int) -> int:
    """Involutional 16-bit mixer: substitute, bit-transpose, substitute."""
    return F_TABLE[segment]


def gather_key_nibbles(kc: int, i: int) -> int:
    """Segment built from key nibbles i, i+4, i+8, i+12 (1-based from the MSB).

    The four segments for i = 1..4 partition the 64-bit key with stride 4.
    """
    if not 1 <= i <= 4:
        raise ValueError(f"nibble group index must be in 1..4, got {i}")
    out = 0
    for idx in (i, i + 4, i + 8, i + 12):
        out = out << 4 | (kc >> 4 * (16 - idx)) & 0xF
    return out


# Bit orders for the four round-key rearrangements: entry j names which bit
# (1 = MSB) of the mixed segment lands in output position j.
_ROUND_KEY_BIT_ORDER = (
    (4, 3, 2, 1, 5, 6, 7, 8, 12, 11, 10, 9, 13, 14, 15, 16),
    (1, 5, 9, 13, 14, 10, 6, 2, 3, 7, 11, 15, 16, 12, 8, 4),
    (1, 2, 3, 4, 8, 7, 6, 5, 9, 10, 11, 12, 16, 15, 14, 13),
    (13, 9, 5, 1, 2, 6, 10, 14, 15, 11, 7, 3, 4, 8, 12, 16),
)


def permute_round_key(word: int, i: int) -> int:
    """Rearrange the 16 bits of ``word`` with the pattern for round key ``i``."""
    if not 1 <= i <= 4:
        raise ValueError(f"round key index must be in 1..4, got {i}")
    out = 0
    for j in _ROUND_KEY_BIT_ORDER[i - 1]:
        out = out << 1 | (word >> 16 - j) & 1
    return out


class RoundKeys(NamedTuple):
    """The five 16-bit round keys; k5 is always k1 ^ k2 ^ k3 ^ k4."""

    k1: int
    k2: int
    k3: int
    k4: int
    k5: int


def expand_key(kc: int) -> RoundKeys:
    """Expand a 64-bit cipher key into the five round keys."""
    if not 0 <= kc <= MASK64:
        raise ValueError("cipher key must be a 64-bit unsigned integer")
    k1, k2, k3, k4 = (
        permute_round_key(f_function(gather_key_nibbles(kc, i)), i)
        for i in (1, 2, 3, 4)
    )
    return RoundKeys(k1, k2, k3, k4, k1 ^ k2 ^ k3 ^ k4)


def split_block(block: int) -> tuple[int, int, int, int]:
    """The four 16-bit segments of a 64-bit block, most significant first."""
    return (block >> 48 & MASK16, block >> 32 & MASK16,
            block >> 16 & MASK16, block & MASK16)


def join_block(segments) -> int:
    """Concatenate four 16-bit segments back into a 64-bit block."""
    s1, s2, s3, s4 = segments
    return s1 << 48 | s2 << 32 | s3 << 16 | s4


def xnor16(a: int, b: int) -> int:
    """Bitwise XNOR of two 16-bit words."""
    return ~(a ^ b) & MASK16


def encrypt_round(p, k: int):
    """One round on segments (s1, s2, s3, s4) under round key ``k``.

    The outer segments are keyed by XNOR; each inner segment is XORed with
    the f-function of the keyed outer segment on its far side.
    """
    s1, s2, s3, s4 = p
    r1 = ~(s1 ^ k) & MASK16
    r4 = ~(s4 ^ k) & MASK16
    return (r1, s3 ^ F_TABLE[r1], s2 ^ F_TABLE[r4], r4)


def invert_round(r, k: int):
    """Exact inverse of :func:`encrypt_round`."""
    r1, r2, r3, r4 = r
    return (~(r1 ^ k) & MASK16, r3 ^ F_TABLE[r4], r2 ^ F_TABLE[r1],
            ~(r4 ^ k) & MASK16)


def apply_round_transform(r):
    """Swap the segment pairs between rounds: (a, b, c, d) -> (b, a, d, c)."""
    return (r[1], r[0], r[3], r[2])


def encrypt_block(block: int, keys: RoundKeys) -> int:
    """Encrypt one 64-bit block under expanded round keys."""
    if not 0 <= block <= MASK64:
        raise ValueError("block must be a 64-bit unsigned integer")
    state = split_block(block)
    for k in keys[:-1]:
        state = apply_round_transform(encrypt_round(state, k))
    return join_block(encrypt_round(state, keys.k5))


def decrypt_block(block: int, keys: RoundKeys) -> int:
    """Invert :func:`encrypt_block`."""
    if not 0 <= block <= MASK64:
        raise ValueError("block must be a 64-bit unsigned integer")
    state = invert_round(split_block(block), keys.k5)
    for k in (keys.k4, keys.k3, keys.k2, keys.k1):
        state = invert_round(apply_round_transform(state), k)
    return join_block(state)
