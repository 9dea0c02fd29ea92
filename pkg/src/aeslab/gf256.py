"""GF(2^8) arithmetic and lookup-table generation for the Rijndael cipher.

All arithmetic is over the field defined by the reduction polynomial
x^8 + x^4 + x^3 + x + 1 (0x11B).  Field elements are plain ints in
0..255.  The S-boxes and the fixed-multiplicand table are generated
from first principles at import time rather than hard-coded, so the
test suite can cross-check generation against independent oracles.
"""

from dataclasses import dataclass

REDUCTION_POLY = 0x11B

# The six non-identity multiplicands that appear in MixColumns ({02, 03})
# and InvMixColumns ({09, 0B, 0D, 0E}).  This tuple fixes the row order
# of MulTable; consumers index rows by coefficient, never by row number.
MUL_TABLE_COEFFICIENTS = (0x02, 0x03, 0x09, 0x0B, 0x0D, 0x0E)

AFFINE_CONSTANT = 0x63


def xtime(a: int) -> int:
    """Multiply by {02}: shift left, reduce once if the high bit falls out."""
    a <<= 1
    if a & 0x100:
        a ^= REDUCTION_POLY
    return a


def gf_mul(a: int, b: int) -> int:
    """Shift-and-xor product of two field elements."""
    p = 0
    while b:
        if b & 1:
            p ^= a
        a <<= 1
        if a & 0x100:
            a ^= REDUCTION_POLY
        b >>= 1
    return p


def gf_inverse(a: int) -> int:
    """Multiplicative inverse, with 0 mapped to 0 (Rijndael convention)."""
    if a == 0:
        return 0
    # a^254 = a^-1 in GF(2^8), by Fermat's little theorem for fields.
    result = 1
    base = a
    e = 254
    while e:
        if e & 1:
            result = gf_mul(result, base)
        base = gf_mul(base, base)
        e >>= 1
    return result


def _affine(x: int) -> int:
    # b'_i = b_i + b_{i+4} + b_{i+5} + b_{i+6} + b_{i+7} + c_i (indices mod 8)
    out = 0
    for i in range(8):
        bit = (
            (x >> i)
            ^ (x >> ((i + 4) % 8))
            ^ (x >> ((i + 5) % 8))
            ^ (x >> ((i + 6) % 8))
            ^ (x >> ((i + 7) % 8))
            ^ (AFFINE_CONSTANT >> i)
        ) & 1
        out |= bit << i
    return out


@dataclass(frozen=True)
class SBoxPair:
    """Forward and inverse substitution boxes, each 256 bytes."""

    forward: bytes
    inverse: bytes

    @property
    def footprint_bytes(self) -> int:
        return len(self.forward) + len(self.inverse)


@dataclass(frozen=True)
class MulTable:
    """Products of every byte with each fixed MixColumns coefficient.

    Six rows of 256 bytes each (1536 bytes total), ordered per
    MUL_TABLE_COEFFICIENTS.  rows[c][x] == gf_mul(c, x).
    """

    rows: tuple

    def __getitem__(self, coefficient: int) -> bytes:
        i = MUL_TABLE_COEFFICIENTS.index(coefficient)
        return self.rows[i]

    @property
    def footprint_bytes(self) -> int:
        return sum(len(row) for row in self.rows)


def build_sbox() -> SBoxPair:
    """Build the S-box as affine(inverse(x)) and its permutation inverse."""
    forward = bytearray(256)
    inverse = bytearray(256)
    for x in range(256):
        forward[x] = _affine(gf_inverse(x))
    for x in range(256):
        inverse[forward[x]] = x
    return SBoxPair(bytes(forward), bytes(inverse))


def build_mul_table() -> MulTable:
    """Tabulate gf_mul for the six fixed MixColumns/InvMixColumns coefficients."""
    rows = tuple(
        bytes(gf_mul(c, x) for x in range(256)) for c in MUL_TABLE_COEFFICIENTS
    )
    return MulTable(rows)


# Shared singletons; immutable after construction, safe for concurrent reads.
SBOX_PAIR = build_sbox()
MUL_TABLE = build_mul_table()
