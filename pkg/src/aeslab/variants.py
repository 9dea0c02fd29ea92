"""The optimization ladder over the baseline cipher.

Three tiers, all bit-compatible with the baseline:

* loop-unrolled transformations (the per-function optimizations);
* table-driven MixColumns/InvMixColumns via the 6x256 product table,
  so no shift-and-xor multiplication executes on the data path;
* fused T-table rounds: one set of four 256x4-byte tables per direction
  combines SubBytes, ShiftRows, and MixColumns into four lookups plus
  XORs per output column (8 KiB total for both directions).

A VariantPlan selects per round between the baseline path and the
T-table path, yielding the Base / Opt1 / Opt2 / OptF scenarios.
"""

from dataclasses import dataclass

from .core import (
    INV_S_BOX,
    S_BOX,
    KeySchedule,
    State,
    add_round_key,
    inv_mix_columns,
    inv_shift_rows,
    inv_sub_bytes,
    load_state,
    mix_columns,
    shift_rows,
    store_state,
    sub_bytes,
)
from .gf256 import MUL_TABLE, SBOX_PAIR, gf_mul

VARIANT_IDS = ("base", "opt1", "opt2", "optf")

# Footprint-report pseudo-configuration: S-boxes plus the 6x256 product
# table, with MixColumns kept as a separate (table-driven) step.
MULTABLE_CONFIG = "multable"


@dataclass(frozen=True)
class TTables:
    """Fused round tables: 4 encrypt + 4 decrypt tables of 256 4-byte entries.

    Entries are stored as packed big-endian words; byte 0 of an entry is
    the row-0 contribution of that table's column of the (Inv)MixColumns
    matrix applied to the (inverse) S-box output.
    """

    enc: tuple
    dec: tuple

    def enc_entry(self, table: int, x: int) -> bytes:
        return self.enc[table][x].to_bytes(4, "big")

    def dec_entry(self, table: int, x: int) -> bytes:
        return self.dec[table][x].to_bytes(4, "big")

    @property
    def enc_footprint_bytes(self) -> int:
        return sum(4 * len(t) for t in self.enc)

    @property
    def dec_footprint_bytes(self) -> int:
        return sum(4 * len(t) for t in self.dec)

    @property
    def footprint_bytes(self) -> int:
        return self.enc_footprint_bytes + self.dec_footprint_bytes


@dataclass(frozen=True)
class VariantPlan:
    """Per-round strategy: round_flags[r-1] is True when round r (1-based)
    takes the optimized path."""

    variant_id: str
    round_flags: tuple

    @property
    def n_r(self) -> int:
        return len(self.round_flags)


def build_t_tables() -> TTables:
    """Derive both table sets from the S-boxes and gf_mul."""
    sbox = SBOX_PAIR.forward
    inv_sbox = SBOX_PAIR.inverse
    enc0 = [0] * 256
    dec0 = [0] * 256
    for x in range(256):
        s = sbox[x]
        enc0[x] = (gf_mul(s, 2) << 24) | (s << 16) | (s << 8) | gf_mul(s, 3)
        t = inv_sbox[x]
        dec0[x] = (
            (gf_mul(t, 14) << 24)
            | (gf_mul(t, 9) << 16)
            | (gf_mul(t, 13) << 8)
            | gf_mul(t, 11)
        )

    def rot8(table):
        # next table = previous one rotated right by one byte
        return [((w >> 8) | ((w & 0xFF) << 24)) for w in table]

    enc1 = rot8(enc0)
    enc2 = rot8(enc1)
    dec1 = rot8(dec0)
    dec2 = rot8(dec1)
    return TTables(
        enc=(enc0, enc1, enc2, rot8(enc2)),
        dec=(dec0, dec1, dec2, rot8(dec2)),
    )


T_TABLES = build_t_tables()


def make_plan(variant_id: str, n_r: int) -> VariantPlan:
    """Base: no optimized rounds.  Opt1: every other round, starting with
    round 1.  Opt2: period-4 pattern of two optimized then two baseline
    rounds.  OptF: all rounds optimized."""
    if n_r < 1:
        raise ValueError(f"round count must be >= 1, got {n_r}")
    vid = variant_id.lower()
    if vid == "base":
        flags = (False,) * n_r
    elif vid == "opt1":
        flags = tuple(i % 2 == 0 for i in range(n_r))
    elif vid == "opt2":
        flags = tuple(i % 4 < 2 for i in range(n_r))
    elif vid == "optf":
        flags = (True,) * n_r
    else:
        raise ValueError(f"unknown variant {variant_id!r}")
    return VariantPlan(vid, flags)


# ---------------------------------------------------------------------------
# Loop-unrolled transformations (bit-identical to the baseline loops)

def unrolled_add_round_key(state: State, round_key: list) -> State:
    out = []
    for row, krow in zip(state, round_key):
        out.append([row[0] ^ krow[0], row[1] ^ krow[1],
                    row[2] ^ krow[2], row[3] ^ krow[3]])
    return out


def unrolled_sub_bytes(state: State) -> State:
    box = S_BOX
    out = []
    for row in state:
        out.append([box[row[0]], box[row[1]], box[row[2]], box[row[3]]])
    return out


def unrolled_inv_sub_bytes(state: State) -> State:
    box = INV_S_BOX
    out = []
    for row in state:
        out.append([box[row[0]], box[row[1]], box[row[2]], box[row[3]]])
    return out


def unrolled_shift_rows(state: State) -> State:
    r0, r1, r2, r3 = state
    return [
        r0[:],
        [r1[1], r1[2], r1[3], r1[0]],
        [r2[2], r2[3], r2[0], r2[1]],
        [r3[3], r3[0], r3[1], r3[2]],
    ]


def unrolled_inv_shift_rows(state: State) -> State:
    r0, r1, r2, r3 = state
    return [
        r0[:],
        [r1[3], r1[0], r1[1], r1[2]],
        [r2[2], r2[3], r2[0], r2[1]],
        [r3[1], r3[2], r3[3], r3[0]],
    ]


def table_mix_columns(state: State, table=MUL_TABLE) -> State:
    """MixColumns with all field products taken from the 6x256 table."""
    m2 = table[0x02]
    m3 = table[0x03]
    out = [[0] * 4 for _ in range(4)]
    for j in range(4):
        a0 = state[0][j]
        a1 = state[1][j]
        a2 = state[2][j]
        a3 = state[3][j]
        out[0][j] = m2[a0] ^ m3[a1] ^ a2 ^ a3
        out[1][j] = a0 ^ m2[a1] ^ m3[a2] ^ a3
        out[2][j] = a0 ^ a1 ^ m2[a2] ^ m3[a3]
        out[3][j] = m3[a0] ^ a1 ^ a2 ^ m2[a3]
    return out


def table_inv_mix_columns(state: State, table=MUL_TABLE) -> State:
    m9 = table[0x09]
    mb = table[0x0B]
    md = table[0x0D]
    me = table[0x0E]
    out = [[0] * 4 for _ in range(4)]
    for j in range(4):
        a0 = state[0][j]
        a1 = state[1][j]
        a2 = state[2][j]
        a3 = state[3][j]
        out[0][j] = me[a0] ^ mb[a1] ^ md[a2] ^ m9[a3]
        out[1][j] = m9[a0] ^ me[a1] ^ mb[a2] ^ md[a3]
        out[2][j] = md[a0] ^ m9[a1] ^ me[a2] ^ mb[a3]
        out[3][j] = mb[a0] ^ md[a1] ^ m9[a2] ^ me[a3]
    return out


# ---------------------------------------------------------------------------
# Fused T-table rounds

def _pack_columns(matrix) -> list:
    return [
        (matrix[0][j] << 24) | (matrix[1][j] << 16) | (matrix[2][j] << 8) | matrix[3][j]
        for j in range(4)
    ]


def _enc_key_words(ks: KeySchedule) -> list:
    words = ks._derived.get("enc_words")
    if words is None:
        words = [_pack_columns(rk) for rk in ks.round_keys]
        ks._derived["enc_words"] = words
    return words


def _dec_key_words(ks: KeySchedule) -> list:
    # InvMixColumns(state ^ rk) == InvMixColumns(state) ^ InvMixColumns(rk),
    # so the fused decrypt round XORs the InvMixColumns image of the key.
    words = ks._derived.get("dec_words")
    if words is None:
        words = [None] * (ks.n_r + 1)
        for r in range(1, ks.n_r):
            words[r] = _pack_columns(inv_mix_columns(ks.round_keys[r]))
        ks._derived["dec_words"] = words
    return words


def _t_round(state: State, rk_words: list) -> State:
    """SubBytes + ShiftRows + MixColumns + AddRoundKey in 16 lookups."""
    t0, t1, t2, t3 = T_TABLES.enc
    r0, r1, r2, r3 = state
    out = [[0] * 4 for _ in range(4)]
    for j in range(4):
        w = (
            t0[r0[j]]
            ^ t1[r1[(j + 1) % 4]]
            ^ t2[r2[(j + 2) % 4]]
            ^ t3[r3[(j + 3) % 4]]
            ^ rk_words[j]
        )
        out[0][j] = (w >> 24) & 0xFF
        out[1][j] = (w >> 16) & 0xFF
        out[2][j] = (w >> 8) & 0xFF
        out[3][j] = w & 0xFF
    return out


def _d_round(state: State, ik_words: list) -> State:
    """InvShiftRows + InvSubBytes + AddRoundKey + InvMixColumns fused;
    ik_words must hold the InvMixColumns image of the round key."""
    d0, d1, d2, d3 = T_TABLES.dec
    r0, r1, r2, r3 = state
    out = [[0] * 4 for _ in range(4)]
    for j in range(4):
        w = (
            d0[r0[j]]
            ^ d1[r1[(j + 3) % 4]]
            ^ d2[r2[(j + 2) % 4]]
            ^ d3[r3[(j + 1) % 4]]
            ^ ik_words[j]
        )
        out[0][j] = (w >> 24) & 0xFF
        out[1][j] = (w >> 16) & 0xFF
        out[2][j] = (w >> 8) & 0xFF
        out[3][j] = w & 0xFF
    return out


def _check_plan(ks: KeySchedule, plan: VariantPlan) -> None:
    if plan.n_r != ks.n_r:
        raise ValueError(
            f"plan covers {plan.n_r} rounds but schedule has {ks.n_r}"
        )


def encrypt_block_variant(block: bytes, ks: KeySchedule, plan: VariantPlan) -> bytes:
    """Encrypt one block, choosing per round between the baseline path and
    the T-table path.  Ciphertext is bit-identical for every plan.

    The final round has no MixColumns, so its optimized path is the
    unrolled S-box/ShiftRows/AddRoundKey sequence rather than a fused
    table lookup.
    """
    _check_plan(ks, plan)
    s = load_state(block)
    rk = ks.round_keys
    flags = plan.round_flags
    enc_words = _enc_key_words(ks)
    s = add_round_key(s, rk[0])
    for r in range(1, ks.n_r):
        if flags[r - 1]:
            s = _t_round(s, enc_words[r])
        else:
            s = sub_bytes(s)
            s = shift_rows(s)
            s = mix_columns(s)
            s = add_round_key(s, rk[r])
    if flags[ks.n_r - 1]:
        s = unrolled_sub_bytes(s)
        s = unrolled_shift_rows(s)
        s = unrolled_add_round_key(s, rk[ks.n_r])
    else:
        s = sub_bytes(s)
        s = shift_rows(s)
        s = add_round_key(s, rk[ks.n_r])
    return store_state(s)


def decrypt_block_variant(block: bytes, ks: KeySchedule, plan: VariantPlan) -> bytes:
    """Inverse of encrypt_block_variant for the same schedule and any plan.

    Decryption consumes the round flags in reverse stage order: the flag
    for round r selects the path of the fused stage that uses round key
    r, and the first flag selects the path of the trailing
    InvShiftRows/InvSubBytes/AddRoundKey stage.
    """
    _check_plan(ks, plan)
    s = load_state(block)
    rk = ks.round_keys
    flags = plan.round_flags
    dec_words = _dec_key_words(ks)
    s = add_round_key(s, rk[ks.n_r])
    for r in range(ks.n_r - 1, 0, -1):
        if flags[r - 1]:
            s = _d_round(s, dec_words[r])
        else:
            s = inv_shift_rows(s)
            s = inv_sub_bytes(s)
            s = add_round_key(s, rk[r])
            s = inv_mix_columns(s)
    if flags[ks.n_r - 1]:
        s = unrolled_inv_shift_rows(s)
        s = unrolled_inv_sub_bytes(s)
        s = unrolled_add_round_key(s, rk[0])
    else:
        s = inv_shift_rows(s)
        s = inv_sub_bytes(s)
        s = add_round_key(s, rk[0])
    return store_state(s)


def static_footprint(variant_id: str) -> dict:
    """Bytes of static lookup tables resident for a variant.

    Reported per table category: the two S-boxes, the 6x256 product
    table, and the fused round tables.  (Compiled code size is
    toolchain-dependent and not reported.)
    """
    vid = variant_id.lower()
    sbox = SBOX_PAIR.footprint_bytes
    if vid == "base":
        return {"sbox": sbox, "mul_table": 0, "t_tables": 0}
    if vid in ("opt1", "opt2", "optf"):
        return {"sbox": sbox, "mul_table": 0, "t_tables": T_TABLES.footprint_bytes}
    if vid == MULTABLE_CONFIG:
        return {"sbox": sbox, "mul_table": MUL_TABLE.footprint_bytes, "t_tables": 0}
    raise ValueError(f"unknown variant {variant_id!r}")
