"""Baseline Rijndael cipher: key expansion, the four round transformations
written as plain nested loops, and whole-block encrypt/decrypt.

The state is a 4x4 byte matrix indexed [row][column].  A 16-byte block
loads column-major: byte i lands at row i % 4, column i // 4.  All
transformations are pure functions returning a fresh state; a
KeySchedule is immutable after expansion, so encrypt/decrypt are safe
for concurrent use.
"""

from dataclasses import dataclass, field

from .gf256 import SBOX_PAIR, gf_mul, xtime

S_BOX = SBOX_PAIR.forward
INV_S_BOX = SBOX_PAIR.inverse

MIX_MATRIX = ((0x02, 0x03, 0x01, 0x01),
              (0x01, 0x02, 0x03, 0x01),
              (0x01, 0x01, 0x02, 0x03),
              (0x03, 0x01, 0x01, 0x02))

INV_MIX_MATRIX = ((0x0E, 0x0B, 0x0D, 0x09),
                  (0x09, 0x0E, 0x0B, 0x0D),
                  (0x0D, 0x09, 0x0E, 0x0B),
                  (0x0B, 0x0D, 0x09, 0x0E))

BLOCK_SIZE = 16

ROUNDS_BY_KEY_BYTES = {16: 10, 24: 12, 32: 14}

State = list  # 4 rows of 4 ints


@dataclass
class KeySchedule:
    """Expanded round keys: (n_r + 1) 4x4 matrices plus key metadata."""

    round_keys: list
    key_size_bits: int
    n_r: int
    # Derived per-schedule tables (packed key words etc.), filled lazily
    # by consumers; excluded from equality and repr.
    _derived: dict = field(default_factory=dict, repr=False, compare=False)


def load_state(block: bytes) -> State:
    """16-byte block -> 4x4 state, column-major."""
    if len(block) != BLOCK_SIZE:
        raise ValueError(f"block must be {BLOCK_SIZE} bytes, got {len(block)}")
    return [[block[r + 4 * c] for c in range(4)] for r in range(4)]


def store_state(state: State) -> bytes:
    """4x4 state -> 16-byte block, inverse of load_state."""
    return bytes(state[i % 4][i // 4] for i in range(16))


def key_expansion(key: bytes, n_r: int | None = None) -> KeySchedule:
    """Standard Rijndael key expansion into 4*(n_r + 1) words.

    n_r defaults to the standard round count for the key size (10/12/14)
    but may be any count >= 1 for round-reduced or round-extended
    experiments; the expansion simply runs long enough.
    """
    if len(key) not in ROUNDS_BY_KEY_BYTES:
        raise ValueError(
            f"key must be 16, 24, or 32 bytes, got {len(key)}"
        )
    if n_r is None:
        n_r = ROUNDS_BY_KEY_BYTES[len(key)]
    if n_r < 1:
        raise ValueError(f"round count must be >= 1, got {n_r}")

    nk = len(key) // 4
    words = [list(key[4 * i:4 * (i + 1)]) for i in range(nk)]
    rc = 1
    for i in range(nk, 4 * (n_r + 1)):
        temp = words[i - 1]
        if i % nk == 0:
            temp = temp[1:] + temp[:1]
            temp = [S_BOX[b] for b in temp]
            temp[0] ^= rc
            rc = xtime(rc)
        elif nk > 6 and i % nk == 4:
            temp = [S_BOX[b] for b in temp]
        words.append([words[i - nk][j] ^ temp[j] for j in range(4)])

    round_keys = []
    for r in range(n_r + 1):
        cols = words[4 * r:4 * r + 4]
        round_keys.append([[cols[j][i] for j in range(4)] for i in range(4)])
    return KeySchedule(round_keys, len(key) * 8, n_r)


def add_round_key(state: State, round_key: list) -> State:
    out = [row[:] for row in state]
    for i in range(4):
        for j in range(4):
            out[i][j] ^= round_key[i][j]
    return out


def sub_bytes(state: State) -> State:
    out = [row[:] for row in state]
    for i in range(4):
        for j in range(4):
            out[i][j] = S_BOX[out[i][j]]
    return out


def inv_sub_bytes(state: State) -> State:
    out = [row[:] for row in state]
    for i in range(4):
        for j in range(4):
            out[i][j] = INV_S_BOX[out[i][j]]
    return out


def shift_rows(state: State) -> State:
    """Cyclically rotate row r left by r positions (row 0 unchanged)."""
    out = [row[:] for row in state]
    for i in range(1, 4):
        for j in range(4):
            out[i][j] = state[i][(j + i) % 4]
    return out


def inv_shift_rows(state: State) -> State:
    out = [row[:] for row in state]
    for i in range(1, 4):
        for j in range(4):
            out[i][j] = state[i][(j - i) % 4]
    return out


def mix_columns(state: State) -> State:
    """Multiply each column by the fixed circulant matrix over GF(2^8)."""
    out = [[0] * 4 for _ in range(4)]
    for j in range(4):
        for i in range(4):
            acc = 0
            for k in range(4):
                acc ^= gf_mul(state[k][j], MIX_MATRIX[i][k])
            out[i][j] = acc
    return out


def inv_mix_columns(state: State) -> State:
    out = [[0] * 4 for _ in range(4)]
    for j in range(4):
        for i in range(4):
            acc = 0
            for k in range(4):
                acc ^= gf_mul(state[k][j], INV_MIX_MATRIX[i][k])
            out[i][j] = acc
    return out


def encrypt_block(block: bytes, ks: KeySchedule) -> bytes:
    """Initial AddRoundKey, n_r - 1 full rounds, final round without MixColumns."""
    s = load_state(block)
    rk = ks.round_keys
    s = add_round_key(s, rk[0])
    for r in range(1, ks.n_r):
        s = sub_bytes(s)
        s = shift_rows(s)
        s = mix_columns(s)
        s = add_round_key(s, rk[r])
    s = sub_bytes(s)
    s = shift_rows(s)
    s = add_round_key(s, rk[ks.n_r])
    return store_state(s)


def decrypt_block(block: bytes, ks: KeySchedule) -> bytes:
    """Exact inverse of encrypt_block under the same schedule."""
    s = load_state(block)
    rk = ks.round_keys
    s = add_round_key(s, rk[ks.n_r])
    for r in range(ks.n_r - 1, 0, -1):
        s = inv_shift_rows(s)
        s = inv_sub_bytes(s)
        s = add_round_key(s, rk[r])
        s = inv_mix_columns(s)
    s = inv_shift_rows(s)
    s = inv_sub_bytes(s)
    s = add_round_key(s, rk[0])
    return store_state(s)
