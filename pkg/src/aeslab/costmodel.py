"""Analytic operation-cost model for one-block AES encryption/decryption.

A pure calculator over the block-length parameter N_b, the round count
N_r, and the unit costs of bitwise AND (T_a), OR (T_o), and shift (T_s).
It is not asserted to match measured instruction counts of this
package's own code paths; reports juxtapose its predictions with wall
timings for qualitative comparison only.
"""

from dataclasses import dataclass

STANDARD_KEY_ROUNDS = ((128, 10), (192, 12), (256, 14))


@dataclass(frozen=True)
class CostParams:
    n_b: int
    n_r: int
    t_a: float = 1.0
    t_o: float = 1.0
    t_s: float = 1.0

    def __post_init__(self):
        if self.n_b < 1:
            raise ValueError(f"n_b must be >= 1, got {self.n_b}")
        if self.n_r < 1:
            raise ValueError(f"n_r must be >= 1, got {self.n_r}")
        if min(self.t_a, self.t_o, self.t_s) < 0:
            raise ValueError("unit costs must be nonnegative")


@dataclass(frozen=True)
class OpCounts:
    ands: int = 0
    ors: int = 0
    xors: int = 0
    shifts: int = 0


# Per-transform operation counts, each linear in n_b.  The per-round
# counts come in two published forms (XOR-based and AND-based); both are
# exposed verbatim, unreconciled.  The closed-form totals below are the
# canonical model.
_TRANSFORM_COUNTS = {
    "addroundkey": lambda n_b: OpCounts(ands=8 * n_b, ors=4 * n_b),
    "subbytes": lambda n_b: OpCounts(ands=3 * n_b, ors=2 * n_b),
    "shiftrows": lambda n_b: OpCounts(ors=3 * n_b, shifts=3 * n_b),
    "roundxorform": lambda n_b: OpCounts(xors=19 * n_b, ors=8 * n_b, shifts=64 * n_b),
    "roundandform": lambda n_b: OpCounts(ands=38 * n_b, ors=27 * n_b, shifts=64 * n_b),
}


def transform_counts(transform: str, n_b: int) -> OpCounts:
    """Operation counts for one application of a named transform."""
    if n_b < 1:
        raise ValueError(f"n_b must be >= 1, got {n_b}")
    key = transform.lower().replace("_", "").replace("-", "")
    try:
        return _TRANSFORM_COUNTS[key](n_b)
    except KeyError:
        raise ValueError(f"unknown transform {transform!r}") from None


def encrypt_cycle_coefficients(n_b: int, n_r: int) -> tuple:
    """(AND, OR, shift) coefficients of the one-block encryption total."""
    c_a = 46 * n_b * n_r - 30 * n_b
    c_o = 31 * n_b * n_r + 12 * (n_r - 1) - 20 * n_b
    c_s = 64 * n_b * n_r + 96 * (n_r - 1) - 61 * n_b
    return (c_a, c_o, c_s)


def encrypt_cycles(p: CostParams) -> float:
    c_a, c_o, c_s = encrypt_cycle_coefficients(p.n_b, p.n_r)
    return c_a * p.t_a + c_o * p.t_o + c_s * p.t_s


def mixcol_delta(p: CostParams) -> float:
    """Extra cost of one InvMixColumns over one MixColumns (may go
    negative when shifts dominate)."""
    return 96 * p.n_b * p.t_a + 72 * p.n_b * p.t_o - 32 * p.n_b * p.t_s


def decrypt_cycles(p: CostParams) -> float:
    return encrypt_cycles(p) + mixcol_delta(p) * (p.n_r - 1)


def cost_grid_rows(n_b_values=(4, 6, 8), key_rounds=STANDARD_KEY_ROUNDS,
                   t_a: float = 1.0, t_o: float = 1.0, t_s: float = 1.0) -> list:
    """Rows of (n_b, n_r, key_bits, encrypt_cycles, decrypt_cycles) for
    the CSV grid emitted by the cost CLI."""
    rows = []
    for n_b in n_b_values:
        for key_bits, n_r in key_rounds:
            p = CostParams(n_b, n_r, t_a, t_o, t_s)
            rows.append((n_b, n_r, key_bits, encrypt_cycles(p), decrypt_cycles(p)))
    return rows
