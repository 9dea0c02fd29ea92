"""Wall-clock benchmark harness.

Reproduces the encryption-time-vs-payload-size experiment across key
sizes, optimization variants, and modes; a round-count sweep; and
per-transform microbenchmarks.  Absolute timings are machine-specific,
so assertions elsewhere target relative orderings only; measured
percentages are printed beside the originally reported bands for
qualitative comparison.

Every benchmarked variant's output is verified against the baseline
before its timing loop starts, so a fast-but-wrong path cannot produce
a result.  Timing loops are single-threaded; key expansion and padding
are timed separately from the bulk work.
"""

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, fields

from . import core, variants
from .core import key_expansion
from .modes import cbc_decrypt, cbc_encrypt, ecb_decrypt, ecb_encrypt, pkcs7_pad
from .variants import make_plan

KEY_ROUNDS = {128: 10, 192: 12, 256: 14}

# Table-1 payload sizes (KiB of the three bitmap workloads).
DEFAULT_SIZES = (117 * 1024, 263 * 1024, 468 * 1024)

# Originally reported gains, for side-by-side printing only.
REPORTED_VARIANT_GAIN_PCT = {"opt1": 13.0, "opt2": 12.0, "optf": 20.0}
REPORTED_SWEEP_BAND = {"encrypt": (14.0, 19.0), "decrypt": (15.0, 30.0)}
REPORTED_TRANSFORM_GAIN_PCT = {
    "sub_bytes": 20.0,
    "shift_rows": 30.0,
    "add_round_key": 21.0,
    "mix_columns": 13.0,
}


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple = DEFAULT_SIZES
    key_sizes: tuple = (128, 192, 256)
    variants: tuple = ("base", "opt1", "opt2", "optf")
    modes: tuple = ("ecb", "cbc")
    ops: tuple = ("encrypt",)
    repetitions: int = 5
    warmup: int = 1
    seed: int = 0
    rounds: int | None = None  # None = standard count for the key size

    def __post_init__(self):
        if self.repetitions < 3:
            raise ValueError(f"repetitions must be >= 3, got {self.repetitions}")
        if self.warmup < 0:
            raise ValueError("warmup must be >= 0")
        if any(s <= 0 for s in self.sizes):
            raise ValueError("payload sizes must be positive")


@dataclass(frozen=True)
class BenchResult:
    label: str
    size_bytes: int
    key_bits: int
    n_r: int
    variant: str
    mode: str
    op: str
    repetitions: int
    warmup: int
    median_s: float
    mean_s: float
    std_s: float
    min_s: float
    max_s: float
    throughput_bps: float
    expand_s: float = 0.0
    pad_s: float = 0.0


def _time_call(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _measure_interleaved(fns: list, repetitions: int, warmup: int) -> list:
    """Per-function sample lists, with repetitions taken round-robin
    across the functions so a transient load spike lands on one
    repetition of many cells instead of every repetition of one cell."""
    for fn in fns:
        for _ in range(warmup):
            fn()
    samples = [[] for _ in fns]
    for _ in range(repetitions):
        for i, fn in enumerate(fns):
            samples[i].append(_time_call(fn))
    return samples


def _result(label, size_bytes, key_bits, n_r, variant, mode, op,
            samples, warmup, expand_s=0.0, pad_s=0.0) -> BenchResult:
    median = statistics.median(samples)
    return BenchResult(
        label=label,
        size_bytes=size_bytes,
        key_bits=key_bits,
        n_r=n_r,
        variant=variant,
        mode=mode,
        op=op,
        repetitions=len(samples),
        warmup=warmup,
        median_s=median,
        mean_s=statistics.fmean(samples),
        std_s=statistics.stdev(samples) if len(samples) > 1 else 0.0,
        min_s=min(samples),
        max_s=max(samples),
        throughput_bps=size_bytes / median if median > 0 else float("inf"),
        expand_s=expand_s,
        pad_s=pad_s,
    )


def _cell_fn(mode, op, padded, reference_ct, ks, iv, plan):
    if mode == "ecb" and op == "encrypt":
        return (lambda: ecb_encrypt(padded, ks, plan)), reference_ct
    if mode == "ecb":
        return (lambda: ecb_decrypt(reference_ct, ks, plan)), padded
    if op == "encrypt":
        return (lambda: cbc_encrypt(padded, ks, iv, plan)), reference_ct
    return (lambda: cbc_decrypt(reference_ct, ks, iv, plan)), padded


def run_matrix(cfg: BenchConfig) -> list:
    """One result per (size x key size x variant x mode x op) cell.

    Payloads come from a generator seeded with cfg.seed, so re-running
    with the same seed reproduces them byte-for-byte.  Within each
    (size, key, mode) group the repetitions run interleaved across
    variant/op cells.
    """
    rng = random.Random(cfg.seed)
    results = []
    for size in cfg.sizes:
        payload = rng.randbytes(size)
        t0 = time.perf_counter()
        padded = pkcs7_pad(payload)
        pad_s = time.perf_counter() - t0
        for key_bits in cfg.key_sizes:
            key = rng.randbytes(key_bits // 8)
            n_r = cfg.rounds if cfg.rounds is not None else KEY_ROUNDS[key_bits]
            t0 = time.perf_counter()
            ks = key_expansion(key, n_r)
            expand_s = time.perf_counter() - t0
            iv = rng.randbytes(16)
            for mode in cfg.modes:
                base_plan = make_plan("base", n_r)
                if mode == "ecb":
                    reference_ct = ecb_encrypt(padded, ks, base_plan)
                else:
                    reference_ct = cbc_encrypt(padded, ks, iv, base_plan)
                cells = []
                for variant in cfg.variants:
                    plan = make_plan(variant, n_r)
                    for op in cfg.ops:
                        fn, expected = _cell_fn(mode, op, padded, reference_ct,
                                                ks, iv, plan)
                        if fn() != expected:
                            raise AssertionError(
                                f"{variant}/{mode}/{op} output disagrees with baseline"
                            )
                        cells.append((variant, op, fn))
                all_samples = _measure_interleaved(
                    [fn for _, _, fn in cells], cfg.repetitions, cfg.warmup,
                )
                for (variant, op, _fn), samples in zip(cells, all_samples):
                    label = f"{size}B/{key_bits}k/{n_r}r/{variant}/{mode}/{op}"
                    results.append(_result(
                        label, len(padded), key_bits, n_r, variant, mode,
                        op, samples, cfg.warmup, expand_s, pad_s,
                    ))
    return results


def round_sweep(
    sizes=(32 * 1024,),
    rounds=(2, 4, 6, 8, 10),
    key_bits: int = 128,
    variant: str = "base",
    repetitions: int = 5,
    warmup: int = 1,
    seed: int = 0,
) -> list:
    """Encrypt and decrypt timings while the round count steps up.

    All (round count x op) cells of one payload size are measured with
    interleaved repetitions, so a load spike cannot systematically
    inflate a single round count.
    """
    if any(r < 1 for r in rounds):
        raise ValueError("round counts must be >= 1")
    rng = random.Random(seed)
    results = []
    for size in sizes:
        payload = pkcs7_pad(rng.randbytes(size))
        key = rng.randbytes(key_bits // 8)
        cells = []
        for n_r in rounds:
            t0 = time.perf_counter()
            ks = key_expansion(key, n_r)
            expand_s = time.perf_counter() - t0
            plan = make_plan(variant, n_r)
            ct = ecb_encrypt(payload, ks, plan)
            for op, fn, expected in (
                ("encrypt", (lambda ks=ks, plan=plan: ecb_encrypt(payload, ks, plan)), ct),
                ("decrypt", (lambda ks=ks, plan=plan, ct=ct: ecb_decrypt(ct, ks, plan)), payload),
            ):
                if fn() != expected:
                    raise AssertionError(f"round sweep {op} self-check failed")
                cells.append((n_r, op, fn, expand_s))
        all_samples = _measure_interleaved(
            [fn for _, _, fn, _ in cells], repetitions, warmup,
        )
        for (n_r, op, _fn, expand_s), samples in zip(cells, all_samples):
            label = f"{size}B/{key_bits}k/{n_r}r/{variant}/ecb/{op}"
            results.append(_result(
                label, len(payload), key_bits, n_r, variant, "ecb", op,
                samples, warmup, expand_s,
            ))
    return results


TRANSFORM_PATHS = {
    "add_round_key": (core.add_round_key, variants.unrolled_add_round_key),
    "sub_bytes": (core.sub_bytes, variants.unrolled_sub_bytes),
    "shift_rows": (core.shift_rows, variants.unrolled_shift_rows),
    "mix_columns": (core.mix_columns, variants.table_mix_columns),
}


def microbench_transform(
    name: str,
    variant: str,
    iterations: int = 1_000_000,
    repetitions: int = 5,
    seed: int = 0,
) -> BenchResult:
    """Time one transform path over `iterations` state applications.

    variant "base" runs the plain-loop transform, "opt" its optimized
    counterpart (unrolled, or table-driven for mix_columns).  The
    applications are split into `repetitions` timed chunks; size_bytes
    holds the chunk size, so throughput reads as applications/second.
    """
    try:
        base_fn, opt_fn = TRANSFORM_PATHS[name]
    except KeyError:
        raise ValueError(f"unknown transform {name!r}") from None
    if variant == "base":
        fn = base_fn
    elif variant == "opt":
        fn = opt_fn
    else:
        raise ValueError(f"variant must be 'base' or 'opt', got {variant!r}")

    rng = random.Random(seed)
    pool = [
        [[rng.randrange(256) for _ in range(4)] for _ in range(4)]
        for _ in range(64)
    ]
    if name == "add_round_key":
        rk = [[rng.randrange(256) for _ in range(4)] for _ in range(4)]
        apply_fn = lambda s: fn(s, rk)
    else:
        apply_fn = fn

    chunk = max(1, iterations // repetitions)

    def run_chunk():
        for i in range(chunk):
            apply_fn(pool[i & 63])

    run_chunk()  # warmup
    samples = [_time_call(run_chunk) for _ in range(repetitions)]
    result = _result(
        f"{name}/{variant}/x{chunk * repetitions}", chunk, 0, 0, variant,
        "state", name, samples, 1,
    )
    return result


def microbench_all(iterations: int = 1_000_000, repetitions: int = 5, seed: int = 0) -> list:
    results = []
    for name in TRANSFORM_PATHS:
        for variant in ("base", "opt"):
            results.append(microbench_transform(name, variant, iterations, repetitions, seed))
    return results


# ---------------------------------------------------------------------------
# Reporting

def emit_report(results: list, fmt: str = "csv", out=None):
    """Render results as CSV or structured text.

    `out` may be a path (written and returned), a file-like object, or
    None (the rendered string is returned).  Column order is stable:
    configuration fields first, then statistics.
    """
    if not results:
        raise ValueError("no results to report")
    names = [f.name for f in fields(BenchResult)]
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf)
        writer.writerow(names)
        for r in results:
            writer.writerow([getattr(r, n) for n in names])
    elif fmt == "text":
        for r in results:
            for n in names:
                v = getattr(r, n)
                buf.write(f"{n}: {v:.6g}\n" if isinstance(v, float) else f"{n}: {v}\n")
            buf.write("\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    text = buf.getvalue()
    if out is None:
        return text
    if isinstance(out, str):
        with open(out, "w") as fh:
            fh.write(text)
        return out
    out.write(text)
    return out


def variant_gain_lines(results: list) -> list:
    """Measured speedups of each variant over base, with the originally
    reported percentages alongside (informational, not pass/fail)."""
    cells = {}
    for r in results:
        cells.setdefault((r.size_bytes, r.key_bits, r.n_r, r.mode, r.op), {})[r.variant] = r
    lines = []
    for (size, key_bits, n_r, mode, op), by_variant in sorted(cells.items()):
        base = by_variant.get("base")
        if base is None:
            continue
        for variant, r in sorted(by_variant.items()):
            if variant == "base":
                continue
            gain = (base.median_s - r.median_s) / base.median_s * 100.0
            reported = REPORTED_VARIANT_GAIN_PCT.get(variant)
            tail = f" (reported: {reported:.0f}%)" if reported is not None else ""
            lines.append(
                f"{mode}/{op} {size}B key{key_bits}: {variant} {gain:+.1f}% vs base{tail}"
            )
    return lines


def sweep_growth_lines(results: list) -> list:
    """Median growth between consecutive round counts, per operation."""
    series = {}
    for r in results:
        series.setdefault((r.size_bytes, r.op), []).append(r)
    lines = []
    for (size, op), rs in sorted(series.items()):
        rs.sort(key=lambda r: r.n_r)
        lo, hi = REPORTED_SWEEP_BAND.get(op, (None, None))
        band = f" (reported band: {lo:.0f}-{hi:.0f}%)" if lo is not None else ""
        for a, b in zip(rs, rs[1:]):
            growth = (b.median_s - a.median_s) / a.median_s * 100.0
            lines.append(
                f"{op} {size}B: rounds {a.n_r}->{b.n_r} time {growth:+.1f}%{band}"
            )
    return lines


def microbench_gain_lines(results: list) -> list:
    by_name = {}
    for r in results:
        by_name.setdefault(r.op, {})[r.variant] = r
    lines = []
    for name, pair in sorted(by_name.items()):
        if "base" not in pair or "opt" not in pair:
            continue
        base, opt = pair["base"], pair["opt"]
        gain = (base.median_s - opt.median_s) / base.median_s * 100.0
        reported = REPORTED_TRANSFORM_GAIN_PCT.get(name)
        tail = f" (reported: {reported:.0f}%)" if reported is not None else ""
        lines.append(f"{name}: optimized {gain:+.1f}% vs base{tail}")
    return lines
