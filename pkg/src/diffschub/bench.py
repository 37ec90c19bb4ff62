"""Wall-clock comparison of the operator recursions against the brute-force oracles."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, asdict

from . import oracle, product, yops
from .exact import FormalSum
from .perm import PermutationZ, parse_perm
from .young import Partition

__all__ = ["BenchRow", "bench_lr", "bench_mult_ss", "write_csv", "growth"]


@dataclass
class BenchRow:
    size: int
    left: str
    right: str
    operator_seconds: float
    oracle_seconds: float
    terms: int
    agree: bool


def _two_row(n: int) -> Partition:
    return Partition(((n + 1) // 2, n // 2))


def _lr_oracle(lam: Partition, mu: Partition) -> FormalSum:
    m = len(lam) + len(mu)
    p = oracle.poly_multiply(oracle.schur_poly(lam, m), oracle.schur_poly(mu, m), keep=oracle.is_dominant)
    return oracle.ssyt_expand(p, check=False)


def bench_lr(max_size: int = 7) -> list[BenchRow]:
    """``s_λ s_λ`` for two-row ``λ`` of size ``1 .. max_size``, each method from a cold cache."""
    rows = []
    for n in range(1, max_size + 1):
        lam = _two_row(n)
        yops.multiply_cache_clear()
        t = time.perf_counter()
        a = yops.multiply(lam, lam)
        t_op = time.perf_counter() - t
        t = time.perf_counter()
        b = _lr_oracle(lam, lam)
        t_or = time.perf_counter() - t
        rows.append(BenchRow(n, str(lam), str(lam), t_op, t_or, len(a), a == b))
    return rows


def bench_mult_ss(max_size: int = 6, perm: PermutationZ | None = None) -> list[BenchRow]:
    """``s_λ S_w`` for two-row ``λ`` of size ``1 .. max_size`` and a fixed ``w``."""
    w = parse_perm("2,4,1,3") if perm is None else perm
    rows = []
    for n in range(1, max_size + 1):
        lam = _two_row(n)
        cache = product.ProductCache()
        t = time.perf_counter()
        a = product.schur_times_schubert(lam, w, cache)
        t_op = time.perf_counter() - t
        t = time.perf_counter()
        b = oracle.schur_schubert_product(lam, w)
        t_or = time.perf_counter() - t
        rows.append(BenchRow(n, str(lam), str(w), t_op, t_or, len(a), a == b))
    return rows


def write_csv(rows: list[BenchRow], path) -> None:
    fields = list(BenchRow.__dataclass_fields__)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        wr = csv.DictWriter(fh, fieldnames=fields)
        wr.writeheader()
        for r in rows:
            d = asdict(r)
            d["operator_seconds"] = f"{r.operator_seconds:.6f}"
            d["oracle_seconds"] = f"{r.oracle_seconds:.6f}"
            wr.writerow(d)


def growth(rows: list[BenchRow], floor: float = 1e-4) -> tuple[float, float]:
    """Ratio of last to first timing for each method (timings clamped below at ``floor``)."""
    first, last = rows[0], rows[-1]
    op = max(last.operator_seconds, floor) / max(first.operator_seconds, floor)
    orc = max(last.oracle_seconds, floor) / max(first.oracle_seconds, floor)
    return op, orc
