"""
Schubert polynomials of permutations fixing every ``i <= 0``, their
expansion back into the Schubert basis, Monk's rule, Stanley symmetric
functions, and the Schur-times-Schubert product by brute force.

Reduced words follow the package convention ``w = s_{h_1} ... s_{h_l}``, for
which the compatible-sequence formula reads ``α_j <= h_j``, ``α`` weakly
increasing, strictly at ascents of ``h``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ..errors import NotInSpan
from ..exact import FormalSum
from ..perm import PermutationZ, from_lehmer_code, reduced_words, right_s, shift_tau
from ..young import Partition
from .poly import MonomialMap, poly_multiply
from .schur import schur_poly, ssyt_expand

__all__ = [
    "schubert_poly", "schubert_poly_pipe_dreams", "pipe_dreams", "compatible_sequences",
    "schubert_basis_expand", "monk_rule", "stanley_schur_expand", "schur_schubert_product",
    "oracle_shift",
]


def _require_positive(w: PermutationZ) -> None:
    if w.word and w.start < 1:
        raise ValueError(f"{w} does not fix the nonpositive integers")


def compatible_sequences(h: tuple[int, ...], m: int | None = None):
    """Sequences ``α`` with ``1 <= α_j <= min(h_j, m)``, weakly increasing, strict where ``h_j < h_{j+1}``."""
    n = len(h)
    out = []

    def rec(j, prev, acc):
        if j == n:
            out.append(tuple(acc))
            return
        lo = prev
        if j and h[j - 1] < h[j]:
            lo = prev + 1
        hi = h[j] if m is None else min(h[j], m)
        for a in range(max(lo, 1), hi + 1):
            acc.append(a)
            rec(j + 1, a, acc)
            acc.pop()

    rec(0, 1, [])
    return out


def _nvars(w: PermutationZ) -> int:
    return max(w.end, 1)


@lru_cache(maxsize=None)
def _schubert_terms(w: PermutationZ) -> tuple:
    n = _nvars(w)
    counts: Counter = Counter()
    for h in reduced_words(w):
        for alpha in compatible_sequences(h):
            e = [0] * n
            for a in alpha:
                e[a - 1] += 1
            counts[tuple(e)] += 1
    return tuple(counts.items())


def _truncate(terms, n: int, m: int | None) -> MonomialMap:
    if m is None or m >= n:
        p = MonomialMap(dict(terms), 1, n)
        return p if m is None else p.widen(1, m)
    return MonomialMap({e[:m]: c for e, c in terms if not any(e[m:])}, 1, m)


def schubert_poly(w: PermutationZ, m: int | None = None) -> MonomialMap:
    """``S_w`` from compatible sequences, over ``x_1 .. x_m`` (later variables set to zero)."""
    _require_positive(w)
    return _truncate(_schubert_terms(w), _nvars(w), m)


def pipe_dreams(w: PermutationZ):
    """
    Reduced pipe dreams of ``w`` as frozensets of crosses ``(i, j)``. A cross
    at row ``i`` and column ``j`` stands for the letter ``i + j - 1``; reading
    rows top to bottom, each from right to left, spells a reduced word of ``w``.
    """
    _require_positive(w)
    n = _nvars(w)
    target_len = w.length
    cells = [(i, j) for i in range(1, n + 1) for j in range(n - i, 0, -1)]
    winv = w.inverse()
    out = []

    def rec(t, u, used):
        if u.length == target_len:
            if u == w:
                out.append(frozenset(used))
            return
        if t == len(cells):
            return
        remaining = len(cells) - t
        if target_len - u.length > remaining:
            return
        i, j = cells[t]
        rec(t + 1, u, used)
        k = i + j - 1
        v, change = right_s(k, u)
        # keep only prefixes of reduced words of w: l(v^{-1} w) = l(w) - l(v)
        if change > 0 and (winv * v).length == target_len - v.length:
            used.append((i, j))
            rec(t + 1, v, used)
            used.pop()

    rec(0, PermutationZ(), [])
    return out


@lru_cache(maxsize=None)
def _pipe_terms(w: PermutationZ) -> tuple:
    n = _nvars(w)
    counts: Counter = Counter()
    for d in pipe_dreams(w):
        e = [0] * n
        for i, _ in d:
            e[i - 1] += 1
        counts[tuple(e)] += 1
    return tuple(counts.items())


def schubert_poly_pipe_dreams(w: PermutationZ, m: int | None = None) -> MonomialMap:
    """``S_w`` as the sum over reduced pipe dreams of ``Π x_row``."""
    _require_positive(w)
    return _truncate(_pipe_terms(w), _nvars(w), m)


def schubert_basis_expand(p: MonomialMap, max_steps: int = 1_000_000) -> FormalSum:
    """
    Write ``p`` in the Schubert basis. The leading monomial of ``S_w``,
    comparing exponents from the last variable down, is ``x^code(w)``; so the
    leading exponent of the remainder is read as a Lehmer code and that
    Schubert polynomial is subtracted, until nothing is left.
    """
    if p.terms and p.lo != 1:
        if p.lo < 1 and any(any(e[: 1 - p.lo]) for e in p.terms):
            raise NotInSpan(f"variables start at x_{p.lo}; only x_1, x_2, ... are allowed")
        p = p.widen(1, max(p.hi, 1))
    rest = p
    out = {}
    for _ in range(max_steps):
        lead = rest.leading(from_last=True)
        if lead is None:
            return FormalSum(out)
        code, c = lead
        w = from_lehmer_code(code, 1)
        out[w] = out.get(w, 0) + c
        rest = rest - schubert_poly(w).scale(c)
    raise NotInSpan("expansion did not terminate")


def monk_rule(k: int, w: PermutationZ) -> FormalSum:
    """``S_{s_k} S_w = Σ S_{w t_ab}`` over ``a <= k < b`` with ``l(w t_ab) = l(w) + 1``."""
    lo = min(w.start, k) - 1 if w.word else k
    hi = max(w.end, k + 1) + 1 if w.word else k + 1
    out = {}
    for a in range(lo, k + 1):
        for b in range(k + 1, hi + 1):
            wa, wb = w(a), w(b)
            if wa > wb or any(wa < w(c) < wb for c in range(a + 1, b)):
                continue
            vals = w.images(lo, hi)
            vals[a - lo], vals[b - lo] = wb, wa
            out[PermutationZ(vals, lo)] = 1
    return FormalSum(out)


def stanley_schur_expand(w: PermutationZ) -> FormalSum:
    """
    Schur expansion of the Stanley symmetric function ``F_w``. After shifting
    ``w`` by ``n = l(w)`` past the positive integers, every compatible
    sequence bounded by ``n`` is unconstrained by the letters, so
    ``S_{τ^n w}(x_1 .. x_n, 0, ...) = F_w(x_1 .. x_n)``.
    """
    n = w.length
    if n == 0:
        return FormalSum({Partition(): 1})
    base = shift_tau(w, 1 - w.start) if w.start < 1 else w
    return ssyt_expand(schubert_poly(shift_tau(base, n), n))


def oracle_shift(lam: Partition, w: PermutationZ, margin: int = 1) -> int:
    """
    A shift putting both factors in positive windows, plus ``margin`` extra
    steps. Terms of the product that would still reach position 0 are lost,
    so callers wanting certainty compare against a larger margin.
    """
    start = w.start if w.word else 1
    return max(len(lam), 1 - start, 0) + margin


def schur_schubert_product(lam, w: PermutationZ, shift: int | None = None) -> FormalSum:
    """
    ``s_λ S_w`` by polynomial multiplication. Both factors are shifted by
    ``n``: the Schur factor becomes ``s_λ(x_1 .. x_n)`` (the Grassmannian
    permutation of descent ``n``), the product is expanded by leading
    monomials, and the result is shifted back.
    """
    lam = Partition(lam)
    n = oracle_shift(lam, w) if shift is None else shift
    ws = shift_tau(w, n)
    _require_positive(ws)
    prod = poly_multiply(schur_poly(lam, n), schubert_poly(ws))
    return schubert_basis_expand(prod).map_keys(lambda v: shift_tau(v, -n))
