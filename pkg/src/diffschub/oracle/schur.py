"""Schur polynomials from semistandard tableaux, and Littlewood-Richardson tableau counts."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations

from ..errors import NotSymmetric
from ..exact import FormalSum
from ..young import Partition, contains
from .poly import MonomialMap, is_dominant

__all__ = ["schur_poly", "ssyt_expand", "ssyt", "lr_count", "lr_tableaux", "check_symmetric"]


def _rows_between(above: tuple | None, length: int, m: int, prefix: list):
    """Weakly increasing rows of ``length`` entries in ``[1, m]``, strictly below ``above``."""
    i = len(prefix)
    if i == length:
        yield tuple(prefix)
        return
    start = prefix[-1] if prefix else 1
    if above is not None:
        start = max(start, above[i] + 1)
    for v in range(start, m + 1):
        prefix.append(v)
        yield from _rows_between(above, length, m, prefix)
        prefix.pop()


def ssyt(lam: Partition, m: int):
    """Semistandard tableaux of shape ``λ`` with entries in ``[1, m]``, as tuples of rows."""
    lam = Partition(lam)

    def rec(i, acc):
        if i == len(lam):
            yield tuple(acc)
            return
        above = acc[-1] if acc else None
        for row in _rows_between(above, lam[i], m, []):
            acc.append(row)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition, m: int) -> tuple:
    counts: Counter = Counter()
    for t in ssyt(lam, m):
        w = [0] * m
        for row in t:
            for v in row:
                w[v - 1] += 1
        counts[tuple(w)] += 1
    return tuple(counts.items())


def schur_poly(lam, m: int) -> MonomialMap:
    """``s_λ(x_1, ..., x_m)`` as the weight generating function of semistandard tableaux."""
    lam = Partition(lam)
    return MonomialMap(dict(_schur_terms(lam, m)), 1, m)


def check_symmetric(p: MonomialMap) -> None:
    """Raise :class:`NotSymmetric` unless every rearrangement of an exponent has the same coefficient."""
    seen = set()
    for exp, c in p.terms.items():
        key = tuple(sorted(exp, reverse=True))
        if key in seen:
            continue
        seen.add(key)
        for e in set(permutations(exp)):
            if p.coeff(e) != c:
                raise NotSymmetric(f"coefficient of x^{list(e)} is {p.coeff(e)}, of x^{list(exp)} is {c}")


def ssyt_expand(p: MonomialMap, check: bool = True, max_steps: int = 100_000) -> FormalSum:
    """
    Schur expansion of a symmetric polynomial in ``p.nvars`` variables.

    Only dominant monomials matter: the lex-largest one is ``x^λ`` for the
    top Schur term, whose coefficient is then peeled off.
    """
    if check:
        check_symmetric(p)
    m = p.nvars
    rest = {e: c for e, c in p.terms.items() if is_dominant(e)}
    out = {}
    for _ in range(max_steps):
        if not rest:
            return FormalSum(out)
        top = max(rest)
        c = rest[top]
        lam = Partition(top)
        out[lam] = c
        for e, k in _schur_terms(lam, m):
            if is_dominant(e):
                v = rest.get(e, 0) - c * k
                if v:
                    rest[e] = v
                else:
                    rest.pop(e, None)
    raise RuntimeError("ssyt_expand did not terminate")


def lr_tableaux(lam, mu, nu):
    """
    Littlewood-Richardson tableaux of shape ``ν/λ`` and content ``μ``: rows
    weakly increase, columns strictly increase, and the word read right to
    left along rows, top row first, is a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not contains(nu, lam) or not contains(nu, mu):
        return
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, lam.part(i + 1) - 1, -1)]
    filling: dict = {}
    count = [0] * (len(mu) + 1)

    def rec(t):
        if t == len(cells):
            yield dict(filling)
            return
        i, j = cells[t]
        hi = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((i - 1, j))
        if above is not None:
            lo = above + 1
        for v in range(lo, hi + 1):
            if count[v] >= mu[v - 1] or (v > 1 and count[v] >= count[v - 1]):
                continue
            filling[(i, j)] = v
            count[v] += 1
            yield from rec(t + 1)
            count[v] -= 1
            del filling[(i, j)]

    yield from rec(0)


def lr_count(lam, mu, nu) -> int:
    """``c^ν_{λμ}`` by counting Littlewood-Richardson tableaux."""
    return sum(1 for _ in lr_tableaux(lam, mu, nu))
