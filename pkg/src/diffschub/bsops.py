"""
Decreasing operators on the back-stable Schubert basis ``{S_w : w in S_Z}``.

``xi_perm`` sends ``S_w`` to the sum of ``S_{s_k w}`` over the left descents
``k`` of ``w``; ``nabla_perm`` weights the same sum by ``k``. Everything else
(``ρ^(k)``, ``ξ^λ``, Stanley coefficients) is built from these two.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import FormalSum
from .perm import (
    PermutationZ, IDENTITY, left_s, left_descents, reduced_words, count_reduced_words,
)
from .young import Partition, partitions
from .yops import character

SchubElement = FormalSum

__all__ = [
    "SchubElement", "as_schub", "xi_perm", "nabla_perm", "rho_perm", "rho_perm_direct",
    "xi_lambda_perm", "stanley_coeffs", "reduced_word_identity_check", "unimodal_peak",
]


def as_schub(x) -> FormalSum:
    if isinstance(x, FormalSum):
        return x
    if isinstance(x, PermutationZ):
        return FormalSum._wrap({x: 1})
    raise TypeError(f"cannot interpret {x!r} as a Schubert element")


@lru_cache(maxsize=None)
def _xi_basis(w: PermutationZ) -> FormalSum:
    return FormalSum._wrap({left_s(k, w)[0]: 1 for k in left_descents(w)})


@lru_cache(maxsize=None)
def _nabla_basis(w: PermutationZ) -> FormalSum:
    return FormalSum._wrap({left_s(k, w)[0]: k for k in left_descents(w) if k})


def xi_perm(x) -> FormalSum:
    return as_schub(x).map(_xi_basis)


def nabla_perm(x) -> FormalSum:
    return as_schub(x).map(_nabla_basis)


@lru_cache(maxsize=None)
def _rho_basis(k: int, w: PermutationZ) -> FormalSum:
    if k == 1:
        return _xi_basis(w)
    if w.length < k:
        return FormalSum.zero()
    prev = k - 1
    a = _nabla_basis(w).map(lambda v: _rho_basis(prev, v))
    b = nabla_perm(_rho_basis(prev, w))
    return (a - b) * Fraction(1, prev)


def rho_perm(k: int, x) -> FormalSum:
    """``ρ^(k)`` on Schubert elements via ``ρ^(k+1) = [ρ^(k), ∇] / k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return as_schub(x).map(lambda w: _rho_basis(k, w))


def _left_weak_below(w: PermutationZ, k: int) -> set:
    """Permutations ``v`` reached from ``w`` by ``k`` length-decreasing left moves."""
    level = {w}
    for _ in range(k):
        level = {left_s(j, v)[0] for v in level for j in left_descents(v)}
    return level


def unimodal_peak(u: PermutationZ) -> int | None:
    """
    Peak index ``i`` (1-based) of a reduced word ``b_1 < ... < b_i > ... > b_k``
    of ``u`` whose letters cover ``[min(b_1, b_k), b_i]``; ``None`` if ``u`` has no
    such word. Raises if two such words disagree on the sign ``(-1)^(k-i)``.
    """
    peaks = set()
    for h in reduced_words(u):
        i = max(range(len(h)), key=lambda t: h[t])
        if any(h[t] >= h[t + 1] for t in range(i)):
            continue
        if any(h[t] <= h[t + 1] for t in range(i, len(h) - 1)):
            continue
        lo = min(h[0], h[-1])
        if set(range(lo, h[i] + 1)) <= set(h):
            peaks.add(i + 1)
    if not peaks:
        return None
    k = u.length
    signs = {(-1) ** (k - i) for i in peaks}
    if len(signs) > 1:
        raise AssertionError(f"unimodal words of {u} give conflicting signs (peaks {sorted(peaks)})")
    return min(peaks)


def rho_perm_direct(k: int, w: PermutationZ) -> FormalSum:
    """
    ``ρ^(k) S_w`` as a signed sum of ``S_{u^{-1} w}`` over "connected" ``u`` of
    length ``k`` with a unimodal reduced word; cross-check for :func:`rho_perm`.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if w.length < k:
        return FormalSum.zero()
    out = {}
    for v in _left_weak_below(w, k):
        # Word read in removal order: the first simple reflection stripped off
        # w on the left is b_1. Under our composition convention that is a
        # reduced word of v w^{-1}.
        u = v * w.inverse()
        i = unimodal_peak(u)
        if i is not None:
            out[v] = (-1) ** (k - i)
    return FormalSum(out)


def _rho_word_perm(mu: Partition, x: FormalSum) -> FormalSum:
    for k in reversed(mu):
        if not x:
            break
        x = rho_perm(k, x)
    return x


def xi_lambda_perm(nu: Partition, x) -> FormalSum:
    """``ξ^ν = Σ_μ (χ^ν_μ / z_μ) ρ^(μ_1) ρ^(μ_2) ...`` on Schubert elements."""
    nu = Partition(nu)
    x = as_schub(x)
    out = FormalSum.zero()
    for mu in partitions(nu.size):
        cv = character(nu, mu)
        if cv.chi:
            out = out + _rho_word_perm(mu, x) * Fraction(cv.chi, cv.z)
    return out


@lru_cache(maxsize=None)
def stanley_coeffs(w: PermutationZ) -> FormalSum:
    """
    Schur expansion ``Σ a_{λ,w} λ`` of the Stanley symmetric function of ``w``,
    with ``a_{λ,w}`` read off as the constant term of ``ξ^λ S_w``.
    """
    n = w.length
    start = FormalSum._wrap({w: 1})
    # constant terms of ρ^μ S_w, shared by every ξ^λ
    const = {mu: _rho_word_perm(mu, start).coeff(IDENTITY) for mu in partitions(n)}
    out = {}
    for lam in partitions(n):
        a = sum(Fraction(cv.chi, cv.z) * const[mu]
                for mu in partitions(n) if const[mu] and (cv := character(lam, mu)).chi)
        if a:
            out[lam] = a
    result = FormalSum(out)
    if not result.is_integral() or not result.is_nonnegative():
        raise AssertionError(f"Stanley coefficients of {w} are not nonnegative integers: {result}")
    return result


def reduced_word_identity_check(u: PermutationZ, v: PermutationZ, product) -> bool:
    """``C(ℓ(u)+ℓ(v), ℓ(v)) |R(u)| |R(v)| == Σ_w c^w |R(w)|`` for ``S_u S_v = Σ c^w S_w``."""
    lhs = comb(u.length + v.length, v.length) * count_reduced_words(u) * count_reduced_words(v)
    rhs = sum(c * count_reduced_words(w) for w, c in as_schub(product).raw().items())
    return lhs == rhs
