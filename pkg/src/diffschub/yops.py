"""
Operators on formal sums of Young diagrams and the product they determine.

``xi`` removes one box in every possible way; ``nabla`` does the same but
weights each removal by the content of the removed box. Both obey the
Leibniz rule for the Schur product, and together they pin that product down:
:func:`multiply` computes Littlewood-Richardson expansions using nothing but
the two operators and :func:`recover`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Union

from .errors import NonRecoverable, SizeMismatch
from .exact import FormalSum, as_rational, solve_nullspace, rank
from .young import (
    Partition, EMPTY, removable_corners, border_strips_removable, conjugate,
    partitions, partitions_up_to, frobenius_coordinates, hook_shape,
)

DiagElement = FormalSum
ElementLike = Union[FormalSum, Partition]

__all__ = [
    "DiagElement", "CharValue", "as_element", "xi", "nabla", "recover",
    "multiply", "multiply_elements", "rho", "rho_strips", "power_sum",
    "character", "z_factor", "xi_lambda", "jacobi_trudi_h", "jacobi_trudi_e",
    "giambelli", "leibniz_operator_space", "LeibnizSpace", "operator_kernel",
]


def as_element(x: ElementLike) -> FormalSum:
    if isinstance(x, FormalSum):
        return x
    if isinstance(x, tuple):
        return FormalSum._wrap({Partition(x): 1})
    raise TypeError(f"cannot interpret {x!r} as an element of Y")


def _linear(basis_action: Callable[[Partition], FormalSum]):
    def apply(x: ElementLike) -> FormalSum:
        return as_element(x).map(basis_action)
    return apply


@lru_cache(maxsize=None)
def _xi_basis(lam: Partition) -> FormalSum:
    return FormalSum._wrap({mu: 1 for _, mu in removable_corners(lam)})


@lru_cache(maxsize=None)
def _nabla_basis(lam: Partition) -> FormalSum:
    return FormalSum._wrap({mu: b.content for b, mu in removable_corners(lam) if b.content})


xi = _linear(_xi_basis)
xi.__doc__ = "Sum over all single-box removals."
nabla = _linear(_nabla_basis)
nabla.__doc__ = "Sum over all single-box removals, weighted by the removed box's content."


# ---------------------------------------------------------------------------
# Recovery of X from (xi X, nabla X)


def _recover_homogeneous(D: dict, N: dict) -> dict:
    X: dict = {}
    while D:
        mu = max(D)
        d, n = D[mu], N.get(mu, 0)
        k = len(mu)
        new_row = Partition._make(tuple(mu) + (1,))           # box (k+1, 1), content -k
        if k >= 1 and (k == 1 or mu[k - 2] > mu[k - 1]):
            longer = Partition._make(tuple(mu[:-1]) + (mu[-1] + 1,))  # box (k, mu_k+1)
            # a_new + a_longer = d ; (-k) a_new + (mu_k + 1 - k) a_longer = n
            a_longer = as_rational(Fraction(n + k * d, mu[-1] + 1))
            a_new = d - a_longer
            cands = [(new_row, a_new), (longer, a_longer)]
        else:
            if n != -k * d:
                raise NonRecoverable(f"inconsistent nabla coefficient at {mu}: {n} != {-k * d}")
            cands = [(new_row, d)]
        for lam, a in cands:
            if a < 0:
                raise NonRecoverable(f"negative coefficient {a} for {lam}")
            if not a:
                continue
            X[lam] = X.get(lam, 0) + a
            for box, low in removable_corners(lam):
                v = D.get(low, 0) - a
                if v:
                    D[low] = v
                else:
                    D.pop(low, None)
                v = N.get(low, 0) - a * box.content
                if v:
                    N[low] = v
                else:
                    N.pop(low, None)
        if D.get(mu):
            raise NonRecoverable(f"leading diagram {mu} did not cancel")
    if N:
        raise NonRecoverable(f"nabla part left over after xi part was exhausted: {FormalSum(N)}")
    return X


def recover(D: ElementLike, N: ElementLike) -> FormalSum:
    """
    Reconstruct ``X`` (nonnegative, no constant term) from ``xi(X)`` and ``nabla(X)``.

    Each homogeneous degree is handled on its own. Raises
    :class:`NonRecoverable` when no such ``X`` exists.
    """
    dD = as_element(D).homogeneous_components()
    dN = as_element(N).homogeneous_components()
    out: dict = {}
    for deg in sorted(set(dD) | set(dN)):
        part = _recover_homogeneous(dict(dD[deg].raw()) if deg in dD else {},
                                    dict(dN[deg].raw()) if deg in dN else {})
        out.update(part)
    return FormalSum({k: as_rational(v) for k, v in out.items()})


# ---------------------------------------------------------------------------
# The product determined by xi and nabla


@lru_cache(maxsize=None)
def _multiply(lam: Partition, mu: Partition) -> FormalSum:
    if not lam:
        return FormalSum._wrap({mu: 1})
    D = FormalSum.zero()
    N = FormalSum.zero()
    for box, low in removable_corners(lam):
        p = multiply(low, mu)
        D = D + p
        if box.content:
            N = N + p * box.content
    for box, low in removable_corners(mu):
        p = multiply(lam, low)
        D = D + p
        if box.content:
            N = N + p * box.content
    return recover(D, N)


def multiply(lam: Partition, mu: Partition) -> FormalSum:
    """``λ * μ`` as the unique product for which xi and nabla are derivations."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if not isinstance(mu, Partition):
        mu = Partition(mu)
    if mu.sort_key() < lam.sort_key():
        lam, mu = mu, lam
    return _multiply(lam, mu)


def multiply_cache_clear() -> None:
    _multiply.cache_clear()


def multiply_elements(x: ElementLike, y: ElementLike) -> FormalSum:
    x, y = as_element(x), as_element(y)
    out = FormalSum.zero()
    for a, c in x.raw().items():
        for b, e in y.raw().items():
            out = out + multiply(a, b) * (c * e)
    return out


# ---------------------------------------------------------------------------
# Bosonic operators and the xi^lambda family


@lru_cache(maxsize=None)
def _rho_basis(k: int, lam: Partition) -> FormalSum:
    if k == 1:
        return _xi_basis(lam)
    prev = k - 1
    a = nabla(lam).map(lambda p: _rho_basis(prev, p))
    b = nabla(_rho_basis(prev, lam))
    return (a - b) * Fraction(1, prev)


def rho(k: int, x: ElementLike) -> FormalSum:
    """``ρ^(k)`` from the commutator recursion ``ρ^(k+1) = [ρ^(k), ∇] / k``, ``ρ^(1) = ξ``."""
    if k < 1:
        raise ValueError("k must be positive")
    return as_element(x).map(lambda p: _rho_basis(k, p))


def rho_strips(k: int, x: ElementLike) -> FormalSum:
    """``ρ^(k)`` as the signed removal of border strips with ``k`` boxes."""
    if k < 1:
        raise ValueError("k must be positive")

    def basis(lam):
        return FormalSum((mu, (-1) ** (ht - 1)) for mu, ht in border_strips_removable(lam, k))
    return as_element(x).map(basis)


def power_sum(k: int) -> FormalSum:
    """``p_k`` as the alternating sum of hooks of size ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return FormalSum((hook_shape(k - a - 1, a), (-1) ** a) for a in range(k))


@dataclass(frozen=True)
class CharValue:
    lam: Partition
    mu: Partition
    chi: int
    z: int


def z_factor(mu: Partition) -> int:
    z = 1
    for i in set(mu):
        m = mu.count(i)
        z *= i ** m * factorial(m)
    return z


@lru_cache(maxsize=None)
def _chi(lam: Partition, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    return sum((-1) ** (ht - 1) * _chi(low, mu[1:]) for low, ht in border_strips_removable(lam, mu[0]))


def character(lam: Partition, mu: Partition) -> CharValue:
    """Symmetric group character ``χ^λ`` at cycle type ``μ`` (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return CharValue(lam, mu, _chi(lam, tuple(mu)), z_factor(mu))


def _rho_word(mu: Partition, x: FormalSum) -> FormalSum:
    for k in reversed(mu):  # smallest part applied first
        if not x:
            break
        x = rho(k, x)
    return x


@lru_cache(maxsize=None)
def _xi_lambda_basis(nu: Partition, lam: Partition) -> FormalSum:
    if nu.size > lam.size:
        return FormalSum.zero()
    out = FormalSum.zero()
    start = FormalSum._wrap({lam: 1})
    for mu in partitions(nu.size):
        cv = character(nu, mu)
        if cv.chi:
            out = out + _rho_word(mu, start) * Fraction(cv.chi, cv.z)
    return out


def xi_lambda(nu: Partition, x: ElementLike) -> FormalSum:
    """``ξ^ν``: the Schur function ``s_ν`` written in power sums, evaluated at ``p_k -> ρ^(k)``."""
    nu = Partition(nu)
    return as_element(x).map(lambda p: _xi_lambda_basis(nu, p))


# ---------------------------------------------------------------------------
# Determinantal identities, expanded with the operator-defined product


def _det(matrix: list[list[FormalSum | None]]) -> FormalSum:
    n = len(matrix)
    if n == 0:
        return FormalSum._wrap({EMPTY: 1})
    total = [FormalSum.zero()]

    def rec(row, used, sign, acc):
        if row == n:
            total[0] = total[0] + acc * sign
            return
        for col in range(n):
            if col in used:
                continue
            entry = matrix[row][col]
            if entry is None:
                continue
            flips = sum(1 for u in used if u > col)
            prod = multiply_elements(acc, entry)
            if prod:
                rec(row + 1, used | {col}, -sign if flips % 2 else sign, prod)

    rec(0, frozenset(), 1, FormalSum._wrap({EMPTY: 1}))
    return total[0]


def _h(r: int) -> FormalSum | None:
    if r < 0:
        return None
    return FormalSum._wrap({Partition._make((r,) if r else ()): 1})


def _e(r: int) -> FormalSum | None:
    if r < 0:
        return None
    return FormalSum._wrap({Partition._make((1,) * r): 1})


def jacobi_trudi_h(lam: Partition) -> FormalSum:
    """Expand ``det[h_{λ_i - i + j}]``; equals ``1·λ`` when the identity holds."""
    lam = Partition(lam)
    k = len(lam)
    return _det([[_h(lam[i] - i + j) for j in range(k)] for i in range(k)])


def jacobi_trudi_e(lam: Partition) -> FormalSum:
    """Expand ``det[e_{λ'_i - i + j}]`` over the conjugate partition."""
    conj = conjugate(Partition(lam))
    k = len(conj)
    return _det([[_e(conj[i] - i + j) for j in range(k)] for i in range(k)])


def giambelli(lam: Partition) -> FormalSum:
    """Expand ``det[s_(a_i | b_j)]`` over the Frobenius hooks of ``λ``."""
    arms, legs = frobenius_coordinates(Partition(lam))
    d = len(arms)
    return _det([[FormalSum._wrap({hook_shape(arms[i], legs[j]): 1}) for j in range(d)] for i in range(d)])


# ---------------------------------------------------------------------------
# Linear algebra checks


@dataclass
class LeibnizSpace:
    max_degree: int
    unknowns: list            # [(λ, λ - box), ...]
    basis: list               # nullspace vectors, indexed like `unknowns`
    xi_vector: tuple
    nabla_vector: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def spans_xi_nabla(self) -> bool:
        """Whether the solution space equals span{xi, nabla}."""
        b = [list(v) for v in self.basis]
        both = [list(self.xi_vector), list(self.nabla_vector)]
        r = rank(b)
        return r == rank(both) == rank(b + both)


def leibniz_operator_space(d: int) -> LeibnizSpace:
    """
    Solve for every operator ``ζ`` that removes one box with arbitrary weights
    ``a_{λ→λ'}`` (``|λ| <= d``) and is a derivation of the product on all pairs
    of total size at most ``d``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    unknowns = [(lam, low) for lam in partitions_up_to(d) if lam for _, low in removable_corners(lam)]
    index = {u: i for i, u in enumerate(unknowns)}
    corners = {lam: [low for _, low in removable_corners(lam)] for lam in partitions_up_to(d)}
    rows = []
    nonempty = [p for p in partitions_up_to(d - 1) if p]
    for a in nonempty:
        for b in nonempty:
            if a.sort_key() > b.sort_key() or a.size + b.size > d:
                continue
            eqs: dict = {}  # target diagram -> {unknown index: coeff}

            def add(nu, u, c):
                row = eqs.setdefault(nu, {})
                row[index[u]] = row.get(index[u], 0) + c

            for rho_, c in multiply(a, b).raw().items():
                for low in corners[rho_]:
                    add(low, (rho_, low), c)
            for low in corners[a]:
                for nu, c in multiply(low, b).raw().items():
                    add(nu, (a, low), -c)
            for low in corners[b]:
                for nu, c in multiply(a, low).raw().items():
                    add(nu, (b, low), -c)
            for row in eqs.values():
                if any(row.values()):
                    dense = [0] * len(unknowns)
                    for i, c in row.items():
                        dense[i] = c
                    rows.append(dense)
    basis = solve_nullspace(rows, ncols=len(unknowns))
    xi_vec = tuple(1 for _ in unknowns)
    content = {}
    for lam in partitions_up_to(d):
        for box, low in removable_corners(lam):
            content[(lam, low)] = box.content
    nabla_vec = tuple(content[u] for u in unknowns)
    return LeibnizSpace(d, unknowns, basis, xi_vec, nabla_vec)


def operator_kernel(n: int) -> list:
    """Nullspace of the stacked (xi; nabla) matrix on diagrams of size ``n``."""
    cols = partitions(n)
    rows_idx = {p: i for i, p in enumerate(partitions(n - 1))}
    m = len(rows_idx)
    matrix = [[0] * len(cols) for _ in range(2 * m)]
    for j, lam in enumerate(cols):
        for box, low in removable_corners(lam):
            matrix[rows_idx[low]][j] += 1
            matrix[m + rows_idx[low]][j] += box.content
    return solve_nullspace(matrix, ncols=len(cols))
