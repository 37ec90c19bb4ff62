"""
Permutations of the integers that move finitely many points.

A :class:`PermutationZ` stores the one-line word of ``w`` on a window
``[a, b]`` outside of which ``w`` is the identity. Windows are always trimmed
to the smallest such interval, so equal permutations have equal
representations; the identity has an empty word.

Products compose as functions: ``(u * v)(i) = u(v(i))``. Hence ``w * s_k``
swaps the entries in positions ``k, k+1`` and ``s_k * w`` swaps the values
``k, k+1``. A reduced word ``(h_1, ..., h_l)`` means ``w = s_{h_1} ... s_{h_l}``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import MalformedWord, NotGrassmannian
from .exact import FormalSum, register_basis
from .young import Partition

__all__ = [
    "PermutationZ", "IDENTITY", "GrassCode", "parse_perm", "length", "descents",
    "left_s", "right_s", "shift_tau", "inverse", "lehmer_code", "from_lehmer_code",
    "reduced_words", "count_reduced_words", "divided_difference", "simple",
    "grass_decode", "grass_encode", "is_grassmannian", "window_permutations",
]


class PermutationZ:
    __slots__ = ("start", "word", "_hash", "_length")

    def __init__(self, word=(), start: int = 1):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(start, start + len(word))):
            raise MalformedWord(f"{list(word)} is not a permutation of [{start}, {start + len(word) - 1}]")
        self._set(*_trim(start, word))

    def _set(self, start, word):
        self.start = start
        self.word = word
        self._hash = None
        self._length = None

    @classmethod
    def _make(cls, start: int, word) -> PermutationZ:
        # trusted: word is a bijection of its window; trims fixed ends
        w = object.__new__(cls)
        w._set(*_trim(start, tuple(word)))
        return w

    @property
    def end(self) -> int:
        """Last position of the window (``start - 1`` for the identity)."""
        return self.start + len(self.word) - 1

    def __call__(self, i: int) -> int:
        j = i - self.start
        if 0 <= j < len(self.word):
            return self.word[j]
        return i

    def images(self, lo: int, hi: int) -> list[int]:
        """``[w(lo), ..., w(hi)]``."""
        return [self(i) for i in range(lo, hi + 1)]

    def is_identity(self) -> bool:
        return not self.word

    @property
    def length(self) -> int:
        if self._length is None:
            w = self.word
            self._length = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        return self._length

    def descents(self) -> frozenset:
        w, a = self.word, self.start
        return frozenset(a + i for i in range(len(w) - 1) if w[i] > w[i + 1])

    def inverse(self) -> PermutationZ:
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word):
            inv[v - self.start] = i + self.start
        return PermutationZ._make(self.start, inv)

    def __mul__(self, other: PermutationZ) -> PermutationZ:
        if not isinstance(other, PermutationZ):
            return NotImplemented
        if not self.word:
            return other
        if not other.word:
            return self
        lo = min(self.start, other.start)
        hi = max(self.end, other.end)
        return PermutationZ._make(lo, [self(other(i)) for i in range(lo, hi + 1)])

    def sort_key(self):
        return (self.start, self.word)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationZ):
            return NotImplemented
        return self.start == other.start and self.word == other.word

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.start, self.word))
        return self._hash

    def __lt__(self, other: PermutationZ) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.word:
            return "id"
        return ",".join(map(str, self.word)) + f"@{self.start}"

    def __repr__(self) -> str:
        return f"PermutationZ({str(self)!r})"

    def __reduce__(self):
        return (PermutationZ, (self.word, self.start))


def _trim(start: int, word: tuple) -> tuple[int, tuple]:
    lo, hi = 0, len(word)
    while lo < hi and word[lo] == start + lo:
        lo += 1
    while hi > lo and word[hi - 1] == start + hi - 1:
        hi -= 1
    if lo == hi:
        return 0, ()
    return start + lo, word[lo:hi]


IDENTITY = PermutationZ._make(0, ())


def parse_perm(s: str) -> PermutationZ:
    """Parse ``"c1,...,cn@a"`` (``@1`` may be omitted; ``id`` or ``""`` is the identity)."""
    s = s.strip()
    if s in ("", "id"):
        return IDENTITY
    body, _, at = s.partition("@")
    try:
        start = int(at) if at.strip() else 1
        word = [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise MalformedWord(f"cannot parse permutation {s!r}") from None
    return PermutationZ(word, start)


register_basis("permutation", PermutationZ, parse_perm)


def simple(k: int) -> PermutationZ:
    """The simple reflection ``s_k`` exchanging ``k`` and ``k+1``."""
    return PermutationZ._make(k, (k + 1, k))


def length(w: PermutationZ) -> int:
    return w.length


def descents(w: PermutationZ) -> frozenset:
    return w.descents()


def inverse(w: PermutationZ) -> PermutationZ:
    return w.inverse()


def left_s(k: int, w: PermutationZ) -> tuple[PermutationZ, int]:
    """``(s_k w, ±1)``: swap the values ``k`` and ``k+1``."""
    lo = min(w.start, k) if w.word else k
    hi = max(w.end, k + 1) if w.word else k + 1
    word = w.images(lo, hi)
    pk, pk1 = word.index(k), word.index(k + 1)
    word[pk], word[pk1] = k + 1, k
    return PermutationZ._make(lo, word), (-1 if pk > pk1 else 1)


def right_s(k: int, w: PermutationZ) -> tuple[PermutationZ, int]:
    """``(w s_k, ±1)``: swap the entries in positions ``k`` and ``k+1``."""
    lo = min(w.start, k) if w.word else k
    hi = max(w.end, k + 1) if w.word else k + 1
    word = w.images(lo, hi)
    i = k - lo
    change = -1 if word[i] > word[i + 1] else 1
    word[i], word[i + 1] = word[i + 1], word[i]
    return PermutationZ._make(lo, word), change


def left_descents(w: PermutationZ) -> list[int]:
    """Values ``k`` with ``ℓ(s_k w) < ℓ(w)``: ``k+1`` appears before ``k``."""
    if not w.word:
        return []
    pos = {v: i for i, v in enumerate(w.word)}
    return [k for k in range(w.start, w.end) if pos[k] > pos[k + 1]]


def shift_tau(w: PermutationZ, n: int = 1) -> PermutationZ:
    """``τ^n w``, with ``(τ w)(i+1) = w(i) + 1``."""
    if not w.word:
        return w
    return PermutationZ._make(w.start + n, tuple(x + n for x in w.word))


def lehmer_code(w: PermutationZ, lo: int | None = None, hi: int | None = None) -> tuple[int, ...]:
    """``(d_lo, ..., d_hi)`` with ``d_i = #{j > i : w(j) < w(i)}``; default range is the window."""
    if lo is None:
        lo = w.start
    if hi is None:
        hi = w.end
    top = max(hi, w.end)
    vals = w.images(lo, top)
    return tuple(sum(1 for y in vals[i + 1:] if y < vals[i]) for i in range(hi - lo + 1))


def from_lehmer_code(code, start: int = 1) -> PermutationZ:
    """Inverse of :func:`lehmer_code` for a code read from position ``start``."""
    code = list(code)
    n = len(code) + (max(code) if code else 0)
    code += [0] * (n - len(code))
    free = list(range(start, start + n))
    word = []
    for d in code:
        if d >= len(free):
            raise ValueError(f"invalid Lehmer code {code}")
        word.append(free.pop(d))
    return PermutationZ._make(start, word)


@lru_cache(maxsize=None)
def _reduced_words(w: PermutationZ) -> tuple[tuple[int, ...], ...]:
    if not w.word:
        return ((),)
    out = []
    for d in sorted(w.descents()):
        shorter, _ = right_s(d, w)
        out.extend(h + (d,) for h in _reduced_words(shorter))
    return tuple(sorted(out))


def reduced_words(w: PermutationZ) -> list[tuple[int, ...]]:
    """All reduced words of ``w``, sorted lexicographically."""
    return list(_reduced_words(w))


@lru_cache(maxsize=None)
def count_reduced_words(w: PermutationZ) -> int:
    if not w.word:
        return 1
    return sum(count_reduced_words(right_s(d, w)[0]) for d in w.descents())


def divided_difference(i: int, x: FormalSum) -> FormalSum:
    """``∂_i`` on the Schubert basis: ``S_w -> S_{w s_i}`` if ``i`` is a descent of ``w``, else 0."""
    def basis(w):
        if i in w.descents():
            return FormalSum._wrap({right_s(i, w)[0]: 1})
        return FormalSum.zero()
    return x.map(basis)


# ---------------------------------------------------------------------------
# Grassmannian permutations <-> partitions


class GrassCode(NamedTuple):
    descent: int
    shape: Partition


def is_grassmannian(w: PermutationZ, descent: int | None = None) -> bool:
    d = w.descents()
    if descent is None:
        return len(d) <= 1
    return not d or d == {descent}


def grass_decode(w: PermutationZ) -> GrassCode:
    """Descent ``k`` and shape ``(w(k) - k, w(k-1) - k + 1, ...)``; the identity gives ``(0, ∅)``."""
    d = w.descents()
    if not d:
        return GrassCode(0, Partition())
    if len(d) > 1:
        raise NotGrassmannian(f"{w} has descents {sorted(d)}")
    (k,) = d
    parts = []
    i = k
    while True:
        p = w(i) - i
        if p <= 0:
            break
        parts.append(p)
        i -= 1
    return GrassCode(k, Partition._make(tuple(parts)))


def grass_encode(code: GrassCode | tuple) -> PermutationZ:
    k, lam = code
    lam = Partition(lam)
    if not lam:
        return IDENTITY
    n = len(lam)
    lo, hi = k - n + 1, k + lam[0]
    head = [lam[n - 1 - t] + lo + t for t in range(n)]  # positions lo..k, increasing
    used = set(head)
    tail = [v for v in range(lo, hi + 1) if v not in used]
    return PermutationZ._make(lo, head + tail)


# ---------------------------------------------------------------------------
# Enumeration helpers


def window_permutations(width: int, start: int = 1, max_length: int | None = None) -> Iterator[PermutationZ]:
    """All permutations supported in ``[start, start + width - 1]``, as canonical values."""
    for word in itertools.permutations(range(start, start + width)):
        w = PermutationZ._make(start, word)
        if max_length is None or w.length <= max_length:
            yield w
