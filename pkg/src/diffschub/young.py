"""
Young diagrams in English notation: row 1 on top, box ``(i, j)`` in row ``i``
and column ``j`` (both 1-based), content ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .exact import register_basis

__all__ = [
    "Partition", "Box", "BorderStrip", "parse_partition",
    "removable_corners", "addable_corners", "border_strips_removable",
    "border_strips_addable", "border_strip", "hook_syt_count", "conjugate",
    "lex_compare", "contains", "partitions", "partitions_up_to",
    "frobenius_coordinates", "hook_shape", "rectangle_complement",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; ``Partition()`` is the empty diagram."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _make(cls, parts) -> Partition:
        # trusted constructor: parts already valid, no trailing zeros
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """``λ_i`` for 1-based ``i``, zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def sort_key(self):
        # canonical print order: by size, then lexicographically descending
        return (sum(self), tuple(-p for p in self))

    def boxes(self) -> Iterator[Box]:
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield Box(i, j)

    def __lt__(self, other):
        return (sum(self), tuple(self)) < (sum(other), tuple(other))

    def __le__(self, other):
        return (sum(self), tuple(self)) <= (sum(other), tuple(other))

    def __gt__(self, other):
        return (sum(self), tuple(self)) > (sum(other), tuple(other))

    def __ge__(self, other):
        return (sum(self), tuple(self)) >= (sum(other), tuple(other))

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


EMPTY = Partition()


def parse_partition(s: str) -> Partition:
    s = s.strip().strip("()[]").strip()
    if s in ("", "0", "∅"):
        return EMPTY
    try:
        return Partition(int(x) for x in s.split(",") if x.strip())
    except ValueError as e:
        raise ValueError(f"bad partition {s!r}: {e}") from None


register_basis("partition", Partition, parse_partition)


class Box(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def removable_corners(lam: Partition) -> list[tuple[Box, Partition]]:
    """Pairs ``(b, λ - b)`` for every removable box, top row first."""
    out = []
    n = len(lam)
    for i in range(n):
        nxt = lam[i + 1] if i + 1 < n else 0
        if lam[i] > nxt:
            parts = list(lam)
            parts[i] -= 1
            if parts[i] == 0:
                parts.pop()
            out.append((Box(i + 1, lam[i]), Partition._make(parts)))
    return out


def addable_corners(lam: Partition) -> list[tuple[Box, Partition]]:
    out = []
    n = len(lam)
    for i in range(n + 1):
        cur = lam[i] if i < n else 0
        if i == 0 or lam[i - 1] > cur:
            parts = list(lam)
            if i < n:
                parts[i] += 1
            else:
                parts.append(1)
            out.append((Box(i + 1, cur + 1), Partition._make(parts)))
    return out


def _rim_by_content(lam: Partition) -> dict[int, Box]:
    """The rim (boxes with no box diagonally below-right), indexed by content."""
    rim = {}
    n = len(lam)
    for i in range(1, n + 1):
        below = lam[i] if i < n else 0
        for j in range(max(below, 1), lam[i - 1] + 1):
            rim[j - i] = Box(i, j)
    return rim


@lru_cache(maxsize=None)
def border_strips_removable(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """
    All ``(μ, ht)`` with ``λ/μ`` a border strip of ``k`` boxes meeting ``ht`` rows.

    Walks windows of ``k`` consecutive contents along the rim; such a window is
    connected with no 2x2 block by construction, and is removable exactly when
    it takes whole row-ends.
    """
    if k < 1:
        raise ValueError("strip size must be positive")
    if k > lam.size:
        return ()
    rim = _rim_by_content(lam)
    if not rim:
        return ()
    lo, hi = min(rim), max(rim)
    out = []
    for start in range(lo, hi - k + 2):
        boxes = [rim[c] for c in range(start, start + k)]
        per_row: dict[int, list[int]] = {}
        for b in boxes:
            per_row.setdefault(b.row, []).append(b.col)
        parts = list(lam)
        ok = True
        for i, cols in per_row.items():
            if max(cols) != lam[i - 1]:
                ok = False
                break
            parts[i - 1] -= len(cols)
        if not ok:
            continue
        if any(a < b for a, b in zip(parts, parts[1:])):
            continue
        out.append((Partition(parts), len(per_row)))
    return tuple(out)


def border_strips_addable(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ``(ν, ht)`` with ``ν/λ`` a border strip of ``k`` boxes (beta-number method)."""
    if k < 1:
        raise ValueError("strip size must be positive")
    n = len(lam) + k
    beta = [lam.part(i) + n - i for i in range(1, n + 1)]
    present = set(beta)
    out = []
    for b in beta:
        if b + k in present:
            continue
        crossed = sum(1 for x in beta if b < x < b + k)
        new = sorted((present - {b}) | {b + k}, reverse=True)
        out.append((Partition(x - (n - i) for i, x in enumerate(new, 1)), crossed + 1))
    out.sort(key=lambda t: t[0].sort_key())
    return out


@dataclass(frozen=True)
class BorderStrip:
    outer: Partition
    inner: Partition
    boxes: frozenset

    @property
    def height(self) -> int:
        return len({b.row for b in self.boxes})

    def contents(self) -> list[int]:
        return sorted(b.content for b in self.boxes)

    def is_valid(self) -> bool:
        """Connected, no 2x2 block, and contents form a contiguous run (each once)."""
        if not self.boxes:
            return False
        cells = {(b.row, b.col) for b in self.boxes}
        for (i, j) in cells:
            if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
                return False
        seen = set()
        stack = [next(iter(cells))]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            i, j = c
            stack.extend(n for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)) if n in cells)
        if seen != cells:
            return False
        cs = self.contents()
        return cs == list(range(cs[0], cs[0] + len(cs)))


def skew_boxes(lam: Partition, mu: Partition) -> frozenset:
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return frozenset(Box(i, j) for i in range(1, len(lam) + 1)
                     for j in range(mu.part(i) + 1, lam[i - 1] + 1))


def border_strip(lam: Partition, mu: Partition) -> BorderStrip:
    return BorderStrip(lam, mu, skew_boxes(lam, mu))


def hook_syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``λ`` (hook length formula)."""
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return factorial(lam.size) // prod


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition._make(tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def lex_compare(lam: Partition, mu: Partition) -> int:
    """-1, 0 or 1 comparing by size, then lexicographically on parts."""
    a, b = (lam.size, tuple(lam)), (mu.size, tuple(mu))
    return (a > b) - (a < b)


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether the diagram of ``μ`` sits inside that of ``λ``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    out = [Partition._make(p) for p in _partitions(n, n if max_part is None else max_part)]
    if max_length is not None:
        out = [p for p in out if len(p) <= max_length]
    return out


def partitions_up_to(n: int) -> list[Partition]:
    return [p for m in range(n + 1) for p in partitions(m)]


def frobenius_coordinates(lam: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Arm and leg lengths ``(a | b)`` of the diagonal boxes."""
    conj = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam, 1) if p >= i)
    return (tuple(lam[i] - i - 1 for i in range(d)), tuple(conj[i] - i - 1 for i in range(d)))


def hook_shape(arm: int, leg: int) -> Partition:
    return Partition._make((arm + 1,) + (1,) * leg)


def rectangle_complement(lam: Partition, rows: int, cols: int) -> Partition:
    """Complement of ``λ`` in a ``rows x cols`` box, rotated by a half turn."""
    if len(lam) > rows or (lam and lam[0] > cols):
        raise ValueError(f"{lam} does not fit in {rows}x{cols}")
    return Partition(cols - lam.part(i) for i in range(rows, 0, -1))
