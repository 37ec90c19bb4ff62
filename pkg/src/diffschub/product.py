"""
Schur times back-stable Schubert products ``s_λ · S_w`` computed from the
operators alone.

The Schur factor is the Grassmannian permutation of descent 0 with shape
``λ``. The expansion splits into a part supported on such permutations and
the rest. The rest is read off smaller products through a common descent
``j ≠ 0``, since ``c^v_{λ,w} = c^{v s_j}_{λ, w s_j}``. The Grassmannian part is
then fixed by its images under ``ξ`` and ``∇``, which the Leibniz rule
expresses through smaller products, and rebuilt with :func:`yops.recover`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .bsops import as_schub, xi_perm, nabla_perm, reduced_word_identity_check
from .errors import (
    CacheIOError, ConflictError, InternalInconsistency, NonRecoverable, VersionMismatch,
)
from .exact import FormalSum
from .perm import (
    PermutationZ, divided_difference, grass_decode, grass_encode, is_grassmannian,
    left_descents, left_s, parse_perm, right_s,
)
from .young import Partition, parse_partition, removable_corners
from .yops import recover

__all__ = [
    "ProductCache", "ProductReport", "schur_times_schubert", "verify_product",
    "cache_save", "cache_load", "default_cache", "schur_as_schubert",
]

CACHE_VERSION = 1


class ProductCache:
    """Memo table ``(λ, w) -> s_λ · S_w``. Entries are insert-if-absent."""

    def __init__(self):
        self._table: dict[tuple[Partition, PermutationZ], FormalSum] = {}

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key) -> bool:
        return key in self._table

    def get(self, lam: Partition, w: PermutationZ) -> FormalSum | None:
        return self._table.get((lam, w))

    def put(self, lam: Partition, w: PermutationZ, value: FormalSum) -> FormalSum:
        return self._table.setdefault((lam, w), value)

    def items(self):
        return sorted(self._table.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def clear(self) -> None:
        self._table.clear()

    def merge(self, other: ProductCache) -> int:
        """Union with ``other``; overlapping entries must agree. Returns the number added."""
        added = 0
        for key, val in other._table.items():
            mine = self._table.get(key)
            if mine is None:
                self._table[key] = val
                added += 1
            elif mine != val:
                lam, w = key
                raise ConflictError(f"cache entries for ({lam}, {w}) disagree: {mine!r} vs {val!r}")
        return added

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProductCache):
            return NotImplemented
        return self._table == other._table

    def to_json_obj(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "entries": [
                {"lambda": str(lam), "perm": str(w), "expansion": val.to_json_obj("permutation")}
                for (lam, w), val in self.items()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> ProductCache:
        version = obj.get("version") if isinstance(obj, dict) else None
        if version != CACHE_VERSION:
            raise VersionMismatch(f"cache version {version!r}, expected {CACHE_VERSION}")
        cache = cls()
        for e in obj["entries"]:
            key = (parse_partition(e["lambda"]), parse_perm(e["perm"]))
            cache._table[key] = FormalSum.from_json_obj(e["expansion"], parse_perm)
        return cache


_DEFAULT = ProductCache()


def default_cache() -> ProductCache:
    return _DEFAULT


def cache_save(path: str | os.PathLike, cache: ProductCache | None = None) -> None:
    cache = _DEFAULT if cache is None else cache
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(cache.to_json_obj(), fh, indent=1)
            fh.write("\n")
    except OSError as e:
        raise CacheIOError(f"cannot write cache {path}: {e}") from e


def cache_load(path: str | os.PathLike, cache: ProductCache | None = None) -> ProductCache:
    """Read a cache file and merge it into ``cache`` (the shared default if omitted)."""
    cache = _DEFAULT if cache is None else cache
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise CacheIOError(f"cannot read cache {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CacheIOError(f"cache {path} is not valid JSON: {e}") from e
    cache.merge(ProductCache.from_json_obj(obj))
    return cache


def schur_as_schubert(lam: Partition) -> PermutationZ:
    return grass_encode((0, Partition(lam)))


def _is_gr0(v: PermutationZ) -> bool:
    return is_grassmannian(v, 0)


def _non_gr_part(lam: Partition, w: PermutationZ, cache: ProductCache) -> FormalSum:
    out: dict = {}
    for j in sorted(w.descents()):
        if j == 0:
            continue
        smaller = _product(lam, right_s(j, w)[0], cache)
        for u, c in smaller.raw().items():
            if j in u.descents():
                raise InternalInconsistency(f"{u} in s_{lam}·S_{right_s(j, w)[0]} has descent {j}")
            v = right_s(j, u)[0]
            prev = out.setdefault(v, c)
            if prev != c:
                raise InternalInconsistency(f"reads of c^{v} for ({lam}, {w}) disagree: {prev} vs {c}")
    return FormalSum._wrap(out)


def _leibniz_sides(lam: Partition, w: PermutationZ, cache: ProductCache) -> tuple[FormalSum, FormalSum]:
    """``ξ`` and ``∇`` of ``s_λ S_w`` expanded by the Leibniz rule."""
    d: dict = {}
    n: dict = {}
    for box, lam2 in removable_corners(lam):
        sub = _product(lam2, w, cache)
        d[len(d)] = sub
        if box.content:
            n[len(n)] = sub * box.content
    for k in left_descents(w):
        sub = _product(lam, left_s(k, w)[0], cache)
        d[len(d)] = sub
        if k:
            n[len(n)] = sub * k
    return sum(d.values(), FormalSum.zero()), sum(n.values(), FormalSum.zero())


def _to_shapes(x: FormalSum, what: str, lam, w) -> FormalSum:
    bad = [v for v in x.raw() if not _is_gr0(v)]
    if bad:
        raise InternalInconsistency(f"{what} for ({lam}, {w}) leaves descent-0 Grassmannians: {bad[:3]}")
    return x.map_keys(lambda v: grass_decode(v).shape)


def _product(lam: Partition, w: PermutationZ, cache: ProductCache) -> FormalSum:
    hit = cache.get(lam, w)
    if hit is not None:
        return hit
    if not lam:
        return cache.put(lam, w, FormalSum._wrap({w: 1}))
    if w.is_identity():
        return cache.put(lam, w, FormalSum._wrap({schur_as_schubert(lam): 1}))

    rest = _non_gr_part(lam, w, cache)
    d, n = _leibniz_sides(lam, w, cache)
    d = _to_shapes(d - xi_perm(rest), "ξ of the Grassmannian part", lam, w)
    n = _to_shapes(n - nabla_perm(rest), "∇ of the Grassmannian part", lam, w)
    try:
        shapes = recover(d, n)
    except NonRecoverable as e:
        raise InternalInconsistency(f"recovery failed for ({lam}, {w}): {e}") from e
    result = shapes.map_keys(schur_as_schubert) + rest

    allowed = w.descents() | {0}
    degree = lam.size + w.length
    for v, c in result.raw().items():
        if not v.descents() <= allowed or v.length != degree or not isinstance(c, int) or c < 0:
            raise InternalInconsistency(f"bad term {c} * {v} in s_{lam}·S_{w}")
    return cache.put(lam, w, result)


def schur_times_schubert(lam, w: PermutationZ, cache: ProductCache | None = None) -> FormalSum:
    """``s_λ · S_w = Σ_v c^v_{λ,w} S_v`` in the back-stable Schubert basis."""
    lam = Partition(lam)
    if not isinstance(w, PermutationZ):
        w = parse_perm(str(w))
    return _product(lam, w, _DEFAULT if cache is None else cache)


@dataclass
class ProductReport:
    partition: Partition
    perm: PermutationZ
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = ok
        if detail:
            self.details[name] = detail

    def to_json_obj(self) -> dict:
        return {
            "lambda": str(self.partition),
            "perm": str(self.perm),
            "passed": self.passed,
            "checks": dict(self.checks),
            "details": dict(self.details),
        }

    def lines(self) -> list[str]:
        out = []
        for name, ok in self.checks.items():
            line = f"{name}: {'pass' if ok else 'FAIL'}"
            if name in self.details:
                line += f" ({self.details[name]})"
            out.append(line)
        return out


def verify_product(lam, w: PermutationZ, expansion, cache: ProductCache | None = None) -> ProductReport:
    """
    Check a candidate expansion of ``s_λ · S_w`` without trusting it:
    ``∂_j`` for ``j ∈ des(w) ∖ {0}``, the ``ξ``/``∇`` Leibniz rule, the
    reduced-word count identity, and nonnegative integrality. Smaller products
    are taken from :func:`schur_times_schubert`.
    """
    lam = Partition(lam)
    cache = _DEFAULT if cache is None else cache
    x = as_schub(expansion)
    rep = ProductReport(lam, w)

    bad = [str(j) for j in sorted(w.descents() - {0})
           if divided_difference(j, x) != _product(lam, right_s(j, w)[0], cache)]
    rep.record("divided_differences", not bad, f"∂_j mismatch for j in {{{', '.join(bad)}}}" if bad else "")

    d, n = _leibniz_sides(lam, w, cache)
    ok_xi, ok_nabla = xi_perm(x) == d, nabla_perm(x) == n
    rep.record("leibniz", ok_xi and ok_nabla,
               "" if ok_xi and ok_nabla else f"xi {'ok' if ok_xi else 'differs'}, nabla {'ok' if ok_nabla else 'differs'}")

    rep.record("reduced_words", reduced_word_identity_check(schur_as_schubert(lam), w, x))

    degree = lam.size + w.length
    wrong = [str(v) for v in x.raw() if v.length != degree]
    ok = x.is_integral() and x.is_nonnegative() and not wrong
    rep.record("positivity", ok, f"off-degree terms {wrong[:3]}" if wrong else "")
    return rep
