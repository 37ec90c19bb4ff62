"""
Exact rational coefficients, formal linear combinations, and a small
nullspace solver.

Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise; both are exact and mix freely, and
keeping integers unboxed makes the combinatorial recursions several times
faster than carrying ``Fraction(n, 1)`` everywhere.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any

Rational = int | Fraction

__all__ = [
    "Rational", "FormalSum", "as_rational", "format_rational", "parse_rational",
    "sum_add", "sum_scale", "sum_map", "assert_integral",
    "register_basis", "solve_nullspace", "rank",
]


def as_rational(c) -> Rational:
    """Normalize ``c`` (int, Fraction or "p/q" string) to an exact coefficient."""
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return parse_rational(c)
    raise TypeError(f"not an exact rational: {c!r}")


def parse_rational(s: str) -> Rational:
    s = s.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {s!r}")
    return as_rational(Fraction(s))


def format_rational(c: Rational) -> str:
    c = as_rational(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _sort_key(key):
    sk = getattr(key, "sort_key", None)
    return sk() if sk is not None else key


# basis name -> (key type, parser); filled in by young and perm on import
_BASES: dict[str, tuple[type, Callable[[str], Any]]] = {}


def register_basis(name: str, key_type: type, parse: Callable[[str], Any]) -> None:
    _BASES[name] = (key_type, parse)


class FormalSum(Mapping):
    """
    Immutable finite linear combination ``sum c_k * k`` of hashable basis keys.

    Zero coefficients are never stored. Iteration follows the canonical key
    order (``key.sort_key()`` when the key defines it), so printing and
    serialization are deterministic.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple[Any, Any]] | None = None):
        d: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                c = as_rational(c)
                if c:
                    c = d.get(k, 0) + c
                    if c:
                        d[k] = c
                    else:
                        del d[k]
        self._terms = d
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> FormalSum:
        # d must already be zero-free with normalized coefficients
        s = object.__new__(cls)
        s._terms = d
        s._hash = None
        return s

    @classmethod
    def monomial(cls, key, coeff: Rational = 1) -> FormalSum:
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> FormalSum:
        return cls._wrap({})

    # Mapping protocol -------------------------------------------------
    def __getitem__(self, key) -> Rational:
        return self._terms[key]

    def coeff(self, key) -> Rational:
        return self._terms.get(key, 0)

    def __iter__(self) -> Iterator:
        return iter(self.keys_sorted())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def keys_sorted(self) -> list:
        return sorted(self._terms, key=_sort_key)

    def items(self):
        return [(k, self._terms[k]) for k in self.keys_sorted()]

    def raw(self) -> dict:
        """Unordered view of the underlying dict (do not mutate)."""
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Linear structure -------------------------------------------------
    def __add__(self, other: FormalSum) -> FormalSum:
        if not isinstance(other, FormalSum):
            if isinstance(other, int) and other == 0:
                return self
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        d = dict(self._terms)
        for k, c in other._terms.items():
            c = d.get(k, 0) + c
            if c:
                d[k] = as_rational(c) if isinstance(c, Fraction) else c
            else:
                del d[k]
        return FormalSum._wrap(d)

    __radd__ = __add__

    def __neg__(self) -> FormalSum:
        return FormalSum._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: FormalSum) -> FormalSum:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> FormalSum:
        if isinstance(c, FormalSum):
            return NotImplemented
        c = as_rational(c)
        if not c:
            return FormalSum._wrap({})
        if c == 1:
            return self
        return FormalSum._wrap({k: as_rational(v * c) for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> FormalSum:
        return self * (Fraction(1) / as_rational(c))

    def map(self, f: Callable[[Any], FormalSum]) -> FormalSum:
        """Linear extension of ``f`` from basis keys to formal sums."""
        d: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k)._terms.items():
                v = d.get(k2, 0) + c * c2
                if v:
                    d[k2] = v
                else:
                    del d[k2]
        return FormalSum._wrap({k: as_rational(v) for k, v in d.items()})

    def map_keys(self, f: Callable[[Any], Any]) -> FormalSum:
        """Relabel basis keys by ``f`` (summing collisions)."""
        return FormalSum((f(k), c) for k, c in self._terms.items())

    def filter(self, pred: Callable[[Any], bool]) -> FormalSum:
        return FormalSum._wrap({k: c for k, c in self._terms.items() if pred(k)})

    def homogeneous_components(self, degree: Callable[[Any], int] | None = None) -> dict[int, FormalSum]:
        """Split by ``degree(key)`` (default: ``key.size``)."""
        if degree is None:
            degree = lambda k: k.size  # noqa: E731
        parts: dict[int, dict] = {}
        for k, c in self._terms.items():
            parts.setdefault(degree(k), {})[k] = c
        return {n: FormalSum._wrap(d) for n, d in sorted(parts.items())}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # Display and serialization ----------------------------------------
    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        body = " + ".join(f"{format_rational(c)}*[{k}]" for k, c in self.items())
        return f"FormalSum({body})"

    def to_lines(self) -> list[str]:
        return [f"{format_rational(c)} * {k}" for k, c in self.items()]

    def to_json_obj(self, basis: str) -> dict:
        return {
            "basis": basis,
            "terms": [{"key": str(k), "coeff": format_rational(c)} for k, c in self.items()],
        }

    def to_json(self, basis: str) -> str:
        return json.dumps(self.to_json_obj(basis))

    @classmethod
    def from_json_obj(cls, obj: dict, parse_key: Callable[[str], Any] | None = None) -> FormalSum:
        if parse_key is None:
            try:
                parse_key = _BASES[obj["basis"]][1]
            except KeyError:
                raise ValueError(f"unknown basis {obj.get('basis')!r}") from None
        return cls((parse_key(t["key"]), parse_rational(t["coeff"])) for t in obj["terms"])

    @classmethod
    def from_json(cls, text: str, parse_key: Callable[[str], Any] | None = None) -> FormalSum:
        return cls.from_json_obj(json.loads(text), parse_key)


def sum_add(a: FormalSum, b: FormalSum) -> FormalSum:
    return a + b


def sum_scale(c: Rational, a: FormalSum) -> FormalSum:
    return a * c


def sum_map(a: FormalSum, f: Callable[[Any], FormalSum]) -> FormalSum:
    return a.map(f)


def assert_integral(x: FormalSum, what: str = "result") -> FormalSum:
    bad = [(k, c) for k, c in x.items() if not isinstance(c, int)]
    if bad:
        raise AssertionError(f"{what} has non-integral coefficients: {bad[:5]}")
    return x


# ---------------------------------------------------------------------------
# Dense exact linear algebra


def _rref(matrix: list[list], columns: list[int]):
    """Row-reduce in place, choosing pivot columns in the order ``columns``."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    pivots: dict[int, int] = {}  # column -> row index in `rows` after swaps
    r = 0
    for col in columns:
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots[col] = r
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _primitive(v: list[Fraction]) -> tuple[int, ...]:
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def solve_nullspace(matrix: list[list], ncols: int | None = None, reverse: bool = False) -> list[tuple[int, ...]]:
    """
    Exact basis of the right nullspace ``{v : M v = 0}``.

    Pivots are taken leftmost column first (rightmost first with
    ``reverse=True``), each from the smallest available row index. Basis
    vectors are returned as primitive integer tuples whose first nonzero entry
    is positive.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    columns = list(range(ncols))
    if reverse:
        columns.reverse()
    rows, pivots = _rref(matrix, columns) if matrix else ([], {})
    basis = []
    for free in columns:
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for pc, pr in pivots.items():
            v[pc] = -rows[pr][free]
        basis.append(_primitive(v))
    return basis


def rank(matrix: list[list], reverse: bool = False) -> int:
    if not matrix:
        return 0
    columns = list(range(len(matrix[0])))
    if reverse:
        columns.reverse()
    return len(_rref(matrix, columns)[1])
