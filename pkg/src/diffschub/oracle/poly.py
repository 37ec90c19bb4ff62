"""Sparse integer polynomials in finitely many variables ``x_lo, ..., x_hi``."""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping

__all__ = ["MonomialMap", "poly_multiply", "is_dominant"]


class MonomialMap(Mapping):
    """
    Map from exponent vectors to nonzero integers. Exponent vectors have one
    entry per variable in ``[lo, hi]``; an empty range is allowed (constants).
    """

    __slots__ = ("terms", "lo", "hi")

    def __init__(self, terms: Mapping | None = None, lo: int = 1, hi: int = 0):
        self.lo, self.hi = lo, hi
        width = max(hi - lo + 1, 0)
        self.terms: dict[tuple[int, ...], int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(f"exponent {exp} does not match variables [{lo}, {hi}]")
            if c:
                self.terms[exp] = self.terms.get(exp, 0) + int(c)
                if not self.terms[exp]:
                    del self.terms[exp]

    @property
    def nvars(self) -> int:
        return max(self.hi - self.lo + 1, 0)

    def __getitem__(self, exp) -> int:
        return self.terms[tuple(exp)]

    def __iter__(self):
        return iter(sorted(self.terms, reverse=True))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMap):
            return NotImplemented
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        return self.widen(lo, hi).terms == other.widen(lo, hi).terms

    def coeff(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def widen(self, lo: int, hi: int) -> MonomialMap:
        """The same polynomial over the larger variable range ``[lo, hi]``."""
        if lo > self.lo or hi < self.hi:
            if any(e[i] for e in self.terms for i in range(self.nvars)
                   if not lo <= self.lo + i <= hi):
                raise ValueError("cannot narrow past a variable that occurs")
        out = MonomialMap(lo=lo, hi=hi)
        for exp, c in self.terms.items():
            full = [0] * max(hi - lo + 1, 0)
            for i, e in enumerate(exp):
                v = self.lo + i
                if lo <= v <= hi:
                    full[v - lo] = e
            out.terms[tuple(full)] = c
        return out

    def leading(self, from_last: bool = False) -> tuple[tuple[int, ...], int] | None:
        """
        Lexicographically largest exponent with its coefficient. With
        ``from_last`` exponents are compared starting at the last variable.
        """
        if not self.terms:
            return None
        exp = max(self.terms, key=(lambda e: e[::-1]) if from_last else None)
        return exp, self.terms[exp]

    def __add__(self, other: MonomialMap) -> MonomialMap:
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        a, b = self.widen(lo, hi), other.widen(lo, hi)
        out = MonomialMap(lo=lo, hi=hi)
        out.terms = dict(a.terms)
        for exp, c in b.terms.items():
            v = out.terms.get(exp, 0) + c
            if v:
                out.terms[exp] = v
            else:
                out.terms.pop(exp, None)
        return out

    def scale(self, c: int) -> MonomialMap:
        out = MonomialMap(lo=self.lo, hi=self.hi)
        if c:
            out.terms = {e: v * c for e, v in self.terms.items()}
        return out

    def __sub__(self, other: MonomialMap) -> MonomialMap:
        return self + other.scale(-1)

    def __repr__(self) -> str:
        if not self.terms:
            return "MonomialMap(0)"
        shown = " + ".join(f"{c}*x^{list(e)}" for e, c in list(self.items())[:6])
        more = " + ..." if len(self.terms) > 6 else ""
        return f"MonomialMap[{self.lo}..{self.hi}]({shown}{more})"

    def to_json_obj(self) -> dict:
        return {
            "vars": [self.lo, self.hi],
            "terms": [{"exp": list(e), "coeff": str(self.terms[e])} for e in sorted(self.terms, reverse=True)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> MonomialMap:
        lo, hi = obj["vars"]
        return cls({tuple(t["exp"]): int(t["coeff"]) for t in obj["terms"]}, lo, hi)

    @classmethod
    def from_json(cls, text: str) -> MonomialMap:
        return cls.from_json_obj(json.loads(text))


def is_dominant(exp: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(exp, exp[1:]))


def poly_multiply(p: MonomialMap, q: MonomialMap,
                  keep: Callable[[tuple[int, ...]], bool] | None = None) -> MonomialMap:
    """Product ``p q``; with ``keep``, only monomials passing the filter are formed."""
    lo, hi = min(p.lo, q.lo), max(p.hi, q.hi)
    a, b = p.widen(lo, hi), q.widen(lo, hi)
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if keep is not None and not keep(e):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    res = MonomialMap(lo=lo, hi=hi)
    res.terms = {e: c for e, c in out.items() if c}
    return res
