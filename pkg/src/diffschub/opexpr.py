"""
Operator expressions over ``xi``, ``nabla``, ``rho(k)`` and ``xiL(λ)``.

Grammar (whitespace is ignored)::

    expr := sum
    sum  := ['+' | '-'] prod (('+' | '-') prod)*
    prod := [rational '*'] atom+
    atom := 'xi' | 'nabla' | 'rho(' int ')' | 'xiL(' partition ')'
          | '[' expr ',' expr ']' | '(' expr ')'

Juxtaposition is composition and the rightmost factor acts first, so
``xi nabla`` applies ``nabla`` and then ``xi``. ``[A,B]`` is ``AB - BA``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import bsops, yops
from .errors import ParseError
from .exact import FormalSum, as_rational, format_rational
from .perm import PermutationZ, parse_perm
from .young import Partition, parse_partition

__all__ = [
    "Xi", "Nabla", "Rho", "XiLambda", "Product", "Sum", "Commutator", "OperatorExpr",
    "parse_op", "print_op", "evaluate", "parse_element", "BASES",
]

BASES = ("partition", "permutation")


@dataclass(frozen=True)
class Xi:
    pass


@dataclass(frozen=True)
class Nabla:
    pass


@dataclass(frozen=True)
class Rho:
    k: int


@dataclass(frozen=True)
class XiLambda:
    shape: Partition


@dataclass(frozen=True)
class Commutator:
    left: "OperatorExpr"
    right: "OperatorExpr"


@dataclass(frozen=True)
class Product:
    """``coeff * f_1 f_2 ... f_n``; ``coeff`` is ``None`` when not written."""
    coeff: Union[int, Fraction, None]
    factors: tuple


@dataclass(frozen=True)
class Sum:
    """Signed terms ``(±1, expr)``."""
    terms: tuple


OperatorExpr = Union[Xi, Nabla, Rho, XiLambda, Commutator, Product, Sum]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        return ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {got}")
        self.pos += 1

    def match(self, pattern: str):
        self.skip()
        m = re.compile(pattern).match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def parse(self) -> OperatorExpr:
        e = self.sum()
        if self.peek():
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return e

    def sum(self) -> OperatorExpr:
        terms = []
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        terms.append((sign, self.prod()))
        while self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            terms.append((sign, self.prod()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def prod(self) -> OperatorExpr:
        coeff = None
        save = self.pos
        m = self.match(r"(\d+)(\s*/\s*(\d+))?")
        if m:
            if self.peek() != "*":
                raise self.error("a coefficient must be followed by '*'")
            self.pos += 1
            den = int(m.group(3)) if m.group(3) else 1
            if den == 0:
                raise self.error("zero denominator", save)
            coeff = as_rational(Fraction(int(m.group(1)), den))
        factors = [self.atom()]
        while self.peek() and self.peek() not in "+-,])":
            factors.append(self.atom())
        if coeff is None and len(factors) == 1:
            return factors[0]
        return Product(coeff, tuple(factors))

    def atom(self) -> OperatorExpr:
        ch = self.peek()
        if not ch:
            raise self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            e = self.sum()
            self.expect(")")
            return e
        if ch == "[":
            self.pos += 1
            a = self.sum()
            self.expect(",")
            b = self.sum()
            self.expect("]")
            return Commutator(a, b)
        if self.match(r"xiL\b|xiL(?=\()"):
            self.expect("(")
            start = self.pos
            m = self.match(r"[\d,\s]*")
            self.expect(")")
            try:
                shape = parse_partition(m.group(0))
            except ValueError as e:
                raise self.error(str(e), start) from None
            return XiLambda(shape)
        if self.match(r"rho\b|rho(?=\()"):
            self.expect("(")
            m = self.match(r"\d+")
            if not m:
                raise self.error("expected a positive integer")
            k = int(m.group(0))
            if k < 1:
                raise self.error("rho needs k >= 1", m.start())
            self.expect(")")
            return Rho(k)
        if self.match(r"nabla\b"):
            return Nabla()
        if self.match(r"xi\b"):
            return Xi()
        raise self.error(f"unexpected {ch!r}")


def parse_op(text: str) -> OperatorExpr:
    """Parse an operator expression; errors carry the offending offset."""
    return _Parser(text).parse()


def _print_factor(e: OperatorExpr) -> str:
    s = print_op(e)
    if isinstance(e, (Sum, Product)):
        return f"({s})"
    return s


def print_op(e: OperatorExpr) -> str:
    """
    Canonical text for ``e``. ``parse_op(print_op(e)) == e`` for every tree
    that ``parse_op`` can return; other trees (say a negative coefficient)
    print to an equivalent expression.
    """
    if isinstance(e, Xi):
        return "xi"
    if isinstance(e, Nabla):
        return "nabla"
    if isinstance(e, Rho):
        return f"rho({e.k})"
    if isinstance(e, XiLambda):
        return f"xiL({e.shape})"
    if isinstance(e, Commutator):
        return f"[{print_op(e.left)}, {print_op(e.right)}]"
    if isinstance(e, Product):
        body = " ".join(_print_factor(f) for f in e.factors)
        if e.coeff is None:
            return body
        if e.coeff < 0:
            # coefficients are unsigned in the grammar
            return f"(- {format_rational(-e.coeff)} * {body})"
        return f"{format_rational(e.coeff)} * {body}"
    if isinstance(e, Sum):
        parts = []
        for i, (sign, t) in enumerate(e.terms):
            s = _print_factor(t) if isinstance(t, Sum) else print_op(t)
            if i == 0:
                parts.append(s if sign > 0 else f"- {s}")
            else:
                parts.append(f"{'+' if sign > 0 else '-'} {s}")
        return " ".join(parts)
    raise TypeError(f"not an operator expression: {e!r}")


_ACTIONS = {
    "partition": (yops.xi, yops.nabla, yops.rho, yops.xi_lambda),
    "permutation": (bsops.xi_perm, bsops.nabla_perm, bsops.rho_perm, bsops.xi_lambda_perm),
}


def evaluate(e: OperatorExpr, x: FormalSum, basis: str = "partition") -> FormalSum:
    """Apply ``e`` to ``x`` on the partition or permutation basis."""
    try:
        xi, nabla, rho, xi_lam = _ACTIONS[basis]
    except KeyError:
        raise ValueError(f"unknown basis {basis!r}") from None

    def ev(e, x):
        if not x:
            return x
        if isinstance(e, Xi):
            return xi(x)
        if isinstance(e, Nabla):
            return nabla(x)
        if isinstance(e, Rho):
            return rho(e.k, x)
        if isinstance(e, XiLambda):
            return xi_lam(e.shape, x)
        if isinstance(e, Commutator):
            return ev(e.left, ev(e.right, x)) - ev(e.right, ev(e.left, x))
        if isinstance(e, Product):
            for f in reversed(e.factors):
                x = ev(f, x)
            return x if e.coeff is None else x * e.coeff
        if isinstance(e, Sum):
            out = FormalSum.zero()
            for sign, t in e.terms:
                y = ev(t, x)
                out = out + y if sign > 0 else out - y
            return out
        raise TypeError(f"not an operator expression: {e!r}")

    return ev(e, x)


def parse_element(text: str, basis: str = "partition") -> FormalSum:
    """
    Parse ``"c1*key1 + c2*key2 + ..."``; a term without ``*`` has coefficient
    1. Coefficients are integers or ``p/q`` with an optional sign. Keys are
    partitions like ``4,3,1`` or permutations like ``2,0,1@0``.
    """
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    parse_key = parse_partition if basis == "partition" else parse_perm
    text = text.strip()
    if text in ("", "0"):
        return FormalSum.zero()
    terms = []
    offset = 0
    for chunk in text.split("+"):
        c, star, key = chunk.partition("*")
        if not star:
            c, key = "1", chunk
        try:
            coeff = as_rational(c.strip())
            k = parse_key(key)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad term {chunk.strip()!r}: {e}", offset, text) from None
        terms.append((k, coeff))
        offset += len(chunk) + 1
    return FormalSum(terms)
