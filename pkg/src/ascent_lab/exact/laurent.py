"""Laurent polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

from ascent_lab.errors import ParseError


class LaurentPolynomial:
    """An element of Z[t, t^-1].

    Stored as a tuple of ``(exponent, coefficient)`` pairs sorted by exponent
    with no zero coefficients; the zero polynomial has no terms.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, int]] | Mapping[int, int] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPolynomial":
        return cls((low + i, c) for i, c in enumerate(coeffs))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls([(exponent, coefficient)])

    # -- structure

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no lowest exponent")
        return self.terms[0][0]

    @property
    def high(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no highest exponent")
        return self.terms[-1][0]

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def leading_coefficient(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    def dense(self) -> list[int]:
        """Coefficients from ``low`` to ``high`` inclusive."""
        if not self.terms:
            return []
        out = [0] * (self.high - self.low + 1)
        for e, c in self.terms:
            out[e - self.low] = c
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``t**k``."""
        return LaurentPolynomial((e + k, c) for e, c in self.terms)

    # -- ring operations

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return LaurentPolynomial(self.terms + other.terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial((e, -c) for e, c in self.terms)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial((e, c * other) for e, c in self.terms)
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def evaluate(self, x: int) -> int | Fraction:
        """Exact value at an integer; a Fraction when negative powers do not cancel."""
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(x) ** e
        return int(total) if total.denominator == 1 else total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial([(0, other)])
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({list(self.terms)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self) -> dict:
        """Coefficient-object form ``{"low": L, "coeffs": [...]}``, integers as decimal strings."""
        if not self.terms:
            return {"low": "0", "coeffs": []}
        return {"low": str(self.low), "coeffs": [str(c) for c in self.dense()]}


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*?\s*(?P<var1>t)(?:\s*\^\s*(?P<exp1>-?\d+|\(\s*-?\d+\s*\)))?)?
          |
          (?P<var2>t)(?:\s*\^\s*(?P<exp2>-?\d+|\(\s*-?\d+\s*\)))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str | Mapping) -> LaurentPolynomial:
    """Parse ``"t^2 - t - 1"``-style text or a ``{"low": L, "coeffs": [...]}`` object.

    Text objects beginning with ``{`` are decoded as JSON first.
    """
    if isinstance(text, Mapping):
        return _from_object(text)
    s = text.strip()
    if s.startswith("{"):
        try:
            return _from_object(json.loads(s))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad polynomial object: {exc}") from None
    s = s.replace("−", "-")
    if not s:
        raise ParseError("empty polynomial")
    pos = 0
    acc: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var2") is None):
            raise ParseError(f"cannot parse polynomial {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing '+' or '-' before term at position {pos} in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            exp = 0
            if m.group("var1"):
                exp = _exp(m.group("exp1"))
        else:
            coef = 1
            exp = _exp(m.group("exp2"))
        acc[exp] = acc.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPolynomial(acc)


def _exp(raw: str | None) -> int:
    if raw is None:
        return 1
    return int(raw.strip("() "))


def _integer(x) -> int:
    # decimal strings or JSON integers; floats and booleans are rejected
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"{x!r} is not an integer")
    return int(x)


def _from_object(obj: Mapping) -> LaurentPolynomial:
    try:
        low = _integer(obj.get("low", 0))
        coeffs = [_integer(c) for c in obj["coeffs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad polynomial object {obj!r}: {exc}") from None
    return LaurentPolynomial.from_coefficients(coeffs, low)
