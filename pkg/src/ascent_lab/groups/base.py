"""Group handles and words over a family's named generators.

A word is a tuple of ``(symbol, sign)`` pairs with ``sign`` in {1, -1}.
In text, lowercase symbols are generators and uppercase their inverses,
so ``"t a T"`` is t·a·t⁻¹; ``^k`` suffixes and ``⁻¹`` are also accepted.
"""

from __future__ import annotations

import re
from typing import Hashable, Iterable, Sequence

from ascent_lab.errors import ParseError, UnknownSymbol, UnsupportedFamily

Word = tuple[tuple[str, int], ...]

_EXP = re.compile(r"\s*(?:\^\s*\(?\s*(-?\d+)\s*\)?|(⁻¹))")


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Tokenize ``text`` by greedy longest match against ``alphabet``.

    A bare ``1`` is the empty word.
    """
    names = sorted(alphabet, key=len, reverse=True)
    out: list[tuple[str, int]] = []
    i = 0
    s = text.strip()
    if s == "1":
        return ()
    while i < len(s):
        if s[i].isspace() or s[i] == "*":
            i += 1
            continue
        for name in names:
            chunk = s[i : i + len(name)]
            if chunk == name or chunk == name.upper():
                sign = 1 if chunk == name else -1
                i += len(name)
                break
        else:
            raise UnknownSymbol(f"unknown symbol at {s[i:]!r} (alphabet {', '.join(alphabet)})")
        m = _EXP.match(s, i)
        power = 1
        if m:
            power = -1 if m.group(2) else int(m.group(1))
            i = m.end()
        if power < 0:
            sign, power = -sign, -power
        out.extend([(name, sign)] * power)
    return tuple(out)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(s if e > 0 else s.upper() for s, e in w)


def word_inverse(w: Word) -> Word:
    return tuple((s, -e) for s, e in reversed(w))


class Group:
    """Exact group arithmetic on canonical forms.

    Subclasses define ``family``, ``alphabet`` and the element operations.
    Elements are hashable tuples kept in canonical form, so equality of
    group elements is equality of Python values.
    """

    family: str = "group"
    alphabet: tuple[str, ...] = ()
    has_stable_letter = False

    def __init__(self):
        self._gens = {name: self._generator(name) for name in self.alphabet}

    # -- to be provided by families

    def identity(self) -> Hashable:
        raise NotImplementedError

    def multiply(self, g, h):
        raise NotImplementedError

    def invert(self, g):
        raise NotImplementedError

    def _generator(self, name: str):
        raise NotImplementedError

    def format(self, g) -> str:
        return repr(g)

    def _t_exponent(self, g) -> int:
        raise UnsupportedFamily(f"{self.family} has no stable letter")

    # -- shared

    def canonicalize(self, g):
        """Elements are produced in canonical form; this is the identity map."""
        return g

    def generator(self, name: str, sign: int = 1):
        try:
            g = self._gens[name]
        except KeyError:
            raise UnknownSymbol(f"{name!r} is not a generator of {self.family}") from None
        return g if sign > 0 else self.invert(g)

    def generators(self) -> dict[str, Hashable]:
        """Named symmetric generating set: each symbol, then its inverse (uppercase)."""
        out = {}
        for name in self.alphabet:
            out[name] = self._gens[name]
            out[name.upper()] = self.invert(self._gens[name])
        return out

    def symmetric_symbols(self) -> tuple[str, ...]:
        return tuple(self.generators())

    def element_of_symbol(self, symbol: str):
        if symbol in self._gens:
            return self._gens[symbol]
        if symbol.lower() in self._gens and symbol != symbol.lower():
            return self.invert(self._gens[symbol.lower()])
        raise UnknownSymbol(f"{symbol!r} is not a generator of {self.family}")

    def parse(self, text: str) -> Word:
        return parse_word(text, self.alphabet)

    def evaluate(self, w: Word | str):
        if isinstance(w, str):
            w = self.parse(w)
        g = self.identity()
        for name, sign in w:
            g = self.multiply(g, self.generator(name, sign))
        return g

    def product(self, elements: Iterable):
        g = self.identity()
        for h in elements:
            g = self.multiply(g, h)
        return g

    def power(self, g, k: int):
        if k < 0:
            g, k = self.invert(g), -k
        out = self.identity()
        for _ in range(k):
            out = self.multiply(out, g)
        return out

    def key(self, g) -> bytes:
        """Family-tagged canonical serialization."""
        return f"{self.family}:{g!r}".encode()

    def t_exponent(self, g) -> int:
        """Image of ``g`` under the homomorphism to Z that kills the base."""
        return self._t_exponent(g)


def evaluate_word(group: Group, w: Word | str):
    return group.evaluate(w)


def t_exponent(group: Group, g) -> int:
    return group.t_exponent(g)


def require_word(text: str, group: Group) -> Word:
    try:
        return group.parse(text)
    except UnknownSymbol as exc:
        raise ParseError(str(exc)) from None
