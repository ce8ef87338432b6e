"""Free-semigroup witnesses in properly ascending HNN extensions.

Given an ascending extension <B, t | tBt⁻¹ ⊂ B> with B₁ = tBt⁻¹ a proper
subgroup, any u ∈ B − B₁ makes t and tu generate a free semigroup.  This
module finds u for each supported family, forms the pair, and certifies
freeness by exhaustive comparison of canonical forms up to a length budget.
The certificate is finite; the ping-pong argument covers every length.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable, Hashable

from ascent_lab.errors import BudgetExceeded, NotProperlyAscending, PreconditionError, UnsupportedFamily
from ascent_lab.exact.matrix import IntegerMatrix, vector_outside_image
from ascent_lab.groups.base import Group, Word
from ascent_lab.groups.families import BaumslagSolitar, MatrixGroup, WreathZZ
from ascent_lab.groups.hnn import HnnAbelian, HnnFree

DEFAULT_LENGTH = 12
DEFAULT_CAP = 10**6
FREE_SEARCH_LENGTH = 8


def default_cap() -> int:
    raw = os.environ.get("ASCENT_LAB_BUDGET")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class AscentData:
    group: Group
    stable_letter: Hashable
    base_membership: Callable[[Hashable], bool]
    image_membership: Callable[[Hashable], bool]
    base_generator: Hashable


def ascent_data(group: Group) -> AscentData:
    """Base B, image B₁ = tBt⁻¹ and stable letter for a supported family."""
    if not isinstance(group, (BaumslagSolitar, WreathZZ, HnnAbelian, HnnFree)):
        raise UnsupportedFamily(f"{group.family} is not presented as an ascending HNN extension")
    t = group.generator("t")
    if isinstance(group, BaumslagSolitar):
        n = group.n

        def in_base(g):
            return g[0] == 0 and g[1].is_integer()

        def in_image(g):
            return in_base(g) and g[1].numerator % n == 0

        return AscentData(group, t, in_base, in_image, group.generator("a"))

    if isinstance(group, WreathZZ):
        # B = functions supported on [0, ∞); B₁ = supported on [1, ∞)
        def in_base(g):
            return g[1] == 0 and all(p >= 0 for p, _ in g[0])

        def in_image(g):
            return g[1] == 0 and all(p >= 1 for p, _ in g[0])

        return AscentData(group, t, in_base, in_image, group.generator("a"))

    if isinstance(group, HnnAbelian):
        def in_base(g):
            return g[1] == 0 and g[2] == 0

        def in_image(g):
            return in_base(g) and group.preimage(g[0])[0]

        return AscentData(group, t, in_base, in_image, group.generator("e1"))

    def in_base(g):
        return g[0] == 0 and g[2] == 0

    def in_image(g):
        return in_base(g) and group.in_image(g[1])[0]

    return AscentData(group, t, in_base, in_image, group.generator("a1"))


def coset_representative_word(d: AscentData, max_length: int = FREE_SEARCH_LENGTH) -> Word:
    """A word for some u ∈ B − B₁."""
    g = d.group
    if isinstance(g, (BaumslagSolitar, WreathZZ)):
        return (("a", 1),)
    if isinstance(g, HnnAbelian):
        u = vector_outside_image(g.phi, g.snf)
        return tuple((f"e{i + 1}", 1 if c > 0 else -1) for i, c in enumerate(u) for _ in range(abs(c)))
    if isinstance(g, HnnFree):
        for w in _reduced_words(max_length):
            if not g.in_image(w)[0]:
                return tuple(("a1" if x.lower() == "a" else "a2", 1 if x.islower() else -1) for x in w)
        raise NotProperlyAscending(f"every reduced word of length <= {max_length} lies in the image of psi")
    raise UnsupportedFamily(g.family)


def _reduced_words(max_length: int):
    """Nonempty reduced free words in shortlex order, a1 < a2 < A1 < A2."""
    order = "abAB"
    for n in range(1, max_length + 1):
        for w in itertools.product(order, repeat=n):
            if all(w[i] != w[i + 1].swapcase() for i in range(n - 1)):
                yield "".join(w)


def find_coset_representative(d: AscentData, max_length: int = FREE_SEARCH_LENGTH):
    u = d.group.evaluate(coset_representative_word(d, max_length))
    assert d.base_membership(u) and not d.image_membership(u), "coset representative check failed"
    return u


def witness_words(d: AscentData) -> tuple[Word, Word]:
    t = (("t", 1),)
    return t, t + coset_representative_word(d)


def witness_pair(d: AscentData):
    """(t, t·u) for the canonical coset representative u."""
    u = find_coset_representative(d)
    return d.stable_letter, d.group.multiply(d.stable_letter, u)


@dataclass(frozen=True)
class FreenessVerdict:
    status: str  # "FREE" or "COLLISION"
    budget: int
    count: int = 0
    words: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    element: str | None = None

    @property
    def is_free(self) -> bool:
        return self.status == "FREE"

    def label(self) -> str:
        return f"FREE-UP-TO-{self.budget}" if self.is_free else "COLLISION"

    def formatted_words(self) -> tuple[str, str] | None:
        if self.words is None:
            return None
        return tuple("".join(f"s{i}" for i in w) for w in self.words)

    def to_dict(self) -> dict:
        out = {"status": self.label(), "budget": str(self.budget), "distinct": str(self.count)}
        if self.words is not None:
            out["collision"] = list(self.formatted_words())
            out["element"] = self.element
        return out


def verify_free_semigroup(group: Group, s1, s2, max_length: int, cap: int | None = None) -> FreenessVerdict:
    """Check that all nonempty positive words in s1, s2 up to ``max_length`` differ.

    Words are visited by length, then lexicographically with s1 < s2, so the
    first repeat found is the shortlex-least colliding word, reported with
    the earliest word sharing its value.
    """
    if max_length < 1:
        raise PreconditionError("length budget must be >= 1")
    cap = default_cap() if cap is None else cap
    seen: dict[Hashable, tuple[int, ...]] = {}
    level = [((), group.identity())]
    gens = ((1, s1), (2, s2))
    for length in range(1, max_length + 1):
        if len(seen) + 2**length > cap:
            raise BudgetExceeded(f"{len(seen) + 2**length} elements exceed the cap of {cap} at length {length}")
        nxt = []
        for word, g in level:
            for i, s in gens:
                h = group.multiply(g, s)
                w = word + (i,)
                prev = seen.get(h)
                if prev is not None:
                    return FreenessVerdict("COLLISION", max_length, len(seen), (prev, w), group.format(h))
                seen[h] = w
                nxt.append((w, h))
        level = nxt
    return FreenessVerdict("FREE", max_length, len(seen))


AMALGAM_PAIR = (IntegerMatrix.of([[1, 2], [0, 1]]), IntegerMatrix.of([[1, 0], [2, 1]]))


def amalgam_matrix_demo(max_length: int = 10, pair: tuple[IntegerMatrix, IntegerMatrix] | None = None) -> FreenessVerdict:
    """Positive words in the elementary matrices with off-diagonal entry 2.

    SL(2, Z) splits as an amalgam, and this pair plays ping-pong on the
    plane; every positive word of length <= ``max_length`` must differ.
    """
    x, y = pair or AMALGAM_PAIR
    g = MatrixGroup(2, [x, y])
    return verify_free_semigroup(g, x, y, max_length)


def certify(group: Group, max_length: int = DEFAULT_LENGTH, cap: int | None = None):
    """Full pipeline: representative, pair, verdict.  Returns (u, pair, words, verdict)."""
    d = ascent_data(group)
    u = find_coset_representative(d)
    pair = witness_pair(d)
    verdict = verify_free_semigroup(group, pair[0], pair[1], max_length, cap)
    return u, pair, witness_words(d), verdict
