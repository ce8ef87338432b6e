"""Ascending HNN extensions with free-abelian and rank-2 free bases."""

from __future__ import annotations

from typing import Sequence

from ascent_lab.errors import BadParameter, DimensionMismatch, NotInjective
from ascent_lab.exact.matrix import IntegerMatrix, image_membership, smith_normal_form
from ascent_lab.groups import free
from ascent_lab.groups.base import Group


class HnnAbelian(Group):
    """<Z^d, t | t v t⁻¹ = φ v> for an integer matrix φ with det φ ≠ 0.

    An element ``(v, j, k)`` stands for ``φ^-j v · t^k``, where ``φ^-j v``
    lives in the direct limit of Z^d under φ.  The level ``j`` is kept
    minimal: ``j == 0`` or ``v`` is not in the image of φ.
    """

    family = "hnn-abelian"
    has_stable_letter = True

    def __init__(self, phi: IntegerMatrix):
        if not phi.is_square():
            raise DimensionMismatch(f"HNN matrix must be square, got {phi.shape}")
        self.phi = phi
        self.d = phi.rows
        self.snf = smith_normal_form(phi)
        if any(x == 0 for x in self.snf.invariants):
            raise NotInjective(f"det {phi} = 0")
        self.alphabet = tuple(f"e{i + 1}" for i in range(self.d)) + ("t",)
        super().__init__()

    def _apply(self, v, e):
        for _ in range(e):
            v = self.phi.apply(v)
        return v

    def preimage(self, v):
        return image_membership(self.phi, v, self.snf)

    def _normalize(self, v, j):
        while j > 0:
            ok, w = self.preimage(v)
            if not ok:
                break
            v, j = w, j - 1
        return v, j

    def identity(self):
        return ((0,) * self.d, 0, 0)

    def _generator(self, name):
        if name == "t":
            return ((0,) * self.d, 0, 1)
        i = int(name[1:]) - 1
        return (tuple(int(r == i) for r in range(self.d)), 0, 0)

    def multiply(self, g, h):
        v1, j1, k1 = g
        v2, j2, k2 = h
        top = max(j1, j2 - k1, 0)
        a = self._apply(v1, top - j1)
        b = self._apply(v2, top - j2 + k1)
        v, j = self._normalize(tuple(x + y for x, y in zip(a, b)), top)
        return (v, j, k1 + k2)

    def invert(self, g):
        v, j, k = g
        neg = tuple(-x for x in v)
        level = j + k
        if level >= 0:
            w, lv = self._normalize(neg, level)
            return (w, lv, -k)
        return (self._apply(neg, -level), 0, -k)

    def _t_exponent(self, g):
        return g[2]

    def format(self, g):
        v, j, k = g
        vec = "(" + ",".join(map(str, v)) + ")"
        base = vec if j == 0 else f"phi^-{j}{vec}"
        return f"{base} t^{k}"


class HnnFree(Group):
    """Ascending HNN extension of the free group F(a1, a2) along ψ.

    The relation is t w t⁻¹ = ψ(w).  An element ``(p, w, q)`` stands for
    ``t^-p · w · t^q`` with ``w`` a reduced word (see :mod:`free`), in
    normal form: ``p == 0`` or ``q == 0`` or ``w`` is not in ψ(F).
    Membership in ψ(F) and preimages come from one Stallings graph built
    at construction.
    """

    family = "hnn-free"
    alphabet = ("a1", "a2", "t")
    has_stable_letter = True

    def __init__(self, images: Sequence[str]):
        if len(images) != 2:
            raise BadParameter("need the images of a1 and a2")
        self.images = tuple(free.reduce(w) for w in images)
        self.image_graph = free.StallingsGraph(self.images)
        if not all(self.images) or self.image_graph.rank < 2:
            raise NotInjective(
                f"image subgroup <{', '.join(free.format_free_word(w) for w in self.images)}> has rank < 2"
            )
        self._powers: dict[tuple[int, str], str] = {}
        super().__init__()

    def _letter_power(self, m: int, x: str) -> str:
        key = (m, x)
        hit = self._powers.get(key)
        if hit is not None:
            return hit
        if x.isupper():
            out = free.inverse(self._letter_power(m, x.lower()))
        elif m == 1:
            out = self.images[0] if x == "a" else self.images[1]
        else:
            out = self.psi(self._letter_power(m - 1, x), 1)
        self._powers[key] = out
        return out

    def psi(self, w: str, m: int = 1) -> str:
        """ψ^m(w) for m >= 0."""
        if m == 0 or not w:
            return w
        out = ""
        for x in w:
            out = free.join(out, self._letter_power(m, x))
        return out

    def in_image(self, w: str) -> tuple[bool, str | None]:
        """Whether ``w`` lies in ψ(F), with its (unique) preimage."""
        ok, expr = self.image_graph.membership(w)
        if not ok:
            return False, None
        pre = "".join(("a" if abs(x) == 1 else "b") if x > 0 else ("A" if abs(x) == 1 else "B") for x in expr)
        return True, free.reduce(pre)

    def normalize(self, p: int, w: str, q: int) -> tuple[int, str, int]:
        while p > 0 and q > 0:
            ok, pre = self.in_image(w)
            if not ok:
                break
            p, w, q = p - 1, pre, q - 1
        return (p, w, q)

    def identity(self):
        return (0, "", 0)

    def _generator(self, name):
        if name == "a1":
            return (0, "a", 0)
        if name == "a2":
            return (0, "b", 0)
        return (0, "", 1)

    def multiply(self, g, h):
        p1, w1, q1 = g
        p2, w2, q2 = h
        if q1 >= p2:
            m = q1 - p2
            return self.normalize(p1, free.join(w1, self.psi(w2, m)), m + q2)
        m = p2 - q1
        return self.normalize(p1 + m, free.join(self.psi(w1, m), w2), q2)

    def invert(self, g):
        p, w, q = g
        return (q, free.inverse(w), p)

    def _t_exponent(self, g):
        return g[2] - g[0]

    def format(self, g):
        p, w, q = g
        parts = []
        if p:
            parts.append(f"t^-{p}")
        if w or not (p or q):
            parts.append(free.format_free_word(w))
        if q:
            parts.append(f"t^{q}")
        return " ".join(parts)


def normalize_hnn_free(images: Sequence[str], p: int, w: str, q: int) -> tuple[int, str, int]:
    return HnnFree(images).normalize(p, free.reduce(w), q)
