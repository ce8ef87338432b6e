"""Baumslag–Solitar, lamplighter, Heisenberg, free abelian and matrix groups."""

from __future__ import annotations

from typing import Sequence

from ascent_lab.errors import BadParameter, DimensionMismatch
from ascent_lab.exact.matrix import IntegerMatrix
from ascent_lab.exact.nadic import NAdicFraction
from ascent_lab.groups.base import Group


class BaumslagSolitar(Group):
    """BS(1, n) = <a, t | t a t⁻¹ = aⁿ> as affine maps x ↦ nᵏx + b.

    Elements are ``(k, b)`` with ``b`` an :class:`NAdicFraction`; the
    product ``g·h`` is the composite map ``g ∘ h``, so a = (0, 1) and
    t = (1, 0).
    """

    family = "bs"
    alphabet = ("a", "t")
    has_stable_letter = True

    def __init__(self, n: int):
        if n < 2:
            raise BadParameter(f"BS(1,n) needs n >= 2, got {n}")
        self.n = n
        self._zero = NAdicFraction.integer(0, n)
        super().__init__()

    def identity(self):
        return (0, self._zero)

    def _generator(self, name):
        if name == "a":
            return (0, NAdicFraction.integer(1, self.n))
        return (1, self._zero)

    def multiply(self, g, h):
        k1, b1 = g
        k2, b2 = h
        return (k1 + k2, b1 + b2.scale(k1))

    def invert(self, g):
        k, b = g
        return (-k, (-b).scale(-k))

    def _t_exponent(self, g):
        return g[0]

    def format(self, g):
        k, b = g
        return f"x -> {self.n}^{k}*x + {b}"

    def key(self, g):
        k, b = g
        return f"bs{self.n}:{k}:{b.numerator}/{b.exponent}".encode()


class WreathZZ(Group):
    """The lamplighter-type group Z ≀ Z.

    Elements are ``(f, k)`` with ``f`` a sorted tuple of ``(position, value)``
    pairs (nonzero values only) and ``k`` the shift.  The law is
    ``(f, k)(g, l) = (f + g(· - k), k + l)``.
    """

    family = "wreath"
    alphabet = ("a", "t")
    has_stable_letter = True

    def identity(self):
        return ((), 0)

    def _generator(self, name):
        return (((0, 1),), 0) if name == "a" else ((), 1)

    def multiply(self, g, h):
        f, k = g
        f2, l = h
        if not f2:
            return (f, k + l)
        acc = dict(f)
        for pos, val in f2:
            p = pos + k
            v = acc.get(p, 0) + val
            if v:
                acc[p] = v
            else:
                acc.pop(p, None)
        return (tuple(sorted(acc.items())), k + l)

    def invert(self, g):
        f, k = g
        return (tuple((pos - k, -val) for pos, val in f), -k)

    def _t_exponent(self, g):
        return g[1]

    def format(self, g):
        f, k = g
        body = ", ".join(f"{p}:{v}" for p, v in f)
        return f"({{{body}}}, t^{k})"


class Heisenberg(Group):
    """Integer Heisenberg group, (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x·y')."""

    family = "heis"
    alphabet = ("x", "y")

    def identity(self):
        return (0, 0, 0)

    def _generator(self, name):
        return (1, 0, 0) if name == "x" else (0, 1, 0)

    def multiply(self, g, h):
        return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])

    def invert(self, g):
        x, y, z = g
        return (-x, -y, -z + x * y)


class FreeAbelian(Group):
    """Z^d written additively, generators e1..ed."""

    family = "zd"

    def __init__(self, d: int):
        if d < 1:
            raise BadParameter(f"rank must be >= 1, got {d}")
        self.d = d
        self.alphabet = tuple(f"e{i + 1}" for i in range(d))
        super().__init__()

    def identity(self):
        return (0,) * self.d

    def _generator(self, name):
        i = int(name[1:]) - 1
        return tuple(int(j == i) for j in range(self.d))

    def multiply(self, g, h):
        return tuple(x + y for x, y in zip(g, h))

    def invert(self, g):
        return tuple(-x for x in g)


class MatrixGroup(Group):
    """The subgroup of GL(d, Z) generated by unimodular integer matrices g1..gm."""

    family = "matrix"

    def __init__(self, d: int, gens: Sequence[IntegerMatrix]):
        if not gens:
            raise BadParameter("matrix group needs at least one generator")
        for g in gens:
            if g.shape != (d, d):
                raise DimensionMismatch(f"generator {g} is not {d}x{d}")
            if abs(g.det()) != 1:
                raise BadParameter(f"generator {g} is not invertible over Z")
        self.d = d
        self.matrices = tuple(gens)
        self.alphabet = tuple(f"g{i + 1}" for i in range(len(gens)))
        super().__init__()

    def identity(self):
        return IntegerMatrix.identity(self.d)

    def _generator(self, name):
        return self.matrices[int(name[1:]) - 1]

    def multiply(self, g, h):
        return g @ h

    def invert(self, g):
        return g.inverse_unimodular()

    def format(self, g):
        return g.to_literal()
