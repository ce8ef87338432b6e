"""Independent models of the shipped groups, used only by the tests.

Each model maps a word (tuple of (symbol, ±1)) to a hashable value with
equal values exactly for equal group elements.  None of them touches the
library's normal forms.
"""

import itertools
from fractions import Fraction


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))) for i in range(len(a))
    )


def _fraction_inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        a[c] = [v / a[c][c] for v in a[c]]
        for r in range(n):
            if r != c:
                a[r] = [u - a[r][c] * v for u, v in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


class AffineBS:
    """BS(1, n) as 2x2 rational matrices [[n^k, b], [0, 1]]."""

    def __init__(self, n):
        f = Fraction
        self.gens = {
            ("a", 1): ((f(1), f(1)), (f(0), f(1))),
            ("a", -1): ((f(1), f(-1)), (f(0), f(1))),
            ("t", 1): ((f(n), f(0)), (f(0), f(1))),
            ("t", -1): ((f(1, n), f(0)), (f(0), f(1))),
        }
        self.identity = ((f(1), f(0)), (f(0), f(1)))

    def step(self, g, letter):
        return _matmul(g, self.gens[letter])


class LaurentWreath:
    """Z wr Z as [[x^k, f], [0, 1]] over Z[x, 1/x]; f is a frozenset of (exp, coef)."""

    identity = (frozenset(), 0)

    def step(self, g, letter):
        f, k = g
        name, sign = letter
        if name == "t":
            return (f, k + sign)
        d = dict(f)
        d[k] = d.get(k, 0) + sign
        return (frozenset((e, c) for e, c in d.items() if c), k)


class UnitriangularHeisenberg:
    identity = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    gens = {
        ("x", 1): ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
        ("x", -1): ((1, -1, 0), (0, 1, 0), (0, 0, 1)),
        ("y", 1): ((1, 0, 0), (0, 1, 1), (0, 0, 1)),
        ("y", -1): ((1, 0, 0), (0, 1, -1), (0, 0, 1)),
    }

    def step(self, g, letter):
        return _matmul(g, self.gens[letter])


class VectorZd:
    def __init__(self, d):
        self.identity = (0,) * d

    def step(self, g, letter):
        i = int(letter[0][1:]) - 1
        return tuple(x + (letter[1] if j == i else 0) for j, x in enumerate(g))


class IntegerMatrices:
    def __init__(self, mats):
        d = len(mats[0])
        self.identity = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        self.gens = {}
        for i, m in enumerate(mats, start=1):
            m = tuple(tuple(r) for r in m)
            inv = _fraction_inverse(m)
            self.gens[(f"g{i}", 1)] = m
            self.gens[(f"g{i}", -1)] = tuple(tuple(int(x) for x in r) for r in inv)

    def step(self, g, letter):
        return _matmul(g, self.gens[letter])


class RationalHnnAbelian:
    """Pairs (x, k) with x in Q^d: t acts by phi, e_i translate."""

    def __init__(self, phi):
        self.phi = tuple(tuple(Fraction(x) for x in r) for r in phi)
        self.inv = _fraction_inverse(phi)
        self.d = len(phi)
        self.identity = ((Fraction(0),) * self.d, 0)

    def _power(self, k):
        m = tuple(tuple(Fraction(int(i == j)) for j in range(self.d)) for i in range(self.d))
        base = self.phi if k >= 0 else self.inv
        for _ in range(abs(k)):
            m = _matmul(m, base)
        return m

    def step(self, g, letter):
        x, k = g
        name, sign = letter
        if name == "t":
            return (x, k + sign)
        i = int(name[1:]) - 1
        col = tuple(r[i] * sign for r in self._power(k))
        return (tuple(a + b for a, b in zip(x, col)), k)


def _free_reduce(w):
    out = []
    for c in w:
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


class LazyHnnFree:
    """Triples (p, w, q) for t^-p w t^q with t w t^-1 = psi(w), never normalized.

    Values are compared by lifting every triple to a common p = ``lift``.
    """

    def __init__(self, images, lift):
        self.images = {"a": images[0], "b": images[1]}
        self.images["A"] = _free_reduce("".join(c.swapcase() for c in reversed(images[0])))
        self.images["B"] = _free_reduce("".join(c.swapcase() for c in reversed(images[1])))
        self.lift = lift
        self.identity = (0, "", 0)

    def psi(self, w, m):
        for _ in range(m):
            w = _free_reduce("".join(self.images[c] for c in w))
        return w

    def _mul(self, x, y):
        p1, w1, q1 = x
        p2, w2, q2 = y
        if q1 >= p2:
            m = q1 - p2
            return (p1, _free_reduce(w1 + self.psi(w2, m)), m + q2)
        m = p2 - q1
        return (p1 + m, _free_reduce(self.psi(w1, m) + w2), q2)

    def step(self, g, letter):
        name, sign = letter
        if name == "t":
            y = (0, "", 1) if sign > 0 else (1, "", 0)
        else:
            c = "a" if name == "a1" else "b"
            y = (0, c if sign > 0 else c.upper(), 0)
        return self._mul(g, y)

    def value(self, g):
        p, w, q = g
        if p > self.lift:
            raise ValueError("lift too small")
        return (self.psi(w, self.lift - p), q - p)


def model_for(spec_text):
    from ascent_lab.groups import parse_group_spec

    s = parse_group_spec(spec_text)
    if s.family == "bs":
        return AffineBS(s.n)
    if s.family == "wreath":
        return LaurentWreath()
    if s.family == "heis":
        return UnitriangularHeisenberg()
    if s.family == "zd":
        return VectorZd(s.d)
    if s.family == "matrix":
        return IntegerMatrices([m.data for m in s.matrices])
    if s.family == "hnn-abelian":
        return RationalHnnAbelian(s.matrix.data)
    if s.family == "hnn-free":
        return LazyHnnFree(s.images, lift=8)
    raise ValueError(spec_text)


def model_value(model, g):
    return model.value(g) if hasattr(model, "value") else g


def words_up_to(symbols, length):
    """All words over (symbol, sign) letters, by length then lexicographically."""
    letters = [(s.lower(), 1 if s == s.lower() else -1) for s in symbols]
    for n in range(length + 1):
        yield from itertools.product(letters, repeat=n)


def partition_agrees(group, model, length):
    """True when group equality and model equality induce the same partition
    of all words of length <= ``length``.  Walks the word trie depth-first so
    each word costs one multiplication in each representation."""
    letters = [(s.lower(), 1 if s == s.lower() else -1) for s in group.symmetric_symbols()]
    gens = [group.generator(n, e) for n, e in letters]
    if hasattr(model, "lift"):
        # p never exceeds the number of T letters read
        model.lift = length
    lib_to_model = {}
    model_to_lib = {}
    stack = [(0, group.identity(), model.identity)]
    count = 0
    while stack:
        depth, g, m = stack.pop()
        count += 1
        k = group.key(g)
        v = model_value(model, m)
        if lib_to_model.setdefault(k, v) != v or model_to_lib.setdefault(v, k) != k:
            return False, count
        if depth < length:
            for letter, s in zip(letters, gens):
                stack.append((depth + 1, group.multiply(g, s), model.step(m, letter)))
    return True, count
