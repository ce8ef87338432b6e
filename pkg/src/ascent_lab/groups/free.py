"""Words in the rank-2 free group and Stallings folding.

Free words are plain strings over ``"aAbB"``: ``a``/``b`` are the basis
letters a1/a2 and the uppercase letters their inverses.  Strings hash,
compare and slice in C, which matters once iterated endomorphisms make
words thousands of letters long.
"""

from __future__ import annotations

from typing import Sequence

from ascent_lab.errors import ParseError

LETTERS = "aAbB"
_TOKEN = {"a1": "a", "A1": "A", "a2": "b", "A2": "B"}
_NAME = {v: k for k, v in _TOKEN.items()}


def inverse(w: str) -> str:
    return w[::-1].swapcase()


def reduce(w: str) -> str:
    out: list[str] = []
    for x in w:
        if out and out[-1] == x.swapcase():
            out.pop()
        else:
            out.append(x)
    return "".join(out)


def join(u: str, v: str) -> str:
    """Product of two reduced words; cancellation only happens at the seam."""
    k = 0
    n = min(len(u), len(v))
    while k < n and u[-1 - k] == v[k].swapcase():
        k += 1
    if k == 0:
        return u + v
    return u[: len(u) - k] + v[k:]


def parse_free_word(text: str) -> str:
    """Parse ``"a1 a2 A1 A2"`` (spaces optional) into a reduced letter string."""
    s = text.replace(" ", "").replace("\t", "")
    out = []
    i = 0
    while i < len(s):
        tok = s[i : i + 2]
        if tok not in _TOKEN:
            raise ParseError(f"bad free-group symbol at {s[i:]!r} in {text!r}")
        out.append(_TOKEN[tok])
        i += 2
    return reduce("".join(out))


def format_free_word(w: str) -> str:
    return " ".join(_NAME[x] for x in w) if w else "1"


def _inv_gen(x: int) -> int:
    return -x


def _reduce_ints(w) -> tuple[int, ...]:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class StallingsGraph:
    """Folded core graph of the subgroup generated by ``gens``.

    Every edge carries a weight: a word in the subgroup generators
    (``+i``/``-i`` for generator ``i-1`` and its inverse).  Folding keeps
    the invariant that the weight of a closed path at the base vertex
    multiplies out to the label of that path, so reading an element
    yields its expression in the generators for free.
    """

    def __init__(self, gens: Sequence[str]):
        self.gens = tuple(reduce(g) for g in gens)
        # edge: [src, letter (lowercase), dst, weight]
        edges: list[list] = []
        nverts = 1
        for idx, g in enumerate(self.gens, start=1):
            if not g:
                continue
            prev = 0
            for pos, x in enumerate(g):
                nxt = 0 if pos == len(g) - 1 else nverts
                if nxt:
                    nverts += 1
                weight = (idx,) if pos == 0 else ()
                if x.islower():
                    edges.append([prev, x, nxt, weight])
                else:
                    edges.append([nxt, x.lower(), prev, _reduce_ints(-w for w in reversed(weight))])
                prev = nxt
        self._fold(edges)

    def _fold(self, edges: list[list]) -> None:
        alive = [True] * len(edges)
        while True:
            hit = self._find_fold(edges, alive)
            if hit is None:
                break
            i1, i2, u, v1, v2, w1, w2 = hit
            if v1 == v2:
                alive[i2] = False
                continue
            if v2 == 0:
                i1, i2, v1, v2, w1, w2 = i2, i1, v2, v1, w2, w1
            # merge v2 into v1; reaching v2 by weight w2 == reaching v1 by w1, then delta
            delta = _reduce_ints(tuple(-x for x in reversed(w1)) + w2)
            delta_inv = tuple(-x for x in reversed(delta))
            alive[i2] = False
            for k, e in enumerate(edges):
                if not alive[k]:
                    continue
                if e[0] == v2:
                    e[3] = _reduce_ints(delta + e[3])
                    e[0] = v1
                if e[2] == v2:
                    e[3] = _reduce_ints(e[3] + delta_inv)
                    e[2] = v1
        kept = [e for k, e in enumerate(edges) if alive[k]]
        verts = sorted({0} | {e[0] for e in kept} | {e[2] for e in kept})
        relabel = {v: i for i, v in enumerate(verts)}
        self.num_vertices = len(verts)
        self.edges = tuple((relabel[s], x, relabel[d], w) for s, x, d, w in kept)
        self._step: dict[tuple[int, str], tuple[int, tuple[int, ...]]] = {}
        for s, x, d, w in self.edges:
            self._step[(s, x)] = (d, w)
            self._step[(d, x.upper())] = (s, tuple(-y for y in reversed(w)))

    @staticmethod
    def _find_fold(edges, alive):
        seen: dict[tuple[int, str], tuple[int, int, tuple]] = {}
        for k, e in enumerate(edges):
            if not alive[k]:
                continue
            s, x, d, w = e
            for key, end, wt in (((s, x), d, w), ((d, x.upper()), s, tuple(-y for y in reversed(w)))):
                if key in seen:
                    k0, end0, wt0 = seen[key]
                    if k0 == k:
                        continue
                    return k0, k, key[0], end0, end, wt0, wt
                seen[key] = (k, end, wt)
        return None

    @property
    def rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    def read(self, w: str) -> tuple[int | None, tuple[int, ...]]:
        """Follow ``w`` from the base vertex; returns (end vertex or None, weight)."""
        v = 0
        weight: list[int] = []
        step = self._step
        for x in w:
            nxt = step.get((v, x))
            if nxt is None:
                return None, ()
            v, wt = nxt
            for y in wt:
                if weight and weight[-1] == -y:
                    weight.pop()
                else:
                    weight.append(y)
        return v, tuple(weight)

    def membership(self, w: str) -> tuple[bool, tuple[int, ...] | None]:
        end, weight = self.read(reduce(w))
        if end != 0:
            return False, None
        return True, weight

    def expand(self, expression: Sequence[int]) -> str:
        """Multiply out an expression in the generators."""
        out = ""
        for x in expression:
            g = self.gens[abs(x) - 1]
            out = join(out, g if x > 0 else inverse(g))
        return out


def stallings_membership(generators: Sequence[str], w: str) -> tuple[bool, tuple[int, ...] | None]:
    """Decide ``w`` in the subgroup generated by ``generators``.

    When true, the second item is an expression: signed 1-based generator
    indices whose product reduces to ``w``.
    """
    return StallingsGraph(generators).membership(w)
