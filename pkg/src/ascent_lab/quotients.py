"""Finite images of BS(1, n) in symmetric groups.

A homomorphism BS(1, n) → S_m is a pair (ā, t̄) with t̄ā t̄⁻¹ = āⁿ.  In any
such image ⟨āⁿ⟩ = ⟨ā⟩, so a is never separated from ⟨aⁿ⟩; this module
enumerates every image up to degree 8 and records that fact per hom.

Permutations act on {0, ..., m-1} and compose left to right:
``(p * q)[x] == q[p[x]]``, i.e. apply p first.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ascent_lab.errors import DegreeTooLarge, PreconditionError

MAX_DEGREE = 8


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(m)))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(m))
        for c in cycles:
            for i, x in enumerate(c):
                img[x] = c[(i + 1) % len(c)]
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        return Permutation(tuple(q[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixed points included, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            c = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                c.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(c))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def __str__(self) -> str:
        parts = [c for c in self.cycles() if len(c) > 1]
        if not parts:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in parts)


def all_permutations(m: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(m))]


def conjugate(t: Permutation, a: Permutation) -> Permutation:
    """t a t⁻¹ in the left-to-right convention."""
    return t * a * t.inverse()


def _aligned(cycles: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(cycles, key=lambda c: (-len(c), c[0]))


def conjugator(x: Permutation, y: Permutation) -> Permutation | None:
    """Some c with c x c⁻¹ = y, or None when the cycle types differ.

    Cycles of x and y are matched in order of (length desc, least point asc).
    """
    if x.cycle_type() != y.cycle_type():
        return None
    # c x c⁻¹ sends c⁻¹(p) to c⁻¹(x(p)), so c⁻¹ maps each x-cycle onto its y partner
    cinv = [0] * x.degree
    for cx, cy in zip(_aligned(x.cycles()), _aligned(y.cycles())):
        for p, q in zip(cx, cy):
            cinv[p] = q
    c = Permutation(tuple(cinv)).inverse()
    assert conjugate(c, x) == y
    return c


def centralizer(x: Permutation) -> list[Permutation]:
    """All z with z x z⁻¹ = x: permute equal-length cycles, rotate each."""
    cyc = _aligned(x.cycles())
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in cyc:
        by_len.setdefault(len(c), []).append(c)
    blocks = []
    for length, cs in by_len.items():
        options = []
        for perm in itertools.permutations(range(len(cs))):
            for rots in itertools.product(range(length), repeat=len(cs)):
                mapping = {}
                for src, (dst_i, r) in enumerate(zip(perm, rots)):
                    a, b = cs[src], cs[dst_i]
                    for k in range(length):
                        mapping[a[k]] = b[(k + r) % length]
                options.append(mapping)
        blocks.append(options)
    out = []
    for combo in itertools.product(*blocks):
        img = [0] * x.degree
        for mp in combo:
            for p, q in mp.items():
                img[p] = q
        out.append(Permutation(tuple(img)))
    return sorted(out)


@dataclass(frozen=True)
class FiniteHom:
    degree: int
    a: Permutation
    t: Permutation
    n: int

    @property
    def satisfies_relation(self) -> bool:
        return conjugate(self.t, self.a) == self.a ** self.n


def enumerate_homs_bs(n: int, m: int) -> list[FiniteHom]:
    """Every (ā, t̄) in S_m × S_m with t̄ā t̄⁻¹ = āⁿ, sorted by image arrays.

    For each ā whose n-th power has the same cycle type, one conjugator c
    is built and t̄ sweeps the coset c·C(ā).
    """
    if n < 2:
        raise PreconditionError(f"n must be >= 2, got {n}")
    if m > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {m} exceeds the cap of {MAX_DEGREE}")
    if m < 1:
        raise PreconditionError("degree must be >= 1")
    out = []
    for a in all_permutations(m):
        b = a**n
        c = conjugator(a, b)
        if c is None:
            continue
        for z in centralizer(a):
            out.append(FiniteHom(m, a, c * z, n))
    out.sort(key=lambda h: (h.a.images, h.t.images))
    return out


def subgroup_closure(gens: Sequence[Permutation], degree: int | None = None) -> list[Permutation]:
    """Elements of ⟨gens⟩ by closing under right multiplication, sorted."""
    if degree is None:
        degree = gens[0].degree if gens else 0
    e = Permutation.identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


@dataclass(frozen=True)
class HomRecord:
    degree: int
    a: Permutation
    t: Permutation
    order_a: int
    in_subgroup: bool


@dataclass(frozen=True)
class SeparationReport:
    n: int
    max_degree: int
    records: tuple[HomRecord, ...]

    @property
    def separated(self) -> bool:
        return any(not r.in_subgroup for r in self.records)

    @property
    def verdict(self) -> str:
        return "separated-in-some-quotient" if self.separated else "never-separated"

    def counts(self) -> dict[int, int]:
        out = {m: 0 for m in range(1, self.max_degree + 1)}
        for r in self.records:
            out[r.degree] += 1
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "a_perm", "t_perm", "order_a", "in_subgroup"])
        for r in self.records:
            w.writerow([r.degree, str(r.a), str(r.t), r.order_a, str(r.in_subgroup).lower()])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "max_degree": str(self.max_degree),
            "homs_per_degree": {str(m): str(c) for m, c in self.counts().items()},
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def separation_report(n: int, max_degree: int) -> SeparationReport:
    """Check, hom by hom for degrees 1..max_degree, whether ā ∈ ⟨āⁿ⟩.

    Membership is decided by closure and cross-checked against
    gcd(order(ā), n) = 1.
    """
    records = []
    for m in range(1, max_degree + 1):
        for h in enumerate_homs_bs(n, m):
            assert h.satisfies_relation
            sub = subgroup_closure([h.a**n], m)
            inside = h.a in set(sub)
            order = h.a.order()
            if inside != (math.gcd(order, n) == 1):
                raise AssertionError(f"closure and gcd disagree for {h.a}")
            records.append(HomRecord(m, h.a, h.t, order, inside))
    return SeparationReport(n, max_degree, tuple(records))


@dataclass(frozen=True)
class SeparatingQuotient:
    """Z → Z/k with x = a ↦ 1 and S = ⟨a^k⟩ ↦ {0}."""

    modulus: int
    image_x: int
    image_subgroup: tuple[int, ...]

    @property
    def separates(self) -> bool:
        return self.image_x not in self.image_subgroup


def polycyclic_separation_demo(k: int) -> SeparatingQuotient:
    if k < 2:
        raise PreconditionError("k must be >= 2")
    image_s = tuple(sorted({(k * j) % k for j in range(k)}))
    return SeparatingQuotient(k, 1 % k, image_s)
