"""Ball growth in Cayley graphs and the exponential lower bound from a free semigroup."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from ascent_lab.errors import CertificateViolated, PreconditionError
from ascent_lab.groups.base import Group
from ascent_lab.witness import FreenessVerdict, default_cap


@dataclass(frozen=True)
class GrowthSeries:
    group: str
    generators: tuple[str, ...]
    radius: int
    spheres: tuple[int, ...]
    truncated: bool = False
    balls: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        acc, total = [], 0
        for s in self.spheres:
            total += s
            acc.append(total)
        object.__setattr__(self, "balls", tuple(acc))

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "generators": list(self.generators),
            "radius": self.radius,
            "truncated": self.truncated,
            "spheres": [str(x) for x in self.spheres],
            "balls": [str(x) for x in self.balls],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "GrowthSeries":
        series = cls(
            obj["group"],
            tuple(obj["generators"]),
            int(obj["radius"]),
            tuple(int(x) for x in obj["spheres"]),
            bool(obj["truncated"]),
        )
        if list(series.balls) != [int(x) for x in obj["balls"]]:
            raise ValueError("ball counts do not match sphere counts")
        return series

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "sphere", "ball"])
        for n, (s, b) in enumerate(zip(self.spheres, self.balls)):
            w.writerow([n, s, b])
        return buf.getvalue()


def _label(group: Group) -> str:
    spec = getattr(group, "spec", None)
    return str(spec) if spec is not None else group.family


def growth_series(
    group: Group,
    generators: Sequence[str] | None = None,
    radius: int = 12,
    budget: int | None = None,
) -> GrowthSeries:
    """Sphere sizes by breadth-first search from the identity.

    ``generators`` are symbol names (``"a"``, ``"A"``, ...); the default is
    the family's symmetric generating set.  When more than ``budget``
    elements would be stored the search stops, and the series covers only
    the radii completed so far with ``truncated`` set.
    """
    if radius < 0:
        raise PreconditionError("radius must be >= 0")
    budget = default_cap() if budget is None else budget
    symbols = tuple(generators) if generators is not None else group.symmetric_symbols()
    gens = [group.element_of_symbol(s) for s in symbols]
    mul = group.multiply
    e = group.identity()
    seen = {e}
    frontier = [e]
    spheres = [1]
    for _ in range(radius):
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
            if len(seen) > budget:
                return GrowthSeries(_label(group), symbols, len(spheres) - 1, tuple(spheres), True)
        spheres.append(len(nxt))
        frontier = nxt
    return GrowthSeries(_label(group), symbols, radius, tuple(spheres))


def naive_growth_series(group: Group, generators: Sequence[str] | None = None, radius: int = 6) -> GrowthSeries:
    """Growth by evaluating every word of length <= radius from scratch.

    Exponential in the radius; it exists to check :func:`growth_series`.
    """
    import itertools

    symbols = tuple(generators) if generators is not None else group.symmetric_symbols()
    word_length: dict = {}
    for n in range(radius + 1):
        for w in itertools.product(symbols, repeat=n):
            g = group.identity()
            for s in w:
                g = group.multiply(g, group.element_of_symbol(s))
            word_length.setdefault(g, n)
    spheres = [0] * (radius + 1)
    for n in word_length.values():
        spheres[n] += 1
    return GrowthSeries(_label(group), symbols, radius, tuple(spheres))


@dataclass(frozen=True)
class LowerBoundCertificate:
    witness_lengths: tuple[int, int]
    step: int  # longest witness word, in generator steps
    max_m: int
    checks: tuple[tuple[int, int, int], ...]  # (m, ball(step*m), 2^(m+1)-2)

    def statement(self) -> str:
        return f"ball({self.step}*m) >= 2^(m+1) - 2 for all 1 <= m <= {self.max_m}"


def semigroup_lower_bound(
    series: GrowthSeries, verdict: FreenessVerdict, witness_lengths: Sequence[int]
) -> LowerBoundCertificate:
    """Check ball(ℓm) >= 2^(m+1) - 2 wherever the free witness covers length m.

    ``witness_lengths`` are the word lengths of the two witness elements in
    the series' generators; ℓ is the larger.
    """
    if not verdict.is_free:
        raise PreconditionError("witness pair is not certified free")
    step = max(witness_lengths)
    if step < 1:
        raise PreconditionError("witness words must be nonempty")
    max_m = min(verdict.budget, series.radius // step)
    checks = []
    for m in range(1, max_m + 1):
        ball = series.balls[step * m]
        need = 2 ** (m + 1) - 2
        if ball < need:
            raise CertificateViolated(f"ball({step * m}) = {ball} < {need}")
        checks.append((m, ball, need))
    return LowerBoundCertificate(tuple(witness_lengths), step, max_m, tuple(checks))


@dataclass(frozen=True)
class RateReport:
    balls: tuple[int, ...]
    roots: dict[int, float]
    doubling: dict[int, float]


def rate_diagnostics(series: GrowthSeries) -> RateReport:
    """n-th roots of ball sizes and doubling exponents log2(ball(2n)/ball(n)).

    A polynomial of degree d has doubling exponent tending to d; exponential
    growth makes it increase without bound.
    """
    if series.radius < 2:
        raise PreconditionError("need radius >= 2")
    b = series.balls
    roots = {n: round(b[n] ** (1.0 / n), 6) for n in range(1, series.radius + 1)}
    doubling = {n: round(math.log2(b[2 * n] / b[n]), 6) for n in range(1, series.radius // 2 + 1)}
    return RateReport(b, roots, doubling)


def bass_guivarch_degree(ranks: Sequence[int]) -> int:
    """Polynomial growth degree Σ k·r_k from the ranks of the lower central quotients."""
    return sum(k * r for k, r in enumerate(ranks, start=1))
