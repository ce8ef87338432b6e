"""Cyclic modules Z[t, t⁻¹]/(f) and the t-stability criterion.

The module A = Z[t, t⁻¹]/(f) is generated by a = 1, and M = Z[t]·a.  After
scaling f by a unit ±t^k to f₀ (lowest exponent 0, positive leading
coefficient) we identify M with Z[t]/(f₀).  Then

* tM = M  iff  f₀(0) = ±1, and
* M is finitely generated as an abelian group  iff  f₀ is monic,

in which case multiplication by t on the basis a, ta, ..., t^(d-1)a is the
companion matrix of f₀ and ⟨M, t⟩ is an ascending HNN extension of Z^d.
Only this one-generator, principal-annihilator case is handled.

Companion convention: a column-vector matrix C with ones on the
subdiagonal and last column C[i][d-1] = -(coefficient of t^i in f₀), so
column j holds the coordinates of t·(t^j a).  For f₀ = t² - t - 1 this is
[[0, 1], [1, 1]].
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ascent_lab.errors import DegenerateConstantTerm, NotMonic, ZeroPolynomial
from ascent_lab.exact.laurent import LaurentPolynomial, parse_laurent
from ascent_lab.exact.matrix import IntegerMatrix
from ascent_lab.groups.spec import GroupSpec


@dataclass(frozen=True)
class CyclicModulePresentation:
    f: LaurentPolynomial

    def __post_init__(self):
        if self.f.is_zero():
            raise ZeroPolynomial("the annihilator must be nonzero")

    @property
    def f0(self) -> LaurentPolynomial:
        g = self.f.shift(-self.f.low)
        return -g if g.leading_coefficient() < 0 else g


@dataclass(frozen=True)
class StabilityReport:
    f: LaurentPolynomial
    f0: LaurentPolynomial
    t_stable: bool
    fg_abelian: bool
    rank: int | None = None
    companion: IntegerMatrix | None = None
    witness: str = ""

    def to_dict(self) -> dict:
        return {
            "f": self.f.to_dict(),
            "f0": self.f0.to_dict(),
            "tStable": self.t_stable,
            "fgAbelian": self.fg_abelian,
            "rank": None if self.rank is None else str(self.rank),
            "companion": None if self.companion is None else [[str(x) for x in r] for r in self.companion.data],
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "StabilityReport":
        def poly(o):
            return parse_laurent(o)

        comp = obj["companion"]
        return cls(
            poly(obj["f"]),
            poly(obj["f0"]),
            bool(obj["tStable"]),
            bool(obj["fgAbelian"]),
            None if obj["rank"] is None else int(obj["rank"]),
            None if comp is None else IntegerMatrix.of([[int(x) for x in r] for r in comp]),
            obj["witness"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _as_presentation(p) -> CyclicModulePresentation:
    if isinstance(p, CyclicModulePresentation):
        return p
    return CyclicModulePresentation(p)


def companion_matrix(f0: LaurentPolynomial) -> IntegerMatrix:
    if f0.low != 0 or f0.leading_coefficient() != 1:
        raise NotMonic(f"{f0} is not a monic polynomial with nonzero constant term")
    d = f0.high
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -f0.coefficient(i)
    return IntegerMatrix.of(rows)


def t_stability(p) -> StabilityReport:
    """Decide tM = M and finite generation of M for M = Z[t]·a, a = 1 mod f."""
    p = _as_presentation(p)
    f0 = p.f0
    c0 = f0.coefficient(0)
    stable = abs(c0) == 1
    monic = f0.leading_coefficient() == 1
    if stable:
        # f₀ = c0 + t·q(t), so 1 = -c0·t·q(t) modulo f₀
        q = LaurentPolynomial((e - 1, c) for e, c in f0.terms if e > 0)
        witness = f"a = t*({q * -c0})*a"
    else:
        witness = f"a not in tM: f0(0) = {c0} is not a unit"
    rank = companion = None
    if monic:
        rank = f0.high
        companion = companion_matrix(f0) if rank > 0 else None
    return StabilityReport(p.f, f0, stable, monic, rank, companion, witness)


def monic_to_generators(p) -> tuple[tuple[str, ...], IntegerMatrix]:
    """Abelian basis a, ta, ..., t^(d-1)a of M and the matrix of t on it."""
    p = _as_presentation(p)
    f0 = p.f0
    if f0.leading_coefficient() != 1:
        raise NotMonic(f"{f0} is not monic")
    d = f0.high
    if d == 0:
        raise DegenerateConstantTerm("f0 = 1: the module is zero")
    labels = tuple("a" if i == 0 else ("ta" if i == 1 else f"t^{i}a") for i in range(d))
    return labels, companion_matrix(f0)


def build_metabelian_group(p) -> GroupSpec:
    """The ascending HNN extension ⟨M, t⟩ = HnnAbelian(companion(f₀))."""
    p = _as_presentation(p)
    f0 = p.f0
    if f0.leading_coefficient() != 1:
        raise NotMonic(f"{f0} is not monic")
    if f0.coefficient(0) == 0 or f0.high == 0:
        raise DegenerateConstantTerm(f"t does not act injectively on a nonzero lattice for f0 = {f0}")
    _, c = monic_to_generators(p)
    return GroupSpec.hnn_abelian(c)


def _value_order(bound: int):
    yield 0
    for c in range(1, bound + 1):
        yield c
        yield -c


def unit_constant_oracle(p, degree_bound: int, coefficient_bound: int) -> LaurentPolynomial | None:
    """Search p(t) in Z[t] with (1 - t·p(t)) ≡ 0 mod f, by brute force.

    Candidates are ordered by degree, then lexicographically on
    (p_0, p_1, ...) with values ordered 0, 1, -1, 2, -2, ...  Divisibility of
    1 - t·p(t) is checked by exact long division from the constant term.
    Partial candidates whose next quotient coefficient is already
    non-integral are pruned, and the top coefficients are forced once the
    quotient is determined, so the search stays exhaustive but small.
    Returns the first hit, or None when the space is exhausted.
    """
    p = _as_presentation(p)
    f = p.f.shift(-p.f.low)
    fd = f.dense()
    e = len(fd) - 1
    values = list(_value_order(coefficient_bound))
    for d in range(degree_bound + 1):
        # g = 1 - t·p has degree d+1; its coefficients g_1..g_{d+1} are -p_0..-p_d.
        hit = _search_degree(fd, e, d, coefficient_bound, values)
        if hit is not None:
            return LaurentPolynomial.from_coefficients(hit)
    return None


def _search_degree(fd, e, d, bound, values):
    n = d + 2  # length of g
    free = n - e  # quotient length; g_0..g_{free-1} pin it down
    if free <= 0:
        return None
    c0 = fd[0]

    def complete(g_low):
        # g_low = [g_0, ..., g_{free-1}]; derive the quotient and the rest of g
        h = []
        for i in range(free):
            acc = g_low[i] - sum(fd[j] * h[i - j] for j in range(1, min(i, e) + 1))
            if acc % c0:
                return None
            h.append(acc // c0)
        g = [sum(fd[j] * h[i - j] for j in range(max(0, i - free + 1), min(i, e) + 1)) for i in range(n)]
        if g[:free] != list(g_low):
            return None
        pcoef = [-x for x in g[1:]]
        if any(abs(x) > bound for x in pcoef) or (pcoef[-1] == 0 and d > 0):
            return None
        return pcoef

    def partial_ok(g_low):
        # integrality of the quotient so far
        h = []
        for i in range(len(g_low)):
            acc = g_low[i] - sum(fd[j] * h[i - j] for j in range(1, min(i, e) + 1))
            if acc % c0:
                return False
            h.append(acc // c0)
        return True

    def dfs(prefix):
        if not partial_ok(prefix):
            return None
        if len(prefix) == free:
            return complete(prefix)
        for v in values:
            # g_i = -p_{i-1}
            out = dfs(prefix + [-v])
            if out is not None:
                return out
        return None

    return dfs([1])
