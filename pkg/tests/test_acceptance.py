"""Acceptance criteria, one test each; every test records a PASS/FAIL line
that is printed in the terminal summary."""

import contextlib
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from conftest import ACCEPTANCE_LINES, AMALGAM, GAMMA2
from test_cli import GOLDEN, GOLDEN_COMMANDS, run_process
from test_quotients import brute_homs

from ascent_lab.errors import NotProperlyAscending
from ascent_lab.exact import IntegerMatrix, LaurentPolynomial, parse_laurent
from ascent_lab.groups import BaumslagSolitar, HnnAbelian, build_group
from ascent_lab.growth import (
    bass_guivarch_degree,
    growth_series,
    naive_growth_series,
    rate_diagnostics,
    semigroup_lower_bound,
)
from ascent_lab.module_engine import build_metabelian_group, t_stability, unit_constant_oracle
from ascent_lab.quotients import enumerate_homs_bs, separation_report, subgroup_closure
from ascent_lab.witness import (
    ascent_data,
    certify,
    find_coset_representative,
    verify_free_semigroup,
    witness_pair,
    witness_words,
)


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    detail = {}
    try:
        yield detail
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"criterion {number} FAIL  {title}: {type(exc).__name__}: {exc}"[:300])
        raise
    elapsed = time.perf_counter() - start
    # every criterion has to finish inside a minute
    status = "PASS" if elapsed < 60 else "FAIL"
    extra = f" ({detail['note']})" if "note" in detail else ""
    ACCEPTANCE_LINES.append(f"criterion {number} {status}  {title}{extra} [{elapsed:.1f}s]")
    assert elapsed < 60, f"took {elapsed:.1f}s"


WITNESS_GROUPS = ["bs:2", "bs:3", "wreath", "hnn-abelian:[[2,0],[0,3]]", GAMMA2]


def test_criterion_1_free_semigroup_witness():
    with criterion(1, "witness (t, tu) is FREE-UP-TO-12 on five ascending HNN groups") as d:
        for spec in WITNESS_GROUPS:
            g = build_group(spec)
            data = ascent_data(g)
            u = find_coset_representative(data)
            assert data.base_membership(u) and not data.image_membership(u)
            s1, s2 = witness_pair(data)
            verdict = verify_free_semigroup(g, s1, s2, 12)
            assert verdict.label() == "FREE-UP-TO-12", (spec, verdict)
            assert verdict.count == 2**13 - 2 == 8190
        d["note"] = "8190 distinct elements each"


PROPER = [[[2]], [[3]], [[2, 0], [0, 3]], [[1, 1], [0, 2]], [[0, 1], [2, 0]]]
UNIMODULAR = [[[1]], [[-1]], [[1, 0], [0, 1]], [[0, 1], [1, 1]], [[2, 1], [1, 1]]]


def test_criterion_2_proper_ascent_dichotomy():
    with criterion(2, "HnnAbelian(phi) has a witness iff |det phi| >= 2") as d:
        for rows in PROPER + UNIMODULAR:
            phi = IntegerMatrix.of(rows)
            g = HnnAbelian(phi)
            if abs(phi.det()) >= 2:
                _, _, _, verdict = certify(g, 12)
                assert verdict.is_free and verdict.count == 8190
            else:
                assert abs(phi.det()) == 1
                with pytest.raises(NotProperlyAscending):
                    certify(g, 12)
        d["note"] = f"{len(PROPER)} proper, {len(UNIMODULAR)} unimodular"


ALL_FAMILIES = [
    "bs:2",
    "bs:3",
    "wreath",
    "heis",
    "zd:1",
    "zd:2",
    "zd:3",
    "hnn-abelian:[[2]]",
    "hnn-abelian:[[2,0],[0,3]]",
    "hnn-abelian:[[0,1],[1,1]]",
    GAMMA2,
    AMALGAM,
]


def test_criterion_3_growth_oracle_equivalence():
    with criterion(3, "BFS growth equals naive enumeration at radius 6, all families") as d:
        for spec in ALL_FAMILIES:
            g = build_group(spec)
            bfs = growth_series(g, radius=6)
            naive = naive_growth_series(g, radius=6)
            assert bfs.spheres == naive.spheres and bfs.balls == naive.balls, spec
        d["note"] = f"{len(ALL_FAMILIES)} groups"


def test_criterion_4_exponential_lower_bound():
    with criterion(4, "BS(2): ball(2m) >= 2^(m+1) - 2 for m <= 6") as d:
        g = build_group("bs:2")
        data = ascent_data(g)
        words = witness_words(data)
        assert [len(w) for w in words] == [1, 2]
        verdict = verify_free_semigroup(g, *witness_pair(data), 12)
        series = growth_series(g, radius=12)
        cert = semigroup_lower_bound(series, verdict, [len(w) for w in words])
        assert cert.max_m == 6
        assert all(ball >= need for _, ball, need in cert.checks)
        d["note"] = "ball(12) = %d >= 126" % series.balls[12]


def test_criterion_5_polynomial_vs_exponential():
    with criterion(5, "doubling exponents separate Heisenberg from BS(2)") as d:
        heis = rate_diagnostics(growth_series(build_group("heis"), radius=16)).doubling[8]
        bs = rate_diagnostics(growth_series(build_group("bs:2"), radius=16)).doubling[8]
        assert 3 <= heis <= 5
        assert bs > 5
        assert bass_guivarch_degree([2, 1]) == 4
        d["note"] = f"heis {heis:.3f}, bs:2 {bs:.3f}"


def _random_polynomials(count, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = LaurentPolynomial.from_coefficients([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))])
        if not f.is_zero():
            out.append(f)
    return out


def _same_partition(g1, g2, rename, length):
    letters = [(s.lower(), 1 if s == s.lower() else -1) for s in g1.symmetric_symbols()]
    gens1 = [g1.generator(n, e) for n, e in letters]
    gens2 = [g2.generator(rename[n], e) for n, e in letters]
    forward, backward = {}, {}
    stack = [(0, g1.identity(), g2.identity())]
    words = 0
    while stack:
        depth, x, y = stack.pop()
        words += 1
        if forward.setdefault(x, y) != y or backward.setdefault(y, x) != x:
            return False, words
        if depth < length:
            for s1, s2 in zip(gens1, gens2):
                stack.append((depth + 1, g1.multiply(x, s1), g2.multiply(y, s2)))
    return True, words


def test_criterion_6_module_engine():
    with criterion(6, "t-stability agrees with the unit-constant oracle; t - 2 gives BS(2)") as d:
        polys = _random_polynomials(60)
        disagreements = [f for f in polys if t_stability(f).t_stable != (unit_constant_oracle(f, 8, 40) is not None)]
        assert disagreements == []
        stable = sum(t_stability(f).t_stable for f in polys)
        assert 0 < stable < len(polys)
        spec = build_metabelian_group(parse_laurent("t - 2"))
        ok, words = _same_partition(BaumslagSolitar(2), build_group(spec), {"a": "e1", "t": "t"}, 8)
        assert ok and words == sum(4**k for k in range(9))
        d["note"] = f"{len(polys)} polys, {stable} t-stable; {words} words"


def test_criterion_7_finite_quotients():
    with criterion(7, "BS(1,2) -> S_m never separates a from <a^2>") as d:
        counts = {m: len(enumerate_homs_bs(2, m)) for m in range(1, 7)}
        for m in range(1, 5):
            assert counts[m] == len(brute_homs(2, m))
        assert counts[3] == 12
        for m in range(1, 7):
            for h in enumerate_homs_bs(2, m):
                assert h.a.order() % 2 == 1
                assert h.a in subgroup_closure([h.a**2], m)
        assert separation_report(2, 6).verdict == "never-separated"
        r3 = separation_report(3, 6)
        assert all(math.gcd(r.order_a, 3) == 1 for r in r3.records)
        assert r3.verdict == "never-separated"
        d["note"] = "counts " + ", ".join(str(counts[m]) for m in range(1, 7))


def test_criterion_8_determinism():
    with criterion(8, "golden CSV/JSON outputs; repeated and parallel runs byte-identical") as d:
        items = list(GOLDEN_COMMANDS.items())
        sequential = [(name, run_process(argv)) for name, argv in items]
        with ThreadPoolExecutor(max_workers=len(items)) as pool:
            parallel = list(pool.map(lambda it: (it[0], run_process(it[1])), items * 2))
        for name, (code, out) in sequential + parallel:
            assert code == 0
            assert out == (GOLDEN / name).read_bytes(), name
        d["note"] = f"{len(items)} golden files, {len(sequential) + len(parallel)} runs"
