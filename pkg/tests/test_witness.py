import itertools

import pytest

from conftest import GAMMA2
from oracles import model_for

from ascent_lab.errors import BudgetExceeded, NotProperlyAscending, PreconditionError, UnsupportedFamily
from ascent_lab.exact import IntegerMatrix, image_membership
from ascent_lab.groups import build_group
from ascent_lab.witness import (
    amalgam_matrix_demo,
    ascent_data,
    certify,
    coset_representative_word,
    find_coset_representative,
    verify_free_semigroup,
    witness_pair,
    witness_words,
)


def _model_eval(model, word):
    g = model.identity
    for letter in word:
        g = model.step(g, letter)
    return model.value(g) if hasattr(model, "value") else g


def brute_first_collision(model, w1, w2, max_length):
    """Shortlex-first positive word in (w1, w2) equal to an earlier one, or None."""
    if hasattr(model, "lift"):
        # p only grows on T letters
        model.lift = max_length * max(w.count(("t", -1)) for w in (w1, w2))
    seen = {}
    for n in range(1, max_length + 1):
        for idx in itertools.product((1, 2), repeat=n):
            word = tuple(itertools.chain.from_iterable(w1 if i == 1 else w2 for i in idx))
            v = _model_eval(model, word)
            if v in seen:
                return seen[v], idx
            seen[v] = idx
    return None


HNN = ["bs:2", "bs:3", "wreath", "hnn-abelian:[[2,0],[0,3]]", "hnn-abelian:[[1,1],[0,2]]", GAMMA2]


@pytest.mark.parametrize("spec", HNN)
def test_witness_agrees_with_brute_force(spec):
    g = build_group(spec)
    w1, w2 = witness_words(ascent_data(g))
    s1, s2 = g.evaluate(w1), g.evaluate(w2)
    verdict = verify_free_semigroup(g, s1, s2, 7)
    assert verdict.is_free and verdict.count == 2**8 - 2
    assert brute_first_collision(model_for(spec), w1, w2, 7) is None


@pytest.mark.parametrize(
    "spec, w1, w2",
    [
        ("zd:2", "e1", "e2"),
        ("bs:2", "a", "t a T"),
        ("heis", "x", "y"),
        ("bs:2", "t", "a"),
        ("heis", "x y", "y x"),
    ],
)
def test_collisions_match_brute_force(spec, w1, w2):
    g = build_group(spec)
    u1, u2 = g.parse(w1), g.parse(w2)
    verdict = verify_free_semigroup(g, g.evaluate(u1), g.evaluate(u2), 8)
    brute = brute_first_collision(model_for(spec), u1, u2, 8)
    if brute is None:
        assert verdict.is_free
    else:
        assert verdict.status == "COLLISION"
        assert verdict.words == brute


def test_collision_report_format():
    g = build_group("zd:2")
    v = verify_free_semigroup(g, g.evaluate("e1"), g.evaluate("e2"), 12)
    assert v.label() == "COLLISION"
    assert v.formatted_words() == ("s1s2", "s2s1")
    assert v.to_dict()["collision"] == ["s1s2", "s2s1"]
    g = build_group("bs:2")
    v = verify_free_semigroup(g, g.evaluate("a"), g.evaluate("t a T"), 5)
    assert v.formatted_words() == ("s2", "s1s1")


def test_cap_and_budget_env(monkeypatch):
    g = build_group("bs:2")
    s1, s2 = witness_pair(ascent_data(g))
    with pytest.raises(BudgetExceeded):
        verify_free_semigroup(g, s1, s2, 12, cap=1000)
    monkeypatch.setenv("ASCENT_LAB_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        verify_free_semigroup(g, s1, s2, 10)
    monkeypatch.setenv("ASCENT_LAB_BUDGET", "100000")
    assert verify_free_semigroup(g, s1, s2, 10).is_free
    with pytest.raises(PreconditionError):
        verify_free_semigroup(g, s1, s2, 0)


def test_coset_representatives_lie_outside_the_image():
    assert coset_representative_word(ascent_data(build_group("bs:3"))) == (("a", 1),)
    for rows in ([[2, 0], [0, 3]], [[1, 1], [0, 2]], [[0, 1], [2, 0]], [[3]]):
        g = build_group(f"hnn-abelian:{rows}".replace(" ", ""))
        u = g.evaluate(coset_representative_word(ascent_data(g)))
        v, j, k = u
        assert j == 0 and k == 0
        assert not image_membership(IntegerMatrix.of(rows), v)[0]
    g = build_group(GAMMA2)
    u = find_coset_representative(ascent_data(g))
    # abelianizing <[a1, a2], a1> gives <(1, 0)>, which misses a2 -> (0, 1)
    assert u == g.evaluate("a2")


def test_witness_pair_is_t_and_tu():
    g = build_group("wreath")
    d = ascent_data(g)
    s1, s2 = witness_pair(d)
    assert s1 == g.evaluate("t")
    assert s2 == g.evaluate("t a")


@pytest.mark.parametrize("spec", ["hnn-abelian:[[1,0],[0,1]]", "hnn-abelian:[[0,1],[1,1]]", "hnn-abelian:[[-1]]"])
def test_unimodular_hnn_is_not_properly_ascending(spec):
    with pytest.raises(NotProperlyAscending):
        certify(build_group(spec), 4)


@pytest.mark.parametrize("images", ["a1;a2", "a2;a1", "a1 a2;a2"])
def test_free_automorphisms_are_not_properly_ascending(images):
    g = build_group(f"hnn-free:{images}")
    with pytest.raises(NotProperlyAscending):
        coset_representative_word(ascent_data(g), 5)


@pytest.mark.parametrize("spec", ["heis", "zd:2", "matrix:2:[[1,2],[0,1]],[[1,0],[2,1]]"])
def test_unsupported_families(spec):
    with pytest.raises(UnsupportedFamily):
        ascent_data(build_group(spec))


def test_certify_returns_pipeline_pieces():
    g = build_group("bs:2")
    u, pair, words, verdict = certify(g, 6)
    assert u == g.evaluate("a")
    assert pair == (g.evaluate("t"), g.evaluate("t a"))
    assert words == ((("t", 1),), (("t", 1), ("a", 1)))
    assert verdict.label() == "FREE-UP-TO-6" and verdict.count == 126


def test_amalgam_demo_against_integer_matrices():
    verdict = amalgam_matrix_demo(10)
    assert verdict.is_free and verdict.count == 2046
    x, y = ((1, 2), (0, 1)), ((1, 0), (2, 1))

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))

    values = set()
    for n in range(1, 11):
        for w in itertools.product((x, y), repeat=n):
            m = ((1, 0), (0, 1))
            for s in w:
                m = mul(m, s)
            values.add(m)
    assert len(values) == 2046


def test_amalgam_demo_with_entry_one_collides():
    # x = [[1,1],[0,1]], y = [[1,0],[-1,1]] satisfy the braid relation xyx = yxy
    pair = (IntegerMatrix.of([[1, 1], [0, 1]]), IntegerMatrix.of([[1, 0], [-1, 1]]))
    v = amalgam_matrix_demo(4, pair)
    assert v.status == "COLLISION"
    assert v.formatted_words() == ("s1s2s1", "s2s1s2")
