"""Graded images, loop brackets, PBW enumeration and window certificates."""

import pytest

from syk import (Algebra, DegreeExceeded, LoopAlgebra, Signature,
                 enumerate_pbw, expand_pbw, gauss, gr_bracket_check, gr_image,
                 independence_check, parse_composition, spanning_check)
from syk.pbw import KIND_D, KIND_E, KIND_F, PbwMonomial, _rank_bareiss


@pytest.fixture
def sig():
    return Signature(1, 1)


def test_gr_of_single_generators(sig):
    alg = Algebra(sig)
    loop = LoopAlgebra(sig)
    assert gr_image(alg.gen(1, 1, 2), 1, loop) == loop.gen(1, 1, 1)
    assert gr_image(alg.gen(2, 2, 2), 1, loop) == -1 * loop.gen(2, 2, 1)
    x = alg.gen(1, 1, 1) * alg.gen(2, 2, 1)
    assert gr_image(x, 0, loop) == -1 * (loop.gen(1, 1, 0) * loop.gen(2, 2, 0))


def test_gr_discards_lower_degree(sig):
    alg = Algebra(sig)
    loop = LoopAlgebra(sig)
    x = alg.gen(1, 1, 3) + alg.gen(1, 1, 1)
    assert gr_image(x, 2, loop) == loop.gen(1, 1, 2)


def test_gr_degree_guard(sig):
    alg = Algebra(sig)
    with pytest.raises(DegreeExceeded):
        gr_image(alg.gen(1, 1, 3), 1)


def test_gr_multiplicative_on_top_degree(sig):
    alg = Algebra(sig)
    loop = LoopAlgebra(sig)
    pairs = [(alg.gen(2, 1, 2), alg.gen(1, 2, 3)),
             (alg.gen(1, 1, 1) * alg.gen(2, 2, 2), alg.gen(1, 2, 1)),
             (alg.gen(2, 2, 3), alg.gen(2, 2, 2) * alg.gen(2, 1, 1))]
    for x, y in pairs:
        dx, dy = x.loop_degree(), y.loop_degree()
        lhs = gr_image(x * y, dx + dy, loop)
        rhs = gr_image(x, dx, loop) * gr_image(y, dy, loop)
        assert (lhs - rhs).is_zero()


def test_loop_algebra_bracket():
    loop = LoopAlgebra(Signature(2, 1))
    e = loop.gen
    # even-even
    assert e(1, 2, 1).bracket(e(2, 1, 2)) == e(1, 1, 3) - e(2, 2, 3)
    # odd-odd anticommutator gains no sign twist on the delta terms
    assert e(1, 3, 0).bracket(e(3, 1, 4)) == e(1, 1, 4) + e(3, 3, 4)
    # odd squares vanish
    assert (e(2, 3, 1) * e(2, 3, 1)).is_zero()
    # diagonal symbols commute
    assert e(1, 1, 1).bracket(e(1, 1, 2)).is_zero()


@pytest.mark.parametrize("mus,kmax", [("1|1", 1), ("2|1", 1)])
def test_gr_bracket_check_small(mus, kmax):
    rep = gr_bracket_check(mus, kmax)
    assert rep["ok"] and rep["total"] > 0, rep


def test_enumerate_counts():
    mu = parse_composition("1|1")
    assert len(enumerate_pbw(mu, 0, 1)) == 4
    assert len(enumerate_pbw(mu, 1, 2)) == 32
    assert len(enumerate_pbw(parse_composition("1,1|1"), 1, 2)) == 140


def test_enumerate_words_are_sorted_without_odd_repeats():
    mu = parse_composition("1|1")
    for m in enumerate_pbw(mu, 1, 3):
        assert list(m.word) == sorted(m.word)
        for a, b in zip(m.word, m.word[1:]):
            if a == b:
                # repeated symbols must be even: E and F of (1|1) are odd
                assert a[0] == KIND_D
        assert m.degree <= 1 and m.length <= 3


def test_enumerate_families_partition():
    mu = parse_composition("1,1|1")
    full = {m.word for m in enumerate_pbw(mu, 1, 1)}
    split = set()
    for fam in ("D-only", "E-only", "F-only"):
        split |= {m.word for m in enumerate_pbw(mu, 1, 1, family=fam)}
    assert full == split


def test_expand_matches_plain_generators():
    mu = parse_composition("1|1")
    gd = gauss(mu, 2)
    alg = gd.alg
    assert expand_pbw(PbwMonomial(mu, ((KIND_E, 1, 2, 1, 1, 1),)), gd) \
        == alg.gen(1, 2, 1)
    assert expand_pbw(PbwMonomial(mu, ((KIND_F, 2, 1, 1, 1, 1),)), gd) \
        == alg.gen(2, 1, 1)
    assert expand_pbw(PbwMonomial(mu, ((KIND_D, 2, 2, 1, 1, 1),)), gd) \
        == alg.gen(2, 2, 1)


def test_rank_bareiss():
    assert _rank_bareiss([]) == 0
    assert _rank_bareiss([[0, 0], [0, 0]]) == 0
    assert _rank_bareiss([[1, 2], [2, 4]]) == 1
    assert _rank_bareiss([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == 3
    # regression: rows with zero pivot-column entries still need rescaling
    assert _rank_bareiss([[2, 0, 1], [0, 3, 1], [1, 1, 1]]) == 3
    assert _rank_bareiss([[0, 1, 0], [0, 0, 1], [0, 1, 1]]) == 2


def test_independence_examples():
    mu = parse_composition("1|1")
    single = [PbwMonomial(mu, ((KIND_D, 1, 1, 1, 1, 1),))]
    rep = independence_check(single, mu, 2)
    assert rep["rank"] == 1 and rep["independent"]
    rep = independence_check(enumerate_pbw(mu, 0, 1), mu, 1)
    assert rep["count"] == 4 and rep["rank"] == 4
    rep = independence_check(enumerate_pbw(mu, 1, 2), mu, 4)
    assert rep["independent"]


def test_independence_detects_duplicates():
    mu = parse_composition("1|1")
    m = PbwMonomial(mu, ((KIND_D, 1, 1, 1, 1, 1),))
    rep = independence_check([m, m], mu, 2)
    assert rep["rank"] == 1 and not rep["independent"]


def test_spanning_windows():
    for mus in ("1|1", "1,1|1"):
        rep = spanning_check(mus, 1, 2, 4)
        assert rep["ok"], rep
        assert rep["spanned"] == rep["targets"] > 0


def test_monomial_json():
    mu = parse_composition("1|1")
    m = PbwMonomial(mu, ((KIND_F, 2, 1, 1, 1, 2), (KIND_E, 1, 2, 1, 1, 1)))
    assert m.to_json() == {"word": [["F", 2, 1, 1, 1, 2], ["E", 1, 2, 1, 1, 1]]}
    assert m.degree == 1 and m.length == 2
