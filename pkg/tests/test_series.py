"""Truncated series: window tracking, arithmetic, kernels, serialization."""

from fractions import Fraction

import pytest

from syk import (Algebra, OutOfKnownRange, Series, Signature, bracket_series,
                 times_var_diff)
from syk.series import INF


@pytest.fixture
def alg():
    return Algebra(Signature(1, 1))


def test_gen_series_coefficients(alg):
    s = Series.gen(alg, 1, 1, "u", 3)
    assert s.coeff1("u", 0) == alg.one()
    assert s.coeff1("u", 2) == alg.gen(1, 1, 2)
    with pytest.raises(OutOfKnownRange):
        s.coeff1("u", 4)


def test_known_window_shrinks_under_product(alg):
    a = Series.gen(alg, 1, 1, "u", 3)
    b = Series.gen(alg, 2, 2, "u", 5)
    p = a * b
    # both factors start at order 0, so the product window is the minimum
    assert p.known_of("u") == 3
    q = a.shift("u", -1) * b  # u^-1 * a
    assert q.known_of("u") == 4


def test_addition_alignment(alg):
    a = Series.gen(alg, 1, 2, "u", 3)
    b = Series.gen(alg, 2, 1, "u", 2)
    c = a + b
    assert c.known_of("u") == 2
    assert c.coeff1("u", 2) == alg.gen(1, 2, 2) + alg.gen(2, 1, 2)


def test_rename_and_negate(alg):
    s = Series.gen(alg, 1, 1, "u", 3)
    t = s.rename("u", "v")
    assert t.active == ("v",)
    assert t.coeff1("v", 3) == alg.gen(1, 1, 3)
    n = s.negate_var("u")
    assert n.coeff1("u", 2) == alg.gen(1, 1, 2)
    assert n.coeff1("u", 3) == -alg.gen(1, 1, 3)


def test_is_zero_known_vs_agrees(alg):
    a = Series.gen(alg, 1, 1, "u", 3)
    b = Series.gen(alg, 1, 1, "u", 5)
    assert (a - b).is_zero_known()
    assert a.agrees(b)
    assert not a.agrees(b + Series.gen(alg, 2, 2, "u", 3).shift("u", 0) * 0
                        + Series.constant(alg.gen(2, 2, 1)))


def test_kernel_identity_series_vs_coefficients(alg):
    # the double series with coefficient S^(r+s-1) at u^-r v^-s multiplies
    # by (u - v) to S(v) - S(u); this ties the bivariate window bookkeeping
    # to the single-variable coefficients exactly
    K = 5
    ku = kv = 3
    for (i, j) in ((1, 1), (1, 2), (2, 1), (2, 2)):
        s = Series.gen(alg, i, j, "u", K)
        coeffs = {}
        for r in range(1, ku + 1):
            for s2 in range(1, kv + 1):
                c = s.coeff1("u", r + s2 - 1)
                if not c.is_zero():
                    coeffs[(r, s2, 0)] = c
        double = Series(alg, ("u", "v"), (ku, kv, INF), coeffs)
        lhs = times_var_diff(double)
        rhs = s.rename("u", "v") - s
        assert lhs.agrees(rhs), (i, j)


def test_bracket_series_matches_elementwise(alg):
    a = Series.gen(alg, 1, 2, "u", 2)
    b = Series.gen(alg, 2, 1, "v", 2)
    br = bracket_series(a, b)
    for r in range(1, 3):
        for s in range(1, 3):
            want = alg.gen(1, 2, r).bracket(alg.gen(2, 1, s))
            assert br.coeff((r, s, 0)) == want


def test_times_var_diff_kills_nothing(alg):
    # multiplication by (u - v) is injective on the stored windows
    a = Series.gen(alg, 1, 1, "u", 2) * Series.gen(alg, 2, 2, "v", 2)
    assert not times_var_diff(a).is_zero_known()


def test_constant_and_scalar_ops(alg):
    c = Series.constant(alg.gen(1, 1, 1), active=("u",), known=4)
    s = c + 1
    assert s.coeff1("u", 0) == alg.gen(1, 1, 1) + alg.one()
    assert (s - s).is_zero_known()
    assert (Fraction(1, 2) * c * 2).coeff1("u", 0) == alg.gen(1, 1, 1)


def test_truncate_drops_knowledge(alg):
    s = Series.gen(alg, 1, 1, "u", 4).truncate("u", 2)
    assert s.known_of("u") == 2
    with pytest.raises(OutOfKnownRange):
        s.coeff1("u", 3)


def test_json_roundtrip(alg):
    s = Series.gen(alg, 1, 2, "u", 3) * Series.gen(alg, 2, 1, "v", 2)
    t = Series.from_json(alg, s.to_json())
    assert t == s
