"""Gauss decomposition: quasideterminants, routes, inverse identities."""

import pytest

from syk import (Algebra, MatrixSeries, Series, Signature, check_gauss,
                 check_gauss_inverse, compositions_of, format_composition,
                 gauss, matrix_invert, parse_composition)


def test_composition_parsing():
    mu = parse_composition("2,1|1")
    assert mu.parts == (2, 1, 1)
    assert mu.blocks == 3
    assert [mu.size(a) for a in (1, 2, 3)] == [2, 1, 1]
    assert [mu.block_parity(a) for a in (1, 2, 3)] == [0, 0, 1]
    assert mu.cum(2) == 3
    assert format_composition(mu) == "2,1|1"
    assert mu.reversed().parts == (1, 1, 2)


def test_compositions_of():
    cs = compositions_of(2, 1)
    assert sorted(c.parts for c in cs) == [(1, 1, 1), (2, 1)]


def test_quasideterminant_formula_1_1():
    # D_2(u) = t22(u) - t21(u) t11(u)^-1 t12(u), computed independently
    mu = parse_composition("1|1")
    K = 3
    gd = gauss(mu, K)
    T = MatrixSeries.generator_matrix(gd.alg, "u", K)
    Ainv = matrix_invert(T.sub([0], [0]))
    D2 = (T.sub([1], [1]) - T.sub([1], [0]) * Ainv * T.sub([0], [1]))[0, 0]
    assert gd.dser(2, 1, 1).agrees(D2)
    # leading coefficients spelled out
    alg = gd.alg
    assert gd.d(2, 1, 1, 0) == alg.one()
    assert gd.d(2, 1, 1, 1) == alg.gen(2, 2, 1)
    assert gd.d(2, 1, 1, 2) == alg.gen(2, 2, 2) - alg.gen(2, 1, 1) * alg.gen(1, 2, 1)


def test_adjacent_block_defaults():
    gd = gauss(parse_composition("1,1|1"), 2)
    assert gd.e(1, 1, 1, 1) == gd.e(1, 1, 1, 1, b=2)
    assert gd.f(2, 1, 1, 1) == gd.f(2, 1, 1, 1, a=1)


def test_first_order_coefficients_are_plain_generators():
    # E^(1), F^(1), D^(1) coincide with matrix entries of the first order
    mu = parse_composition("2|1")
    gd = gauss(mu, 2)
    alg = gd.alg
    for i in (1, 2):
        assert gd.e(1, i, 1, 1) == alg.gen(i, 3, 1)
        assert gd.f(2, 1, i, 1) == alg.gen(3, i, 1)
        for j in (1, 2):
            assert gd.d(1, i, j, 1) == alg.gen(i, j, 1)


def test_diagonal_inverse_pairs():
    gd = gauss(parse_composition("1,1|1"), 3)
    for a in (1, 2, 3):
        prod = gd.dser(a, 1, 1) * gd.dpser(a, 1, 1)
        assert prod.agrees(Series.one(gd.alg, ("u",), 3))


def test_matrix_inverse_roundtrip():
    alg = Algebra(Signature(1, 2))
    T = MatrixSeries.generator_matrix(alg, "u", 3)
    P = T * matrix_invert(T)
    for i in range(3):
        for j in range(3):
            want = Series.one(alg, ("u",), 3) if i == j else None
            if want is None:
                assert P[i, j].is_zero_known()
            else:
                assert P[i, j].agrees(want)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (2, 2)])
def test_check_gauss_small(mn):
    for mu in compositions_of(*mn):
        _, fails = check_gauss(mu, 2)
        assert not fails, (mn, mu.parts, fails)


def test_check_gauss_inverse():
    for mus in ("1|1", "1,1|1", "2|1"):
        fails = check_gauss_inverse(gauss(parse_composition(mus), 2))
        assert not fails, (mus, fails)


def test_gauss_json_shape():
    gd = gauss(parse_composition("1|1"), 2)
    data = gd.to_json()
    assert data["mu"] == "1|1"
    assert data["K"] == 2
    assert set(data) >= {"mu", "K", "var", "blocks"}
    assert {"D/1", "D/2", "Dp/1", "Dp/2", "E/1/2", "F/2/1"} <= set(data["blocks"])
