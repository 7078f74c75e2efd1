"""Inter-Yangian maps: dual routes, involutions, block transport."""

import pytest

from syk import (Algebra, Series, Signature, check_defining_relations,
                 check_involution, check_routes_agree, gauss, omega,
                 parse_composition, psi, psi_direct, rho, zeta, zeta_direct)
from syk.morphisms import check_corner_supercommute, check_shift_transport, \
    check_zeta_blocks, identity_map, shift_embed


@pytest.mark.parametrize("mn", [(1, 1), (2, 1)])
def test_rho_omega_zeta_are_homomorphisms(mn):
    src = Algebra(Signature(*mn))
    for mor in (rho(src), omega(src), zeta(src)):
        fails = check_defining_relations(mor, 2)
        assert not fails, (mor.name, fails)


def test_psi_is_homomorphism():
    src = Algebra(Signature(1, 1))
    fails = check_defining_relations(psi(src, 1), 2)
    assert not fails, fails


def test_zeta_dual_routes_agree():
    for mn in ((1, 1), (2, 1)):
        src = Algebra(Signature(*mn))
        dst = Algebra(src.sig.flip)
        fails = check_routes_agree(zeta(src, dst), zeta_direct(src, dst), 3)
        assert not fails, fails


def test_psi_dual_routes_agree():
    for mn, k in (((1, 1), 1), ((1, 1), 2), ((2, 1), 1)):
        src = Algebra(Signature(*mn))
        dst = Algebra(Signature(mn[0] + k, mn[1]))
        fails = check_routes_agree(psi(src, k, dst), psi_direct(src, k, dst), 3)
        assert not fails, (mn, k, fails)


def test_omega_squared_is_identity():
    for mn in ((1, 1), (2, 1)):
        alg = Algebra(Signature(*mn))
        assert not check_involution(omega(alg), omega(alg), 3)


def test_zeta_pair_is_identity():
    src = Algebra(Signature(1, 1))
    dst = Algebra(src.sig.flip)
    assert not check_involution(zeta(dst, src), zeta(src, dst), 3)


def test_rho_pair_is_identity():
    src = Algebra(Signature(2, 1))
    dst = Algebra(src.sig.flip)
    assert not check_involution(rho(dst, src), rho(src, dst), 3)


def test_psi_zero_shift_is_identity():
    src = Algebra(Signature(1, 1))
    m = psi(src, 0, src)
    for i in (1, 2):
        for j in (1, 2):
            for r in (1, 2, 3):
                assert m.of_gen(i, j, r) == src.gen(i, j, r)


def test_psi_image_supercommutes_with_corner():
    src = Algebra(Signature(1, 1))
    assert not check_corner_supercommute(psi(src, 1), 1, 2)


def test_zeta_explicit_first_coefficient():
    # the flip map sends t[1,1;1] to minus the opposite corner generator
    src = Algebra(Signature(1, 1))
    dst = Algebra(src.sig.flip)
    z = zeta(src, dst)
    assert z.of_gen(1, 1, 1) == -dst.gen(2, 2, 1)


def test_of_series_matches_coefficientwise():
    src = Algebra(Signature(1, 1))
    mor = omega(src)
    s = Series.gen(src, 1, 2, "u", 3)
    img = mor.of_series(s)
    for r in range(4):
        assert img.coeff1("u", r) == mor.of_element(s.coeff1("u", r))


def test_shift_transport_blockwise():
    for mus in ("1,1|1", "2,1|1"):
        fails = check_shift_transport(parse_composition(mus), 2)
        assert not fails, (mus, fails)


def test_zeta_block_transport():
    for mus in ("1|1", "1,1|1"):
        fails = check_zeta_blocks(parse_composition(mus), 2)
        assert not fails, (mus, fails)


def test_composition_operator():
    src = Algebra(Signature(1, 1))
    m = identity_map(src) @ identity_map(src)
    assert m.of_gen(1, 2, 2) == src.gen(1, 2, 2)
    emb = shift_embed(src, 1)
    assert emb.of_gen(1, 2, 1) == emb.dst.gen(2, 3, 1)
