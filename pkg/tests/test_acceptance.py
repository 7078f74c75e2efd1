"""Acceptance criteria, one test and one pass/fail line per criterion.

Everything is exact rational arithmetic with zero tolerance; a single
failing instance fails the criterion.
"""

import json
import random
import subprocess
import sys
import time

from syk import (Algebra, Signature, check_defining_relations, check_gauss,
                 check_involution, check_routes_agree, compositions_of,
                 enumerate_pbw, gr_bracket_check, independence_check, omega,
                 parse_composition, psi, psi_direct, rho, spanning_check,
                 verify_m2n1, verify_mn11, verify_theorem73, zeta, zeta_direct)
from syk.morphisms import check_shift_transport

from test_algebra import relation_rhs


def _report(n, label, ok, t0):
    print("criterion %d (%s): %s  [%.1fs]"
          % (n, label, "PASS" if ok else "FAIL", time.time() - t0))
    assert ok


def _random_word(rng, S):
    # letters draw orders up to 4 under a total-order budget that keeps the
    # worst-case straightening cost bounded
    n = rng.randint(0, 3)
    word, budget = [], 6
    for _ in range(n):
        r = rng.randint(1, min(4, budget))
        budget -= r
        word.append((rng.randint(1, S), rng.randint(1, S), r))
        if budget == 0:
            break
    return word


def test_c1_defining_relation_closure():
    t0 = time.time()
    ok = True
    for mn in ((1, 1), (2, 1), (1, 2), (2, 2)):
        alg = Algebra(Signature(*mn))
        S = alg.sig.size
        rng = random.Random(20260819 + S)
        for _ in range(1000):
            w1 = _random_word(rng, S)
            w2 = _random_word(rng, S)
            if not (alg.word(w1 + w2) - alg.word(w1) * alg.word(w2)).is_zero():
                ok = False
        for i in range(1, S + 1):
            for j in range(1, S + 1):
                for h in range(1, S + 1):
                    for k in range(1, S + 1):
                        for r in (1, 2, 3):
                            for s in (1, 2, 3):
                                lhs = alg.gen(i, j, r).bracket(alg.gen(h, k, s))
                                if not (lhs - relation_rhs(
                                        alg, i, j, h, k, r, s)).is_zero():
                                    ok = False
    _report(1, "defining-relation closure", ok, t0)


def test_c2_gauss_consistency():
    t0 = time.time()
    ok = True
    for M in range(0, 5):
        for N in range(0, 5 - M):
            if M + N == 0:
                continue
            for mu in compositions_of(M, N):
                _, fails = check_gauss(mu, 3)
                if fails:
                    ok = False
    _report(2, "Gauss consistency, all M+N <= 4", ok, t0)


def test_c3_presentation_catalogue():
    t0 = time.time()
    ok = True
    shapes = ("1|1", "2|1", "1,1|1", "1|1,1", "2,1|1", "1,1|1,1", "2|2", "1,1|2")
    for mus in shapes:
        rep = verify_theorem73(parse_composition(mus), 3)
        if not (rep.ok and rep.total > 0):
            ok = False
    # the quaternary families are exercised on the four-block shape
    rep = verify_theorem73(parse_composition("1,1|1,1"), 3)
    quater = {f.id: f.total for f in rep.families if f.id in ("7.19", "7.20")}
    if not (quater.get("7.19", 0) > 0 and quater.get("7.20", 0) > 0):
        ok = False
    _report(3, "presentation catalogue", ok, t0)


def test_c4_special_case_lemmas():
    t0 = time.time()
    ok = True
    for mus in ("1|1", "2|1", "2|2"):
        rep = verify_mn11(parse_composition(mus), 3)
        if not (rep.ok and rep.total > 0):
            ok = False
    for mus in ("1,1|1", "2,1|1"):
        rep = verify_m2n1(parse_composition(mus), 3)
        if not (rep.ok and rep.total > 0):
            ok = False
        tri = [f for f in rep.families if f.id.startswith("6.3")]
        if not (len(tri) == 8 and all(f.total > 0 for f in tri)):
            ok = False
    _report(4, "special-case lemmas", ok, t0)


def test_c5_morphism_suite():
    t0 = time.time()
    ok = True
    for mn in ((1, 1), (2, 1)):
        src = Algebra(Signature(*mn))
        flip = Algebra(src.sig.flip)
        for mor in (rho(src, flip), omega(src), zeta(src, flip)):
            if check_defining_relations(mor, 3):
                ok = False
        if check_involution(omega(src), omega(src), 3):
            ok = False
        if check_involution(zeta(flip, src), zeta(src, flip), 3):
            ok = False
        if check_involution(rho(flip, src), rho(src, flip), 3):
            ok = False
        if check_routes_agree(zeta(src, flip), zeta_direct(src, flip), 3):
            ok = False
    for mn, k in (((1, 1), 1), ((2, 1), 1), ((1, 2), 1), ((1, 1), 2)):
        src = Algebra(Signature(*mn))
        dst = Algebra(Signature(mn[0] + k, mn[1]))
        if check_defining_relations(psi(src, k, dst), 3):
            ok = False
        if check_routes_agree(psi(src, k, dst), psi_direct(src, k, dst), 3):
            ok = False
    for mus in ("1,1|1", "2,1|1"):
        if check_shift_transport(parse_composition(mus), 3):
            ok = False
    _report(5, "morphism suite", ok, t0)


def test_c6_graded_and_pbw():
    t0 = time.time()
    ok = True
    for mus in ("1|1", "2|1", "1,1|1"):
        rep = gr_bracket_check(mus, 2)
        if not (rep["ok"] and rep["total"] > 0):
            ok = False
    for mus in ("1|1", "1,1|1"):
        mu = parse_composition(mus)
        monos = enumerate_pbw(mu, 1, 2)
        ind = independence_check(monos, mu, 4)
        if not (ind["independent"] and ind["count"] > 0):
            ok = False
        span = spanning_check(mu, 1, 2, 4)
        if not (span["ok"] and span["targets"] > 0):
            ok = False
    _report(6, "graded structure and PBW window", ok, t0)


def test_c7_determinism_across_workers():
    t0 = time.time()
    outs = []
    for n in ("1", "2"):
        r = subprocess.run(
            [sys.executable, "-m", "syk.cli", "verify", "--suite", "all",
             "--mu", "1,1|1", "-K", "2", "--workers", n],
            capture_output=True, text=True)
        assert r.returncode == 0, r.stderr
        outs.append(r.stdout)
    ok = bool(outs[0]) and outs[0] == outs[1] \
        and json.loads(outs[0])["failed"] == 0
    _report(7, "worker-count determinism", ok, t0)
