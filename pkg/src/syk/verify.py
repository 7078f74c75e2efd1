"""Exhaustive bounded-order verification of the block relation catalogue.

Each suite checks one catalogue of identities among the Gauss block
generators of a composition, by exhaustive enumeration of every admissible
index combination inside a truncation window.  All arithmetic is exact; a
failure record carries the relation id, the index tuple, and the nonzero
residual in serialized form.
"""

from __future__ import annotations

import multiprocessing
import os

from .gauss import (Composition, MatrixSeries, format_composition, gauss,
                    matrix_invert, parse_composition)
from .series import Series, bracket_series, times_var_diff


class WrongShape(Exception):
    """Suite invoked on a composition with an incompatible block shape."""


class FamilyResult:
    """Outcome of one relation family inside a suite."""

    __slots__ = ("id", "total", "failures")

    def __init__(self, id, total, failures):
        self.id = id
        self.total = total
        self.failures = list(failures)

    @property
    def failed(self):
        return len(self.failures)

    def to_json(self):
        return {"id": self.id, "total": self.total,
                "passed": self.total - self.failed, "failed": self.failed,
                "failures": self.failures}


class VerifyReport:
    """Outcome of one suite run on one composition."""

    __slots__ = ("suite", "mu", "K", "order", "families", "skipped")

    def __init__(self, suite, mu, K, order, families, skipped=None):
        self.suite = suite
        self.mu = format_composition(mu) if isinstance(mu, Composition) else mu
        self.K = K
        self.order = order
        self.families = families
        self.skipped = skipped

    @property
    def total(self):
        return sum(f.total for f in self.families)

    @property
    def failed(self):
        return sum(f.failed for f in self.families)

    @property
    def ok(self):
        return self.failed == 0

    def to_json(self):
        out = {"suite": self.suite, "mu": self.mu, "K": self.K,
               "order": self.order, "total": self.total,
               "passed": self.total - self.failed, "failed": self.failed,
               "ok": self.ok,
               "families": [f.to_json() for f in self.families]}
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


def _sgn(p):
    return -1 if p % 2 else 1


def _rng(mu, a):
    return range(1, mu.size(a) + 1)


def _rs_pairs(K):
    """All r, s >= 1 with r + s <= K + 1."""
    return [(r, s) for r in range(1, K + 1) for s in range(1, K + 2 - r)]


def _fail(failures, rel, indices, residual):
    failures.append({"relation": rel, "indices": list(indices),
                     "residual": residual.to_json()})


def _ser(gd, kind, a, i, j, var="u", b=None):
    if kind == "D":
        s = gd.dser(a, i, j)
    elif kind == "Dp":
        s = gd.dpser(a, i, j)
    elif kind == "E":
        s = gd.eser(a, i, j, b)
    else:
        s = gd.fser(a, i, j, b)
    return s if var == "u" else s.rename("u", var)


# -- D-block families (shared by the levi and full coefficient suites) --------


def _fam_75(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for a in range(1, mu.blocks + 1):
        for i in _rng(mu, a):
            for j in _rng(mu, a):
                want = gd.alg.one() if i == j else gd.alg.zero()
                diff = gd.d(a, i, j, 0) - want
                total += 1
                if not diff.is_zero():
                    _fail(failures, "7.5", (a, i, j), diff)
    return total, failures


def _fam_76(gd, K):
    mu = gd.mu
    alg = gd.alg
    total, failures = 0, []
    for a in range(1, mu.blocks + 1):
        for i in _rng(mu, a):
            for j in _rng(mu, a):
                for r in range(K + 1):
                    acc = alg.zero()
                    for t in range(r + 1):
                        for p in _rng(mu, a):
                            acc = acc + gd.d(a, i, p, t) * gd.dp(a, p, j, r - t)
                    if r == 0 and i == j:
                        acc = acc - alg.one()
                    total += 1
                    if not acc.is_zero():
                        _fail(failures, "7.6", (a, i, j, r), acc)
    return total, failures


def _fam_77(gd, K):
    mu = gd.mu
    alg = gd.alg
    total, failures = 0, []
    for a in range(1, mu.blocks + 1):
        for b in range(1, mu.blocks + 1):
            for i in _rng(mu, a):
                for j in _rng(mu, a):
                    for h in _rng(mu, b):
                        for k in _rng(mu, b):
                            for r, s in _rs_pairs(K):
                                lhs = gd.d(a, i, j, r).bracket(gd.d(b, h, k, s))
                                rhs = alg.zero()
                                if a == b:
                                    for t in range(min(r, s)):
                                        rhs = rhs + (
                                            gd.d(a, h, j, t) * gd.d(a, i, k, r + s - 1 - t)
                                            - gd.d(a, h, j, r + s - 1 - t) * gd.d(a, i, k, t))
                                    # odd blocks satisfy the twisted form; the
                                    # unsigned variant fails mechanically there
                                    rhs = _sgn(mu.block_parity(a)) * rhs
                                diff = lhs - rhs
                                total += 1
                                if not diff.is_zero():
                                    _fail(failures, "7.7",
                                          (a, b, i, j, h, k, r, s), diff)
    return total, failures


# -- coefficient catalogue for a general composition --------------------------


def _fam_78(gd, K):
    mu = gd.mu
    alg = gd.alg
    m = mu.m
    total, failures = 0, []
    for a in range(1, mu.blocks + 1):
        for b in range(1, mu.blocks):
            for i in _rng(mu, a):
                for j in _rng(mu, a):
                    for h in _rng(mu, b):
                        for k in _rng(mu, b + 1):
                            for r, s in _rs_pairs(K):
                                lhs = gd.d(a, i, j, r).bracket(gd.e(b, h, k, s))
                                s1 = alg.zero()
                                if a == b and h == j:
                                    for t in range(r):
                                        for p in _rng(mu, a):
                                            s1 = s1 + gd.d(a, i, p, t) * gd.e(
                                                a, p, k, r + s - 1 - t)
                                s2 = alg.zero()
                                if a == b + 1:
                                    for t in range(r):
                                        s2 = s2 + gd.d(a, i, k, t) * gd.e(
                                            b, h, j, r + s - 1 - t)
                                if b != m:
                                    rhs = _sgn(mu.block_parity(b)) * (s1 - s2)
                                else:
                                    rhs = s1 + s2
                                diff = lhs - rhs
                                total += 1
                                if not diff.is_zero():
                                    _fail(failures, "7.8",
                                          (a, b, i, j, h, k, r, s), diff)
    return total, failures


def _fam_79(gd, K):
    mu = gd.mu
    alg = gd.alg
    m = mu.m
    total, failures = 0, []
    for a in range(1, mu.blocks + 1):
        for b in range(1, mu.blocks):
            for i in _rng(mu, a):
                for j in _rng(mu, a):
                    for h in _rng(mu, b + 1):
                        for k in _rng(mu, b):
                            for r, s in _rs_pairs(K):
                                lhs = gd.d(a, i, j, r).bracket(gd.f(b + 1, h, k, s))
                                s1 = alg.zero()
                                if a == b and k == i:
                                    for t in range(r):
                                        for p in _rng(mu, a):
                                            s1 = s1 + gd.f(b + 1, h, p, r + s - 1 - t) * gd.d(
                                                a, p, j, t)
                                s2 = alg.zero()
                                if a == b + 1:
                                    for t in range(r):
                                        s2 = s2 + gd.f(b + 1, i, k, r + s - 1 - t) * gd.d(
                                            a, h, j, t)
                                if b != m:
                                    rhs = _sgn(mu.block_parity(b)) * (s2 - s1)
                                else:
                                    rhs = -s1 - s2
                                diff = lhs - rhs
                                total += 1
                                if not diff.is_zero():
                                    _fail(failures, "7.9",
                                          (a, b, i, j, h, k, r, s), diff)
    return total, failures


def _fam_710(gd, K):
    mu = gd.mu
    alg = gd.alg
    m = mu.m
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for i in _rng(mu, a):
            for j in _rng(mu, a + 1):
                for h in _rng(mu, a):
                    for k in _rng(mu, a + 1):
                        for r, s in _rs_pairs(K):
                            lhs = gd.e(a, i, j, r).bracket(gd.e(a, h, k, s))

                            def ssum(hi):
                                out = alg.zero()
                                for t in range(1, hi):
                                    out = out + gd.e(a, i, k, t) * gd.e(
                                        a, h, j, r + s - 1 - t)
                                return out

                            if a != m:
                                rhs = _sgn(mu.block_parity(a)) * (ssum(s) - ssum(r))
                            else:
                                rhs = ssum(r) - ssum(s)
                            diff = lhs - rhs
                            total += 1
                            if not diff.is_zero():
                                _fail(failures, "7.10",
                                      (a, i, j, h, k, r, s), diff)
    return total, failures


def _fam_711(gd, K):
    mu = gd.mu
    alg = gd.alg
    m = mu.m
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for i in _rng(mu, a + 1):
            for j in _rng(mu, a):
                for h in _rng(mu, a + 1):
                    for k in _rng(mu, a):
                        for r, s in _rs_pairs(K):
                            lhs = gd.f(a + 1, i, j, r).bracket(gd.f(a + 1, h, k, s))

                            def ssum(hi):
                                out = alg.zero()
                                for t in range(1, hi):
                                    out = out + gd.f(a + 1, i, k, r + s - 1 - t) * gd.f(
                                        a + 1, h, j, t)
                                return out

                            if a != m:
                                rhs = _sgn(mu.block_parity(a)) * (ssum(r) - ssum(s))
                            else:
                                rhs = ssum(r) - ssum(s)
                            diff = lhs - rhs
                            total += 1
                            if not diff.is_zero():
                                _fail(failures, "7.11",
                                      (a, i, j, h, k, r, s), diff)
    return total, failures


def _fam_712(gd, K):
    mu = gd.mu
    alg = gd.alg
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for b in range(1, mu.blocks):
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, b + 1):
                        for k in _rng(mu, b):
                            for r, s in _rs_pairs(K):
                                lhs = gd.e(a, i, j, r).bracket(gd.f(b + 1, h, k, s))
                                rhs = alg.zero()
                                if a == b:
                                    for t in range(r + s):
                                        rhs = rhs + gd.d(a + 1, h, j, r + s - 1 - t) * gd.dp(
                                            a, i, k, t)
                                    rhs = -_sgn(mu.block_parity(a + 1)) * rhs
                                diff = lhs - rhs
                                total += 1
                                if not diff.is_zero():
                                    _fail(failures, "7.12",
                                          (a, b, i, j, h, k, r, s), diff)
    return total, failures


def _fam_713(gd, K):
    mu = gd.mu
    alg = gd.alg
    total, failures = 0, []
    for a in range(1, mu.blocks - 1):
        for i in _rng(mu, a):
            for j in _rng(mu, a + 1):
                for h in _rng(mu, a + 1):
                    for k in _rng(mu, a + 2):
                        for r in range(1, K):
                            for s in range(1, K):
                                lhs = (gd.e(a, i, j, r + 1).bracket(gd.e(a + 1, h, k, s))
                                       - gd.e(a, i, j, r).bracket(gd.e(a + 1, h, k, s + 1)))
                                rhs = alg.zero()
                                if h == j:
                                    for q in _rng(mu, a + 1):
                                        rhs = rhs + gd.e(a, i, q, r) * gd.e(a + 1, q, k, s)
                                    rhs = _sgn(mu.block_parity(a + 1)) * rhs
                                diff = lhs - rhs
                                total += 1
                                if not diff.is_zero():
                                    _fail(failures, "7.13",
                                          (a, i, j, h, k, r, s), diff)
    return total, failures


def _fam_714(gd, K):
    mu = gd.mu
    alg = gd.alg
    total, failures = 0, []
    for a in range(1, mu.blocks - 1):
        for i in _rng(mu, a + 1):
            for j in _rng(mu, a):
                for h in _rng(mu, a + 2):
                    for k in _rng(mu, a + 1):
                        for r in range(1, K):
                            for s in range(1, K):
                                lhs = (gd.f(a + 1, i, j, r + 1).bracket(
                                           gd.f(a + 2, h, k, s))
                                       - gd.f(a + 1, i, j, r).bracket(
                                           gd.f(a + 2, h, k, s + 1)))
                                rhs = alg.zero()
                                if i == k:
                                    for q in _rng(mu, a + 1):
                                        rhs = rhs + gd.f(a + 2, h, q, s) * gd.f(a + 1, q, j, r)
                                    rhs = -_sgn(mu.block_parity(a + 1)) * rhs
                                diff = lhs - rhs
                                total += 1
                                if not diff.is_zero():
                                    _fail(failures, "7.14",
                                          (a, i, j, h, k, r, s), diff)
    return total, failures


def _fam_715(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for b in range(a + 1, mu.blocks):
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, b):
                        for k in _rng(mu, b + 1):
                            if b == a + 1 and h == j:
                                continue
                            for r in range(1, K + 1):
                                for s in range(1, K + 1):
                                    diff = gd.e(a, i, j, r).bracket(gd.e(b, h, k, s))
                                    total += 1
                                    if not diff.is_zero():
                                        _fail(failures, "7.15",
                                              (a, b, i, j, h, k, r, s), diff)
    return total, failures


def _fam_716(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for b in range(a + 1, mu.blocks):
            for i in _rng(mu, a + 1):
                for j in _rng(mu, a):
                    for h in _rng(mu, b + 1):
                        for k in _rng(mu, b):
                            if b == a + 1 and i == k:
                                continue
                            for r in range(1, K + 1):
                                for s in range(1, K + 1):
                                    diff = gd.f(a + 1, i, j, r).bracket(
                                        gd.f(b + 1, h, k, s))
                                    total += 1
                                    if not diff.is_zero():
                                        _fail(failures, "7.16",
                                              (a, b, i, j, h, k, r, s), diff)
    return total, failures


def _fam_717(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for b in range(1, mu.blocks):
            if a == b:
                continue
            inner = {}
            for h in _rng(mu, a):
                for k in _rng(mu, a + 1):
                    for f in _rng(mu, b):
                        for g in _rng(mu, b + 1):
                            for t in range(1, K + 1):
                                for l in range(1, K + 1):
                                    inner[h, k, f, g, t, l] = gd.e(
                                        a, h, k, t).bracket(gd.e(b, f, g, l))
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, a):
                        for k in _rng(mu, a + 1):
                            for f in _rng(mu, b):
                                for g in _rng(mu, b + 1):
                                    for r in range(1, K + 1):
                                        for s in range(r, K + 1):
                                            for l in range(1, K + 1):
                                                diff = (gd.e(a, i, j, r).bracket(
                                                            inner[h, k, f, g, s, l])
                                                        + gd.e(a, i, j, s).bracket(
                                                            inner[h, k, f, g, r, l]))
                                                total += 1
                                                if not diff.is_zero():
                                                    _fail(failures, "7.17",
                                                          (a, b, i, j, h, k, f, g,
                                                           r, s, l), diff)
    return total, failures


def _fam_718(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for a in range(1, mu.blocks):
        for b in range(1, mu.blocks):
            if a == b:
                continue
            inner = {}
            for h in _rng(mu, a + 1):
                for k in _rng(mu, a):
                    for f in _rng(mu, b + 1):
                        for g in _rng(mu, b):
                            for t in range(1, K + 1):
                                for l in range(1, K + 1):
                                    inner[h, k, f, g, t, l] = gd.f(
                                        a + 1, h, k, t).bracket(gd.f(b + 1, f, g, l))
            for i in _rng(mu, a + 1):
                for j in _rng(mu, a):
                    for h in _rng(mu, a + 1):
                        for k in _rng(mu, a):
                            for f in _rng(mu, b + 1):
                                for g in _rng(mu, b):
                                    for r in range(1, K + 1):
                                        for s in range(r, K + 1):
                                            for l in range(1, K + 1):
                                                diff = (gd.f(a + 1, i, j, r).bracket(
                                                            inner[h, k, f, g, s, l])
                                                        + gd.f(a + 1, i, j, s).bracket(
                                                            inner[h, k, f, g, r, l]))
                                                total += 1
                                                if not diff.is_zero():
                                                    _fail(failures, "7.18",
                                                          (a, b, i, j, h, k, f, g,
                                                           r, s, l), diff)
    return total, failures


def _fam_cross(gd, K, rel, kind, rs_ok):
    """Quaternary [[X_{m-1}^{(r)},X_m^{(1)}],[X_m^{(1)},X_{m+1}^{(s)}]] = 0."""
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    if m < 2 or mu.n < 2:
        return total, failures
    lefts, rights = [], []
    if kind == "E":
        for i in _rng(mu, m - 1):
            for j in _rng(mu, m):
                for h in _rng(mu, m):
                    for k in _rng(mu, m + 1):
                        for r in range(1, K + 1):
                            lefts.append(((i, j, h, k, r), gd.e(
                                m - 1, i, j, r).bracket(gd.e(m, h, k, 1))))
        for h0 in _rng(mu, m):
            for k0 in _rng(mu, m + 1):
                for f in _rng(mu, m + 1):
                    for g in _rng(mu, m + 2):
                        for s in range(1, K + 1):
                            rights.append(((h0, k0, f, g, s), gd.e(
                                m, h0, k0, 1).bracket(gd.e(m + 1, f, g, s))))
    else:
        for i in _rng(mu, m):
            for j in _rng(mu, m - 1):
                for h in _rng(mu, m + 1):
                    for k in _rng(mu, m):
                        for r in range(1, K + 1):
                            lefts.append(((i, j, h, k, r), gd.f(
                                m, i, j, r).bracket(gd.f(m + 1, h, k, 1))))
        for h0 in _rng(mu, m + 1):
            for k0 in _rng(mu, m):
                for f in _rng(mu, m + 2):
                    for g in _rng(mu, m + 1):
                        for s in range(1, K + 1):
                            rights.append(((h0, k0, f, g, s), gd.f(
                                m + 1, h0, k0, 1).bracket(gd.f(m + 2, f, g, s))))
    for (i, j, h, k, r), left in lefts:
        for (h0, k0, f, g, s), right in rights:
            if not rs_ok(r, s):
                continue
            diff = left.bracket(right)
            total += 1
            if not diff.is_zero():
                _fail(failures, rel, (i, j, h, k, h0, k0, f, g, r, s), diff)
    return total, failures


def _fam_719(gd, K):
    return _fam_cross(gd, K, "7.19", "E", lambda r, s: True)


def _fam_720(gd, K):
    return _fam_cross(gd, K, "7.20", "F", lambda r, s: True)


# -- two-block catalogue in series form ---------------------------------------


def _two_block_check(mu):
    if mu.m != 1 or mu.n != 1:
        raise WrongShape(
            f"suite mn11 needs a two-block composition (M|N), got {format_composition(mu)}")


def _fam_2b_entries(gd, K):
    mu = gd.mu
    alg = gd.alg
    T = MatrixSeries.generator_matrix(alg, "u", gd.K)
    Tp = matrix_invert(T)
    D1, D2, Dp1, Dp2 = gd.D[1], gd.D[2], gd.Dp[1], gd.Dp[2]
    E, F = gd.E[1, 2], gd.F[2, 1]

    def blk(Mx, a, b):
        return Mx.sub(mu.rows(a), mu.rows(b))

    cases = [
        ("5.6", blk(T, 1, 1), D1),
        ("5.7", blk(T, 1, 2), D1 * E),
        ("5.8", blk(T, 2, 1), F * D1),
        ("5.9", blk(T, 2, 2), F * D1 * E + D2),
        ("5.10", blk(Tp, 1, 1), Dp1 + E * Dp2 * F),
        ("5.11", blk(Tp, 1, 2), -(E * Dp2)),
        ("5.12", blk(Tp, 2, 1), -(Dp2 * F)),
        ("5.13", blk(Tp, 2, 2), Dp2),
    ]
    total, failures = 0, []
    for rel, lhs, rhs in cases:
        for r in range(lhs.rows):
            for c in range(lhs.cols):
                diff = lhs[r, c] - rhs[r, c]
                total += 1
                if not diff.is_zero_known():
                    _fail(failures, rel, (r + 1, c + 1), diff)
    return total, failures


def _fam_2b_de(gd, K):
    mu = gd.mu
    M, N = mu.size(1), mu.size(2)
    total, failures = 0, []
    for a in (1, 2):
        for i in _rng(mu, a):
            for j in _rng(mu, a):
                Dij = _ser(gd, "D", a, i, j)
                for h in range(1, M + 1):
                    for k in range(1, N + 1):
                        lhs = times_var_diff(bracket_series(
                            Dij, _ser(gd, "E", 1, h, k, "v")))
                        if a == 1:
                            rhs = Series.zero(gd.alg)
                            if h == j:
                                for p in range(1, M + 1):
                                    rhs = rhs + _ser(gd, "D", 1, i, p) * (
                                        _ser(gd, "E", 1, p, k, "v")
                                        - _ser(gd, "E", 1, p, k))
                        else:
                            rhs = _ser(gd, "D", 2, i, k) * (
                                _ser(gd, "E", 1, h, j, "v") - _ser(gd, "E", 1, h, j))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "5.1", (a, i, j, h, k), lhs - rhs)
    return total, failures


def _fam_2b_df(gd, K):
    mu = gd.mu
    M, N = mu.size(1), mu.size(2)
    total, failures = 0, []
    for a in (1, 2):
        for i in _rng(mu, a):
            for j in _rng(mu, a):
                Dij = _ser(gd, "D", a, i, j)
                for h in range(1, N + 1):
                    for k in range(1, M + 1):
                        lhs = times_var_diff(bracket_series(
                            Dij, _ser(gd, "F", 2, h, k, "v")))
                        if a == 1:
                            rhs = Series.zero(gd.alg)
                            if k == i:
                                for p in range(1, M + 1):
                                    rhs = rhs + (_ser(gd, "F", 2, h, p)
                                                 - _ser(gd, "F", 2, h, p, "v")) * _ser(
                                                     gd, "D", 1, p, j)
                        else:
                            rhs = (_ser(gd, "F", 2, i, k)
                                   - _ser(gd, "F", 2, i, k, "v")) * _ser(gd, "D", 2, h, j)
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "5.2", (a, i, j, h, k), lhs - rhs)
    return total, failures


def _fam_2b_ef(gd, K):
    mu = gd.mu
    M, N = mu.size(1), mu.size(2)
    total, failures = 0, []
    for i in range(1, M + 1):
        for j in range(1, N + 1):
            Eu = _ser(gd, "E", 1, i, j)
            for h in range(1, N + 1):
                for k in range(1, M + 1):
                    lhs = times_var_diff(bracket_series(
                        Eu, _ser(gd, "F", 2, h, k, "v")))
                    rhs = (_ser(gd, "Dp", 1, i, k, "v") * _ser(gd, "D", 2, h, j, "v")
                           - _ser(gd, "D", 2, h, j) * _ser(gd, "Dp", 1, i, k))
                    total += 1
                    if not lhs.agrees(rhs):
                        _fail(failures, "5.3", (i, j, h, k), lhs - rhs)
    return total, failures


def _fam_2b_ee(gd, K):
    mu = gd.mu
    M, N = mu.size(1), mu.size(2)
    total, failures = 0, []
    for i in range(1, M + 1):
        for j in range(1, N + 1):
            for h in range(1, M + 1):
                for k in range(1, N + 1):
                    lhs = times_var_diff(bracket_series(
                        _ser(gd, "E", 1, i, j), _ser(gd, "E", 1, h, k, "v")))
                    rhs = (_ser(gd, "E", 1, i, k) - _ser(gd, "E", 1, i, k, "v")) * (
                        _ser(gd, "E", 1, h, j, "v") - _ser(gd, "E", 1, h, j))
                    total += 1
                    if not lhs.agrees(rhs):
                        _fail(failures, "5.4", (i, j, h, k), lhs - rhs)
    return total, failures


def _fam_2b_ff(gd, K):
    mu = gd.mu
    M, N = mu.size(1), mu.size(2)
    total, failures = 0, []
    for i in range(1, N + 1):
        for j in range(1, M + 1):
            for h in range(1, N + 1):
                for k in range(1, M + 1):
                    lhs = times_var_diff(bracket_series(
                        _ser(gd, "F", 2, i, j), _ser(gd, "F", 2, h, k, "v")))
                    rhs = (_ser(gd, "F", 2, i, k) - _ser(gd, "F", 2, i, k, "v")) * (
                        _ser(gd, "F", 2, h, j, "v") - _ser(gd, "F", 2, h, j))
                    total += 1
                    if not lhs.agrees(rhs):
                        _fail(failures, "5.5", (i, j, h, k), lhs - rhs)
    return total, failures


# -- three-block catalogue (two even blocks, one odd) --------------------------


def _three_block_check(mu):
    if mu.m != 2 or mu.n != 1:
        raise WrongShape(
            f"suite m2n1 needs a composition (mu1,mu2|mu3), got {format_composition(mu)}")


def _fam_61a(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 3):
                for k in _rng(mu, 2):
                    diff = bracket_series(_ser(gd, "E", 1, i, j),
                                          _ser(gd, "F", 3, h, k, "v"))
                    total += 1
                    if not diff.is_zero_known():
                        _fail(failures, "6.1a", (i, j, h, k), diff)
    return total, failures


def _fam_61b(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 2):
                for k in _rng(mu, 3):
                    lhs = times_var_diff(bracket_series(
                        _ser(gd, "E", 1, i, j), _ser(gd, "E", 2, h, k, "v")))
                    rhs = Series.zero(gd.alg)
                    if h == j:
                        for q in _rng(mu, 2):
                            rhs = rhs + (_ser(gd, "E", 1, i, q)
                                         - _ser(gd, "E", 1, i, q, "v")) * _ser(
                                             gd, "E", 2, q, k, "v")
                        rhs = rhs + _ser(gd, "E", 1, i, k, "v", b=3) - _ser(
                            gd, "E", 1, i, k, "u", b=3)
                    total += 1
                    if not lhs.agrees(rhs):
                        _fail(failures, "6.1b", (i, j, h, k), lhs - rhs)
    return total, failures


def _fam_61c(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 3):
            for h in _rng(mu, 2):
                for k in _rng(mu, 3):
                    lhs = bracket_series(_ser(gd, "E", 1, i, j, "u", b=3),
                                         _ser(gd, "E", 2, h, k, "v"))
                    for g in _rng(mu, 2):
                        rhs = _ser(gd, "E", 2, h, j, "v") * bracket_series(
                            _ser(gd, "E", 1, i, g), _ser(gd, "E", 2, g, k, "v"))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "6.1c", (i, j, h, k, g), lhs - rhs)
    return total, failures


def _fam_61d(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 1):
                for k in _rng(mu, 3):
                    arg = _ser(gd, "E", 1, h, k, "v", b=3)
                    for q in _rng(mu, 2):
                        arg = arg - _ser(gd, "E", 1, h, q, "v") * _ser(
                            gd, "E", 2, q, k, "v")
                    lhs = bracket_series(_ser(gd, "E", 1, i, j), arg)
                    for g in _rng(mu, 2):
                        rhs = -(bracket_series(_ser(gd, "E", 1, i, g),
                                               _ser(gd, "E", 2, g, k, "v"))
                                * _ser(gd, "E", 1, h, j))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "6.1d", (i, j, h, k, g), lhs - rhs)
    return total, failures


def _fam_62a(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 2):
                for k in _rng(mu, 3):
                    diff = bracket_series(_ser(gd, "F", 2, i, j),
                                          _ser(gd, "E", 2, h, k, "v"))
                    total += 1
                    if not diff.is_zero_known():
                        _fail(failures, "6.2a", (i, j, h, k), diff)
    return total, failures


def _fam_62b(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 3):
                for k in _rng(mu, 2):
                    lhs = times_var_diff(bracket_series(
                        _ser(gd, "F", 2, i, j), _ser(gd, "F", 3, h, k, "v")))
                    rhs = Series.zero(gd.alg)
                    if i == k:
                        for q in _rng(mu, 2):
                            rhs = rhs + _ser(gd, "F", 3, h, q, "v") * (
                                _ser(gd, "F", 2, q, j, "v") - _ser(gd, "F", 2, q, j))
                        rhs = rhs - _ser(gd, "F", 3, h, j, "v", b=1) + _ser(
                            gd, "F", 3, h, j, "u", b=1)
                    total += 1
                    if not lhs.agrees(rhs):
                        _fail(failures, "6.2b", (i, j, h, k), lhs - rhs)
    return total, failures


def _fam_62c(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 3):
        for j in _rng(mu, 1):
            for h in _rng(mu, 3):
                for k in _rng(mu, 2):
                    lhs = bracket_series(_ser(gd, "F", 3, i, j, "u", b=1),
                                         _ser(gd, "F", 3, h, k, "v"))
                    for g in _rng(mu, 2):
                        rhs = bracket_series(_ser(gd, "F", 3, h, g, "v"),
                                             _ser(gd, "F", 2, g, j)) * _ser(
                                                 gd, "F", 3, i, k, "v")
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "6.2c", (i, j, h, k, g), lhs - rhs)
    return total, failures


def _fam_62d(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 3):
                for k in _rng(mu, 1):
                    arg = -_ser(gd, "F", 3, h, k, "v", b=1)
                    for q in _rng(mu, 2):
                        arg = arg + _ser(gd, "F", 3, h, q, "v") * _ser(
                            gd, "F", 2, q, k, "v")
                    lhs = bracket_series(_ser(gd, "F", 2, i, j), arg)
                    for g in _rng(mu, 2):
                        rhs = _ser(gd, "F", 2, i, k) * bracket_series(
                            _ser(gd, "F", 2, g, j), _ser(gd, "F", 3, h, g, "v"))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "6.2d", (i, j, h, k, g), lhs - rhs)
    return total, failures


def _e1(gd, i, j, var):
    return _ser(gd, "E", 1, i, j, var)


def _e2(gd, i, j, var):
    return _ser(gd, "E", 2, i, j, var)


def _f1(gd, i, j, var):
    return _ser(gd, "F", 2, i, j, var)


def _f2(gd, i, j, var):
    return _ser(gd, "F", 3, i, j, var)


def _fam_63a(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 2):
                for k in _rng(mu, 3):
                    for f in _rng(mu, 2):
                        for g in _rng(mu, 3):
                            diff = bracket_series(
                                bracket_series(_e1(gd, i, j, "u"), _e2(gd, h, k, "v")),
                                _e2(gd, f, g, "v"))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3a", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63b(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 1):
                for k in _rng(mu, 2):
                    for f in _rng(mu, 2):
                        for g in _rng(mu, 3):
                            diff = bracket_series(
                                _e1(gd, i, j, "u"),
                                bracket_series(_e1(gd, h, k, "u"), _e2(gd, f, g, "v")))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3b", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63c(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 2):
                for k in _rng(mu, 3):
                    for f in _rng(mu, 2):
                        for g in _rng(mu, 3):
                            diff = (bracket_series(
                                        bracket_series(_e1(gd, i, j, "u"),
                                                       _e2(gd, h, k, "v")),
                                        _e2(gd, f, g, "w"))
                                    + bracket_series(
                                        bracket_series(_e1(gd, i, j, "u"),
                                                       _e2(gd, h, k, "w")),
                                        _e2(gd, f, g, "v")))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3c", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63d(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 2):
            for h in _rng(mu, 1):
                for k in _rng(mu, 2):
                    for f in _rng(mu, 2):
                        for g in _rng(mu, 3):
                            diff = (bracket_series(
                                        _e1(gd, i, j, "u"),
                                        bracket_series(_e1(gd, h, k, "v"),
                                                       _e2(gd, f, g, "w")))
                                    + bracket_series(
                                        _e1(gd, i, j, "v"),
                                        bracket_series(_e1(gd, h, k, "u"),
                                                       _e2(gd, f, g, "w"))))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3d", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63e(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 3):
                for k in _rng(mu, 2):
                    for f in _rng(mu, 3):
                        for g in _rng(mu, 2):
                            diff = bracket_series(
                                bracket_series(_f1(gd, i, j, "u"), _f2(gd, h, k, "v")),
                                _f2(gd, f, g, "v"))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3e", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63f(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 2):
                for k in _rng(mu, 1):
                    for f in _rng(mu, 3):
                        for g in _rng(mu, 2):
                            diff = bracket_series(
                                _f1(gd, i, j, "u"),
                                bracket_series(_f1(gd, h, k, "u"), _f2(gd, f, g, "v")))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3f", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63g(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 3):
                for k in _rng(mu, 2):
                    for f in _rng(mu, 3):
                        for g in _rng(mu, 2):
                            diff = (bracket_series(
                                        bracket_series(_f1(gd, i, j, "u"),
                                                       _f2(gd, h, k, "v")),
                                        _f2(gd, f, g, "w"))
                                    + bracket_series(
                                        bracket_series(_f1(gd, i, j, "u"),
                                                       _f2(gd, h, k, "w")),
                                        _f2(gd, f, g, "v")))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3g", (i, j, h, k, f, g), diff)
    return total, failures


def _fam_63h(gd, K):
    mu = gd.mu
    total, failures = 0, []
    for i in _rng(mu, 2):
        for j in _rng(mu, 1):
            for h in _rng(mu, 2):
                for k in _rng(mu, 1):
                    for f in _rng(mu, 3):
                        for g in _rng(mu, 2):
                            diff = (bracket_series(
                                        _f1(gd, i, j, "u"),
                                        bracket_series(_f1(gd, h, k, "v"),
                                                       _f2(gd, f, g, "w")))
                                    + bracket_series(
                                        _f1(gd, i, j, "v"),
                                        bracket_series(_f1(gd, h, k, "u"),
                                                       _f2(gd, f, g, "w"))))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "6.3h", (i, j, h, k, f, g), diff)
    return total, failures


# -- even-zone catalogue in series form ----------------------------------------
#
# The families below check the classical block relations for blocks lying
# entirely inside the even part of the composition.  The suite runs them a
# second time on the reversed composition, which transports the same checks
# to the odd part.


def _fam_ev_de(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m + 1):
        for b in range(1, m):
            for i in _rng(mu, a):
                for j in _rng(mu, a):
                    Dij = _ser(gd, "D", a, i, j)
                    for h in _rng(mu, b):
                        for k in _rng(mu, b + 1):
                            lhs = times_var_diff(bracket_series(
                                Dij, _ser(gd, "E", b, h, k, "v")))
                            rhs = Series.zero(gd.alg)
                            if a == b and h == j:
                                for p in _rng(mu, a):
                                    rhs = rhs + _ser(gd, "D", a, i, p) * (
                                        _ser(gd, "E", a, p, k, "v")
                                        - _ser(gd, "E", a, p, k))
                            if a == b + 1:
                                rhs = rhs - _ser(gd, "D", a, i, k) * (
                                    _ser(gd, "E", b, h, j, "v")
                                    - _ser(gd, "E", b, h, j))
                            total += 1
                            if not lhs.agrees(rhs):
                                _fail(failures, "ev-de", (a, b, i, j, h, k),
                                      lhs - rhs)
    return total, failures


def _fam_ev_df(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m + 1):
        for b in range(1, m):
            for i in _rng(mu, a):
                for j in _rng(mu, a):
                    Dij = _ser(gd, "D", a, i, j)
                    for h in _rng(mu, b + 1):
                        for k in _rng(mu, b):
                            lhs = times_var_diff(bracket_series(
                                Dij, _ser(gd, "F", b + 1, h, k, "v")))
                            rhs = Series.zero(gd.alg)
                            if a == b and k == i:
                                for p in _rng(mu, a):
                                    rhs = rhs - (_ser(gd, "F", b + 1, h, p, "v")
                                                 - _ser(gd, "F", b + 1, h, p)) * _ser(
                                                     gd, "D", a, p, j)
                            if a == b + 1:
                                rhs = rhs + (_ser(gd, "F", b + 1, i, k, "v")
                                             - _ser(gd, "F", b + 1, i, k)) * _ser(
                                                 gd, "D", a, h, j)
                            total += 1
                            if not lhs.agrees(rhs):
                                _fail(failures, "ev-df", (a, b, i, j, h, k),
                                      lhs - rhs)
    return total, failures


def _fam_ev_ef(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(1, m):
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    Eu = _ser(gd, "E", a, i, j)
                    for h in _rng(mu, b + 1):
                        for k in _rng(mu, b):
                            lhs = times_var_diff(bracket_series(
                                Eu, _ser(gd, "F", b + 1, h, k, "v")))
                            rhs = Series.zero(gd.alg)
                            if a == b:
                                rhs = (_ser(gd, "Dp", a, i, k)
                                       * _ser(gd, "D", a + 1, h, j)
                                       - _ser(gd, "D", a + 1, h, j, "v")
                                       * _ser(gd, "Dp", a, i, k, "v"))
                            total += 1
                            if not lhs.agrees(rhs):
                                _fail(failures, "ev-ef", (a, b, i, j, h, k),
                                      lhs - rhs)
    return total, failures


def _fam_ev_ee(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for i in _rng(mu, a):
            for j in _rng(mu, a + 1):
                for h in _rng(mu, a):
                    for k in _rng(mu, a + 1):
                        lhs = times_var_diff(bracket_series(
                            _ser(gd, "E", a, i, j), _ser(gd, "E", a, h, k, "v")))
                        rhs = (_ser(gd, "E", a, i, k) - _ser(gd, "E", a, i, k, "v")) * (
                            _ser(gd, "E", a, h, j) - _ser(gd, "E", a, h, j, "v"))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "ev-ee", (a, i, j, h, k), lhs - rhs)
    return total, failures


def _fam_ev_ff(gd, K):
    # The second factor is (v)-(u); the printed source's (u)-(v) form fails
    # mechanically.  See the repository records for the worked counterexample.
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for i in _rng(mu, a + 1):
            for j in _rng(mu, a):
                for h in _rng(mu, a + 1):
                    for k in _rng(mu, a):
                        lhs = times_var_diff(bracket_series(
                            _ser(gd, "F", a + 1, i, j), _ser(gd, "F", a + 1, h, k, "v")))
                        rhs = (_ser(gd, "F", a + 1, i, k)
                               - _ser(gd, "F", a + 1, i, k, "v")) * (
                            _ser(gd, "F", a + 1, h, j, "v") - _ser(gd, "F", a + 1, h, j))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "ev-ff", (a, i, j, h, k), lhs - rhs)
    return total, failures


def _fam_ev_ee_adj(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m - 1):
        for i in _rng(mu, a):
            for j in _rng(mu, a + 1):
                for h in _rng(mu, a + 1):
                    for k in _rng(mu, a + 2):
                        lhs = times_var_diff(bracket_series(
                            _ser(gd, "E", a, i, j), _ser(gd, "E", a + 1, h, k, "v")))
                        rhs = Series.zero(gd.alg)
                        if h == j:
                            for q in _rng(mu, a + 1):
                                rhs = rhs + (_ser(gd, "E", a, i, q)
                                             - _ser(gd, "E", a, i, q, "v")) * _ser(
                                                 gd, "E", a + 1, q, k, "v")
                            rhs = (rhs + _ser(gd, "E", a, i, k, "v", b=a + 2)
                                   - _ser(gd, "E", a, i, k, "u", b=a + 2))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "ev-ee-adj", (a, i, j, h, k), lhs - rhs)
    return total, failures


def _fam_ev_ff_adj(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m - 1):
        for i in _rng(mu, a + 1):
            for j in _rng(mu, a):
                for h in _rng(mu, a + 2):
                    for k in _rng(mu, a + 1):
                        lhs = times_var_diff(bracket_series(
                            _ser(gd, "F", a + 1, i, j), _ser(gd, "F", a + 2, h, k, "v")))
                        rhs = Series.zero(gd.alg)
                        if i == k:
                            for q in _rng(mu, a + 1):
                                rhs = rhs + _ser(gd, "F", a + 2, h, q, "v") * (
                                    _ser(gd, "F", a + 1, q, j, "v")
                                    - _ser(gd, "F", a + 1, q, j))
                            rhs = (rhs - _ser(gd, "F", a + 2, h, j, "v", b=a)
                                   + _ser(gd, "F", a + 2, h, j, "u", b=a))
                        total += 1
                        if not lhs.agrees(rhs):
                            _fail(failures, "ev-ff-adj", (a, i, j, h, k), lhs - rhs)
    return total, failures


def _fam_ev_ee_zero(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(a + 1, m):
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, b):
                        for k in _rng(mu, b + 1):
                            if b == a + 1 and h == j:
                                continue
                            diff = bracket_series(
                                _ser(gd, "E", a, i, j), _ser(gd, "E", b, h, k, "v"))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "ev-ee-zero", (a, b, i, j, h, k),
                                      diff)
    return total, failures


def _fam_ev_ff_zero(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(a + 1, m):
            for i in _rng(mu, a + 1):
                for j in _rng(mu, a):
                    for h in _rng(mu, b + 1):
                        for k in _rng(mu, b):
                            if b == a + 1 and i == k:
                                continue
                            diff = bracket_series(
                                _ser(gd, "F", a + 1, i, j), _ser(gd, "F", b + 1, h, k, "v"))
                            total += 1
                            if not diff.is_zero_known():
                                _fail(failures, "ev-ff-zero", (a, b, i, j, h, k),
                                      diff)
    return total, failures


def _fam_ev_serre_vv(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(1, m):
            if a == b:
                continue
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, b):
                        for k in _rng(mu, b + 1):
                            inner = bracket_series(_ser(gd, "E", a, i, j),
                                                   _ser(gd, "E", b, h, k, "v"))
                            for f in _rng(mu, b):
                                for g in _rng(mu, b + 1):
                                    diff = bracket_series(
                                        inner, _ser(gd, "E", b, f, g, "v"))
                                    total += 1
                                    if not diff.is_zero_known():
                                        _fail(failures, "ev-ee-serre-vv",
                                              (a, b, i, j, h, k, f, g), diff)
    return total, failures


def _fam_ev_serre_uu(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(1, m):
            if a == b:
                continue
            for h in _rng(mu, a):
                for k in _rng(mu, a + 1):
                    for f in _rng(mu, b):
                        for g in _rng(mu, b + 1):
                            inner = bracket_series(_ser(gd, "E", a, h, k),
                                                   _ser(gd, "E", b, f, g, "v"))
                            for i in _rng(mu, a):
                                for j in _rng(mu, a + 1):
                                    diff = bracket_series(
                                        _ser(gd, "E", a, i, j), inner)
                                    total += 1
                                    if not diff.is_zero_known():
                                        _fail(failures, "ev-ee-serre-uu",
                                              (a, b, i, j, h, k, f, g), diff)
    return total, failures


def _fam_ev_tri_vw(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(1, m):
            if a == b:
                continue
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, b):
                        for k in _rng(mu, b + 1):
                            for f in _rng(mu, b):
                                for g in _rng(mu, b + 1):
                                    diff = (bracket_series(
                                                bracket_series(
                                                    _ser(gd, "E", a, i, j),
                                                    _ser(gd, "E", b, h, k, "v")),
                                                _ser(gd, "E", b, f, g, "w"))
                                            + bracket_series(
                                                bracket_series(
                                                    _ser(gd, "E", a, i, j),
                                                    _ser(gd, "E", b, h, k, "w")),
                                                _ser(gd, "E", b, f, g, "v")))
                                    total += 1
                                    if not diff.is_zero_known():
                                        _fail(failures, "ev-ee-tri-vw",
                                              (a, b, i, j, h, k, f, g), diff)
    return total, failures


def _fam_ev_tri_uv(gd, K):
    mu = gd.mu
    m = mu.m
    total, failures = 0, []
    for a in range(1, m):
        for b in range(1, m):
            if a == b:
                continue
            for i in _rng(mu, a):
                for j in _rng(mu, a + 1):
                    for h in _rng(mu, a):
                        for k in _rng(mu, a + 1):
                            for f in _rng(mu, b):
                                for g in _rng(mu, b + 1):
                                    diff = (bracket_series(
                                                _ser(gd, "E", a, i, j),
                                                bracket_series(
                                                    _ser(gd, "E", a, h, k, "v"),
                                                    _ser(gd, "E", b, f, g, "w")))
                                            + bracket_series(
                                                _ser(gd, "E", a, i, j, "v"),
                                                bracket_series(
                                                    _ser(gd, "E", a, h, k),
                                                    _ser(gd, "E", b, f, g, "w"))))
                                    total += 1
                                    if not diff.is_zero_known():
                                        _fail(failures, "ev-ee-tri-uv",
                                              (a, b, i, j, h, k, f, g), diff)
    return total, failures


# -- quaternary catalogue (blocks around the parity boundary) -------------------


def _quaternary_check(mu):
    if mu.m < 2 or mu.n < 2:
        raise WrongShape(
            f"suite lemma72 needs at least two blocks on each side of the "
            f"parity boundary, got {format_composition(mu)}")


def _fam_71(gd, K):
    return _fam_cross(gd, K, "7.1", "E", lambda r, s: r + s <= K)


def _fam_72(gd, K):
    return _fam_cross(gd, K, "7.2", "F", lambda r, s: r + s <= K)


def _fam_74_aux_e13(gd, K):
    mu = gd.mu
    if mu.m != 2 or mu.n != 2:
        return 0, []
    T = MatrixSeries.generator_matrix(gd.alg, "u", gd.K)
    n2 = mu.cum(2)
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 3):
            lhs = _ser(gd, "E", 1, i, j, "u", b=3)
            rhs = None
            for p in _rng(mu, 1):
                term = _ser(gd, "Dp", 1, i, p) * T[p - 1, n2 + j - 1]
                rhs = term if rhs is None else rhs + term
            total += 1
            if not lhs.agrees(rhs):
                _fail(failures, "7.4-aux-e13", (i, j), lhs - rhs)
    return total, failures


def _fam_74_aux_e24(gd, K):
    mu = gd.mu
    if mu.m != 2 or mu.n != 2:
        return 0, []
    T = MatrixSeries.generator_matrix(gd.alg, "u", gd.K)
    Tp = matrix_invert(T)
    n3 = mu.cum(3)
    mu1 = mu.size(1)
    total, failures = 0, []
    for h in _rng(mu, 2):
        for k in _rng(mu, 4):
            lhs = -_ser(gd, "E", 2, h, k, "u", b=4)
            for q in _rng(mu, 3):
                lhs = lhs + _ser(gd, "E", 2, h, q) * _ser(gd, "E", 3, q, k)
            rhs = None
            for r in _rng(mu, 4):
                term = Tp[mu1 + h - 1, n3 + r - 1] * _ser(gd, "D", 4, r, k)
                rhs = term if rhs is None else rhs + term
            total += 1
            if not lhs.agrees(rhs):
                _fail(failures, "7.4-aux-e24", (h, k), lhs - rhs)
    return total, failures


def _fam_74(gd, K):
    mu = gd.mu
    if mu.m != 2 or mu.n != 2:
        return 0, []
    total, failures = 0, []
    for i in _rng(mu, 1):
        for j in _rng(mu, 3):
            lhs13 = _ser(gd, "E", 1, i, j, "u", b=3)
            for h in _rng(mu, 2):
                for k in _rng(mu, 4):
                    arg = -_ser(gd, "E", 2, h, k, "v", b=4)
                    for q in _rng(mu, 3):
                        arg = arg + _ser(gd, "E", 2, h, q, "v") * _ser(
                            gd, "E", 3, q, k, "v")
                    diff = bracket_series(lhs13, arg)
                    total += 1
                    if not diff.is_zero_known():
                        _fail(failures, "7.4", (i, j, h, k), diff)
    return total, failures


SUITES = {
    "levi": (None, [("7.5", _fam_75), ("7.6", _fam_76), ("7.7", _fam_77)]),
    "even": (None, [
        ("ev-de", _fam_ev_de), ("ev-df", _fam_ev_df), ("ev-ef", _fam_ev_ef),
        ("ev-ee", _fam_ev_ee), ("ev-ff", _fam_ev_ff),
        ("ev-ee-adj", _fam_ev_ee_adj), ("ev-ff-adj", _fam_ev_ff_adj),
        ("ev-ee-zero", _fam_ev_ee_zero), ("ev-ff-zero", _fam_ev_ff_zero),
        ("ev-ee-serre-vv", _fam_ev_serre_vv),
        ("ev-ee-serre-uu", _fam_ev_serre_uu),
        ("ev-ee-tri-vw", _fam_ev_tri_vw), ("ev-ee-tri-uv", _fam_ev_tri_uv)]),
    "mn11": (_two_block_check, [
        ("5.1", _fam_2b_de), ("5.2", _fam_2b_df), ("5.3", _fam_2b_ef),
        ("5.4", _fam_2b_ee), ("5.5", _fam_2b_ff),
        ("entries", _fam_2b_entries)]),
    "m2n1": (_three_block_check, [
        ("6.1a", _fam_61a), ("6.1b", _fam_61b), ("6.1c", _fam_61c),
        ("6.1d", _fam_61d), ("6.2a", _fam_62a), ("6.2b", _fam_62b),
        ("6.2c", _fam_62c), ("6.2d", _fam_62d),
        ("6.3a", _fam_63a), ("6.3b", _fam_63b), ("6.3c", _fam_63c),
        ("6.3d", _fam_63d), ("6.3e", _fam_63e), ("6.3f", _fam_63f),
        ("6.3g", _fam_63g), ("6.3h", _fam_63h)]),
    "thm73": (None, [
        ("7.5", _fam_75), ("7.6", _fam_76), ("7.7", _fam_77),
        ("7.8", _fam_78), ("7.9", _fam_79), ("7.10", _fam_710),
        ("7.11", _fam_711), ("7.12", _fam_712), ("7.13", _fam_713),
        ("7.14", _fam_714), ("7.15", _fam_715), ("7.16", _fam_716),
        ("7.17", _fam_717), ("7.18", _fam_718), ("7.19", _fam_719),
        ("7.20", _fam_720)]),
    "lemma72": (_quaternary_check, [
        ("7.1", _fam_71), ("7.2", _fam_72),
        ("7.4-aux-e13", _fam_74_aux_e13), ("7.4-aux-e24", _fam_74_aux_e24),
        ("7.4", _fam_74)]),
}

SUITE_NAMES = ("levi", "even", "mn11", "m2n1", "thm73", "lemma72")


def _tasks_for(suite, mu, K, order):
    shape, families = SUITES[suite]
    if shape is not None:
        shape(mu)
    tasks = []
    mu_str = format_composition(mu)
    if suite == "even":
        for fid, _ in families:
            tasks.append((suite, fid, fid + "/even", mu_str, K, order))
        rev_str = format_composition(mu.reversed())
        for fid, _ in families:
            tasks.append((suite, fid, fid + "/odd", rev_str, K, order))
    else:
        for fid, _ in families:
            tasks.append((suite, fid, fid, mu_str, K, order))
    return tasks


def _run_family(task):
    suite, fid, rid, mu_str, K, order = task
    mu = parse_composition(mu_str)
    gd = gauss(mu, K, order=order)
    fn = dict(SUITES[suite][1])[fid]
    total, failures = fn(gd, K)
    return FamilyResult(rid, total, failures)


def default_workers():
    try:
        w = int(os.environ.get("SYK_WORKERS", "1"))
    except ValueError:
        w = 1
    return max(w, 1)


def verify_suite(suite, mu, K, order="rij", workers=None):
    """Run one suite on one composition.

    Families may be checked on forked worker processes; results merge in
    declaration order either way, so the report does not depend on the
    worker count.
    """
    if suite not in SUITES:
        raise WrongShape(f"unknown suite {suite!r}")
    if isinstance(mu, str):
        mu = parse_composition(mu)
    if workers is None:
        workers = default_workers()
    tasks = _tasks_for(suite, mu, K, order)
    if workers > 1 and len(tasks) > 1:
        for mu_str in dict.fromkeys(t[3] for t in tasks):
            gauss(parse_composition(mu_str), K, order=order)
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(workers, len(tasks))) as pool:
            results = pool.map(_run_family, tasks)
    else:
        results = [_run_family(t) for t in tasks]
    return VerifyReport(suite, mu, K, order, results)


def verify_levi(mu, K, order="rij", workers=None):
    return verify_suite("levi", mu, K, order, workers)


def verify_block_even(mu, K, order="rij", workers=None):
    return verify_suite("even", mu, K, order, workers)


def verify_mn11(mu, K, order="rij", workers=None):
    return verify_suite("mn11", mu, K, order, workers)


def verify_m2n1(mu, K, order="rij", workers=None):
    return verify_suite("m2n1", mu, K, order, workers)


def verify_theorem73(mu, K, order="rij", workers=None):
    return verify_suite("thm73", mu, K, order, workers)


def verify_lemma72(mu, K, order="rij", workers=None):
    return verify_suite("lemma72", mu, K, order, workers)


def verify_all(mu, K, order="rij", workers=None):
    """Run every suite applicable to mu; shape mismatches become skips."""
    if isinstance(mu, str):
        mu = parse_composition(mu)
    reports = []
    for suite in SUITE_NAMES:
        try:
            reports.append(verify_suite(suite, mu, K, order, workers))
        except WrongShape as exc:
            reports.append(VerifyReport(suite, mu, K, order, [],
                                        skipped=str(exc)))
    return reports
