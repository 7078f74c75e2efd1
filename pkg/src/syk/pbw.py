"""Loop filtration, graded images, and finite PBW window certificates.

The associated graded algebra of the filtration deg t[i,j;r] = r - 1 is the
enveloping algebra of the loop superalgebra gl(M|N)[t].  This module builds
that target algebra on the same straightening engine, maps top graded
components onto it, checks the graded structure constants (including the
block form for the Gauss generators), enumerates ordered PBW words over the
parabolic symbols, and certifies linear independence and spanning of their
expansions on a bounded window by exact rank computations.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .algebra import RCAP, Algebra, Element
from .gauss import format_composition, gauss, parse_composition


class DegreeExceeded(Exception):
    """Element lies outside the requested filtration layer."""


class LoopAlgebra(Algebra):
    """Enveloping algebra of gl(M|N)[t] on basis symbols e[i,j;s] = E_ij t^s.

    Reuses the straightening engine with the loop bracket
    [E_ij t^a, E_hk t^b] = d_hj E_ik t^{a+b} - sign d_ik E_hj t^{a+b},
    sign = (-1)^{p(E_ij) p(E_hk)}.  Words sort by (s, i, j)-lex; squares of
    odd symbols vanish.
    """

    def __init__(self, sig):
        Algebra.__init__(self, sig, "rij")
        self.order = "sij"

    def key(self, i, j, s):
        S1 = self._S1
        if not (1 <= i < S1 and 1 <= j < S1):
            raise ValueError("index pair (%d,%d) outside 1..%d" % (i, j, self.sig.size))
        if not 0 <= s < RCAP:
            raise ValueError("t-power %d outside 0..%d" % (s, RCAP - 1))
        return ((s + 1) * S1 + i) * S1 + j

    def ijr(self, key):
        S1 = self._S1
        key, j = divmod(key, S1)
        s1, i = divmod(key, S1)
        return i, j, s1 - 1

    def word_degree(self, word):
        return sum(self.ijr(g)[2] for g in word)

    def comm(self, xk, yk):
        cached = self._comm_cache.get((xk, yk))
        if cached is not None:
            return cached
        i, j, a = self.ijr(xk)
        h, k, b = self.ijr(yk)
        par = self._par
        acc = {}
        if h == j:
            w = (self.key(i, k, a + b),)
            acc[w] = acc.get(w, 0) + 1
        if i == k:
            sgn = -1 if ((par[i] + par[j]) & 1) and ((par[h] + par[k]) & 1) else 1
            w = (self.key(h, j, a + b),)
            acc[w] = acc.get(w, 0) - sgn
        out = tuple((w, c) for w, c in acc.items() if c)
        self._comm_cache[(xk, yk)] = out
        return out

    def gen(self, i, j, s):
        """The basis symbol e[i,j;s] = E_ij t^s."""
        return Element(self, {(self.key(i, j, s),): 1})

    def __repr__(self):
        return "LoopAlgebra(%r)" % (self.sig,)


def gr_image(x, k, loop=None):
    """Degree-k top graded component of x as a loop algebra element.

    Each normal word of loop degree exactly k maps letterwise by
    t[i,j;r] -> (-1)^{p(i)} e[i,j;r-1]; lower-degree words are discarded.
    """
    if loop is None:
        loop = LoopAlgebra(x.alg.sig)
    d = x.loop_degree()
    if d is not None and d > k:
        raise DegreeExceeded("element has loop degree %d > %d" % (d, k))
    ijr = x.alg.ijr
    par = x.alg._par
    terms = []
    for w, c in x.degree_part(k).sorted_terms():
        sign = 1
        lw = []
        for g in w:
            i, j, r = ijr(g)
            if par[i]:
                sign = -sign
            lw.append(loop.key(i, j, r - 1))
        terms.append((tuple(lw), sign * c))
    return loop.nf_terms(terms)


def _sgn(p):
    return -1 if p % 2 else 1


def _rng(mu, a):
    return range(1, mu.size(a) + 1)


def _fail(failures, rel, indices, residual):
    failures.append({"relation": rel, "indices": list(indices),
                     "residual": residual.to_json()})


def gr_bracket_check(mu, k_max, order="rij", K=None):
    """Check the graded structure constants at degree <= k_max.

    First every t-generator pair: the graded image of their supercommutator
    must equal the loop bracket of their graded images.  Then the block
    generators: for all admissible a<b, c<d the graded images satisfy

      [e_{a,b;i,j}^{(r)}, e_{c,d;h,k}^{(s)}]
        = (-1)^{p(b)} d_bc d_hj e_{a,d;i,k}^{(r+s-1)}
          - (-1)^{p(a)p(b)+p(a)p(c)+p(b)p(c)} d_ad d_ik e_{c,b;h,j}^{(r+s-1)}
    """
    if isinstance(mu, str):
        mu = parse_composition(mu)
    if K is None:
        K = k_max + 1
    gd = gauss(mu, K, order=order)
    alg = gd.alg
    sig = alg.sig
    loop = LoopAlgebra(sig)
    total, failures = 0, []
    S = sig.size
    for i in range(1, S + 1):
        for j in range(1, S + 1):
            for h in range(1, S + 1):
                for k in range(1, S + 1):
                    for r in range(1, k_max + 2):
                        for s in range(1, k_max + 3 - r):
                            x = alg.gen(i, j, r)
                            y = alg.gen(h, k, s)
                            lhs = gr_image(x.bracket(y), r + s - 2, loop)
                            rhs = gr_image(x, r - 1, loop).bracket(
                                gr_image(y, s - 1, loop))
                            total += 1
                            if not (lhs - rhs).is_zero():
                                _fail(failures, "gr-t", (i, j, h, k, r, s),
                                      lhs - rhs)
    B = mu.blocks
    pb = mu.block_parity
    for a in range(1, B + 1):
        for b in range(a + 1, B + 1):
            for c in range(1, B + 1):
                for d in range(c + 1, B + 1):
                    for i in _rng(mu, a):
                        for j in _rng(mu, b):
                            for h in _rng(mu, c):
                                for k in _rng(mu, d):
                                    for r in range(1, k_max + 2):
                                        for s in range(1, k_max + 3 - r):
                                            x = gd.e(a, i, j, r, b=b)
                                            y = gd.e(c, h, k, s, b=d)
                                            lhs = gr_image(x.bracket(y),
                                                           r + s - 2, loop)
                                            rhs = loop.zero()
                                            if b == c and h == j:
                                                rhs = rhs + _sgn(pb(b)) * gr_image(
                                                    gd.e(a, i, k, r + s - 1, b=d),
                                                    r + s - 2, loop)
                                            if a == d and i == k:
                                                e3 = (pb(a) * pb(b) + pb(a) * pb(c)
                                                      + pb(b) * pb(c))
                                                rhs = rhs - _sgn(e3) * gr_image(
                                                    gd.e(c, h, j, r + s - 1, b=b),
                                                    r + s - 2, loop)
                                            total += 1
                                            if not (lhs - rhs).is_zero():
                                                _fail(failures, "gr-e",
                                                      (a, b, c, d, i, j, h, k, r, s),
                                                      lhs - rhs)
    return {"mu": format_composition(mu), "k_max": k_max, "order": order,
            "total": total, "passed": total - len(failures),
            "failed": len(failures), "ok": not failures,
            "failures": failures}


# -- PBW window enumeration ------------------------------------------------

KIND_F, KIND_D, KIND_E, KIND_T = 0, 1, 2, 3
KIND_NAMES = ("F", "D", "E", "t")
FAMILIES = ("full", "D-only", "E-only", "F-only", "t-gens")


class PbwMonomial:
    """Ordered word of parabolic (or plain t-) generator symbols.

    A symbol is a tuple (kind, b1, b2, i, j, r): D uses blocks (a, a),
    E uses (a, b) with a < b, F uses (b, a) with b > a, and t-symbols use
    (0, 0) with ambient indices i, j.  Words are sorted by the symbol
    tuples, so all F's precede all D's precede all E's.
    """

    __slots__ = ("mu", "word")

    def __init__(self, mu, word):
        self.mu = mu
        self.word = tuple(word)

    @property
    def length(self):
        return len(self.word)

    @property
    def degree(self):
        return sum(s[5] - 1 for s in self.word)

    def to_json(self):
        return {"word": [[KIND_NAMES[s[0]]] + list(s[1:]) for s in self.word]}

    def __repr__(self):
        if not self.word:
            return "1"
        bits = []
        for k0, b1, b2, i, j, r in self.word:
            if k0 == KIND_T:
                bits.append("t[%d,%d;%d]" % (i, j, r))
            elif k0 == KIND_D:
                bits.append("D%d[%d,%d;%d]" % (b1, i, j, r))
            else:
                bits.append("%s%d%d[%d,%d;%d]" % (KIND_NAMES[k0], b1, b2, i, j, r))
        return "*".join(bits)


def _symbol_parity(mu, sym):
    k0, b1, b2, i, j, _ = sym
    if k0 == KIND_T:
        m = mu.cum(mu.m)
        return ((0 if i <= m else 1) + (0 if j <= m else 1)) & 1
    return (mu.block_parity(b1) + mu.block_parity(b2)) & 1


def _symbols(mu, k, family):
    B = mu.blocks
    syms = []
    rs = range(1, k + 2)
    if family in ("full", "F-only"):
        for b in range(2, B + 1):
            for a in range(1, b):
                for i in _rng(mu, b):
                    for j in _rng(mu, a):
                        for r in rs:
                            syms.append((KIND_F, b, a, i, j, r))
    if family in ("full", "D-only"):
        for a in range(1, B + 1):
            for i in _rng(mu, a):
                for j in _rng(mu, a):
                    for r in rs:
                        syms.append((KIND_D, a, a, i, j, r))
    if family in ("full", "E-only"):
        for a in range(1, B + 1):
            for b in range(a + 1, B + 1):
                for i in _rng(mu, a):
                    for j in _rng(mu, b):
                        for r in rs:
                            syms.append((KIND_E, a, b, i, j, r))
    if family == "t-gens":
        S = mu.cum(B)
        for i in range(1, S + 1):
            for j in range(1, S + 1):
                for r in rs:
                    syms.append((KIND_T, 0, 0, i, j, r))
    return sorted(syms)


def enumerate_pbw(mu, k, L, family="full"):
    """All nonempty ordered words with loop degree <= k and length <= L.

    Symbols repeat only when even.  The unit (empty word) is not listed;
    spanning_check seeds it separately.
    """
    if isinstance(mu, str):
        mu = parse_composition(mu)
    if family not in FAMILIES:
        raise ValueError("unknown family %r (have %s)" % (family, ", ".join(FAMILIES)))
    syms = _symbols(mu, k, family)
    odd = [_symbol_parity(mu, s) for s in syms]
    out = []

    def rec(start, word, deg):
        for idx in range(start, len(syms)):
            s = syms[idx]
            d = deg + s[5] - 1
            if d > k:
                continue
            if word and word[-1] == s and odd[idx]:
                continue
            w2 = word + (s,)
            out.append(PbwMonomial(mu, w2))
            if len(w2) < L:
                rec(idx, w2, d)

    if L > 0:
        rec(0, (), 0)
    return out


def expand_pbw(mono, gd):
    """Normal-form expansion of a PBW word through the Gauss coefficients."""
    alg = gd.alg
    acc = alg.one()
    for k0, b1, b2, i, j, r in mono.word:
        if k0 == KIND_D:
            g = gd.d(b1, i, j, r)
        elif k0 == KIND_E:
            g = gd.e(b1, i, j, r, b=b2)
        elif k0 == KIND_F:
            g = gd.f(b1, i, j, r, a=b2)
        else:
            g = alg.gen(i, j, r)
        acc = acc * g
    return acc


def _rank_bareiss(mat):
    """Exact rank by fraction-free elimination on integer rows."""
    rows = [r[:] for r in mat if any(r)]
    if not rows:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank, prev, pr = 0, 1, 0
    for col in range(nc):
        piv = None
        for r in range(pr, nr):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        p = rows[pr][col]
        for r in range(pr + 1, nr):
            a = rows[r][col]
            rowr, rowp = rows[r], rows[pr]
            for c in range(col + 1, nc):
                rowr[c] = (p * rowr[c] - a * rowp[c]) // prev
            rowr[col] = 0
        prev = p
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank


def independence_check(monomials, mu, K, order="rij"):
    """Exact rank of the expansion matrix; full rank certifies independence."""
    if isinstance(mu, str):
        mu = parse_composition(mu)
    gd = gauss(mu, K, order=order)
    cols = {}
    sparse = []
    for m in monomials:
        x = expand_pbw(m, gd)
        row = {}
        for w, c in x.sorted_terms():
            if w not in cols:
                cols[w] = len(cols)
            row[cols[w]] = Fraction(c)
        sparse.append(row)
    mat = []
    for row in sparse:
        denom = 1
        for c in row.values():
            denom = lcm(denom, c.denominator)
        mat.append([int(row.get(j, 0) * denom) for j in range(len(cols))])
    rank = _rank_bareiss(mat)
    return {"mu": format_composition(mu), "K": K, "order": order,
            "count": len(monomials), "rank": rank,
            "independent": rank == len(monomials)}


def _echelon_insert(vec, basis):
    """Reduce vec against basis; store and return its pivot, None if it dies."""
    vec = {w: Fraction(c) for w, c in vec.items() if c}
    while vec:
        lead = min(vec)
        row = basis.get(lead)
        if row is None:
            lc = vec[lead]
            basis[lead] = {w: c / lc for w, c in vec.items()}
            return lead
        lc = vec[lead]
        for w, c in row.items():
            nc = vec.get(w, 0) - lc * c
            if nc:
                vec[w] = nc
            else:
                vec.pop(w, None)
    return None


def spanning_check(mu, k, L, K, order="rij"):
    """Check every t-word of degree <= k, length <= L lies in the PBW span.

    Candidates are parabolic PBW words of degree <= k; their length is
    capped by k + L (total generator order is conserved or drops under
    straightening, so longer words cannot contribute), with one retry at a
    widened cap as a guard.
    """
    if isinstance(mu, str):
        mu = parse_composition(mu)
    gd = gauss(mu, K, order=order)
    targets = enumerate_pbw(mu, k, L, family="t-gens")
    report = None
    for extra in (0, 2):
        cap = k + L + extra
        cands = enumerate_pbw(mu, k, cap, family="full")
        basis = {}
        _echelon_insert(gd.alg.one().terms, basis)
        for m in cands:
            _echelon_insert(expand_pbw(m, gd).terms, basis)
        failures = []
        for m in targets:
            probe = dict(basis)
            if _echelon_insert(expand_pbw(m, gd).terms, probe) is not None:
                failures.append(m)
        report = {"mu": format_composition(mu), "k": k, "L": L, "K": K,
                  "order": order, "length_cap": cap,
                  "targets": len(targets), "candidates": len(cands),
                  "spanned": len(targets) - len(failures),
                  "failed": len(failures), "ok": not failures,
                  "span_failures": [m.to_json() for m in failures]}
        if not failures:
            break
    return report
