"""Exact arithmetic in the super Yangian of gl(M|N).

Elements are finite rational combinations of words in the generators
t[i,j;r] (1 <= i,j <= M+N, r >= 1; t[i,j;0] is the scalar delta_ij).
A generator is odd when i and j lie on opposite sides of the M|N split.
Products are straightened onto the ordered monomial basis: words sorted
in a fixed total order on generators, no odd generator repeated.  The
straightening rule swaps an out-of-order adjacent pair at the cost of a
parity sign and a supercommutator given by the defining relation

  [t[i,j;r], t[h,k;s]] = sign * sum_{t=0}^{min(r,s)-1}
      (t[h,j;t] t[i,k;r+s-1-t] - t[h,j;r+s-1-t] t[i,k;t]),

with sign = (-1)^(p(i)p(j) + p(i)p(h) + p(j)p(h)).  Every swap keeps the
word's loop degree (sum of r-1 over its letters) and lowers its inversion
count; every commutator term either lowers the loop degree or keeps it
while shortening the word, so the rewriting terminates.
"""

from __future__ import annotations

import sys
from fractions import Fraction

# straightening recursion is shallow per step but chains with word length
# and loop degree; desk-scale words need more headroom than the default
if sys.getrecursionlimit() < 50000:
    sys.setrecursionlimit(50000)

# generator orders are unbounded in principle; this cap only bounds the
# packed integer encoding used for the (i,j,r)-lex term order
RCAP = 1 << 14

ORDER_NAMES = ("rij", "ijr")

# words longer than this are straightened without being cached themselves
# (their suffixes still hit the cache)
MEMO_LEN = 10


class Signature:
    """Ambient split (M|N): indices 1..M are even, M+1..M+N are odd."""

    __slots__ = ("M", "N", "size")

    def __init__(self, M: int, N: int):
        if M < 0 or N < 0 or M + N == 0:
            raise ValueError("signature needs M >= 0, N >= 0, M + N >= 1")
        self.M = M
        self.N = N
        self.size = M + N

    def parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise ValueError("index %r outside 1..%d" % (i, self.size))
        return 0 if i <= self.M else 1

    @property
    def flip(self) -> "Signature":
        return Signature(self.N, self.M)

    def __eq__(self, other):
        return isinstance(other, Signature) and (self.M, self.N) == (other.M, other.N)

    def __hash__(self):
        return hash((self.M, self.N))

    def __repr__(self):
        return "Signature(%d, %d)" % (self.M, self.N)


class Algebra:
    """Straightening context: a signature plus a total order on generators.

    Words are tuples of packed generator keys; the packing is monotone for
    the chosen order ("rij" = (r,i,j)-lex, "ijr" = (i,j,r)-lex), so word
    comparison is plain integer comparison.  Elements produced by one
    Algebra must not be mixed with another.
    """

    def __init__(self, sig: Signature, order: str = "rij"):
        if order not in ORDER_NAMES:
            raise ValueError("unknown order %r (have %s)" % (order, ", ".join(ORDER_NAMES)))
        self.sig = sig
        self.order = order
        self._S1 = sig.size + 1
        self._par = [0] + [sig.parity(i) for i in range(1, sig.size + 1)]
        self._parity_key = {}
        self._comm_cache = {}
        self._ins_cache = {}

    # -- generator packing ------------------------------------------------

    def key(self, i: int, j: int, r: int) -> int:
        S1 = self._S1
        if not (1 <= i < S1 and 1 <= j < S1):
            raise ValueError("index pair (%d,%d) outside 1..%d" % (i, j, self.sig.size))
        if not 1 <= r < RCAP:
            raise ValueError("generator order %d outside 1..%d" % (r, RCAP - 1))
        if self.order == "rij":
            return (r * S1 + i) * S1 + j
        return (i * S1 + j) * RCAP + r

    def ijr(self, key: int) -> tuple:
        S1 = self._S1
        if self.order == "rij":
            key, j = divmod(key, S1)
            r, i = divmod(key, S1)
        else:
            key, r = divmod(key, RCAP)
            i, j = divmod(key, S1)
        return i, j, r

    def key_parity(self, key: int) -> int:
        p = self._parity_key.get(key)
        if p is None:
            i, j, _ = self.ijr(key)
            p = self._parity_key[key] = (self._par[i] + self._par[j]) & 1
        return p

    def word_parity(self, word: tuple) -> int:
        p = 0
        for g in word:
            p ^= self.key_parity(g)
        return p

    def word_degree(self, word: tuple) -> int:
        return sum(self.ijr(g)[2] - 1 for g in word)

    # -- defining supercommutator -----------------------------------------

    def comm(self, xk: int, yk: int) -> tuple:
        """[t[i,j;r], t[h,k;s]] as raw (word, coeff) pairs, words unsorted."""
        cached = self._comm_cache.get((xk, yk))
        if cached is not None:
            return cached
        i, j, r = self.ijr(xk)
        h, k, s = self.ijr(yk)
        par = self._par
        sign = -1 if (par[i] * par[j] + par[i] * par[h] + par[j] * par[h]) & 1 else 1
        acc = {}
        for t in range(min(r, s)):
            q = r + s - 1 - t
            if t == 0:
                if h == j:
                    w = (self.key(i, k, q),)
                    acc[w] = acc.get(w, 0) + sign
                if i == k:
                    w = (self.key(h, j, q),)
                    acc[w] = acc.get(w, 0) - sign
            else:
                w = (self.key(h, j, t), self.key(i, k, q))
                acc[w] = acc.get(w, 0) + sign
                w = (self.key(h, j, q), self.key(i, k, t))
                acc[w] = acc.get(w, 0) - sign
        out = tuple((w, c) for w, c in acc.items() if c)
        self._comm_cache[(xk, yk)] = out
        return out

    # -- straightening core -------------------------------------------------

    def _insert(self, g: int, word: tuple) -> dict:
        """Normal form of g * word as a word->coeff dict; word already normal."""
        if not word:
            return {(g,): 1}
        ck = (g, word)
        cached = self._ins_cache.get(ck)
        if cached is not None:
            return cached
        h = word[0]
        if g < h or (g == h and not self.key_parity(g)):
            res = {(g,) + word: 1}
        elif g == h:
            # odd square: g*g = (1/2)[g,g]
            res = {}
            tail = word[1:]
            half = Fraction(1, 2)
            for cw, cc in self.comm(g, g):
                _acc(res, self._raw_mul(cw, tail), half * cc)
            res = {w: c for w, c in res.items() if c}
        else:
            # g*h = sgn*(h*g - [h,g]) with sgn the parity sign of the pair
            sgn = -1 if self.key_parity(g) & self.key_parity(h) else 1
            tail = word[1:]
            res = {}
            for w2, c2 in self._insert(g, tail).items():
                _acc(res, self._insert(h, w2), sgn * c2)
            for cw, cc in self.comm(h, g):
                _acc(res, self._raw_mul(cw, tail), -sgn * cc)
            res = {w: c for w, c in res.items() if c}
        if len(word) <= MEMO_LEN:
            self._ins_cache[ck] = res
        return res

    def _raw_mul(self, raw: tuple, word: tuple) -> dict:
        """Normal form of raw * word; raw arbitrary, word already normal."""
        d = {word: 1}
        for g in reversed(raw):
            nd = {}
            for w, c in d.items():
                _acc(nd, self._insert(g, w), c)
            d = {w: c for w, c in nd.items() if c}
        return d

    def nf_terms(self, terms) -> "Element":
        """Normal form of an iterable of raw (word, coeff) pairs."""
        out = {}
        for word, coeff in terms:
            if not coeff:
                continue
            _acc(out, self._raw_mul(word, ()), coeff)
        return Element(self, {w: c for w, c in out.items() if c})

    def cache_clear(self):
        self._comm_cache.clear()
        self._ins_cache.clear()

    # -- element constructors ----------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {(): 1})

    def scalar(self, c) -> "Element":
        return Element(self, {(): c} if c else {})

    def gen(self, i: int, j: int, r: int) -> "Element":
        """The generator t[i,j;r]; r = 0 gives the scalar delta_ij."""
        if r == 0:
            return self.scalar(1 if i == j else 0)
        return Element(self, {(self.key(i, j, r),): 1})

    def word(self, letters) -> "Element":
        """Normal form of a product of generators given as (i,j,r) triples."""
        raw = tuple(self.key(i, j, r) for (i, j, r) in letters)
        return self.nf_terms([(raw, 1)])

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.sig == other.sig
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.sig, self.order))

    def __repr__(self):
        return "Algebra(%r, order=%r)" % (self.sig, self.order)


def _acc(dst: dict, src: dict, scale) -> None:
    if scale == 1:
        for w, c in src.items():
            dst[w] = dst.get(w, 0) + c
    else:
        for w, c in src.items():
            dst[w] = dst.get(w, 0) + scale * c


class Element:
    """A finite sum of ordered monomials with exact rational coefficients.

    Instances are always in normal form; arithmetic keeps them there.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            elif w in out:
                del out[w]
        return Element(self.alg, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) - c
            if nc:
                out[w] = nc
            elif w in out:
                del out[w]
        return Element(self.alg, out)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Element(self.alg, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.alg.zero()
            return Element(self.alg, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, Element):
            return NotImplemented
        if self.alg is not other.alg and self.alg != other.alg:
            raise ValueError("elements from different algebras")
        alg = self.alg
        out = {}
        for wb, cb in other.terms.items():
            for wa, ca in self.terms.items():
                _acc(out, alg._raw_mul(wa, wb), ca * cb)
        return Element(alg, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg == other.alg and _same_terms(self.terms, other.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            return other
        if isinstance(other, (int, Fraction)):
            return self.alg.scalar(other)
        raise TypeError("cannot coerce %r" % (other,))

    # -- grading -------------------------------------------------------------

    def parity(self):
        """0 or 1 when homogeneous (zero counts as even), else None."""
        if not self.terms:
            return 0
        ps = {self.alg.word_parity(w) for w in self.terms}
        return ps.pop() if len(ps) == 1 else None

    def parity_part(self, p: int) -> "Element":
        alg = self.alg
        return Element(alg, {w: c for w, c in self.terms.items() if alg.word_parity(w) == p})

    def loop_degree(self):
        """Max loop degree over monomials; None for the zero element."""
        if not self.terms:
            return None
        wd = self.alg.word_degree
        return max(wd(w) for w in self.terms)

    def degree_part(self, d: int) -> "Element":
        wd = self.alg.word_degree
        return Element(self.alg, {w: c for w, c in self.terms.items() if wd(w) == d})

    def bracket(self, other: "Element") -> "Element":
        """Supercommutator, computed on parity-homogeneous components."""
        other = self._coerce(other)
        out = self.alg.zero()
        for p in (0, 1):
            a = self.parity_part(p)
            if a.is_zero():
                continue
            for q in (0, 1):
                b = other.parity_part(q)
                if b.is_zero():
                    continue
                ab = a * b
                ba = b * a
                out = out + (ab - ba if not (p and q) else ab + ba)
        return out

    # -- presentation ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        ijr = self.alg.ijr
        return {
            "terms": [
                {"coeff": _coeff_str(c), "word": [list(ijr(g)) for g in w]}
                for w, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, alg: Algebra, data: dict) -> "Element":
        terms = []
        for t in data["terms"]:
            word = tuple(alg.key(i, j, r) for (i, j, r) in t["word"])
            terms.append((word, Fraction(t["coeff"])))
        return alg.nf_terms(terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        ijr = self.alg.ijr
        bits = []
        for w, c in self.sorted_terms():
            mon = "*".join("t[%d,%d;%d]" % ijr(g) for g in w) or "1"
            bits.append("(%s)*%s" % (c, mon))
        return " + ".join(bits)


def _same_terms(a: dict, b: dict) -> bool:
    if len(a) != len(b):
        return False
    for w, c in a.items():
        if b.get(w, 0) != c:
            return False
    return True


def _coeff_str(c) -> str:
    return str(c)


def coeff_from_str(s: str) -> Fraction:
    return Fraction(s)
