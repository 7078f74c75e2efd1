"""Truncated power series in u, v, w with algebra-valued coefficients.

A series stores coefficients of monomials u^-a v^-b w^-c indexed by the
exponent triple (a, b, c).  Negative entries (true positive powers) are
allowed; they appear after shifting.  Each variable carries a known order:
coefficients with exponent <= known are trustworthy, anything beyond is
unknown and never stored.  Inactive variables have known = INF and all
stored exponents 0, so every operation treats the three slots uniformly.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, Element, coeff_from_str

INF = float("inf")
VARS = ("u", "v", "w")
VAR_INDEX = {"u": 0, "v": 1, "w": 2}


class OutOfKnownRange(Exception):
    """Requested a coefficient beyond the known order of a series."""


def _vi(var):
    assert var in VAR_INDEX, var
    return VAR_INDEX[var]


class Series:
    """Truncated Laurent-type series with Element coefficients."""

    __slots__ = ("alg", "active", "known", "coeffs")

    def __init__(self, alg: Algebra, active, known, coeffs):
        # known: 3-tuple, INF on inactive slots; coeffs: dict exp-triple -> Element
        self.alg = alg
        self.active = tuple(sorted(active, key=VAR_INDEX.__getitem__))
        self.known = tuple(known)
        self.coeffs = coeffs
        self._prune()

    def _prune(self):
        dead = [e for e, c in self.coeffs.items()
                if c.is_zero() or any(e[i] > self.known[i] for i in range(3))]
        for e in dead:
            del self.coeffs[e]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(alg, active=(), known=None):
        kn = [INF, INF, INF]
        if known is not None:
            for var in active:
                kn[_vi(var)] = known
        return Series(alg, active, kn, {})

    @staticmethod
    def constant(elt: Element, active=(), known=None):
        s = Series.zero(elt.alg, active, known)
        if not elt.is_zero():
            s.coeffs[(0, 0, 0)] = elt
        s._prune()
        return s

    @staticmethod
    def one(alg, active=(), known=None):
        return Series.constant(alg.one(), active, known)

    @staticmethod
    def gen(alg, i, j, var, K):
        """T_ij(var) truncated at order K: sum of t[i,j;r] var^-r, r = 0..K."""
        vi = _vi(var)
        kn = [INF, INF, INF]
        kn[vi] = K
        coeffs = {}
        for r in range(K + 1):
            e = [0, 0, 0]
            e[vi] = r
            c = alg.gen(i, j, r)
            if not c.is_zero():
                coeffs[tuple(e)] = c
        return Series(alg, (var,), kn, coeffs)

    # -- structure ---------------------------------------------------------

    def known_of(self, var):
        return self.known[_vi(var)]

    def coeff(self, exp):
        """Coefficient of u^-a v^-b w^-c for exp = (a, b, c)."""
        exp = tuple(exp)
        assert len(exp) == 3
        for i in range(3):
            if exp[i] > self.known[i]:
                raise OutOfKnownRange(f"exponent {exp} beyond known {self.known}")
        return self.coeffs.get(exp, self.alg.zero())

    def coeff1(self, var, r):
        """Coefficient of var^-r; other variables at exponent 0."""
        e = [0, 0, 0]
        e[_vi(var)] = r
        return self.coeff(e)

    def is_zero_known(self):
        """True when every coefficient inside the known window vanishes."""
        return not self.coeffs

    def val(self, var):
        """Minimal stored exponent in var, or None when no terms."""
        vi = _vi(var)
        if not self.coeffs:
            return None
        return min(e[vi] for e in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _merge_active(self, other):
        return tuple(v for v in VARS if v in self.active or v in other.active)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Element)):
            other = Series.constant(self._as_elt(other))
        if not isinstance(other, Series):
            return NotImplemented
        assert self.alg is other.alg
        kn = tuple(min(self.known[i], other.known[i]) for i in range(3))
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc = coeffs.get(e)
            coeffs[e] = c if acc is None else acc + c
        return Series(self.alg, self._merge_active(other), kn, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.alg, self.active, self.known,
                      {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series) else -self._as_elt(other))

    def __rsub__(self, other):
        return (-self) + self._as_elt(other)

    def _as_elt(self, x):
        if isinstance(x, Element):
            assert x.alg is self.alg
            return x
        return self.alg.scalar(x)

    def _mul_known(self, other):
        kn = []
        for i in range(3):
            ka, kb = self.known[i], other.known[i]
            va, vb = self.val(VARS[i]), other.val(VARS[i])
            if va is None:
                va = INF if ka == INF else ka + 1
            if vb is None:
                vb = INF if kb == INF else kb + 1
            kn.append(min(ka + vb, kb + va))
        return tuple(kn)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Element)):
            c = self._as_elt(other)
            return Series(self.alg, self.active, self.known,
                          {e: x * c for e, x in self.coeffs.items()})
        if not isinstance(other, Series):
            return NotImplemented
        assert self.alg is other.alg
        if not self.coeffs or not other.coeffs:
            return Series(self.alg, self._merge_active(other), self._mul_known(other), {})
        kn = self._mul_known(other)
        coeffs = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
                if any(e[i] > kn[i] for i in range(3)):
                    continue
                prod = ca * cb
                acc = coeffs.get(e)
                coeffs[e] = prod if acc is None else acc + prod
        return Series(self.alg, self._merge_active(other), kn, coeffs)

    def __rmul__(self, other):
        # scalar or Element acting on the left
        c = self._as_elt(other)
        return Series(self.alg, self.active, self.known,
                      {e: c * x for e, x in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Series):
            if self.active:
                return NotImplemented
            return self.coeff((0, 0, 0)) == other
        return (self.alg is other.alg and self.known == other.known
                and _same_coeffs(self.coeffs, other.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def agrees(self, other):
        """Equality of coefficients on the common known window."""
        assert self.alg is other.alg
        kn = tuple(min(self.known[i], other.known[i]) for i in range(3))
        seen = set(self.coeffs) | set(other.coeffs)
        for e in seen:
            if any(e[i] > kn[i] for i in range(3)):
                continue
            if self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return False
        return True

    # -- variable surgery --------------------------------------------------

    def shift(self, var, by):
        """Multiply by var^by: exponents and known order drop by `by`."""
        vi = _vi(var)
        kn = list(self.known)
        kn[vi] -= by
        coeffs = {}
        for e, c in self.coeffs.items():
            ne = list(e)
            ne[vi] -= by
            coeffs[tuple(ne)] = c
        active = self.active if var in self.active else self.active + (var,)
        return Series(self.alg, active, kn, coeffs)

    def negate_var(self, var):
        """Substitute var -> -var: scale the var^-e coefficient by (-1)^e."""
        vi = _vi(var)
        coeffs = {}
        for e, c in self.coeffs.items():
            coeffs[e] = -c if e[vi] % 2 else c
        return Series(self.alg, self.active, self.known, coeffs)

    def rename(self, src, dst):
        """Rename variable src to dst; dst must not be active."""
        if src == dst:
            return self
        si, di = _vi(src), _vi(dst)
        assert VARS[di] not in self.active, "target variable already in use"
        kn = list(self.known)
        kn[di], kn[si] = kn[si], INF
        coeffs = {}
        for e, c in self.coeffs.items():
            ne = list(e)
            ne[di], ne[si] = ne[si], 0
            coeffs[tuple(ne)] = c
        active = tuple(dst if v == src else v for v in self.active)
        return Series(self.alg, active, kn, coeffs)

    def truncate(self, var, K):
        """Lower the known order in var to K and drop what falls outside."""
        vi = _vi(var)
        kn = list(self.known)
        kn[vi] = min(kn[vi], K)
        active = self.active if var in self.active else self.active + (var,)
        return Series(self.alg, active, kn, dict(self.coeffs))

    def map_coeffs(self, fn, alg=None):
        """Apply fn to every coefficient, optionally landing in another algebra."""
        alg = alg or self.alg
        return Series(alg, self.active, self.known,
                      {e: fn(c) for e, c in self.coeffs.items()})

    # -- io ------------------------------------------------------------------

    def to_json(self):
        kn = [None if self.known[_vi(v)] == INF else self.known[_vi(v)]
              for v in self.active]
        return {
            "vars": list(self.active),
            "known": kn,
            "coeffs": [{"exp": list(e), "elt": c.to_json()}
                       for e, c in sorted(self.coeffs.items())],
        }

    @staticmethod
    def from_json(alg, data):
        kn = [INF, INF, INF]
        for var, k in zip(data["vars"], data["known"]):
            kn[_vi(var)] = INF if k is None else k
        coeffs = {tuple(item["exp"]): Element.from_json(alg, item["elt"])
                  for item in data["coeffs"]}
        return Series(alg, tuple(data["vars"]), kn, coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Series(0)"
        bits = []
        for e, c in sorted(self.coeffs.items()):
            mono = "*".join(f"{VARS[i]}^{-e[i]}" for i in range(3) if e[i])
            bits.append(f"({c!r})" + ("*" + mono if mono else ""))
        return " + ".join(bits)


def _same_coeffs(a, b):
    if len(a) != len(b):
        return False
    for e, c in a.items():
        if b.get(e) != c:
            return False
    return True


def times_var_diff(s: Series, va="u", vb="v"):
    """Multiply by (va - vb); injective, so A = B iff (va-vb)A = (va-vb)B."""
    return s.shift(va, 1) - s.shift(vb, 1)


def bracket_series(a: Series, b: Series):
    """Supercommutator [a, b] = ab - (-1)^{|a||b|} ba, split by parity parts."""
    assert a.alg is b.alg
    out = None
    for pa in (0, 1):
        ap = a.map_coeffs(lambda c, p=pa: c.parity_part(p))
        for pb in (0, 1):
            bp = b.map_coeffs(lambda c, p=pb: c.parity_part(p))
            swap = bp * ap
            term = ap * bp + (swap if pa and pb else -swap)
            out = term if out is None else out + term
    return out
