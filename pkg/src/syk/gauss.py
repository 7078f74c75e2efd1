"""Block Gauss decomposition T = F D E of the generator matrix.

A composition mu = (mu_1..mu_m | mu_{m+1}..mu_{m+n}) splits the generator
matrix T(u) into blocks.  The decomposition produces block-diagonal factors
D_a, their inverses D'_a, and quasideterminant ratios E_{a,b}, F_{b,a};
both a direct quasideterminant route and an independent LDU elimination
route are provided so they can cross-check each other.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, Element, Signature
from .series import INF, Series


class NotUnitriangularConstantTerm(Exception):
    """Matrix inversion requires constant term equal to the identity."""


class Composition:
    """Block sizes (mu_1..mu_m | mu_{m+1}..mu_{m+n}) of a signature."""

    __slots__ = ("even", "odd", "sig")

    def __init__(self, even, odd):
        self.even = tuple(even)
        self.odd = tuple(odd)
        assert all(p >= 1 for p in self.even + self.odd)
        self.sig = Signature(sum(self.even), sum(self.odd))
        assert self.sig.size >= 1

    @property
    def m(self):
        return len(self.even)

    @property
    def n(self):
        return len(self.odd)

    @property
    def blocks(self):
        return self.m + self.n

    @property
    def parts(self):
        return self.even + self.odd

    def size(self, a):
        """Size mu_a of block a (1-based)."""
        return self.parts[a - 1]

    def start(self, a):
        """Row index (1-based) where block a begins."""
        return 1 + sum(self.parts[: a - 1])

    def cum(self, a):
        """Cumulative size of blocks 1..a."""
        return sum(self.parts[:a])

    def block_parity(self, a):
        """0 for blocks in the even part, 1 in the odd part."""
        return 0 if a <= self.m else 1

    def rows(self, a):
        """0-based row indices covered by block a."""
        s = self.start(a) - 1
        return list(range(s, s + self.size(a)))

    def reversed(self):
        """Composition of the flipped signature, blocks in reverse order."""
        return Composition(tuple(reversed(self.odd)), tuple(reversed(self.even)))

    def tail(self, a):
        """Composition (mu_a, ..., mu_{m+n}) of the trailing blocks.

        Only defined while at least one even and one odd block remain."""
        assert 1 <= a <= self.m
        return Composition(self.parts[a - 1 : self.m], self.odd)

    def __eq__(self, other):
        return (isinstance(other, Composition)
                and self.even == other.even and self.odd == other.odd)

    def __hash__(self):
        return hash((self.even, self.odd))

    def __repr__(self):
        return f"Composition({format_composition(self)!r})"


def parse_composition(text):
    """Parse "2,1|1" into a Composition."""
    assert "|" in text, "composition must contain '|'"
    left, right = text.split("|", 1)
    even = tuple(int(p) for p in left.split(",") if p.strip())
    odd = tuple(int(p) for p in right.split(",") if p.strip())
    return Composition(even, odd)


def format_composition(mu):
    return ",".join(map(str, mu.even)) + "|" + ",".join(map(str, mu.odd))


def _int_compositions(n):
    """Ordered tuples of positive integers summing to n."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in _int_compositions(n - first):
            out.append((first,) + rest)
    return out


def compositions_of(M, N):
    """Every composition of the signature (M|N), lexicographically."""
    return [Composition(e, o)
            for e in sorted(_int_compositions(M))
            for o in sorted(_int_compositions(N))]


class MatrixSeries:
    """Dense matrix with Series entries."""

    __slots__ = ("alg", "rows", "cols", "data")

    def __init__(self, alg, data):
        self.alg = alg
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        assert all(len(row) == self.cols for row in self.data)

    @staticmethod
    def identity(alg, size):
        one = Series.one(alg)
        zero = Series.zero(alg)
        return MatrixSeries(alg, [[one if i == j else zero for j in range(size)]
                                  for i in range(size)])

    @staticmethod
    def generator_matrix(alg, var, K):
        """Full matrix T(var) of generator series, truncated at order K."""
        S = alg.sig.size
        return MatrixSeries(alg, [[Series.gen(alg, i + 1, j + 1, var, K)
                                   for j in range(S)] for i in range(S)])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def sub(self, rows, cols):
        return MatrixSeries(self.alg, [[self.data[r][c] for c in cols] for r in rows])

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return MatrixSeries(self.alg, [[self.data[r][c] + other.data[r][c]
                                        for c in range(self.cols)]
                                       for r in range(self.rows)])

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return MatrixSeries(self.alg, [[self.data[r][c] - other.data[r][c]
                                        for c in range(self.cols)]
                                       for r in range(self.rows)])

    def __neg__(self):
        return MatrixSeries(self.alg, [[-x for x in row] for row in self.data])

    def __mul__(self, other):
        if not isinstance(other, MatrixSeries):
            return MatrixSeries(self.alg, [[x * other for x in row]
                                           for row in self.data])
        assert self.cols == other.rows
        out = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = None
                for k in range(self.cols):
                    term = self.data[r][k] * other.data[k][c]
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(row)
        return MatrixSeries(self.alg, out)

    def map(self, fn, alg=None):
        return MatrixSeries(alg or self.alg,
                            [[fn(x) for x in row] for row in self.data])

    def agrees(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return all(self.data[r][c].agrees(other.data[r][c])
                   for r in range(self.rows) for c in range(self.cols))

    def is_zero_known(self):
        return all(x.is_zero_known() for row in self.data for x in row)

    def to_json(self):
        return {"shape": [self.rows, self.cols],
                "entries": [[x.to_json() for x in row] for row in self.data]}

    @staticmethod
    def from_json(alg, data):
        return MatrixSeries(alg, [[Series.from_json(alg, x) for x in row]
                                  for row in data["entries"]])

    def __repr__(self):
        return f"MatrixSeries({self.rows}x{self.cols})"


def matrix_invert(A: MatrixSeries, var="u"):
    """Neumann inverse of A = I - X with X of positive valuation in var.

    Raises NotUnitriangularConstantTerm unless the constant term is I."""
    n = A.rows
    assert n == A.cols
    for r in range(n):
        for c in range(n):
            want = A.alg.one() if r == c else A.alg.zero()
            if A.data[r][c].coeff((0, 0, 0)) != want:
                raise NotUnitriangularConstantTerm(f"entry ({r}, {c})")
    X = MatrixSeries.identity(A.alg, n) - A
    K = min((s.known_of(var) for row in A.data for s in row), default=INF)
    inv = MatrixSeries.identity(A.alg, n)
    # intersect the identity's infinite window with A's window
    inv = inv + (A - A)
    term = MatrixSeries.identity(A.alg, n)
    k = 1
    while k <= K:
        assert k <= 10000, "Neumann iteration did not terminate"
        term = term * X
        if term.is_zero_known():
            break
        inv = inv + term
        k += 1
    return inv


def quasidet(A, B, C, D, var="u"):
    """Quasideterminant D - C A^-1 B of the 2x2 block matrix [[A,B],[C,D]]."""
    return D - C * matrix_invert(A, var) * B


class GaussData:
    """Blocks D_a, D'_a, E_{a,b}, F_{b,a} of a Gauss decomposition."""

    __slots__ = ("mu", "alg", "K", "var", "D", "Dp", "E", "F")

    def __init__(self, mu, alg, K, var, D, Dp, E, F):
        self.mu = mu
        self.alg = alg
        self.K = K
        self.var = var
        self.D = D      # a -> MatrixSeries (mu_a x mu_a)
        self.Dp = Dp    # a -> inverse of D[a]
        self.E = E      # (a, b) a < b -> MatrixSeries (mu_a x mu_b)
        self.F = F      # (b, a) a < b -> MatrixSeries (mu_b x mu_a)

    def d(self, a, i, j, r):
        """Coefficient D_{a;i,j}^{(r)} (i, j 1-based within the block)."""
        return self.D[a][i - 1, j - 1].coeff1(self.var, r)

    def dp(self, a, i, j, r):
        return self.Dp[a][i - 1, j - 1].coeff1(self.var, r)

    def e(self, a, i, j, r, b=None):
        """Coefficient E_{a,b;i,j}^{(r)}; b defaults to a + 1."""
        return self.E[a, a + 1 if b is None else b][i - 1, j - 1].coeff1(self.var, r)

    def f(self, b, i, j, r, a=None):
        """Coefficient F_{b,a;i,j}^{(r)}; a defaults to b - 1."""
        return self.F[b, b - 1 if a is None else a][i - 1, j - 1].coeff1(self.var, r)

    def eser(self, a, i, j, b=None):
        """Series E_{a,b;i,j}(u); b defaults to a + 1."""
        return self.E[a, a + 1 if b is None else b][i - 1, j - 1]

    def fser(self, b, i, j, a=None):
        return self.F[b, b - 1 if a is None else a][i - 1, j - 1]

    def dser(self, a, i, j):
        return self.D[a][i - 1, j - 1]

    def dpser(self, a, i, j):
        return self.Dp[a][i - 1, j - 1]

    def to_json(self):
        out = {"mu": format_composition(self.mu), "K": self.K, "var": self.var}
        blocks = {}
        for a in self.D:
            blocks[f"D/{a}"] = self.D[a].to_json()
            blocks[f"Dp/{a}"] = self.Dp[a].to_json()
        for (a, b), m in self.E.items():
            blocks[f"E/{a}/{b}"] = m.to_json()
        for (b, a), m in self.F.items():
            blocks[f"F/{b}/{a}"] = m.to_json()
        out["blocks"] = blocks
        return out


def gauss_blocks(mu: Composition, K, var="u", order="rij", T=None, alg=None):
    """Gauss blocks via quasideterminants of leading submatrices."""
    if alg is None:
        alg = Algebra(mu.sig, order)
    if T is None:
        T = MatrixSeries.generator_matrix(alg, var, K)
    L = mu.blocks
    D, Dp, E, F = {}, {}, {}, {}
    for a in range(1, L + 1):
        ra = mu.rows(a)
        head = list(range(mu.cum(a - 1)))
        Taa = T.sub(ra, ra)
        if head:
            invA = matrix_invert(T.sub(head, head), var)
            CinvA = T.sub(ra, head) * invA
            D[a] = Taa - CinvA * T.sub(head, ra)
        else:
            CinvA = None
            D[a] = Taa
        Dp[a] = matrix_invert(D[a], var)
        for b in range(a + 1, L + 1):
            rb = mu.rows(b)
            Tab = T.sub(ra, rb)
            Tba = T.sub(rb, ra)
            if head:
                Tab = Tab - CinvA * T.sub(head, rb)
                Tba = Tba - T.sub(rb, head) * invA * T.sub(head, ra)
            E[a, b] = Dp[a] * Tab
            F[b, a] = Tba * Dp[a]
    return GaussData(mu, alg, K, var, D, Dp, E, F)


def gauss_blocks_ldu(mu: Composition, K, var="u", order="rij", T=None, alg=None):
    """Gauss blocks via block LDU elimination on Schur complements."""
    if alg is None:
        alg = Algebra(mu.sig, order)
    if T is None:
        T = MatrixSeries.generator_matrix(alg, var, K)
    L = mu.blocks
    S = {(a, b): T.sub(mu.rows(a), mu.rows(b))
         for a in range(1, L + 1) for b in range(1, L + 1)}
    D, Dp, E, F = {}, {}, {}, {}
    for a in range(1, L + 1):
        D[a] = S[a, a]
        Dp[a] = matrix_invert(D[a], var)
        for b in range(a + 1, L + 1):
            E[a, b] = Dp[a] * S[a, b]
            F[b, a] = S[b, a] * Dp[a]
        for b in range(a + 1, L + 1):
            for c in range(a + 1, L + 1):
                S[b, c] = S[b, c] - F[b, a] * D[a] * E[a, c]
    return GaussData(mu, alg, K, var, D, Dp, E, F)


def assemble(gd: GaussData):
    """Rebuild the full matrix F D E from the Gauss blocks."""
    mu, alg = gd.mu, gd.alg
    L = mu.blocks
    S = mu.sig.size
    one = Series.one(alg)
    zero = Series.zero(alg)
    Fm = [[one if i == j else zero for j in range(S)] for i in range(S)]
    Em = [[one if i == j else zero for j in range(S)] for i in range(S)]
    Dm = [[zero for _ in range(S)] for _ in range(S)]
    for a in range(1, L + 1):
        ra = mu.rows(a)
        for i, r in enumerate(ra):
            for j, c in enumerate(ra):
                Dm[r][c] = gd.D[a][i, j]
        for b in range(a + 1, L + 1):
            rb = mu.rows(b)
            for i, r in enumerate(ra):
                for j, c in enumerate(rb):
                    Em[r][c] = gd.E[a, b][i, j]
            for i, r in enumerate(rb):
                for j, c in enumerate(ra):
                    Fm[r][c] = gd.F[b, a][i, j]
    return (MatrixSeries(alg, Fm) * MatrixSeries(alg, Dm)
            * MatrixSeries(alg, Em))


def check_gauss(mu: Composition, K, var="u", order="rij"):
    """Both routes agree blockwise and F D E reproduces T."""
    gd = gauss_blocks(mu, K, var, order)
    ld = gauss_blocks_ldu(mu, K, var, order, alg=gd.alg)
    failures = []
    for a in gd.D:
        if not gd.D[a].agrees(ld.D[a]):
            failures.append(f"D/{a} route mismatch")
        if not gd.Dp[a].agrees(ld.Dp[a]):
            failures.append(f"Dp/{a} route mismatch")
    for key in gd.E:
        if not gd.E[key].agrees(ld.E[key]):
            failures.append(f"E/{key[0]}/{key[1]} route mismatch")
    for key in gd.F:
        if not gd.F[key].agrees(ld.F[key]):
            failures.append(f"F/{key[0]}/{key[1]} route mismatch")
    T = MatrixSeries.generator_matrix(gd.alg, var, K)
    if not assemble(gd).agrees(T):
        failures.append("F*D*E mismatch with T")
    return gd, failures


def tilde_E(gd: GaussData, a, b):
    """Alternating path sum over a = i_0 < ... < i_s = b of E products."""
    assert a < b
    total = None
    for path in _paths(a, b):
        prod = None
        for p, q in zip(path, path[1:]):
            prod = gd.E[p, q] if prod is None else prod * gd.E[p, q]
        signed = -prod if (len(path) - 1) % 2 else prod
        total = signed if total is None else total + signed
    return total


def tilde_F(gd: GaussData, b, a):
    """Alternating path sum over b = i_0 > ... > i_s = a of F products."""
    assert a < b
    total = None
    for path in _paths(a, b):
        rev = list(reversed(path))
        prod = None
        for p, q in zip(rev, rev[1:]):
            prod = gd.F[p, q] if prod is None else prod * gd.F[p, q]
        signed = -prod if (len(path) - 1) % 2 else prod
        total = signed if total is None else total + signed
    return total


def _paths(a, b):
    """All strictly increasing index paths from a to b."""
    if a == b:
        return [[a]]
    out = []
    for nxt in range(a + 1, b + 1):
        for rest in _paths(nxt, b):
            out.append([a] + rest)
    return out


def check_gauss_inverse(gd: GaussData):
    """Six identities expressing T and T^-1 blockwise through D, E, F."""
    mu, alg, var = gd.mu, gd.alg, gd.var
    L = mu.blocks
    T = MatrixSeries.generator_matrix(alg, var, gd.K)
    Tp = matrix_invert(T, var)
    failures = []

    def blk(M, a, b):
        return M.sub(mu.rows(a), mu.rows(b))

    for a in range(1, L + 1):
        rhs = gd.D[a]
        for c in range(1, a):
            rhs = rhs + gd.F[a, c] * gd.D[c] * gd.E[c, a]
        if not blk(T, a, a).agrees(rhs):
            failures.append(f"T[{a},{a}] identity")
        rhs = gd.Dp[a]
        for c in range(a + 1, L + 1):
            rhs = rhs + tilde_E(gd, a, c) * gd.Dp[c] * tilde_F(gd, c, a)
        if not blk(Tp, a, a).agrees(rhs):
            failures.append(f"T'[{a},{a}] identity")
        for b in range(a + 1, L + 1):
            rhs = gd.D[a] * gd.E[a, b]
            for c in range(1, a):
                rhs = rhs + gd.F[a, c] * gd.D[c] * gd.E[c, b]
            if not blk(T, a, b).agrees(rhs):
                failures.append(f"T[{a},{b}] identity")
            rhs = gd.F[b, a] * gd.D[a]
            for c in range(1, a):
                rhs = rhs + gd.F[b, c] * gd.D[c] * gd.E[c, a]
            if not blk(T, b, a).agrees(rhs):
                failures.append(f"T[{b},{a}] identity")
            rhs = tilde_E(gd, a, b) * gd.Dp[b]
            for c in range(b + 1, L + 1):
                rhs = rhs + tilde_E(gd, a, c) * gd.Dp[c] * tilde_F(gd, c, b)
            if not blk(Tp, a, b).agrees(rhs):
                failures.append(f"T'[{a},{b}] identity")
            rhs = gd.Dp[b] * tilde_F(gd, b, a)
            for c in range(b + 1, L + 1):
                rhs = rhs + tilde_E(gd, b, c) * gd.Dp[c] * tilde_F(gd, c, a)
            if not blk(Tp, b, a).agrees(rhs):
                failures.append(f"T'[{b},{a}] identity")
    return failures


def check_higher_ef(gd: GaussData):
    """Distant blocks satisfy the one-step bracket recursion for every
    choice of the contracted middle index."""
    mu, alg = gd.mu, gd.alg
    L = mu.blocks
    failures = []
    for a in range(1, L + 1):
        for b in range(a + 2, L + 1):
            sgn = -1 if mu.block_parity(b - 1) else 1
            for i in range(1, mu.size(a) + 1):
                for j in range(1, mu.size(b) + 1):
                    for r in range(1, gd.K + 1):
                        for k in range(1, mu.size(b - 1) + 1):
                            got = gd.e(a, i, k, r, b - 1).bracket(
                                gd.e(b - 1, k, j, 1))
                            if sgn < 0:
                                got = -got
                            if got != gd.e(a, i, j, r, b):
                                failures.append(
                                    f"E[{a},{b};{i},{j}]^({r}) via k={k}")
            for i in range(1, mu.size(b) + 1):
                for j in range(1, mu.size(a) + 1):
                    for r in range(1, gd.K + 1):
                        for k in range(1, mu.size(b - 1) + 1):
                            got = gd.f(b, i, k, 1).bracket(
                                gd.f(b - 1, k, j, r, a))
                            if sgn < 0:
                                got = -got
                            if got != gd.f(b, i, j, r, a):
                                failures.append(
                                    f"F[{b},{a};{i},{j}]^({r}) via k={k}")
    return failures


_GAUSS_CACHE = {}


def gauss(mu: Composition, K, var="u", order="rij"):
    """Cached Gauss decomposition of the generator matrix."""
    key = (mu, K, var, order)
    if key not in _GAUSS_CACHE:
        _GAUSS_CACHE[key] = gauss_blocks(mu, K, var, order)
    return _GAUSS_CACHE[key]
