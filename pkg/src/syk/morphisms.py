"""Maps between the algebras of different signatures.

All maps are determined by their values on generators and extended as
algebra homomorphisms.  Where a map has two independent constructions
(composition of simpler maps vs. a direct matrix formula), both are
provided so they can cross-check each other.
"""

from __future__ import annotations

from .algebra import Algebra, Element, Signature
from .gauss import Composition, MatrixSeries, gauss, matrix_invert, tilde_E, tilde_F
from .series import Series


class Morphism:
    """Algebra map src -> dst fixed by images of the generators."""

    __slots__ = ("src", "dst", "name", "_fn", "_cache")

    def __init__(self, src: Algebra, dst: Algebra, fn, name):
        self.src = src
        self.dst = dst
        self.name = name
        self._fn = fn
        self._cache = {}

    def of_gen(self, i, j, r) -> Element:
        key = (i, j, r)
        out = self._cache.get(key)
        if out is None:
            out = self._fn(i, j, r)
            assert out.alg is self.dst
            self._cache[key] = out
        return out

    def of_element(self, x: Element) -> Element:
        assert x.alg is self.src
        total = self.dst.zero()
        for word, c in x.terms.items():
            prod = self.dst.scalar(c)
            for key in word:
                prod = prod * self.of_gen(*self.src.ijr(key))
            total = total + prod
        return total

    def of_series(self, s: Series) -> Series:
        return s.map_coeffs(self.of_element, alg=self.dst)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        assert other.dst is self.src
        return Morphism(other.src, self.dst,
                        lambda i, j, r: self.of_element(other.of_gen(i, j, r)),
                        f"{self.name}@{other.name}")

    def __repr__(self):
        return f"Morphism({self.name}: {self.src.sig} -> {self.dst.sig})"


def identity_map(alg: Algebra) -> Morphism:
    return Morphism(alg, alg, lambda i, j, r: alg.gen(i, j, r), "id")


def rho(src: Algebra, dst: Algebra | None = None) -> Morphism:
    """t[i,j;r] -> (-1)^r t[S+1-i, S+1-j; r] into the flipped signature."""
    if dst is None:
        dst = Algebra(src.sig.flip, src.order)
    assert dst.sig == src.sig.flip
    S = src.sig.size

    def fn(i, j, r):
        g = dst.gen(S + 1 - i, S + 1 - j, r)
        return -g if r % 2 else g

    return Morphism(src, dst, fn, "rho")


class _InverseWindow:
    """Lazily inverted matrix series, regrown when a larger order is needed."""

    __slots__ = ("build", "K", "inv")

    def __init__(self, build):
        self.build = build
        self.K = -1
        self.inv = None

    def at(self, r):
        if r > self.K:
            self.K = max(r, 2 * max(self.K, 1))
            self.inv = self.build(self.K)
        return self.inv


def omega(alg: Algebra) -> Morphism:
    """t[i,j;r] -> coefficient r of entry (i,j) of T(-u)^-1."""
    win = _InverseWindow(lambda K: matrix_invert(
        MatrixSeries.generator_matrix(alg, "u", K).map(
            lambda s: s.negate_var("u"))))

    def fn(i, j, r):
        return win.at(r)[i - 1, j - 1].coeff1("u", r)

    return Morphism(alg, alg, fn, "omega")


def shift_embed(src: Algebra, k, dst: Algebra | None = None) -> Morphism:
    """t[i,j;r] -> t[k+i, k+j; r] into the signature with k extra even rows."""
    if dst is None:
        dst = Algebra(Signature(src.sig.M + k, src.sig.N), src.order)
    assert dst.sig.M == src.sig.M + k and dst.sig.N == src.sig.N
    return Morphism(src, dst, lambda i, j, r: dst.gen(k + i, k + j, r),
                    f"shift{k}")


def psi(src: Algebra, k, dst: Algebra | None = None) -> Morphism:
    """Composite route omega . shift_embed . omega."""
    if dst is None:
        dst = Algebra(Signature(src.sig.M + k, src.sig.N), src.order)
    m = omega(dst) @ shift_embed(src, k, dst) @ omega(src)
    m.name = f"psi{k}"
    return m


def psi_direct(src: Algebra, k, dst: Algebra | None = None) -> Morphism:
    """Direct route: bordered quasideterminant against the k x k corner."""
    if dst is None:
        dst = Algebra(Signature(src.sig.M + k, src.sig.N), src.order)
    assert dst.sig.M == src.sig.M + k and dst.sig.N == src.sig.N

    def build(K):
        T = MatrixSeries.generator_matrix(dst, "u", K)
        if k == 0:
            return T
        corner = list(range(k))
        Ainv = matrix_invert(T.sub(corner, corner))
        body = list(range(k, dst.sig.size))
        return T.sub(body, body) - T.sub(body, corner) * Ainv * T.sub(corner, body)

    win = _InverseWindow(build)

    def fn(i, j, r):
        return win.at(r)[i - 1, j - 1].coeff1("u", r)

    return Morphism(src, dst, fn, f"psi{k}-quasidet")


def zeta(src: Algebra, dst: Algebra | None = None) -> Morphism:
    """Composite route rho . omega."""
    if dst is None:
        dst = Algebra(src.sig.flip, src.order)
    m = rho(src, dst) @ omega(src)
    m.name = "zeta"
    return m


def zeta_direct(src: Algebra, dst: Algebra | None = None) -> Morphism:
    """Direct route: coefficient r of T^-1 at flipped indices in the target."""
    if dst is None:
        dst = Algebra(src.sig.flip, src.order)
    assert dst.sig == src.sig.flip
    S = src.sig.size
    win = _InverseWindow(lambda K: matrix_invert(
        MatrixSeries.generator_matrix(dst, "u", K)))

    def fn(i, j, r):
        return win.at(r)[S - i, S - j].coeff1("u", r)

    return Morphism(src, dst, fn, "zeta-direct")


# -- checks ----------------------------------------------------------------


def check_defining_relations(m: Morphism, K):
    """Images satisfy the defining supercommutator relation, r + s <= K + 1."""
    src = m.src
    S = src.sig.size
    failures = []
    for i in range(1, S + 1):
        for j in range(1, S + 1):
            for h in range(1, S + 1):
                for k in range(1, S + 1):
                    for r in range(1, K + 1):
                        for s in range(1, K + 2 - r):
                            lhs = m.of_gen(i, j, r).bracket(m.of_gen(h, k, s))
                            rel = src.nf_terms(src.comm(src.key(i, j, r),
                                                        src.key(h, k, s)))
                            if lhs != m.of_element(rel):
                                failures.append(
                                    f"{m.name} relation t[{i},{j};{r}] t[{h},{k};{s}]")
    return failures


def check_routes_agree(m1: Morphism, m2: Morphism, K):
    """Two constructions of the same map coincide on generators, r <= K."""
    assert m1.src is m2.src and m1.dst is m2.dst
    S = m1.src.sig.size
    failures = []
    for i in range(1, S + 1):
        for j in range(1, S + 1):
            for r in range(1, K + 1):
                if m1.of_gen(i, j, r) != m2.of_gen(i, j, r):
                    failures.append(
                        f"{m1.name} vs {m2.name} at t[{i},{j};{r}]")
    return failures


def check_involution(back: Morphism, there: Morphism, K):
    """back . there is the identity on generators, r <= K."""
    assert there.dst is back.src and there.src is back.dst
    src = there.src
    S = src.sig.size
    failures = []
    for i in range(1, S + 1):
        for j in range(1, S + 1):
            for r in range(1, K + 1):
                if back.of_element(there.of_gen(i, j, r)) != src.gen(i, j, r):
                    failures.append(
                        f"{back.name}.{there.name} not id at t[{i},{j};{r}]")
    return failures


def check_corner_supercommute(m: Morphism, k, K):
    """Images supercommute with the leading k x k corner generators."""
    dst = m.dst
    S = m.src.sig.size
    failures = []
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            for r in range(1, K + 1):
                corner = dst.gen(a, b, r)
                for i in range(1, S + 1):
                    for j in range(1, S + 1):
                        for s in range(1, K + 1):
                            if not corner.bracket(m.of_gen(i, j, s)).is_zero():
                                failures.append(
                                    f"corner t[{a},{b};{r}] vs {m.name} t[{i},{j};{s}]")
    return failures


def check_shift_transport(mu: Composition, K, order="rij"):
    """Gauss blocks of later even blocks arise from the leading blocks of the
    trailing composition, transported by the corner-shift map."""
    gd = gauss(mu, K, order=order)
    failures = []
    for a in range(2, mu.m + 1):
        tail = mu.tail(a)
        gt = gauss(tail, K, order=order)
        shift = mu.cum(a - 1)
        m = psi(gt.alg, shift, gd.alg)
        pa = mu.size(a)
        pb = mu.size(a + 1)
        for i in range(1, pa + 1):
            for j in range(1, pa + 1):
                for r in range(K + 1):
                    if m.of_element(gt.d(1, i, j, r)) != gd.d(a, i, j, r):
                        failures.append(f"D[{a};{i},{j}]^({r}) transport")
        for r in range(1, K + 1):
            for i in range(1, pa + 1):
                for j in range(1, pb + 1):
                    if m.of_element(gt.e(1, i, j, r)) != gd.e(a, i, j, r):
                        failures.append(f"E[{a};{i},{j}]^({r}) transport")
            for i in range(1, pb + 1):
                for j in range(1, pa + 1):
                    if m.of_element(gt.f(2, i, j, r)) != gd.f(a + 1, i, j, r):
                        failures.append(f"F[{a + 1};{i},{j}]^({r}) transport")
    return failures


def check_zeta_blocks(mu: Composition, K, order="rij"):
    """The flip map carries Gauss blocks of mu to those of the reversed
    composition: D to D', E to tilde-F and F to tilde-E at mirrored indices."""
    gd = gauss(mu, K, order=order)
    rev = mu.reversed()
    gr = gauss(rev, K, order=order)
    z = zeta(gd.alg, gr.alg)
    L = mu.blocks
    failures = []
    tE = {}
    tF = {}
    for a in range(1, L + 1):
        pa = mu.size(a)
        ra = L + 1 - a
        for i in range(1, pa + 1):
            for j in range(1, pa + 1):
                for r in range(K + 1):
                    if z.of_element(gd.d(a, i, j, r)) != gr.dp(
                            ra, pa + 1 - i, pa + 1 - j, r):
                        failures.append(f"zeta D[{a};{i},{j}]^({r})")
        for b in range(a + 1, L + 1):
            pb = mu.size(b)
            rb = L + 1 - b
            if (ra, rb) not in tF:
                tF[ra, rb] = tilde_F(gr, ra, rb)
                tE[rb, ra] = tilde_E(gr, rb, ra)
            for i in range(1, pa + 1):
                for j in range(1, pb + 1):
                    for r in range(1, K + 1):
                        want = tF[ra, rb][pa - i, pb - j].coeff1("u", r)
                        if z.of_element(gd.e(a, i, j, r, b)) != want:
                            failures.append(f"zeta E[{a},{b};{i},{j}]^({r})")
            for i in range(1, pb + 1):
                for j in range(1, pa + 1):
                    for r in range(1, K + 1):
                        want = tE[rb, ra][pb - i, pa - j].coeff1("u", r)
                        if z.of_element(gd.f(b, i, j, r, a)) != want:
                            failures.append(f"zeta F[{b},{a};{i},{j}]^({r})")
    return failures
