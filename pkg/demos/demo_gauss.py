"""Gauss decomposition of the generator matrix and its quasideterminants."""

from syk import check_gauss, gauss, parse_composition

mu = parse_composition("1,1|1")
gd = gauss(mu, 3)
print("composition", mu.parts, "->", mu.blocks, "blocks, parities",
      [mu.block_parity(a) for a in range(1, mu.blocks + 1)])

print("D_2(u) coefficients (second diagonal quasideterminant):")
for r in range(4):
    print("  order %d:" % r, gd.d(2, 1, 1, r))

print("E_{1,3}(u) first coefficient:", gd.e(1, 1, 1, 1, b=3))
print("F_{3,1}(u) first coefficient:", gd.f(3, 1, 1, 1, a=1))

_, fails = check_gauss(mu, 2)
print("check_gauss (both routes, F*D*E = T):",
      "ok" if not fails else fails)
