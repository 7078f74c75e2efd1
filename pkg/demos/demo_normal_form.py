"""Straightening walkthrough: generator products in PBW normal form."""

from syk import Algebra, Signature

alg = Algebra(Signature(1, 1))
x = alg.gen(2, 1, 1)
y = alg.gen(1, 2, 1)

print("t[2,1;1] * t[1,2;1] =", x * y)
print("t[1,2;1] * t[2,1;1] =", y * x)
print("supercommutator     =", x.bracket(y))
print("odd square t[2,1;1]^2 =", x * x)

a = alg.gen(1, 1, 2)
assoc = ((x * y) * a - x * (y * a)).is_zero()
print("associativity spot check:", "ok" if assoc else "BROKEN")

w1 = alg.word([(2, 2, 2), (1, 2, 1), (2, 1, 3)])
w2 = alg.word([(2, 2, 2)]) * alg.word([(1, 2, 1), (2, 1, 3)])
print("confluence spot check:", "ok" if (w1 - w2).is_zero() else "BROKEN")
