"""Run the relation suites and the PBW window certificates on a small shape."""

from syk import (enumerate_pbw, gr_bracket_check, independence_check,
                 spanning_check, verify_all)

print("verification suites on mu = 1,1|1 at K = 2:")
for rep in verify_all("1,1|1", 2):
    if rep.skipped:
        print("  %-8s skipped (%s)" % (rep.suite, rep.skipped))
    else:
        print("  %-8s %4d checks, %d failed" % (rep.suite, rep.total, rep.failed))

rep = gr_bracket_check("1,1|1", 1)
print("graded structure constants, degree <= 1: %d checks, %d failed"
      % (rep["total"], rep["failed"]))

mu = "1,1|1"
monos = enumerate_pbw(mu, 1, 2)
ind = independence_check(monos, mu, 4)
span = spanning_check(mu, 1, 2, 4)
print("PBW window (degree <= 1, length <= 2): %d words, rank %d, "
      "%d/%d t-words spanned"
      % (ind["count"], ind["rank"], span["spanned"], span["targets"]))
