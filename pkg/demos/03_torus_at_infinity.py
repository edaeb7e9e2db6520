"""An affine torus and a measure supported on the circle at infinity.

The square torus develops into the affine chart x3 = 1 with translation
holonomy.  Translations act trivially on the circle at infinity, so the
uniform measure on that circle is exactly holonomy invariant -- and since
every developed triangle is disjoint from infinity, the induced total mass
is 0, matching chi(torus) = 0.  Along the way each corner angle becomes
the normalized arc of directions spanned by that corner, so the link sum
around every vertex is exactly 1.

The dichotomy check closes the loop: a point mass fixed at infinity never
meets the charts (chi = 0, consistent), while the non-invariant uniform
measure on all of S^2 would certify positive chart mass and is rejected.
"""

import numpy as np

from gbmeasure import (AtomicMeasure, InconsistentDichotomy, MCConfig,
                       RoundMeasure, dichotomy_check, gb_report, load,
                       transversality_check)
from gbmeasure.documents import builtin_document

tri = load(builtin_document("t2-grid", k=3))
infinity = tri.default_measure()

report = gb_report(tri, infinity)
print("t2-grid(3) with the uniform measure on the circle at infinity")
print("  chi = %d, mu(M) = %r" % (report.chi_comb, report.mu_total.value))
print("  worst |link sum - 1| = %.2e" % report.link_verdict.worst)
print("  transversality: %s" % transversality_check(tri, infinity).detail)

# a point mass at a direction fixed by the holonomy, away from all edges
fixed = AtomicMeasure.dirac(np.array([2.0, 1.0, 0.0]))
d = dichotomy_check(tri, fixed, word_length=2)
print("\npoint mass at direction (2,1) at infinity:")
print("  chart-union mass %r over %d holonomy words -> %s"
      % (d.chart_mass.value, d.words_used, d.detail))

# the round measure is NOT invariant here; the dichotomy catches it
try:
    dichotomy_check(tri, RoundMeasure(2), mc=MCConfig(seed=0,
                                                      samples=50_000))
except InconsistentDichotomy as err:
    print("\nround measure rejected as expected:\n  %s" % err)
