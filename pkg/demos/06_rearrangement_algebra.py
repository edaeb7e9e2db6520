"""The polyhedral identity stripped to its combinatorial core.

Summing vertex defects and per-simplex alternating sums always telescopes
to the Euler characteristic -- not because of any geometry, but because
each (top simplex, cut set) angle is counted once through the link sums
and once through the alternating sums, with matching signs.  To make the
point, feed the machinery a random abstract complex (faces may repeat
vertex tuples, incidences are assigned arbitrarily) and uniformly random
RATIONAL numbers in place of angles: the residual is the exact fraction 0.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np

from gbmeasure import defect_sums
from gbmeasure.triangulation import Incidence

rng = np.random.default_rng(2024)

n_v, n_e, n_t = 5, 9, 12
faces = [tuple((v,) for v in range(n_v)),
         tuple(tuple(int(x) for x in rng.integers(0, n_v, size=2))
               for _ in range(n_e)),
         tuple(tuple(int(x) for x in rng.integers(0, n_v, size=3))
               for _ in range(n_t))]

incidences = []
table = {}
for t in range(n_t):
    incidences.append(Incidence(t, (), 2, t, (0, 1, 2)))
    for size in (1, 2):
        r = 2 - size
        for cut in combinations(range(3), size):
            incidences.append(Incidence(t, cut, r,
                                        int(rng.integers(0, len(faces[r]))),
                                        ()))
    for s in range(4):
        for cut in combinations(range(3), s):
            table[(t, cut)] = Fraction(int(rng.integers(-99, 100)),
                                       int(rng.integers(1, 100)))

link, defects, k, chi, residual = defect_sums(
    faces, incidences, lambda t, c: table[(t, c)], one=Fraction(1))

print("random complex: %d vertices, %d edges, %d triangles" % (n_v, n_e,
                                                               n_t))
print("chi = %d" % chi)
print("sum of vertex defects      = %s" % sum(defects.values()))
print("sum of per-triangle sums   = %s" % sum(k, Fraction(0)))
print("residual (exact rational)  = %s" % residual)
assert residual == 0
