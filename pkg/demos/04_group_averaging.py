"""Invariant measures from finite groups: averaging and finite orbits.

For a finite group the invariant mean is the plain average, so any atomic
measure becomes exactly invariant after spreading its atoms over the
group: here the 60 icosahedral rotations.  Finite orbits give invariant
measures directly.  Both feed the projective-plane example, where the
chart union carries full mass, consistent with chi = 1.
"""

import numpy as np

from gbmeasure import (AtomicMeasure, MCConfig, RoundMeasure,
                       average_over_group, check_invariance, dichotomy_check,
                       finite_orbit_measure, load, random_region)
from gbmeasure.documents import (builtin_document,
                                 icosahedral_rotation_group, rotation_about)

group = icosahedral_rotation_group()
print("icosahedral rotation group: %d elements" % len(group))

rng = np.random.default_rng(7)
base = AtomicMeasure([(rng.standard_normal(3), 1.0)])
averaged = average_over_group(base, group)
print("averaged a 1-atom measure: %d sphere atoms, total mass %.3f"
      % (len(averaged.points), averaged.total_mass))

regions = [random_region(2, rng, int(rng.integers(1, 4))) for _ in range(25)]
rep = check_invariance(averaged, group[:5], regions)
print("invariance on 25 random regions: max discrepancy %r -> %s"
      % (rep.max_discrepancy, "PASS" if rep.passed else "FAIL"))

# a five-point orbit under a rotation of order 5
orbit = finite_orbit_measure([0.6, 0.0, 0.8],
                             [rotation_about([0, 0, 1.0], 2 * np.pi / 5)],
                             max_orbit=10)
print("\norbit measure: %d projective points, weight %.3f each"
      % (len(orbit.orbit), orbit.weights[0]))

tri = load(builtin_document("rp2-icosahedral"))
d = dichotomy_check(tri, RoundMeasure(2), mc=MCConfig(seed=1,
                                                      samples=100_000))
print("\nprojective plane, uniform measure:")
print("  chi = %d, chart-union mass = %.4f +- %.4f -> %s"
      % (d.chi, d.chart_mass.value, d.chart_mass.std_error, d.detail))
