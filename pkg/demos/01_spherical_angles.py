"""Angles of a spherical simplex and the alternating sum they satisfy.

The angle at a face is half the measure of the region where the planes
cutting out that face are all positive.  On the coordinate octant of S^2
with the uniform measure this gives the familiar numbers: 1/4 at each
vertex, 1/2 along each edge.  Their signed sum over all faces equals the
mass of the simplex itself in even dimension and vanishes in odd dimension
-- for any antipodally invariant measure, not just the uniform one.
"""

import numpy as np

from gbmeasure import (AtomicMeasure, MCConfig, RoundMeasure, angle,
                       k_value, random_simplex, sgb_residual,
                       simplex_from_vertices)

octant = simplex_from_vertices(np.eye(3))
uniform = RoundMeasure(2)

print("octant of S^2, uniform measure (total mass 2)")
for cut, label in [((0, 1), "vertex e3 (planes 0,1)"),
                   ((0,), "edge opposite vertex 0"),
                   ((), "the simplex itself")]:
    a = angle(octant, cut, uniform)
    print("  angle at %-24s = %.6f" % (label, a.value))

k = k_value(octant, uniform)
mass = uniform.eval(octant.region())
print("  alternating sum k = %.6f, octant mass = %.6f" % (k.value,
                                                          mass.value))
print("  residual of the angle-sum identity: %.2e"
      % sgb_residual(octant, uniform).value)

# the same identity holds for a purely atomic measure
atoms = AtomicMeasure([(np.array([1.0, 1.0, 1.0]), 1.0)])
print("\natomic measure at +-(1,1,1)/sqrt(3), mass 1")
print("  k = %.6f  (the atomic mass of the open octant)"
      % k_value(octant, atoms).value)

# in odd dimension the sum collapses to zero exactly
rng = np.random.default_rng(0)
arc = random_simplex(1, rng)
print("\nrandom arc on S^1: k = %r (exactly zero)"
      % k_value(arc, RoundMeasure(1)).value)

# Monte Carlo agrees with the closed forms within its reported error
mc = RoundMeasure(2, monte_carlo=True)
est = mc.eval(octant.region(), MCConfig(seed=1, samples=500_000))
print("\nMonte Carlo octant mass: %.5f +- %.5f (exact 0.25)"
      % (est.value, est.std_error))
