"""Pull-back and quotient of atomic measures under circle covering maps.

A degree-k power map pulls an atomic measure back to its preimages, each
carrying the downstream atom's full weight, so the total mass multiplies
by |k|.  The construction runs through an adapted covering (open arcs on
which the map is injective), but the result never depends on which
covering is chosen.  The pulled-back measure is invariant under the deck
rotation by 2 pi / k, and a deck-invariant measure descends back down with
one atom per orbit -- the round trip is exact.
"""

import math

from gbmeasure import (CircleAtomicMeasure, PowerMap, covering_independence,
                       equivariance_check, induce_quotient, pullback)
from gbmeasure.pullback import AdaptedCovering, default_covering

f = PowerMap(3)
lam = CircleAtomicMeasure([(0.0, 1.0), (2.5, 0.25)])
print("downstream atoms: %s (mass %.2f)" % (list(lam.atoms), lam.total_mass))

cov = default_covering(f)
up = pullback(f, lam, cov)
print("pulled back through theta -> 3 theta: %d atoms, mass %.2f"
      % (len(up.atoms), up.total_mass))
for a, w in up.atoms:
    print("  atom at %.6f rad, weight %.2f" % (a, w))

other = AdaptedCovering([(0.3 + 2 * math.pi * j / 9, 1.9) for j in range(9)])
rep = covering_independence(f, lam, cov, other)
print("\nindependence of the covering: %s" % rep.detail)

rep = equivariance_check(f, lam)
print("deck-rotation invariance: %s" % rep.detail)

mu = induce_quotient(f, up)
print("\nquotient of the pull-back: %s" % list(mu.atoms))
print("round trip reproduces the pull-back exactly: %s"
      % pullback(f, mu, cov).same_as(up))
